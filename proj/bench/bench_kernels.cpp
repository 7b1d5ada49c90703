// Copyright 2026 The finicode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "finicode/kernels.hpp"
#include "finicode/markov.hpp"

namespace fc = finicode;

namespace {

fc::TailConfig tail_cfg(std::uint64_t trials) {
  fc::TailConfig c;
  c.trials = trials;
  c.half_width = 4096;
  c.seed = 11;
  return c;
}

const fc::CodeSpec& code(int which) {
  static const fc::CodeSpec mesh = fc::CodeSpec::meshalkin();
  static const fc::CodeSpec phi2 = fc::CodeSpec::phi(2);
  return which == 0 ? mesh : phi2;
}

void BM_TailSerial(benchmark::State& st) {
  auto cfg = tail_cfg(static_cast<std::uint64_t>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(fc::tail_trials_serial(code(static_cast<int>(st.range(0))), cfg));
  st.SetItemsProcessed(st.iterations() * st.range(1));
}

void BM_TailParallel(benchmark::State& st) {
  auto cfg = tail_cfg(static_cast<std::uint64_t>(st.range(1)));
  for (auto _ : st)
    benchmark::DoNotOptimize(fc::tail_trials_parallel(code(static_cast<int>(st.range(0))), cfg));
  st.SetItemsProcessed(st.iterations() * st.range(1));
}

fc::MarkovChainSpec chain() {
  return {{{0.5, 0.25, 0.25}, {0.2, 0.6, 0.2}, {0.3, 0.3, 0.4}}, 0};
}

void BM_MarkovSerial(benchmark::State& st) {
  auto mc = chain();
  for (auto _ : st) benchmark::DoNotOptimize(fc::markov_sigma2_serial(mc, st.range(0), 3));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_MarkovParallel(benchmark::State& st) {
  auto mc = chain();
  for (auto _ : st) benchmark::DoNotOptimize(fc::markov_sigma2(mc, st.range(0), 3));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_TailSerial)->Args({0, 2000})->Args({1, 2000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TailParallel)->Args({0, 2000})->Args({1, 2000})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MarkovSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MarkovParallel)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

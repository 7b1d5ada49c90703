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

#include "finicode/kernels.hpp"

#include <cstdlib>

#include <omp.h>

#include "finicode/sampling.hpp"

namespace finicode {

int worker_threads() {
  if (const char* env = std::getenv("FINICODE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

namespace {

TrialOutcome trial(const CodeSpec& code, const DyadicSampler& sampler, const TailConfig& cfg,
                   std::uint64_t t) {
  const bool dec = cfg.direction == CodeDirection::Decode;
  std::int64_t h = std::min(cfg.initial_half_width, cfg.half_width);
  for (;;) {
    Window w = sample_range(sampler, -h, h, cfg.seed, t);
    CodedWindow c = dec ? code.decode(w) : code.encode(w);
    const auto& st = c.status_at(0);
    if (st.determined) return {st.radius, false};
    if (h >= cfg.half_width) return {h, true};
    h = std::min(2 * h, cfg.half_width);
  }
}

const ProbabilityVector& law(const CodeSpec& code, const TailConfig& cfg) {
  return cfg.direction == CodeDirection::Decode ? code.output() : code.input();
}

}  // namespace

TrialOutcome run_tail_trial(const CodeSpec& code, const TailConfig& cfg, std::uint64_t t) {
  return trial(code, DyadicSampler(law(code, cfg)), cfg, t);
}

std::vector<TrialOutcome> tail_trials_serial(const CodeSpec& code, const TailConfig& cfg) {
  DyadicSampler sampler(law(code, cfg));
  std::vector<TrialOutcome> out(cfg.trials);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) out[t] = trial(code, sampler, cfg, t);
  return out;
}

std::vector<TrialOutcome> tail_trials_parallel(const CodeSpec& code, const TailConfig& cfg, int threads) {
  DyadicSampler sampler(law(code, cfg));
  std::vector<TrialOutcome> out(cfg.trials);
  const auto n = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads > 0 ? threads : worker_threads())
  for (std::int64_t t = 0; t < n; ++t)
    out[static_cast<std::size_t>(t)] = trial(code, sampler, cfg, static_cast<std::uint64_t>(t));
  return out;
}

TailReport tail_experiment(const CodeSpec& code, const TailConfig& cfg, int threads) {
  auto outcomes = tail_trials_parallel(code, cfg, threads);
  return aggregate_tail(outcomes, cfg);
}

}  // namespace finicode

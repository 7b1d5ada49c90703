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

#include "finicode/sampling.hpp"

#include <algorithm>
#include <stdexcept>

#include "finicode/rng.hpp"

namespace finicode {

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
  constexpr std::uint32_t kM0 = 0xD2511F53, kM1 = 0xCD9E8D57;
  constexpr std::uint32_t kW0 = 0x9E3779B9, kW1 = 0xBB67AE85;
  for (int round = 0; round < 10; ++round) {
    std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
    std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

std::uint64_t random_u64(std::uint64_t seed, std::uint64_t stream, std::int64_t index) {
  auto i = static_cast<std::uint64_t>(index);
  auto out = Philox4x32::block({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32),
                                static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)},
                               {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

DyadicSampler::DyadicSampler(const ProbabilityVector& pv) {
  auto bits = pv.surprisal_bits();
  unsigned __int128 acc = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 64) throw std::invalid_argument("probability below 2^-64");
    acc += static_cast<unsigned __int128>(1) << (64 - bits[i]);
    upper_.push_back(acc);
    symbols_.push_back(pv.symbol(i));
  }
}

int DyadicSampler::operator()(std::uint64_t u) const {
  auto it = std::upper_bound(upper_.begin(), upper_.end(), static_cast<unsigned __int128>(u));
  return symbols_[static_cast<std::size_t>(it - upper_.begin())];
}

DiscreteSampler::DiscreteSampler(std::span<const double> probs) {
  double acc = 0;
  for (double p : probs) {
    if (!(p >= 0)) throw std::invalid_argument("negative probability");
    acc += p;
    cumulative_.push_back(acc);
  }
  if (cumulative_.empty() || acc <= 0) throw std::invalid_argument("empty distribution");
  for (auto& c : cumulative_) c /= acc;
}

std::size_t DiscreteSampler::operator()(double u) const {
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  auto i = static_cast<std::size_t>(it - cumulative_.begin());
  if (i >= cumulative_.size()) i = cumulative_.size() - 1;
  // Never land on a zero-probability entry through rounding.
  while (i > 0 && cumulative_[i] == cumulative_[i - 1]) --i;
  return i;
}

Window sample_range(const DyadicSampler& sampler, std::int64_t lo, std::int64_t hi, std::uint64_t seed,
                    std::uint64_t stream) {
  if (hi < lo) throw std::invalid_argument("empty range");
  Window w;
  w.lo = lo;
  w.seed = seed;
  w.symbols.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t i = lo; i <= hi; ++i) w.symbols.push_back(sampler(random_u64(seed, stream, i)));
  return w;
}

Window sample_range(const ProbabilityVector& pv, std::int64_t lo, std::int64_t hi, std::uint64_t seed,
                    std::uint64_t stream) {
  return sample_range(DyadicSampler(pv), lo, hi, seed, stream);
}

Window sample_window(const ProbabilityVector& pv, std::int64_t half_width, std::uint64_t seed,
                     std::uint64_t stream) {
  return sample_range(pv, -half_width, half_width, seed, stream);
}

}  // namespace finicode

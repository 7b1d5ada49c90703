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

#ifndef FINICODE_SAMPLING_HPP
#define FINICODE_SAMPLING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "finicode/probability.hpp"
#include "finicode/window.hpp"

namespace finicode {

/// Exact inverse-CDF sampling of a dyadic vector from 64 random bits.
/// Probabilities below 2^-64 are not supported.
class DyadicSampler {
 public:
  explicit DyadicSampler(const ProbabilityVector& pv);
  int operator()(std::uint64_t u) const;

 private:
  std::vector<unsigned __int128> upper_;  // cumulative, units of 2^-64
  std::vector<int> symbols_;
};

/// Inverse-CDF sampling for floating-point probabilities.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(std::span<const double> probs);
  std::size_t operator()(double u) const;

 private:
  std::vector<double> cumulative_;
};

/// Symbols at positions [lo, hi] of the i.i.d. sequence keyed by (seed,
/// stream). The symbol at a position never depends on the window bounds.
Window sample_range(const ProbabilityVector& pv, std::int64_t lo, std::int64_t hi, std::uint64_t seed,
                    std::uint64_t stream = 0);
Window sample_range(const DyadicSampler& sampler, std::int64_t lo, std::int64_t hi, std::uint64_t seed,
                    std::uint64_t stream = 0);

/// Positions [-half_width, half_width].
Window sample_window(const ProbabilityVector& pv, std::int64_t half_width, std::uint64_t seed,
                     std::uint64_t stream = 0);

}  // namespace finicode

#endif  // FINICODE_SAMPLING_HPP

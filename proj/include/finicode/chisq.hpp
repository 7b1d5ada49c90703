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

#ifndef FINICODE_CHISQ_HPP
#define FINICODE_CHISQ_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "finicode/coder.hpp"

namespace finicode {

struct ChiSquareResult {
  double statistic = 0;
  int df = 0;
  double critical = 0;  // upper alpha quantile
  double p_value = 1;
  bool pass = false;
  std::uint64_t samples = 0;
  int pooled_cells = 0;  // cells with expected count < 5, merged into one
};

/// Pearson goodness of fit of counts against probabilities.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed, std::span<const double> probs,
                               double alpha = 0.01);

struct MeasureTestConfig {
  std::uint64_t min_samples = 1'000'000;  // determined output positions
  std::int64_t region_half_width = 100000;
  int max_doublings = 3;  // margin grows from region_half_width by at most 2^k
  std::uint64_t seed = 1;
  double alpha = 0.01;
};

struct MeasureTestReport {
  ChiSquareResult unigram;
  ChiSquareResult bigram;  // disjoint pairs (2i, 2i+1)
  std::uint64_t windows = 0;
  std::uint64_t excluded_positions = 0;  // region positions left censored
};

/// Samples windows of the input law, encodes them and tests that the output
/// over the central region follows the product law of the output vector.
/// Each region's margin is doubled until the whole region is determined or
/// max_doublings is used up; the remaining censored positions are dropped.
MeasureTestReport measure_preservation_test(const CodeSpec& code, const MeasureTestConfig& cfg,
                                            int threads = 0);

}  // namespace finicode

#endif  // FINICODE_CHISQ_HPP

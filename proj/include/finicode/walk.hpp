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

#ifndef FINICODE_WALK_HPP
#define FINICODE_WALK_HPP

#include <cstdint>
#include <vector>

#include "finicode/coder.hpp"
#include "finicode/tails.hpp"

namespace finicode {

struct WalkConfig {
  std::uint64_t trials = 2000;
  std::vector<std::int64_t> n_list = {100, 1000};
  std::uint64_t seed = 1;
  std::int64_t initial_margin = 64;
  std::int64_t max_margin_factor = 16;  // margin never exceeds this many times n
  double max_excluded = 0.05;
  TailConfig tail;                      // for E(N ^ n); thresholds are set to n_list
};

/// Lemma-2 comparison at one n. X_i = -log p(x_i) - h(p) and
/// Y_i = -log q(y_i) - h(q) over positions 0..n-1.
struct WalkPoint {
  std::int64_t n = 0;
  std::uint64_t used = 0;
  std::uint64_t excluded = 0;  // some Y_i stayed unknown at the largest margin
  double excess = 0;           // E(R_n - S_n)^+
  double excess_se = 0;
  double scaled = 0;           // excess / sqrt(n)
  double scaled_se = 0;
  double rhs = 0;              // 2 lambda_q E(N ^ n)
  double rhs_se = 0;
  double mean_x = 0;           // per-symbol means, both ~ 0
  double mean_y = 0;
  bool lemma2_ok = false;      // excess <= rhs within 3 combined s.e.
  bool lemma1_ok = false;      // scaled >= lemma1_bound within 3 s.e.
};

struct WalkReport {
  double lambda_q = 0;
  double lemma1_bound = 0;  // |sigma_q - sigma_p| / sqrt(2 pi)
  std::vector<WalkPoint> points;
  TailReport tail;
};

/// Throws InsufficientCoverage when the excluded fraction at some n exceeds
/// max_excluded.
WalkReport info_walk_experiment(const CodeSpec& code, const WalkConfig& cfg, int threads = 0);

}  // namespace finicode

#endif  // FINICODE_WALK_HPP

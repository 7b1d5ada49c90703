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

#ifndef FINICODE_MARKOV_HPP
#define FINICODE_MARKOV_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "finicode/serialize.hpp"

namespace finicode {

/// Finite Markov chain; P[i][j] is the probability of moving from i to j.
struct MarkovChainSpec {
  std::vector<std::vector<double>> P;
  std::size_t regeneration_state = 0;

  std::size_t size() const noexcept { return P.size(); }
};

/// Rows must sum to one within 1e-12. Throws std::invalid_argument otherwise.
void validate(const MarkovChainSpec& mc);

/// Chain whose every row equals v (i.i.d. sequence with marginal v).
MarkovChainSpec identical_rows(std::span<const double> v, std::size_t regeneration_state = 0);

/// {"matrix": [[...], ...], "regeneration_state": 0}
MarkovChainSpec markov_from_json(const json& j);
json to_json_value(const MarkovChainSpec& mc);

/// pi P = pi, sum pi = 1. Throws Reducible unless the chain is irreducible.
std::vector<double> stationary_distribution(const MarkovChainSpec& mc);

/// sum_i pi_i sum_j P_ij (-log2 P_ij), bits per step.
double markov_entropy(const MarkovChainSpec& mc);

struct Sigma2Estimate {
  double value = 0;  // c^2 / d
  double se = 0;     // delta method
  std::uint64_t blocks = 0;
  double mean_block_length = 0;  // d
  double mean_block_square = 0;  // c^2
  double entropy = 0;
};

/// Asymptotic informational variance from i.i.d. regeneration blocks: the
/// excursions between visits to regeneration_state. Block b uses stream b.
Sigma2Estimate markov_sigma2_serial(const MarkovChainSpec& mc, std::uint64_t blocks, std::uint64_t seed);
Sigma2Estimate markov_sigma2(const MarkovChainSpec& mc, std::uint64_t blocks, std::uint64_t seed,
                             int threads = 0);

}  // namespace finicode

#endif  // FINICODE_MARKOV_HPP

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

#ifndef FINICODE_PROBABILITY_HPP
#define FINICODE_PROBABILITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "finicode/dyadic.hpp"

namespace finicode {

/// Ordered alphabet with exact dyadic probabilities.
///
/// Invariants: same number of symbols and probabilities, symbol ids distinct,
/// every probability strictly positive, probabilities sum to exactly one.
/// The listed order of symbols is the order used by matchings.
class ProbabilityVector {
 public:
  ProbabilityVector(std::vector<int> symbols, std::vector<DyadicRational> probs);

  /// Symbols first_id, first_id + 1, ... in the given order.
  static ProbabilityVector dense(std::vector<DyadicRational> probs, int first_id = 0);

  std::size_t size() const noexcept { return symbols_.size(); }
  std::span<const int> symbols() const noexcept { return symbols_; }
  std::span<const DyadicRational> probs() const noexcept { return probs_; }
  int symbol(std::size_t i) const { return symbols_.at(i); }
  const DyadicRational& prob(std::size_t i) const { return probs_.at(i); }
  std::optional<std::size_t> index_of(int symbol) const;

  /// k_i with p_i = 2^{-k_i}; throws NonDyadicProbability otherwise.
  std::vector<std::int64_t> surprisal_bits() const;

  std::vector<double> probs_as_double() const;

  friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

 private:
  std::vector<int> symbols_;
  std::vector<DyadicRational> probs_;
};

}  // namespace finicode

#endif  // FINICODE_PROBABILITY_HPP

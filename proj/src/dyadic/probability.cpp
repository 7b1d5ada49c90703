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

#include "finicode/probability.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "finicode/errors.hpp"

namespace finicode {

ProbabilityVector::ProbabilityVector(std::vector<int> symbols, std::vector<DyadicRational> probs)
    : symbols_(std::move(symbols)), probs_(std::move(probs)) {
  if (symbols_.size() != probs_.size())
    throw std::invalid_argument("probability vector: symbol and probability counts differ");
  if (symbols_.empty()) throw std::invalid_argument("probability vector: empty alphabet");
  std::unordered_set<int> seen;
  DyadicRational total;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!seen.insert(symbols_[i]).second)
      throw std::invalid_argument("probability vector: duplicate symbol " + std::to_string(symbols_[i]));
    if (probs_[i].sign() <= 0)
      throw std::invalid_argument("probability vector: non-positive probability at symbol " +
                                  std::to_string(symbols_[i]));
    total += probs_[i];
  }
  if (total != DyadicRational(1))
    throw std::invalid_argument("probability vector: probabilities sum to " + total.to_string());
}

ProbabilityVector ProbabilityVector::dense(std::vector<DyadicRational> probs, int first_id) {
  std::vector<int> ids(probs.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = first_id + static_cast<int>(i);
  return ProbabilityVector(std::move(ids), std::move(probs));
}

std::optional<std::size_t> ProbabilityVector::index_of(int symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

std::vector<std::int64_t> ProbabilityVector::surprisal_bits() const {
  std::vector<std::int64_t> out;
  out.reserve(probs_.size());
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    auto e = probs_[i].exact_log2();
    if (!e) {
      throw NonDyadicProbability("probability " + probs_[i].to_string() + " of symbol " +
                                 std::to_string(symbols_[i]) + " is not a power of 1/2");
    }
    out.push_back(-*e);
  }
  return out;
}

std::vector<double> ProbabilityVector::probs_as_double() const {
  std::vector<double> out;
  out.reserve(probs_.size());
  for (const auto& p : probs_) out.push_back(p.to_double());
  return out;
}

}  // namespace finicode

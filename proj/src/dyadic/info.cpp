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

#include "finicode/info.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace finicode {

DyadicRational entropy(const ProbabilityVector& pv) {
  const auto bits = pv.surprisal_bits();
  DyadicRational h;
  for (std::size_t i = 0; i < bits.size(); ++i) h += pv.prob(i) * DyadicRational(static_cast<long>(bits[i]));
  return h;
}

DyadicRational informational_variance(const ProbabilityVector& pv) {
  const auto bits = pv.surprisal_bits();
  const DyadicRational h = entropy(pv);
  DyadicRational v;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const DyadicRational d = DyadicRational(static_cast<long>(bits[i])) - h;
    v += pv.prob(i) * d * d;
  }
  return v;
}

DyadicRational log_moment(const ProbabilityVector& pv, unsigned k) {
  if (k == 0) throw std::invalid_argument("log_moment: k must be positive");
  const auto bits = pv.surprisal_bits();
  DyadicRational m;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), BigInt(-bits[i]).get_mpz_t(), k);
    m += pv.prob(i) * DyadicRational(term, 0);
  }
  return m;
}

DyadicPolynomial generating_function(const ProbabilityVector& pv) {
  const auto bits = pv.surprisal_bits();
  DyadicPolynomial g;
  for (std::size_t i = 0; i < bits.size(); ++i) g.add_term(bits[i], pv.prob(i));
  return g;
}

std::int64_t max_surprisal(const ProbabilityVector& pv) {
  const auto bits = pv.surprisal_bits();
  return *std::max_element(bits.begin(), bits.end());
}

double entropy_bits(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

double informational_variance_bits(std::span<const double> probs) {
  const double h = entropy_bits(probs);
  double v = 0.0;
  for (double p : probs) {
    if (p <= 0.0) continue;
    const double d = -std::log2(p) - h;
    v += p * d * d;
  }
  return v;
}

}  // namespace finicode

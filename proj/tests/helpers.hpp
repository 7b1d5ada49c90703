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

#ifndef FINICODE_TESTS_HELPERS_HPP
#define FINICODE_TESTS_HELPERS_HPP

#include <vector>

#include "finicode/dyadic.hpp"
#include "finicode/polynomial.hpp"
#include "finicode/probability.hpp"

namespace testing {

inline finicode::DyadicRational D(long num, std::uint64_t exp = 0) { return {finicode::BigInt(num), exp}; }

/// Dense vector from surprisals: symbol i has probability 2^{-k[i]}.
inline finicode::ProbabilityVector from_surprisals(const std::vector<int>& k, int first_id = 0) {
  std::vector<finicode::DyadicRational> p;
  for (int x : k) p.push_back(finicode::DyadicRational::pow2(-x));
  return finicode::ProbabilityVector::dense(std::move(p), first_id);
}

/// Coefficients (c_0, c_1, ...) at consecutive degrees d, d + step, ...
inline finicode::DyadicPolynomial poly(std::int64_t d, std::int64_t step,
                                       const std::vector<finicode::DyadicRational>& c) {
  finicode::DyadicPolynomial p;
  for (const auto& x : c) {
    p.add_term(d, x);
    d += step;
  }
  return p;
}

}  // namespace testing

#endif  // FINICODE_TESTS_HELPERS_HPP

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

#ifndef FINICODE_LADDER_HPP
#define FINICODE_LADDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "finicode/dyadic.hpp"
#include "finicode/polynomial.hpp"

namespace finicode {

struct LadderLevelCheck {
  int level = 1;
  DyadicPolynomial gamma, delta, lambda, xi;
  bool difference_of_squares = false;  // G^2 - D^2 == t (G(z^2) - D(z^2))
  bool lambda_identity = false;        // Lambda == t G(z^2)
  bool xi_identity = false;            // Xi == t D(z^2)
  bool lambda_mass = false;            // Lambda(1) == t
  bool ok() const { return difference_of_squares && lambda_identity && xi_identity && lambda_mass; }
};

struct LadderReport {
  bool holds = true;
  std::vector<LadderLevelCheck> levels;
  /// e.g. "level 2: Xi = t Delta(z^2)"
  std::optional<std::string> first_failure;
  /// Set when the ladder could not be continued to the requested depth.
  std::optional<std::string> note;
};

/// Checks the squaring identities on the generating-function ladder
///   Gamma_{i+1}(z) = z^{-a} Lambda_i(z) / t,  t = 2^{-a},
/// with Lambda_i = (Gamma_i^2 - Delta_i^2)^+ and Xi_i = (Delta_i^2 - Gamma_i^2)^+.
/// t = 0 is accepted: the ladder is then empty after the first level.
LadderReport verify_ladder(const DyadicPolynomial& gamma, const DyadicPolynomial& delta,
                           const DyadicRational& t, int depth);

}  // namespace finicode

#endif  // FINICODE_LADDER_HPP

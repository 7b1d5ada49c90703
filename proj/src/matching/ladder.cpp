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

#include "finicode/ladder.hpp"

#include <stdexcept>

namespace finicode {

LadderReport verify_ladder(const DyadicPolynomial& gamma, const DyadicPolynomial& delta,
                           const DyadicRational& t, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  LadderReport rep;
  DyadicPolynomial g = gamma, d = delta;

  for (int i = 1; i <= depth; ++i) {
    LadderLevelCheck c;
    c.level = i;
    DyadicPolynomial diff = g.square() - d.square();
    DyadicPolynomial g2 = g.substitute_z_squared().scaled(t);
    DyadicPolynomial d2 = d.substitute_z_squared().scaled(t);
    c.lambda = diff.positive_part();
    c.xi = diff.scaled(-1).positive_part();
    c.difference_of_squares = diff == g2 - d2;
    c.lambda_identity = c.lambda == g2;
    c.xi_identity = c.xi == d2;
    c.lambda_mass = c.lambda.at_one() == t;
    c.gamma = g;
    c.delta = d;

    if (!c.ok() && !rep.first_failure) {
      const char* what = !c.difference_of_squares ? "Gamma^2 - Delta^2 = t(Gamma(z^2) - Delta(z^2))"
                         : !c.lambda_identity     ? "Lambda = t Gamma(z^2)"
                         : !c.xi_identity         ? "Xi = t Delta(z^2)"
                                                  : "Lambda(1) = t";
      rep.first_failure = "level " + std::to_string(i) + ": " + what;
      rep.holds = false;
    }
    rep.levels.push_back(std::move(c));
    const auto& last = rep.levels.back();

    if (i == depth) break;
    if (t.is_zero()) {
      rep.note = "t = 0: no leftovers, levels beyond 1 are empty";
      break;
    }
    auto a = t.exact_log2();
    if (!a) {
      rep.note = "t is not a power of two; the ladder cannot be normalised";
      break;
    }
    DyadicRational inv = DyadicRational::pow2(-*a);
    g = last.lambda.shifted(*a).scaled(inv);
    d = last.xi.shifted(*a).scaled(inv);
  }
  return rep;
}

}  // namespace finicode

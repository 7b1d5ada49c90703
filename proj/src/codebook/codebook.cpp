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

#include "finicode/codebook.hpp"

#include <stdexcept>

#include "finicode/info.hpp"
#include "finicode/matching.hpp"

namespace finicode {

namespace {

BigInt binom(unsigned n, unsigned k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Symbols 1.. for the given (count, exponent) classes, with the marker first
// when `marker` is set.
ProbabilityVector build(const std::vector<std::pair<BigInt, std::int64_t>>& classes, bool marker,
                        int first_id) {
  std::vector<int> ids;
  std::vector<DyadicRational> probs;
  if (marker) {
    ids.push_back(0);
    probs.push_back(DyadicRational::pow2(-1));
  }
  int next = first_id;
  for (const auto& [count, e] : classes) {
    for (unsigned long i = 0; i < count.get_ui(); ++i) {
      ids.push_back(next++);
      probs.push_back(DyadicRational::pow2(-e));
    }
  }
  return ProbabilityVector(std::move(ids), std::move(probs));
}

DyadicPolynomial half_binomial(int n, int sign) {
  // ((1 + sign z)/2)^{2n}
  DyadicPolynomial base{{0, DyadicRational::pow2(-1)}, {1, DyadicRational::pow2(-1) * sign}};
  return base.pow(static_cast<unsigned>(2 * n));
}

}  // namespace

DyadicPolynomial family_gamma_closed_form(int n) {
  return (half_binomial(n, 1) + half_binomial(n, -1)).shifted(2 * n - 1);
}

DyadicPolynomial family_delta_closed_form(int n) {
  return (half_binomial(n, 1) - half_binomial(n, -1)).shifted(2 * n - 1);
}

CodebookFamily construct_family(int n, int max_n, int max_level) {
  if (n < 1 || n > max_n)
    throw std::invalid_argument("n must be in [1, " + std::to_string(max_n) + "]");
  const unsigned N = 2 * static_cast<unsigned>(n);
  std::vector<std::pair<BigInt, std::int64_t>> pc, qc, rc, sc;
  for (int m = 0; m <= n; ++m) {
    BigInt count = binom(N, 2 * m) << (2 * m);
    pc.emplace_back(count, 2 * m + 2 * n);
    rc.emplace_back(count, 2 * m + 2 * n - 1);
  }
  for (int m = 0; m < n; ++m) {
    BigInt count = binom(N, 2 * m + 1) << (2 * m + 1);
    qc.emplace_back(count, 2 * m + 2 * n + 1);
    sc.emplace_back(count, 2 * m + 2 * n);
  }
  CodebookFamily fam{n, build(pc, true, 1), build(qc, true, 1), build(rc, false, 1),
                     build(sc, false, 1), nullptr};
  fam.ladder = std::make_shared<const ImplicitLadder>(fam.r, fam.s, max_level);
  return fam;
}

FamilyReport family_invariants_report(const CodebookFamily& fam, int depth) {
  FamilyReport rep;
  rep.n = fam.n;
  auto sum = [](const ProbabilityVector& v) {
    DyadicRational t;
    for (const auto& x : v.probs()) t += x;
    return t;
  };
  rep.sums_to_one = sum(fam.p) == 1 && sum(fam.q) == 1 && sum(fam.r) == 1 && sum(fam.s) == 1;
  rep.entropy_p = entropy(fam.p);
  rep.entropy_q = entropy(fam.q);
  rep.variance_p = informational_variance(fam.p);
  rep.variance_q = informational_variance(fam.q);
  rep.entropy_equal = rep.entropy_p == rep.entropy_q;
  rep.variance_equal = rep.variance_p == rep.variance_q;
  rep.theorem1_applies = !rep.variance_equal;
  rep.variance_relation_ok = rep.variance_equal == (fam.n >= 2);

  DyadicPolynomial g = generating_function(fam.r);
  DyadicPolynomial d = generating_function(fam.s);
  rep.gamma_closed_form = g == family_gamma_closed_form(fam.n);
  rep.delta_closed_form = d == family_delta_closed_form(fam.n);

  DyadicPolynomial diff = g.square() - d.square();
  DyadicPolynomial one_minus_z2{{0, DyadicRational::pow2(-2)}, {2, -DyadicRational::pow2(-2)}};
  rep.binomial_factorization =
      diff == one_minus_z2.pow(2 * static_cast<unsigned>(fam.n)).shifted(4 * fam.n - 2).scaled(4);
  rep.expected_reduction = DyadicRational::pow2(-(2 * fam.n - 1));
  rep.squaring_identity =
      diff == (g.substitute_z_squared() - d.substitute_z_squared()).scaled(rep.expected_reduction);

  auto ladder = iterate_matchings(fam.r, fam.s, depth);
  rep.ladder_truncated = ladder.truncated;
  rep.reductions_ok = static_cast<int>(ladder.levels.size()) == depth;
  for (const auto& m : ladder.levels) {
    rep.reductions.push_back(m.mass_reduction);
    rep.reductions_ok = rep.reductions_ok && m.mass_reduction == rep.expected_reduction;
  }
  return rep;
}

int MeshalkinAlphabet::alpha_id(const std::string& bits) const {
  for (const auto& a : alpha)
    if (a.bits == bits) return a.id;
  return 0;
}

int MeshalkinAlphabet::beta_id(const std::string& bits) const {
  for (const auto& b : beta)
    if (b.bits == bits) return b.id;
  return 0;
}

const MeshalkinAlphabet& meshalkin_alphabets() {
  static const MeshalkinAlphabet kAlphabet{
      {{1, "0"}, {2, "100"}, {3, "101"}, {4, "110"}, {5, "111"}},
      {{1, "00"}, {2, "01"}, {3, "10"}, {4, "11"}},
      ProbabilityVector({1, 2, 3, 4, 5}, {DyadicRational::pow2(-1), DyadicRational::pow2(-3),
                                          DyadicRational::pow2(-3), DyadicRational::pow2(-3),
                                          DyadicRational::pow2(-3)}),
      ProbabilityVector({1, 2, 3, 4}, std::vector<DyadicRational>(4, DyadicRational::pow2(-2)))};
  return kAlphabet;
}

}  // namespace finicode

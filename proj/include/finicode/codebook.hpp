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

#ifndef FINICODE_CODEBOOK_HPP
#define FINICODE_CODEBOOK_HPP

#include <memory>
#include <string>
#include <vector>

#include "finicode/dyadic.hpp"
#include "finicode/implicit_ladder.hpp"
#include "finicode/polynomial.hpp"
#include "finicode/probability.hpp"

namespace finicode {

inline constexpr int kDefaultMaxFamilyN = 6;

/// The binomial family indexed by n. Symbol 0 is the marker on both sides,
/// with probability 1/2. Non-marker symbols are numbered from 1 in order of
/// decreasing probability, by id within a probability class.
///
///   p: 4^m C(2n, 2m) symbols of probability 2^{-(2m+2n)},     0 <= m <= n
///   q: 2^{2m+1} C(2n, 2m+1) symbols of probability 2^{-(2m+2n+1)}, 0 <= m < n
///
/// r and s are the conditional laws given "not a marker": r = 2p, s = 2q.
struct CodebookFamily {
  int n = 1;
  ProbabilityVector p;
  ProbabilityVector q;
  ProbabilityVector r;
  ProbabilityVector s;
  /// psi_1, psi_2, ... for (r, s), built lazily and shared by coders.
  std::shared_ptr<const ImplicitLadder> ladder;
};

/// Throws std::invalid_argument unless 1 <= n <= max_n.
CodebookFamily construct_family(int n, int max_n = kDefaultMaxFamilyN,
                                int max_level = ImplicitLadder::kDefaultMaxLevel);

/// ((1+z)/2)^{2n} + ((1-z)/2)^{2n} times z^{2n-1}: the expected Gamma of r.
DyadicPolynomial family_gamma_closed_form(int n);
/// ((1+z)/2)^{2n} - ((1-z)/2)^{2n} times z^{2n-1}: the expected Delta of s.
DyadicPolynomial family_delta_closed_form(int n);

struct FamilyReport {
  int n = 1;
  bool sums_to_one = false;
  DyadicRational entropy_p, entropy_q;
  DyadicRational variance_p, variance_q;
  bool entropy_equal = false;
  bool variance_equal = false;
  /// Variances differ, so the coding-length lower bound has a positive constant.
  bool theorem1_applies = false;
  bool variance_relation_ok = false;  // equal iff n >= 2
  bool gamma_closed_form = false;
  bool delta_closed_form = false;
  /// Gamma^2 - Delta^2 = 4 z^{4n-2} ((1 - z^2)/4)^{2n}
  bool binomial_factorization = false;
  /// Gamma^2 - Delta^2 = t (Gamma(z^2) - Delta(z^2)) with t = 2^{-(2n-1)}
  bool squaring_identity = false;
  DyadicRational expected_reduction;
  std::vector<DyadicRational> reductions;  // per ladder level
  bool reductions_ok = false;
  bool ladder_truncated = false;

  bool ok() const {
    return sums_to_one && entropy_equal && variance_relation_ok && gamma_closed_form &&
           delta_closed_form && binomial_factorization && squaring_identity && reductions_ok;
  }
};

FamilyReport family_invariants_report(const CodebookFamily& fam, int depth = 3);

/// Meshalkin's alphabets. alpha_1..alpha_5 are 0, 100, 101, 110, 111 and
/// beta_1..beta_4 are 00, 01, 10, 11, bits listed top to bottom. Symbol id i
/// stands for alpha_i (beta_i); there is no marker.
struct MeshalkinSymbol {
  int id = 0;
  std::string bits;
};

struct MeshalkinAlphabet {
  std::vector<MeshalkinSymbol> alpha;
  std::vector<MeshalkinSymbol> beta;
  ProbabilityVector r;  // 2^{-bit length}
  ProbabilityVector s;  // 1/4 each

  /// Id of the alpha (beta) symbol with these bits, or 0.
  int alpha_id(const std::string& bits) const;
  int beta_id(const std::string& bits) const;
};

const MeshalkinAlphabet& meshalkin_alphabets();

}  // namespace finicode

#endif  // FINICODE_CODEBOOK_HPP

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

#ifndef FINICODE_CODER_HPP
#define FINICODE_CODER_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "finicode/codebook.hpp"
#include "finicode/window.hpp"

namespace finicode {

/// Meshalkin's code from B(1/2, 1/8, 1/8, 1/8, 1/8) to B(1/4, 1/4, 1/4, 1/4),
/// symbol ids as in meshalkin_alphabets().
///
/// Each alpha_1 at i is an opener and each 3-bit symbol a closer of a
/// bracket walk; m(i) is the closer matched to i. The bottom bit of x_{m(i)}
/// moves beneath x_i. Both ends get radius m(i) - i and step m(i) - i;
/// unmatched positions are censored. Unknown symbols act as window edges.
/// Throws InvalidSymbol for ids outside 1..5.
CodedWindow meshalkin_encode(const Window& w, const CodeOptions& opt = {});

/// Inverse of meshalkin_encode: beta_1, beta_2 (top bit 0) are openers.
/// Throws InvalidSymbol for ids outside 1..4.
CodedWindow meshalkin_decode(const Window& w, const CodeOptions& opt = {});

/// The marker code Phi from B(p) to B(q) for a family member.
///
/// Markers map to markers at step 0 with radius 0. At step j = 1, 2, ...
/// every complete j-gap is processed for k = 1, 2, ...: the live
/// 2^{k-1}-tuples are paired left to right and psi_k is applied; matched
/// tuples take the image symbols, the others merge into a 2^k-tuple. A
/// position determined at step j has radius at most the span of its j-gap.
/// Positions in incomplete gaps are censored; so are those whose tuple
/// needed a ladder level past the cap (ladder_unavailable is then set).
CodedWindow phi_encode(const CodebookFamily& fam, const Window& w, const CodeOptions& opt = {});

/// Phi^{-1}, running the same schedule with psi_k^{-1}.
CodedWindow phi_decode(const CodebookFamily& fam, const Window& w, const CodeOptions& opt = {});

enum class CodeKind { Meshalkin, Phi };

/// A coder together with its input and output laws.
struct CodeSpec {
  CodeKind kind = CodeKind::Meshalkin;
  std::shared_ptr<const CodebookFamily> family;  // Phi only

  static CodeSpec meshalkin();
  static CodeSpec phi(int n, int max_n = kDefaultMaxFamilyN,
                      int max_level = ImplicitLadder::kDefaultMaxLevel);

  const ProbabilityVector& input() const;
  const ProbabilityVector& output() const;
  CodedWindow encode(const Window& w, const CodeOptions& opt = {}) const;
  CodedWindow decode(const Window& w, const CodeOptions& opt = {}) const;
  /// "meshalkin" or "phi-n<k>"
  std::string name() const;
};

struct RoundTrip {
  CodedWindow encoded;
  CodedWindow decoded;
  std::uint64_t compared = 0;  // determined by both encode and decode
  std::uint64_t mismatches = 0;
  std::int64_t first_mismatch = 0;  // valid when mismatches > 0
};

/// decode(encode(w)) compared with w where both passes are determined.
RoundTrip round_trip(const CodeSpec& code, const Window& w);

}  // namespace finicode

#endif  // FINICODE_CODER_HPP

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

#ifndef FINICODE_MATCHING_HPP
#define FINICODE_MATCHING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finicode/dyadic.hpp"
#include "finicode/polynomial.hpp"
#include "finicode/probability.hpp"

namespace finicode {

inline constexpr std::uint64_t kDefaultMaterializationCap = 10'000'000;

/// Ordered alphabet whose elements are 2^rank-tuples of base symbols.
///
/// Rank 0 elements are base symbols. A rank r > 0 element is a pair of
/// indices into the rank r-1 `parent` alphabet. Element i has probability
/// 2^{-exponents[i]}. Rank 0 alphabets keep the order of the probability
/// vector they were built from; higher ranks are ordered by decreasing
/// probability, then lexicographically within a probability class.
struct TupleAlphabet {
  int rank = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> elements;
  std::vector<std::int64_t> exponents;
  std::shared_ptr<const TupleAlphabet> parent;

  static std::shared_ptr<const TupleAlphabet> from_vector(const ProbabilityVector& pv);

  std::size_t size() const noexcept { return elements.size(); }
  DyadicRational total_mass() const;
  /// Base symbols of element i, left to right.
  std::vector<int> flatten(std::size_t i) const;
  /// The alphabet as a probability vector over element indices.
  ProbabilityVector as_probability_vector() const;
};

/// One probability class of a product set C x C / D x D.
struct ClassRow {
  std::int64_t degree = 0;  // members have probability 2^{-degree}
  BigInt source_count;
  BigInt target_count;
  BigInt matched_count;
};

/// A maximal ordered measure-preserving matching psi from C x C to D x D.
///
/// Product elements (a, b) are addressed by a * |C| + b (resp. c * |D| + d),
/// which is also their lexicographic rank. Aggregated levels carry only the
/// class table and generating functions; `source` is null for them.
struct Matching {
  int level = 1;
  std::shared_ptr<const TupleAlphabet> source;
  std::shared_ptr<const TupleAlphabet> target;
  /// Matched (source product, target product), sorted by source product.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  /// Leftovers G and H as the next level's alphabets. Their exponents are
  /// normalised by the mass reduction when that mass is a power of two.
  std::shared_ptr<const TupleAlphabet> leftover_source;
  std::shared_ptr<const TupleAlphabet> leftover_target;
  bool leftovers_normalized = false;

  std::vector<ClassRow> classes;  // ascending degree
  DyadicRational mass_reduction;  // sum over G of r(x) = sum over H of s(y)

  DyadicPolynomial gamma, delta, upsilon, omega, lambda, xi;

  bool materialized() const noexcept { return source != nullptr; }
  std::optional<std::uint64_t> image(std::uint64_t source_product) const;
};

/// Builds the mompm of C x C onto D x D. Throws std::length_error when either
/// product set exceeds `cap` elements.
Matching build_mompm(std::shared_ptr<const TupleAlphabet> source,
                     std::shared_ptr<const TupleAlphabet> target,
                     std::uint64_t cap = kDefaultMaterializationCap);

struct LadderResult {
  std::vector<Matching> levels;
  int requested_depth = 0;
  bool exhausted = false;       // stopped early: empty or non-dyadic leftovers
  bool truncated = false;       // element lists dropped beyond the cap
  std::string stop_reason;
};

/// psi_1, psi_2, ... with C_{i+1} = G_i and D_{i+1} = H_i. Levels whose
/// product sets exceed `cap` are reported through class counts only.
LadderResult iterate_matchings(const ProbabilityVector& r, const ProbabilityVector& s, int depth,
                               std::uint64_t cap = kDefaultMaterializationCap);

}  // namespace finicode

#endif  // FINICODE_MATCHING_HPP

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

#ifndef FINICODE_IMPLICIT_LADDER_HPP
#define FINICODE_IMPLICIT_LADDER_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "finicode/dyadic.hpp"
#include "finicode/polynomial.hpp"
#include "finicode/probability.hpp"

namespace finicode {

enum class Side { Source, Target };

inline Side other(Side s) { return s == Side::Source ? Side::Target : Side::Source; }

/// Probability classes of an alphabet: class c has counts[c] elements of
/// probability 2^{-degrees[c]}. Degrees are strictly ascending.
struct ClassSet {
  std::vector<std::int64_t> degrees;
  std::vector<BigInt> counts;

  std::size_t size() const noexcept { return degrees.size(); }
  /// Class index with the given degree, or -1.
  std::int32_t find(std::int64_t degree) const;
  BigInt total() const;
  DyadicPolynomial generating_function() const;
};

/// A contiguous run of product elements (x, y) with x in class `first` and y
/// in class `second`, occupying ranks [offset, offset + size) of its class.
struct ProductBlock {
  std::int32_t first = 0;
  std::int32_t second = 0;
  BigInt offset;
  BigInt size;
};

struct ProductClass {
  std::int64_t degree = 0;
  BigInt source_count;
  BigInt target_count;
  BigInt matched;
  std::vector<ProductBlock> source_blocks;
  std::vector<ProductBlock> target_blocks;
  std::int32_t next_source_class = -1;  // class of the leftovers one level up
  std::int32_t next_target_class = -1;
};

/// The mompm psi_k between C_k x C_k and D_k x D_k in class-count form.
struct LadderLevel {
  int level = 1;
  ClassSet source;
  ClassSet target;
  std::vector<ProductClass> products;  // ascending degree
  std::unordered_map<std::int64_t, std::int32_t> product_of_degree;
  std::vector<std::int32_t> product_of_next_source;  // by class of C_{k+1}
  std::vector<std::int32_t> product_of_next_target;
  DyadicRational mass_reduction;
  /// mass_reduction = 2^{-shift}. Empty when there are no leftovers or their
  /// mass is not a power of two; the ladder ends at this level then.
  std::optional<std::int64_t> shift;
  ClassSet next_source;
  ClassSet next_target;

  static LadderLevel build(int level, ClassSet source, ClassSet target);
};

/// The mompm ladder psi_1, psi_2, ... evaluated without listing elements.
///
/// C_k and D_k are ordered class-major: by decreasing probability, then
/// lexicographically on level k-1 pairs within a class. At level 1 this is
/// the order of the base vectors, which must therefore list probabilities in
/// non-increasing order. An element is then a class plus an index inside the
/// class, and psi_k is rank/unrank arithmetic on class counts.
///
/// Levels are built on first use. Building is serialised; reading a built
/// level is lock-free, so one ladder can be shared by concurrent coders.
class ImplicitLadder {
 public:
  struct Element {
    std::int32_t cls = 0;
    BigInt index;
    friend bool operator==(const Element&, const Element&) = default;
  };

  struct Outcome {
    bool matched = false;
    Element first;   // image pair on the other side, level k
    Element second;
    Element merged;  // leftover element of level k+1 on this side
  };

  static constexpr int kDefaultMaxLevel = 30;

  ImplicitLadder(const ProbabilityVector& r, const ProbabilityVector& s,
                 int max_level = kDefaultMaxLevel);

  ImplicitLadder(const ImplicitLadder&) = delete;
  ImplicitLadder& operator=(const ImplicitLadder&) = delete;

  int max_level() const noexcept { return max_level_; }
  const ProbabilityVector& base(Side side) const { return side == Side::Source ? r_ : s_; }

  /// psi_k, building it if needed; nullptr past max_level or the end of the
  /// ladder.
  const LadderLevel* level(int k) const;

  /// Level-1 element of a base symbol; InvalidSymbol if it is not in r (s).
  Element base_element(Side side, int symbol) const;
  int base_symbol(Side side, const Element& e) const;

  /// psi_k (Source) or psi_k^{-1} (Target) applied to the pair (a, b).
  /// level(k) must be available.
  Outcome apply(Side side, int k, const Element& a, const Element& b) const;

  /// The level-k pair merged into the level k+1 element e.
  std::pair<Element, Element> split(Side side, int k, const Element& e) const;

  /// Appends the 2^{k-1} base symbols of a level-k element.
  void flatten(Side side, int k, const Element& e, std::vector<int>& out) const;

 private:
  struct Base {
    std::vector<std::int32_t> cls;   // by position
    std::vector<std::size_t> first;  // first position of each class
    std::unordered_map<int, std::size_t> pos;
  };

  const Base& base_index(Side side) const { return side == Side::Source ? rb_ : sb_; }

  ProbabilityVector r_;
  ProbabilityVector s_;
  Base rb_, sb_;
  int max_level_;

  mutable std::vector<std::unique_ptr<LadderLevel>> levels_;
  mutable std::atomic<int> built_{0};
  mutable std::mutex build_mutex_;
};

}  // namespace finicode

#endif  // FINICODE_IMPLICIT_LADDER_HPP

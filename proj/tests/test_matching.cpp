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

#include <doctest.h>

#include <map>
#include <random>
#include <span>

#include "finicode/codebook.hpp"
#include "finicode/errors.hpp"
#include "finicode/implicit_ladder.hpp"
#include "finicode/info.hpp"
#include "finicode/ladder.hpp"
#include "finicode/matching.hpp"
#include "helpers.hpp"
#include "support/oracles.hpp"

using namespace finicode;
using testing::D;
using testing::from_surprisals;
using testing::poly;

namespace {

ProbabilityVector meshalkin_r() { return from_surprisals({1, 3, 3, 3, 3}, 1); }
ProbabilityVector meshalkin_s() { return from_surprisals({2, 2, 2, 2}, 1); }

Matching level_one(const ProbabilityVector& r, const ProbabilityVector& s) {
  return build_mompm(TupleAlphabet::from_vector(r), TupleAlphabet::from_vector(s));
}

std::vector<int> random_surprisals(std::mt19937_64& g, int max_symbols) {
  std::vector<int> k{0};
  std::uniform_int_distribution<int> len(2, max_symbols);
  int target = len(g);
  while (static_cast<int>(k.size()) < target) {
    std::uniform_int_distribution<std::size_t> pick(0, k.size() - 1);
    auto j = pick(g);
    ++k[j];
    k.push_back(k[j]);
  }
  std::shuffle(k.begin(), k.end(), g);
  return k;
}

// Structural checks that every constructed matching must pass.
void check_matching(const Matching& m) {
  const auto& C = *m.source;
  const auto& Dt = *m.target;
  const auto nc = C.size(), nd = Dt.size();
  std::vector<char> used_src(nc * nc, 0), used_dst(nd * nd, 0);
  for (auto [a, b] : m.pairs) {
    // measure preservation
    CHECK(C.exponents[a / nc] + C.exponents[a % nc] == Dt.exponents[b / nd] + Dt.exponents[b % nd]);
    CHECK_FALSE(used_src[a]);
    CHECK_FALSE(used_dst[b]);
    used_src[a] = used_dst[b] = 1;
  }
  // order within each class
  for (std::size_t i = 1; i < m.pairs.size(); ++i) {
    auto [a0, b0] = m.pairs[i - 1];
    auto [a1, b1] = m.pairs[i];
    auto d0 = C.exponents[a0 / nc] + C.exponents[a0 % nc];
    auto d1 = C.exponents[a1 / nc] + C.exponents[a1 % nc];
    if (d0 == d1) CHECK(b0 < b1);
  }
  // partition and maximality
  std::map<std::int64_t, std::pair<int, int>> left;
  for (std::uint64_t a = 0; a < nc * nc; ++a)
    if (!used_src[a]) ++left[C.exponents[a / nc] + C.exponents[a % nc]].first;
  for (std::uint64_t b = 0; b < nd * nd; ++b)
    if (!used_dst[b]) ++left[Dt.exponents[b / nd] + Dt.exponents[b % nd]].second;
  for (const auto& [deg, c] : left) CHECK(std::min(c.first, c.second) == 0);
  CHECK(m.leftover_source->size() + m.pairs.size() == nc * nc);
  CHECK(m.leftover_target->size() + m.pairs.size() == nd * nd);

  CHECK(m.lambda - m.xi == m.upsilon - m.omega);
  CHECK(m.lambda.at_one() == m.mass_reduction);
  CHECK(m.xi.at_one() == m.mass_reduction);
  if (m.leftovers_normalized) {
    CHECK(m.leftover_source->total_mass() == D(1));
    CHECK(m.leftover_target->total_mass() == D(1));
  }
}

ImplicitLadder::Element implicit_of(const ImplicitLadder& L, Side side, int level, std::span<const int> sym) {
  if (level == 1) return L.base_element(side, sym[0]);
  auto half = sym.size() / 2;
  auto a = implicit_of(L, side, level - 1, sym.first(half));
  auto b = implicit_of(L, side, level - 1, sym.subspan(half));
  auto o = L.apply(side, level - 1, a, b);
  REQUIRE_FALSE(o.matched);
  return o.merged;
}

// Every product of a materialised level against the implicit ladder.
void check_implicit(const CodebookFamily& fam, const Matching& m) {
  const auto& L = *fam.ladder;
  const auto& C = *m.source;
  const auto& Dt = *m.target;
  const auto nc = C.size(), nd = Dt.size();
  for (std::uint64_t a = 0; a < nc * nc; ++a) {
    auto x = C.flatten(a / nc), y = C.flatten(a % nc);
    auto o = L.apply(Side::Source, m.level, implicit_of(L, Side::Source, m.level, x),
                     implicit_of(L, Side::Source, m.level, y));
    auto img = m.image(a);
    REQUIRE(o.matched == img.has_value());
    if (!o.matched) continue;
    std::vector<int> got;
    L.flatten(Side::Target, m.level, o.first, got);
    L.flatten(Side::Target, m.level, o.second, got);
    auto want = Dt.flatten(*img / nd), w2 = Dt.flatten(*img % nd);
    want.insert(want.end(), w2.begin(), w2.end());
    CHECK(got == want);
    // and back again
    auto back = L.apply(Side::Target, m.level, o.first, o.second);
    REQUIRE(back.matched);
    std::vector<int> orig;
    L.flatten(Side::Source, m.level, back.first, orig);
    L.flatten(Side::Source, m.level, back.second, orig);
    x.insert(x.end(), y.begin(), y.end());
    CHECK(orig == x);
  }
}

}  // namespace

TEST_SUITE("matching") {

TEST_CASE("Meshalkin pair, one level") {
  auto m = level_one(meshalkin_r(), meshalkin_s());
  CHECK(m.mass_reduction == D(1, 1));
  CHECK(m.lambda == poly(2, 4, {D(1, 2), D(1, 2)}));
  CHECK(m.lambda == generating_function(meshalkin_r()).substitute_z_squared().scaled(D(1, 1)));
  // G: the single (alpha_1, alpha_1) plus all 16 pairs of three-bit symbols
  REQUIRE(m.leftover_source->size() == 17);
  CHECK(m.leftover_source->flatten(0) == std::vector<int>{1, 1});
  for (std::size_t i = 1; i < 17; ++i) {
    auto t = m.leftover_source->flatten(i);
    CHECK(t[0] >= 2);
    CHECK(t[1] >= 2);
  }
  check_matching(m);
}

TEST_CASE("identical inputs match completely") {
  auto r = from_surprisals({1, 2, 3, 3});
  auto m = level_one(r, r);
  CHECK(m.mass_reduction == D(0));
  CHECK(m.leftover_source->size() == 0);
  CHECK(m.pairs.size() == 16);
  for (auto [a, b] : m.pairs) CHECK(a == b);
  auto ladder = iterate_matchings(r, r, 3);
  CHECK(ladder.exhausted);
  CHECK(ladder.levels.size() == 1);
}

TEST_CASE("n = 2 leftover generating functions") {
  auto fam = construct_family(2);
  auto m = level_one(fam.r, fam.s);
  CHECK(m.gamma == poly(3, 2, {D(1, 3), D(3, 2), D(1, 3)}));
  CHECK(m.delta == poly(4, 2, {D(1, 1), D(1, 1)}));
  CHECK(m.upsilon == poly(6, 2, {D(1, 6), D(3, 4), D(19, 5), D(3, 4), D(1, 6)}));
  CHECK(m.omega == poly(8, 2, {D(1, 2), D(1, 1), D(1, 2)}));
  CHECK(m.lambda == poly(6, 4, {D(1, 6), D(3, 5), D(1, 6)}));
  CHECK(m.xi == poly(8, 4, {D(1, 4), D(1, 4)}));
  CHECK(m.mass_reduction == D(1, 3));
  check_matching(m);
}

TEST_CASE("level one agrees with the brute-force matcher") {
  std::mt19937_64 g(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto k = random_surprisals(g, 6);
    auto l = random_surprisals(g, 6);
    auto m = level_one(from_surprisals(k), from_surprisals(l));
    CHECK(m.pairs == oracle::naive_mompm(k, l));
    check_matching(m);
  }
}

TEST_CASE("n = 1 first matching, by hand") {
  auto fam = construct_family(1);
  auto m = level_one(fam.r, fam.s);
  // r ids 1..5 (1 has 1/2), s ids 1..4. The eight products of degree 4 go to
  // the first eight target pairs in lexicographic order.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> want = {
      {{1, 2}, {1, 1}}, {{1, 3}, {1, 2}}, {{1, 4}, {1, 3}}, {{1, 5}, {1, 4}},
      {{2, 1}, {2, 1}}, {{3, 1}, {2, 2}}, {{4, 1}, {2, 3}}, {{5, 1}, {2, 4}}};
  REQUIRE(m.pairs.size() == want.size());
  const auto nc = m.source->size(), nd = m.target->size();
  for (std::size_t i = 0; i < want.size(); ++i) {
    auto [a, b] = m.pairs[i];
    std::vector<int> x{fam.r.symbol(a / nc), fam.r.symbol(a % nc)};
    std::vector<int> y{fam.s.symbol(b / nd), fam.s.symbol(b % nd)};
    CHECK(x == want[i].first);
    CHECK(y == want[i].second);
  }
}

TEST_CASE("family ladders reduce mass by 2^{-(2n-1)} at every level") {
  for (int n = 1; n <= 3; ++n) {
    auto fam = construct_family(n);
    int depth = n == 3 ? 2 : 3;
    auto ladder = iterate_matchings(fam.r, fam.s, depth);
    REQUIRE(static_cast<int>(ladder.levels.size()) == depth);
    CHECK_FALSE(ladder.exhausted);
    for (const auto& m : ladder.levels) {
      CHECK(m.mass_reduction == DyadicRational::pow2(-(2 * n - 1)));
      CHECK(m.lambda - m.xi == m.upsilon - m.omega);
      if (m.materialized()) check_matching(m);
    }
  }
}

TEST_CASE("aggregated levels agree with materialised ones") {
  auto fam = construct_family(2);
  auto full = iterate_matchings(fam.r, fam.s, 2);
  auto agg = iterate_matchings(fam.r, fam.s, 2, 1);  // nothing materialised
  CHECK(agg.truncated);
  REQUIRE(agg.levels.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK_FALSE(agg.levels[i].materialized());
    CHECK(agg.levels[i].lambda == full.levels[i].lambda);
    CHECK(agg.levels[i].xi == full.levels[i].xi);
    CHECK(agg.levels[i].mass_reduction == full.levels[i].mass_reduction);
    REQUIRE(agg.levels[i].classes.size() == full.levels[i].classes.size());
    for (std::size_t c = 0; c < agg.levels[i].classes.size(); ++c) {
      CHECK(agg.levels[i].classes[c].source_count == full.levels[i].classes[c].source_count);
      CHECK(agg.levels[i].classes[c].matched_count == full.levels[i].classes[c].matched_count);
    }
  }
}

TEST_CASE("implicit ladder reproduces the materialised matchings") {
  {
    auto fam = construct_family(1);
    auto ladder = iterate_matchings(fam.r, fam.s, 3);
    for (const auto& m : ladder.levels) check_implicit(fam, m);
  }
  {
    auto fam = construct_family(2);
    auto ladder = iterate_matchings(fam.r, fam.s, 2);
    for (const auto& m : ladder.levels) check_implicit(fam, m);
  }
}

TEST_CASE("implicit ladder split and merge are inverse") {
  auto fam = construct_family(2);
  const auto& L = *fam.ladder;
  std::mt19937_64 g(4);
  for (Side side : {Side::Source, Side::Target}) {
    const auto& base = L.base(side);
    std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
    for (int t = 0; t < 2000; ++t) {
      auto a = L.base_element(side, base.symbol(pick(g)));
      auto b = L.base_element(side, base.symbol(pick(g)));
      auto o = L.apply(side, 1, a, b);
      if (o.matched) continue;
      auto [x, y] = L.split(side, 1, o.merged);
      CHECK(x == a);
      CHECK(y == b);
    }
  }
}

TEST_CASE("implicit ladder limits") {
  ImplicitLadder L(construct_family(1).r, construct_family(1).s, 2);
  CHECK(L.level(2) != nullptr);
  CHECK(L.level(3) == nullptr);
  ImplicitLadder::Element e;
  CHECK_THROWS_AS(L.apply(Side::Source, 3, e, e), LadderUnavailable);
  CHECK_THROWS_AS(L.base_element(Side::Source, 0), InvalidSymbol);
}

TEST_CASE("verify_ladder") {
  auto g = poly(1, 2, {D(1, 1), D(1, 1)});
  auto d = DyadicPolynomial::monomial(2);
  auto rep = verify_ladder(g, d, D(1, 1), 4);
  CHECK(rep.holds);
  CHECK(rep.levels.size() == 4);
  for (const auto& c : rep.levels) CHECK(c.ok());

  auto fam = construct_family(2);
  CHECK(verify_ladder(generating_function(fam.r), generating_function(fam.s), D(1, 3), 4).holds);

  auto same = verify_ladder(g, g, D(0), 5);
  CHECK(same.holds);

  auto wrong = verify_ladder(g, d, D(1, 2), 2);
  CHECK_FALSE(wrong.holds);
  CHECK(wrong.first_failure.has_value());
}

}  // TEST_SUITE

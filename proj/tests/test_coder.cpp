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

#include <random>
#include <sstream>

#include "finicode/codec_io.hpp"
#include "finicode/coder.hpp"
#include "finicode/errors.hpp"
#include "finicode/gaps.hpp"
#include "finicode/sampling.hpp"
#include "support/oracles.hpp"

using namespace finicode;

namespace {

Window win(std::vector<int> s, std::int64_t lo = 0) {
  Window w;
  w.lo = lo;
  w.symbols = std::move(s);
  return w;
}

std::vector<CodeSpec> all_codes() {
  return {CodeSpec::meshalkin(), CodeSpec::phi(1), CodeSpec::phi(2), CodeSpec::phi(3)};
}

Window sub_window(const Window& w, std::int64_t lo, std::int64_t hi) {
  lo = std::max(lo, w.lo);
  hi = std::min(hi, w.hi());
  return win(std::vector<int>(w.symbols.begin() + (lo - w.lo), w.symbols.begin() + (hi - w.lo) + 1), lo);
}

}  // namespace

TEST_SUITE("coder") {

TEST_CASE("gap segmentation") {
  auto g = segment_gaps(win({0, 0, 3, 1, 0, 0}), 1, 2);
  REQUIRE(g.at(1).size() == 1);
  CHECK(g.at(1)[0].members == std::vector<std::int64_t>{2, 3});
  CHECK(g.at(1)[0].complete);

  auto none = segment_gaps(win(std::vector<int>(20, 0)), 1, 3);
  for (const auto& lvl : none.levels) CHECK(lvl.empty());

  // n = 2: seven markers split 1-gaps (4 needed) but not 2-gaps (8 needed)
  std::vector<int> s(8, 0);
  s.push_back(5);
  s.insert(s.end(), 7, 0);
  s.push_back(6);
  s.insert(s.end(), 8, 0);
  auto g2 = segment_gaps(win(s), 2, 2);
  std::vector<Gap> complete1, complete2;
  for (const auto& x : g2.at(1))
    if (x.complete) complete1.push_back(x);
  for (const auto& x : g2.at(2))
    if (x.complete) complete2.push_back(x);
  REQUIRE(complete1.size() == 2);
  CHECK(complete1[0].members == std::vector<std::int64_t>{8});
  CHECK(complete1[1].members == std::vector<std::int64_t>{16});
  REQUIRE(complete2.size() == 1);
  CHECK(complete2[0].members == std::vector<std::int64_t>{8, 16});

  // a gap touching the edge is not complete
  auto edge = segment_gaps(win({4, 0, 0, 2}), 1, 1);
  for (const auto& x : edge.at(1)) CHECK_FALSE(x.complete);
}

TEST_CASE("Meshalkin examples") {
  auto e = meshalkin_encode(win({1, 4}));
  CHECK(e.output.symbols == std::vector<int>{1, 4});
  CHECK(e.status[0].determined);
  CHECK(e.status[1].determined);
  CHECK(e.status[0].radius == 1);

  auto d = meshalkin_decode(win({1, 4}));
  CHECK(d.output.symbols == std::vector<int>{1, 4});

  auto ones = meshalkin_encode(win(std::vector<int>(50, 1)));
  CHECK(ones.determined_count() == 0);
  auto fours = meshalkin_decode(win(std::vector<int>(50, 4)));
  CHECK(fours.determined_count() == 0);

  CHECK_THROWS_AS(meshalkin_encode(win({1, 0, 4})), InvalidSymbol);
  CHECK_THROWS_AS(meshalkin_decode(win({1, 5})), InvalidSymbol);
}

TEST_CASE("Meshalkin step construction: literal and linked-list versions agree") {
  std::mt19937_64 g(8);
  std::uniform_int_distribution<int> sym(1, 5);
  std::bernoulli_distribution one(0.5);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> a(60);
    for (auto& x : a) x = one(g) ? 1 : sym(g) % 4 + 2;
    CHECK(oracle::meshalkin_inductive(a, true) == oracle::meshalkin_inductive(a, false));
  }
}

TEST_CASE("Meshalkin walk description agrees with the step construction") {
  const auto& r = meshalkin_alphabets().r;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto w = sample_window(r, 2000, seed);
    auto e = meshalkin_encode(w);
    auto o = oracle::meshalkin_inductive(w.symbols);
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(e.status[i].determined == (o[i] != 0));
      if (e.status[i].determined) CHECK(e.output.symbols[i] == o[i]);
    }
  }
}

TEST_CASE("Phi markers and a single pair") {
  auto fam = construct_family(1);
  auto e = phi_encode(fam, win({0, 0, 2, 1, 0, 0}));
  CHECK(e.output.symbols == std::vector<int>{0, 0, 2, 1, 0, 0});
  for (int i : {0, 1, 4, 5}) {
    CHECK(e.status[i].determined);
    CHECK(e.status[i].step == 0);
    CHECK(e.status[i].radius == 0);
  }
  CHECK(e.status[2].step == 1);
  CHECK(e.status[2].radius == 3);
  CHECK(e.status[3].radius == 3);

  auto all = phi_decode(fam, win(std::vector<int>(30, 0)));
  CHECK(all.output.symbols == std::vector<int>(30, 0));
  CHECK(all.determined_count() == 30);

  CHECK_THROWS_AS(phi_encode(fam, win({0, 9, 0})), InvalidSymbol);
}

TEST_CASE("round trips") {
  for (const auto& code : all_codes()) {
    CAPTURE(code.name());
    for (std::uint64_t seed : {3u, 4u}) {
      auto w = sample_window(code.input(), 20000, seed);
      auto rt = round_trip(code, w);
      CHECK(rt.mismatches == 0);
      CHECK(rt.compared > 30000);
      // markers stay where they are
      if (code.kind == CodeKind::Phi) {
        for (std::size_t i = 0; i < w.size(); ++i)
          if (rt.encoded.status[i].determined) CHECK((rt.encoded.output.symbols[i] == 0) == (w.symbols[i] == 0));
      }
    }
  }
}

TEST_CASE("decode side round trips") {
  for (const auto& code : all_codes()) {
    CAPTURE(code.name());
    auto y = sample_window(code.output(), 20000, 12);
    auto x = code.decode(y);
    auto back = code.encode(x.output);
    for (std::size_t i = 0; i < y.size(); ++i)
      if (x.status[i].determined && back.status[i].determined) CHECK(back.output.symbols[i] == y.symbols[i]);
  }
}

TEST_CASE("radius certificates are local") {
  std::mt19937_64 g(21);
  for (const auto& code : all_codes()) {
    CAPTURE(code.name());
    auto w = sample_window(code.input(), 3000, 77);
    auto e = code.encode(w);
    std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1);
    std::uniform_int_distribution<std::size_t> sym(0, code.input().size() - 1);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 150; ++t) {
      auto i = pos(g);
      const auto& st = e.status[i];
      if (!st.determined) continue;
      ++checked;
      const std::int64_t p = w.lo + static_cast<std::int64_t>(i);
      // the certified span alone determines the symbol
      auto small = code.encode(sub_window(w, p - st.radius, p + st.radius));
      REQUIRE(small.status_at(p).determined);
      CHECK(small.output.at(p) == e.output.symbols[i]);
      // so does any change outside it
      auto moved = w;
      for (int k = 0; k < 40; ++k) {
        auto j = pos(g);
        auto q = w.lo + static_cast<std::int64_t>(j);
        if (q < p - st.radius || q > p + st.radius) moved.symbols[j] = code.input().symbol(sym(g));
      }
      auto e2 = code.encode(moved);
      REQUIRE(e2.status[i].determined);
      CHECK(e2.output.symbols[i] == e.output.symbols[i]);
    }
    CHECK(checked > 50);
  }
}

TEST_CASE("shift equivariance") {
  for (const auto& code : all_codes()) {
    CAPTURE(code.name());
    auto a = sample_range(code.input(), -5000, 5000, 31);
    auto b = sample_range(code.input(), -4999, 5001, 31);
    auto ea = code.encode(a), eb = code.encode(b);
    std::size_t both = 0;
    for (std::int64_t p = -4999; p <= 5000; ++p) {
      if (!ea.status_at(p).determined || !eb.status_at(p).determined) continue;
      ++both;
      CHECK(ea.output.at(p) == eb.output.at(p));
    }
    CHECK(both > 5000);
  }
}

TEST_CASE("unknown symbols act as window edges") {
  for (const auto& code : all_codes()) {
    CAPTURE(code.name());
    auto w = sample_window(code.input(), 4000, 5);
    auto full = code.encode(w);
    auto holey = w;
    for (std::size_t i = 1000; i < holey.size(); i += 1777) holey.symbols[i] = kUnknownSymbol;
    auto e = code.encode(holey);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (holey.symbols[i] == kUnknownSymbol) {
        CHECK_FALSE(e.status[i].determined);
        CHECK(e.output.symbols[i] == kUnknownSymbol);
      } else if (e.status[i].determined) {
        REQUIRE(full.status[i].determined);
        CHECK(e.output.symbols[i] == full.output.symbols[i]);
      } else {
        CHECK(e.output.symbols[i] == kUnknownSymbol);
      }
    }
  }
}

TEST_CASE("each position belongs to at most one resolved tuple") {
  auto fam = construct_family(2);
  auto w = sample_window(fam.p, 5000, 9);
  auto e = phi_encode(fam, w, {true});
  REQUIRE(e.trace_of.size() == w.size());
  std::vector<int> seen(w.size(), 0);
  for (const auto& t : e.trace) {
    CHECK(t.members.size() == (std::size_t{2} << (t.level - 1)));
    for (auto p : t.members) ++seen[static_cast<std::size_t>(p - w.lo)];
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(seen[i] <= 1);
    if (w.symbols[i] != 0) CHECK((seen[i] == 1) == e.status[i].determined);
    if (e.trace_of[i] >= 0) {
      const auto& m = e.trace[static_cast<std::size_t>(e.trace_of[i])].members;
      CHECK(std::find(m.begin(), m.end(), w.lo + static_cast<std::int64_t>(i)) != m.end());
    }
  }
}

TEST_CASE("a capped ladder censors instead of failing") {
  auto code = CodeSpec::phi(2, kDefaultMaxFamilyN, 1);
  auto w = sample_window(code.input(), 20000, 2);
  auto e = code.encode(w);
  CHECK(e.ladder_unavailable);
  auto full = CodeSpec::phi(2).encode(w);
  CHECK(e.determined_count() < full.determined_count());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (e.status[i].determined) CHECK(e.output.symbols[i] == full.output.symbols[i]);
  CHECK(round_trip(code, w).mismatches == 0);
}

TEST_CASE("window formats") {
  auto w = win({3, kUnknownSymbol, 0, 12}, 0);
  std::stringstream csv;
  write_window_csv(csv, w);
  CHECK(csv.str() == "3,?,0,12\n");
  CHECK(read_window_csv(csv).symbols == w.symbols);

  std::stringstream bin;
  write_window_u16(bin, w);
  CHECK(bin.str().size() == 8);
  CHECK(read_window_u16(bin).symbols == w.symbols);

  w.lo = -7;
  w.seed = 99;
  auto back = window_from_json(json::parse(window_to_json(w).dump()));
  CHECK(back.symbols == w.symbols);
  CHECK(back.lo == -7);
  CHECK(back.seed == 99);

  std::stringstream bad("1,x");
  CHECK_THROWS_AS(read_window_csv(bad), std::invalid_argument);

  auto e = meshalkin_encode(win({1, 4, 1}));
  std::stringstream out;
  write_coded_csv(out, e);
  CHECK(out.str() ==
        "position,symbol,status,step,radius\r\n0,1,determined,1,1\r\n1,4,determined,1,1\r\n2,?,censored,,\r\n");
  auto j = coded_window_to_json(e);
  CHECK(j["symbols"][2].is_null());
  CHECK(j["determined_count"] == 2);
}

}  // TEST_SUITE

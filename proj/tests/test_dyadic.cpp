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

#include "finicode/errors.hpp"
#include "finicode/info.hpp"
#include "finicode/serialize.hpp"
#include "helpers.hpp"

using namespace finicode;
using testing::D;
using testing::from_surprisals;
using testing::poly;

TEST_SUITE("dyadic") {

TEST_CASE("canonical form") {
  DyadicRational a(BigInt(6), 4);  // 6/16
  CHECK(a.numerator() == 3);
  CHECK(a.exponent() == 3);
  DyadicRational z(BigInt(0), 9);
  CHECK(z.exponent() == 0);
  CHECK(z.is_zero());
  CHECK(D(1, 1) + D(1, 1) == D(1));
  CHECK((D(1, 1) + D(1, 1)).exponent() == 0);
  CHECK(D(3, 2) - D(3, 2) == D(0));
}

TEST_CASE("exact arithmetic and ordering") {
  CHECK(D(3, 3) * D(5, 2) == D(15, 5));
  CHECK(D(1, 2) < D(3, 3));
  CHECK(D(-1, 1) < D(0));
  CHECK(DyadicRational::pow2(-70) * DyadicRational::pow2(70) == D(1));
  CHECK(D(5, 3).to_string() == "5/8");
  CHECK(D(1, 3).exact_log2() == -3);
  CHECK_FALSE(D(3, 3).exact_log2().has_value());
  CHECK(*divide_exact(D(3, 3), D(1, 2)) == D(3, 1));
  CHECK_FALSE(divide_exact(D(1), D(3)).has_value());
}

TEST_CASE("canonical form is independent of how a value is reached") {
  std::mt19937_64 g(5);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<int> ex(0, 40);
  for (int i = 0; i < 500; ++i) {
    auto a = D(num(g), ex(g)), b = D(num(g), ex(g)), c = D(num(g), ex(g));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (a.exponent() > 0) CHECK(a.numerator() % 2 != 0);
  }
}

TEST_CASE("probability vector validation") {
  CHECK_THROWS_AS(ProbabilityVector::dense({D(1, 1), D(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector({0, 0}, {D(1, 1), D(1, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector::dense({D(1), D(0)}), std::invalid_argument);
  auto pv = ProbabilityVector::dense({D(3, 3), D(1, 3), D(1, 1)});
  CHECK_THROWS_AS(entropy(pv), NonDyadicProbability);
  CHECK_THROWS_AS(informational_variance(pv), NonDyadicProbability);
  CHECK_THROWS_AS(generating_function(pv), NonDyadicProbability);
}

TEST_CASE("entropy") {
  // n = 2 example vector: 1 x 1/2, 1 x 1/16, 24 x 1/64, 16 x 1/256
  std::vector<int> k{1, 4};
  k.insert(k.end(), 24, 6);
  k.insert(k.end(), 16, 8);
  CHECK(entropy(from_surprisals(k)) == D(7, 1));
  CHECK(entropy(from_surprisals({1, 1})) == D(1));
  CHECK(entropy(from_surprisals({1, 3, 3, 3, 3})) == D(2));
}

TEST_CASE("informational variance") {
  CHECK(informational_variance(from_surprisals({2, 2, 2, 2})) == D(0));
  CHECK(informational_variance(from_surprisals({1, 2, 4, 4, 4, 4})) == D(3, 1));
  CHECK(informational_variance(from_surprisals({1, 3, 3, 3, 3})) == D(1));
}

TEST_CASE("log moments") {
  auto q = from_surprisals({1, 3, 3, 3, 3});
  CHECK(log_moment(q, 1) == -entropy(q));
  CHECK(log_moment(q, 2) == D(5));
  CHECK(log_moment(q, 3) == D(-1, 1) - D(27, 1));
  CHECK_THROWS_AS(log_moment(q, 0), std::invalid_argument);
}

TEST_CASE("generating functions") {
  CHECK(generating_function(from_surprisals({1, 3, 3, 3, 3})) == poly(1, 2, {D(1, 1), D(1, 1)}));
  CHECK(generating_function(from_surprisals({2, 2, 2, 2})) == DyadicPolynomial::monomial(2));
  // r = 2p for n = 2: 1 x 1/8, 24 x 1/32, 16 x 1/128
  std::vector<int> k{3};
  k.insert(k.end(), 24, 5);
  k.insert(k.end(), 16, 7);
  CHECK(generating_function(from_surprisals(k)) == poly(3, 2, {D(1, 3), D(3, 2), D(1, 3)}));
}

TEST_CASE("polynomial operations") {
  auto g = poly(1, 2, {D(1, 1), D(1, 1)});
  auto d = DyadicPolynomial::monomial(2);
  CHECK(g.square() == poly(2, 2, {D(1, 2), D(1, 1), D(1, 2)}));
  auto lhs = g.square() - d.square();
  CHECK(lhs == poly(2, 2, {D(1, 2), D(-1, 1), D(1, 2)}));
  CHECK(lhs == (g.substitute_z_squared() - d.substitute_z_squared()).scaled(D(1, 1)));
  CHECK(g.substitute_z_squared() == poly(2, 4, {D(1, 1), D(1, 1)}));
  CHECK(g.shifted(-1) == poly(0, 2, {D(1, 1), D(1, 1)}));
  CHECK((g - g).is_zero());
  CHECK(g.pow(3) == g * g * g);
  CHECK((g - d).positive_part() == g);

  auto r2 = poly(3, 2, {D(1, 3), D(3, 2), D(1, 3)});
  CHECK(r2.square() == poly(6, 2, {D(1, 6), D(3, 4), D(19, 5), D(3, 4), D(1, 6)}));
}

TEST_CASE("generating function properties on random dyadic vectors") {
  std::mt19937_64 g(17);
  for (int trial = 0; trial < 200; ++trial) {
    // Split mass by repeated halving of a random entry.
    std::vector<int> k{0};
    std::uniform_int_distribution<int> steps(1, 12);
    int s = steps(g);
    for (int i = 0; i < s; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, k.size() - 1);
      auto j = pick(g);
      ++k[j];
      k.push_back(k[j]);
    }
    auto pv = from_surprisals(k);
    auto G = generating_function(pv);
    CHECK(G.at_one() == D(1));
    CHECK(G.derivative_at_one() == entropy(pv));
    auto var = informational_variance(pv);
    CHECK(var >= D(0));
    bool all_equal = std::all_of(k.begin(), k.end(), [&](int x) { return x == k[0]; });
    CHECK((var == D(0)) == all_equal);
    // sigma^2 = G''(1) + G'(1) - G'(1)^2
    auto h = G.derivative_at_one();
    CHECK(var == G.second_derivative_at_one() + h - h * h);
  }
}

TEST_CASE("serialization round trips") {
  auto d = D(-12345, 17);
  CHECK(dyadic_from_json(to_json_value(d)) == d);
  CHECK(to_json_value(D(3, 2)) == json{{"num", 3}, {"exp", 2}});
  DyadicRational huge(BigInt("123456789012345678901234567890123"), 200);
  CHECK(dyadic_from_json(json::parse(to_json_value(huge).dump())) == huge);
  auto p = poly(3, 2, {D(1, 3), D(3, 2), D(1, 3)});
  CHECK(to_json_value(p).dump() == "[[3,1,3],[5,3,2],[7,1,3]]");
  CHECK(polynomial_from_json(to_json_value(p)) == p);
  auto pv = from_surprisals({1, 2, 3, 3}, 5);
  CHECK(probability_vector_from_json(to_json_value(pv)) == pv);
}

}  // TEST_SUITE

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

#include "finicode/serialize.hpp"

#include <stdexcept>

namespace finicode {

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

json to_json_value(const DyadicRational& d) {
  return json{{"num", bigint_to_json(d.numerator())}, {"exp", d.exponent()}};
}

DyadicRational dyadic_from_json(const json& j) {
  return DyadicRational(bigint_from_json(j.at("num")), j.at("exp").get<std::uint64_t>());
}

json to_json_value(const DyadicPolynomial& p) {
  json arr = json::array();
  for (const auto& [deg, c] : p.coefficients())
    arr.push_back(json::array({deg, bigint_to_json(c.numerator()), c.exponent()}));
  return arr;
}

DyadicPolynomial polynomial_from_json(const json& j) {
  DyadicPolynomial p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("polynomial term must be [degree, num, exp]");
    p.add_term(t[0].get<std::int64_t>(), DyadicRational(bigint_from_json(t[1]), t[2].get<std::uint64_t>()));
  }
  return p;
}

json to_json_value(const ProbabilityVector& pv) {
  json probs = json::array();
  for (const auto& p : pv.probs()) probs.push_back(to_json_value(p));
  return json{{"symbols", std::vector<int>(pv.symbols().begin(), pv.symbols().end())}, {"probs", probs}};
}

ProbabilityVector probability_vector_from_json(const json& j) {
  std::vector<DyadicRational> probs;
  for (const auto& p : j.at("probs")) probs.push_back(dyadic_from_json(p));
  return ProbabilityVector(j.at("symbols").get<std::vector<int>>(), std::move(probs));
}

}  // namespace finicode

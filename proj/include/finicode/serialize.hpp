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

#ifndef FINICODE_SERIALIZE_HPP
#define FINICODE_SERIALIZE_HPP

#include "json.hpp"

#include "finicode/dyadic.hpp"
#include "finicode/polynomial.hpp"
#include "finicode/probability.hpp"

// JSON encodings:
//   DyadicRational    {"num": int, "exp": int}
//   DyadicPolynomial  [[degree, num, exp], ...] sorted by degree
//   ProbabilityVector {"symbols": [int], "probs": [DyadicRational]}
// Integers that do not fit in 64 bits are written as decimal strings and are
// accepted in either form when reading.
namespace finicode {

using json = nlohmann::json;

json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

json to_json_value(const DyadicRational& d);
DyadicRational dyadic_from_json(const json& j);

json to_json_value(const DyadicPolynomial& p);
DyadicPolynomial polynomial_from_json(const json& j);

json to_json_value(const ProbabilityVector& pv);
ProbabilityVector probability_vector_from_json(const json& j);

}  // namespace finicode

#endif  // FINICODE_SERIALIZE_HPP

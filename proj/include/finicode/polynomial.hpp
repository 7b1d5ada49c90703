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

#ifndef FINICODE_POLYNOMIAL_HPP
#define FINICODE_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "finicode/dyadic.hpp"

namespace finicode {

/// Sparse Laurent polynomial in z with exact dyadic coefficients.
///
/// Zero coefficients are never stored, so equality is structural.
class DyadicPolynomial {
 public:
  using Coefficients = std::map<std::int64_t, DyadicRational>;

  DyadicPolynomial() = default;
  DyadicPolynomial(std::initializer_list<std::pair<std::int64_t, DyadicRational>> terms);

  static DyadicPolynomial monomial(std::int64_t degree, DyadicRational coeff = 1);

  const Coefficients& coefficients() const noexcept { return coeffs_; }
  DyadicRational coefficient(std::int64_t degree) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;

  void add_term(std::int64_t degree, const DyadicRational& coeff);

  DyadicPolynomial& operator+=(const DyadicPolynomial& rhs);
  DyadicPolynomial& operator-=(const DyadicPolynomial& rhs);
  friend DyadicPolynomial operator+(DyadicPolynomial a, const DyadicPolynomial& b) { return a += b; }
  friend DyadicPolynomial operator-(DyadicPolynomial a, const DyadicPolynomial& b) { return a -= b; }
  friend DyadicPolynomial operator*(const DyadicPolynomial& a, const DyadicPolynomial& b);
  friend bool operator==(const DyadicPolynomial&, const DyadicPolynomial&) = default;

  DyadicPolynomial square() const { return *this * *this; }
  DyadicPolynomial pow(unsigned k) const;
  /// P(z) -> P(z^2): the coefficient at k moves to 2k.
  DyadicPolynomial substitute_z_squared() const;
  /// z^shift * P(z).
  DyadicPolynomial shifted(std::int64_t shift) const;
  DyadicPolynomial scaled(const DyadicRational& c) const;
  /// Coefficientwise max(c, 0).
  DyadicPolynomial positive_part() const;

  DyadicRational at_one() const;
  /// P'(1).
  DyadicRational derivative_at_one() const;
  /// P''(1).
  DyadicRational second_derivative_at_one() const;

  std::string to_string() const;

 private:
  Coefficients coeffs_;
};

std::ostream& operator<<(std::ostream& os, const DyadicPolynomial& p);

}  // namespace finicode

#endif  // FINICODE_POLYNOMIAL_HPP

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

#include "finicode/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace finicode {

DyadicPolynomial::DyadicPolynomial(std::initializer_list<std::pair<std::int64_t, DyadicRational>> terms) {
  for (const auto& [deg, c] : terms) add_term(deg, c);
}

DyadicPolynomial DyadicPolynomial::monomial(std::int64_t degree, DyadicRational coeff) {
  DyadicPolynomial p;
  p.add_term(degree, coeff);
  return p;
}

DyadicRational DyadicPolynomial::coefficient(std::int64_t degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? DyadicRational{} : it->second;
}

std::int64_t DyadicPolynomial::min_degree() const {
  if (coeffs_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return coeffs_.begin()->first;
}

std::int64_t DyadicPolynomial::max_degree() const {
  if (coeffs_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return coeffs_.rbegin()->first;
}

void DyadicPolynomial::add_term(std::int64_t degree, const DyadicRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(degree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

DyadicPolynomial& DyadicPolynomial::operator+=(const DyadicPolynomial& rhs) {
  for (const auto& [deg, c] : rhs.coeffs_) add_term(deg, c);
  return *this;
}

DyadicPolynomial& DyadicPolynomial::operator-=(const DyadicPolynomial& rhs) {
  for (const auto& [deg, c] : rhs.coeffs_) add_term(deg, -c);
  return *this;
}

DyadicPolynomial operator*(const DyadicPolynomial& a, const DyadicPolynomial& b) {
  DyadicPolynomial out;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) out.add_term(da + db, ca * cb);
  return out;
}

DyadicPolynomial DyadicPolynomial::pow(unsigned k) const {
  DyadicPolynomial out = monomial(0);
  DyadicPolynomial base = *this;
  while (k > 0) {
    if (k & 1U) out = out * base;
    k >>= 1U;
    if (k > 0) base = base.square();
  }
  return out;
}

DyadicPolynomial DyadicPolynomial::substitute_z_squared() const {
  DyadicPolynomial out;
  for (const auto& [deg, c] : coeffs_) out.coeffs_.emplace(2 * deg, c);
  return out;
}

DyadicPolynomial DyadicPolynomial::shifted(std::int64_t shift) const {
  DyadicPolynomial out;
  for (const auto& [deg, c] : coeffs_) out.coeffs_.emplace(deg + shift, c);
  return out;
}

DyadicPolynomial DyadicPolynomial::scaled(const DyadicRational& c) const {
  DyadicPolynomial out;
  if (c.is_zero()) return out;
  for (const auto& [deg, v] : coeffs_) out.coeffs_.emplace(deg, v * c);
  return out;
}

DyadicPolynomial DyadicPolynomial::positive_part() const {
  DyadicPolynomial out;
  for (const auto& [deg, c] : coeffs_)
    if (c.sign() > 0) out.coeffs_.emplace(deg, c);
  return out;
}

DyadicRational DyadicPolynomial::at_one() const {
  DyadicRational s;
  for (const auto& [deg, c] : coeffs_) s += c;
  return s;
}

DyadicRational DyadicPolynomial::derivative_at_one() const {
  DyadicRational s;
  for (const auto& [deg, c] : coeffs_) s += c * DyadicRational(static_cast<long>(deg));
  return s;
}

DyadicRational DyadicPolynomial::second_derivative_at_one() const {
  DyadicRational s;
  for (const auto& [deg, c] : coeffs_) s += c * DyadicRational(static_cast<long>(deg * (deg - 1)));
  return s;
}

std::string DyadicPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (deg != 0) os << " z^" << deg;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DyadicPolynomial& p) { return os << p.to_string(); }

}  // namespace finicode

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

#include "finicode/dyadic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace finicode {

DyadicRational::DyadicRational(long value) : num_(value), exp_(0) {}

DyadicRational::DyadicRational(BigInt numerator, std::uint64_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

DyadicRational DyadicRational::pow2(std::int64_t e) {
  if (e >= 0) {
    BigInt n = 1;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return DyadicRational(std::move(n), 0);
  }
  return DyadicRational(BigInt(1), static_cast<std::uint64_t>(-e));
}

void DyadicRational::normalize() {
  if (sgn(num_) == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const mp_bitcnt_t tz = mpz_scan1(num_.get_mpz_t(), 0);
  const std::uint64_t shift = std::min<std::uint64_t>(tz, exp_);
  if (shift > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= shift;
  }
}

std::optional<std::int64_t> DyadicRational::exact_log2() const {
  if (sgn(num_) <= 0) return std::nullopt;
  const mp_bitcnt_t low = mpz_scan1(num_.get_mpz_t(), 0);
  if (mpz_sizeinbase(num_.get_mpz_t(), 2) != low + 1) return std::nullopt;
  return static_cast<std::int64_t>(low) - static_cast<std::int64_t>(exp_);
}

DyadicRational DyadicRational::mul_pow2(std::int64_t e) const {
  if (is_zero()) return {};
  DyadicRational out = *this;
  if (e >= 0) {
    const auto down = std::min<std::uint64_t>(out.exp_, static_cast<std::uint64_t>(e));
    out.exp_ -= down;
    const auto up = static_cast<std::uint64_t>(e) - down;
    if (up > 0) mpz_mul_2exp(out.num_.get_mpz_t(), out.num_.get_mpz_t(), up);
  } else {
    out.exp_ += static_cast<std::uint64_t>(-e);
  }
  return out;
}

std::optional<BigInt> DyadicRational::to_integer() const {
  if (exp_ != 0) return std::nullopt;
  return num_;
}

double DyadicRational::to_double() const {
  if (is_zero()) return 0.0;
  long e2 = 0;
  const double mant = mpz_get_d_2exp(&e2, num_.get_mpz_t());
  const std::int64_t total = static_cast<std::int64_t>(e2) - static_cast<std::int64_t>(exp_);
  if (total < std::numeric_limits<int>::min()) return 0.0;
  if (total > std::numeric_limits<int>::max()) return mant > 0 ? HUGE_VAL : -HUGE_VAL;
  return std::ldexp(mant, static_cast<int>(total));
}

std::string DyadicRational::to_string() const {
  if (exp_ == 0) return num_.get_str();
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), exp_);
  return num_.get_str() + "/" + den.get_str();
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational out = *this;
  out.num_ = -out.num_;
  return out;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& rhs) {
  if (rhs.is_zero()) return *this;
  if (exp_ >= rhs.exp_) {
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), rhs.num_.get_mpz_t(), exp_ - rhs.exp_);
    num_ += r;
  } else {
    mpz_mul_2exp(num_.get_mpz_t(), num_.get_mpz_t(), rhs.exp_ - exp_);
    num_ += rhs.num_;
    exp_ = rhs.exp_;
  }
  normalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& rhs) { return *this += -rhs; }

DyadicRational& DyadicRational::operator*=(const DyadicRational& rhs) {
  num_ *= rhs.num_;
  exp_ += rhs.exp_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  const std::uint64_t e = std::max(a.exp_, b.exp_);
  BigInt x, y;
  mpz_mul_2exp(x.get_mpz_t(), a.num_.get_mpz_t(), e - a.exp_);
  mpz_mul_2exp(y.get_mpz_t(), b.num_.get_mpz_t(), e - b.exp_);
  const int c = cmp(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<DyadicRational> divide_exact(const DyadicRational& a, const DyadicRational& b) {
  if (b.is_zero()) return std::nullopt;
  const BigInt mag = abs(b.numerator());
  if (mag != 1) return std::nullopt;  // canonical numerators are odd, so |num| must be 1
  DyadicRational q = a.mul_pow2(static_cast<std::int64_t>(b.exponent()));
  return b.sign() < 0 ? -q : q;
}

std::ostream& operator<<(std::ostream& os, const DyadicRational& d) { return os << d.to_string(); }

}  // namespace finicode

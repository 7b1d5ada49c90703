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

#ifndef FINICODE_DYADIC_HPP
#define FINICODE_DYADIC_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace finicode {

using BigInt = mpz_class;

/// Exact rational number of the form numerator / 2^exponent.
///
/// Always held in canonical form: the numerator is odd, or it is zero and the
/// exponent is zero. Arithmetic never rounds.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(long value);  // NOLINT(google-explicit-constructor)
  DyadicRational(BigInt numerator, std::uint64_t exponent);

  /// The value 2^e, for any signed e.
  static DyadicRational pow2(std::int64_t e);

  const BigInt& numerator() const noexcept { return num_; }
  std::uint64_t exponent() const noexcept { return exp_; }

  bool is_zero() const noexcept { return sgn(num_) == 0; }
  int sign() const noexcept { return sgn(num_); }

  /// e such that the value is exactly 2^e, if there is one.
  std::optional<std::int64_t> exact_log2() const;

  /// Multiplies by 2^e.
  DyadicRational mul_pow2(std::int64_t e) const;

  /// Exact integer value, or nullopt when the value has a fractional part.
  std::optional<BigInt> to_integer() const;

  double to_double() const;

  /// "p/2^k" rendered as a reduced fraction, e.g. "-3/4" or "7".
  std::string to_string() const;

  DyadicRational operator-() const;
  DyadicRational& operator+=(const DyadicRational& rhs);
  DyadicRational& operator-=(const DyadicRational& rhs);
  DyadicRational& operator*=(const DyadicRational& rhs);

  friend DyadicRational operator+(DyadicRational lhs, const DyadicRational& rhs) { return lhs += rhs; }
  friend DyadicRational operator-(DyadicRational lhs, const DyadicRational& rhs) { return lhs -= rhs; }
  friend DyadicRational operator*(DyadicRational lhs, const DyadicRational& rhs) { return lhs *= rhs; }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) noexcept {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

 private:
  void normalize();

  BigInt num_ = 0;
  std::uint64_t exp_ = 0;
};

/// a / b when b is plus or minus a power of two; nullopt otherwise.
std::optional<DyadicRational> divide_exact(const DyadicRational& a, const DyadicRational& b);

std::ostream& operator<<(std::ostream& os, const DyadicRational& d);

}  // namespace finicode

#endif  // FINICODE_DYADIC_HPP

// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace epiihs {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are kept canonical at all times: the denominator is positive and
/// shares no factor with the numerator. Every arithmetic operator returns a
/// canonical result, so equality is plain component equality.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p/q" or "p" (optional leading '-', decimal digits only).
  static BigRational parse(std::string_view text);

  /// 1 / n^exponent for a positive integer n.
  static BigRational inverse_power(std::uint64_t n, unsigned exponent);

  std::string numerator_string() const;
  std::string denominator_string() const;

  /// Always "p/q" with no whitespace, including "1/1" and "0/1".
  std::string to_string() const;
  double to_double() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  /// Integer power; a negative exponent inverts (and throws on zero).
  BigRational pow(int exponent) const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) {
    return lhs += rhs;
  }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) {
    return lhs -= rhs;
  }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) {
    return lhs *= rhs;
  }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) {
    return lhs /= rhs;
  }
  BigRational operator-() const;

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs,
                                          const BigRational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& q);

 private:
  explicit BigRational(mpq_class value);

  mpq_class value_{0};
};

}  // namespace epiihs

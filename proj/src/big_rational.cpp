// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#include "epiihs/big_rational.hpp"

#include <cctype>
#include <ostream>

#include "epiihs/error.hpp"

namespace epiihs {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRational::BigRational(std::int64_t value) {
  // mpz has no portable int64 constructor; go through the decimal form.
  value_ = mpq_class(mpz_class(std::to_string(value)));
}

BigRational::BigRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw DivisionByZeroError("BigRational: zero denominator");
  }
  value_ = mpq_class(mpz_class(std::to_string(numerator)),
                     mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-') {
    throw InvalidArgumentError("BigRational: cannot parse '" +
                               std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DivisionByZeroError("BigRational: zero denominator");
  return BigRational(mpq_class(n, d));
}

BigRational BigRational::inverse_power(std::uint64_t n, unsigned exponent) {
  if (n == 0) throw DivisionByZeroError("BigRational: 1/0^a");
  mpz_class base(std::to_string(n));
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), exponent);
  return BigRational(mpq_class(mpz_class(1), den));
}

std::string BigRational::numerator_string() const {
  return value_.get_num().get_str(10);
}

std::string BigRational::denominator_string() const {
  return value_.get_den().get_str(10);
}

std::string BigRational::to_string() const {
  return numerator_string() + "/" + denominator_string();
}

double BigRational::to_double() const { return value_.get_d(); }

BigRational BigRational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZeroError("BigRational: 0 to a negative power");
    return BigRational(mpq_class(1) / value_).pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime.
  mpq_class r;
  mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
  return BigRational(std::move(r));
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw DivisionByZeroError("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
  return os << q.to_string();
}

}  // namespace epiihs

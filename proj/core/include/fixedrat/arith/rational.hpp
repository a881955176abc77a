// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace fixedrat {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Zero is always 0/1.  Serialized as "p/q", or "p" when q = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  /// Throws DivisionByZero when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Parses "p", "-p", "p/q" (surrounding whitespace allowed).
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpz_class& num_ref() const { return value_.get_num(); }
  const mpz_class& den_ref() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  /// Throws DivisionByZero for zero.
  Rational inverse() const;
  /// Integer power; negative exponents invert (zero base throws).
  Rational pow(long exponent) const;

  std::string to_string() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Returns r >= 0 with r*r == q, or nothing when q is not a rational square.
std::optional<Rational> is_square(const Rational& q);

/// Integer helpers shared across modules.
bool is_perfect_square(const Integer& n);
Integer isqrt(const Integer& n);
std::string to_string(const Integer& n);
Integer parse_integer(std::string_view text);

}  // namespace fixedrat

template <>
struct std::hash<fixedrat::Rational> {
  std::size_t operator()(const fixedrat::Rational& q) const noexcept;
};

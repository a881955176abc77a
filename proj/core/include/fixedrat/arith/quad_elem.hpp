// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>

#include "fixedrat/arith/rational.hpp"

namespace fixedrat {

/// Element p + q*sqrt(a) of Q(sqrt(a)).
///
/// The radicand is either a nonsquare rational (checked on construction) or
/// zero, which marks a plain rational that embeds into every Q(sqrt(a)).
/// Mixing two different nonzero radicands throws InvalidArgument.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(const Rational& base) : base_(base) {}  // NOLINT(google-explicit-constructor)
  QuadElem(long base) : base_(base) {}             // NOLINT(google-explicit-constructor)
  QuadElem(int base) : base_(base) {}              // NOLINT(google-explicit-constructor)
  QuadElem(Rational base, Rational coef, Rational radicand);

  /// The element sqrt(a) itself.
  static QuadElem sqrt_of(const Rational& radicand) { return {0, 1, radicand}; }

  const Rational& base() const { return base_; }
  const Rational& coef() const { return coef_; }
  const Rational& radicand() const { return radicand_; }

  bool is_zero() const { return base_.is_zero() && coef_.is_zero(); }
  bool is_one() const { return base_.is_one() && coef_.is_zero(); }
  bool is_rational() const { return coef_.is_zero(); }

  /// p - q*sqrt(a).
  QuadElem conjugate() const;
  /// p^2 - a*q^2.
  Rational norm() const;
  /// Throws DivisionByZero for zero.
  QuadElem inverse() const;

  QuadElem& operator+=(const QuadElem& rhs);
  QuadElem& operator-=(const QuadElem& rhs);
  QuadElem& operator*=(const QuadElem& rhs);
  QuadElem& operator/=(const QuadElem& rhs) { return *this *= rhs.inverse(); }

  friend QuadElem operator+(QuadElem lhs, const QuadElem& rhs) { return lhs += rhs; }
  friend QuadElem operator-(QuadElem lhs, const QuadElem& rhs) { return lhs -= rhs; }
  friend QuadElem operator*(QuadElem lhs, const QuadElem& rhs) { return lhs *= rhs; }
  friend QuadElem operator/(QuadElem lhs, const QuadElem& rhs) { return lhs /= rhs; }
  QuadElem operator-() const;

  /// Componentwise; radicands must be compatible.
  friend bool operator==(const QuadElem& lhs, const QuadElem& rhs);

  /// "p+q*sqrt(a)"; plain rationals print as "p".
  std::string to_string() const;

 private:
  void adopt_radicand(const QuadElem& other);

  Rational base_;
  Rational coef_;
  Rational radicand_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& e);

}  // namespace fixedrat

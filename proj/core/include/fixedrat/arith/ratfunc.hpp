// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "fixedrat/arith/poly.hpp"

namespace fixedrat {

class RatFunc;

/// Variable name -> replacement.  Unbound variables are left in place.
using Bindings = std::map<std::string, RatFunc, std::less<>>;

/// Rational function numer/denom in canonical form: gcd(numer, denom) = 1 and
/// the graded-lex leading coefficient of denom is 1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(MultiPoly numer) : num_(std::move(numer)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const QuadElem& c) : RatFunc(MultiPoly(c)) {}          // NOLINT
  RatFunc(const Rational& c) : RatFunc(MultiPoly(c)) {}          // NOLINT
  RatFunc(long c) : RatFunc(MultiPoly(c)) {}                     // NOLINT
  RatFunc(int c) : RatFunc(MultiPoly(c)) {}                      // NOLINT
  /// Throws DivisionByZero when `denom` is the zero polynomial.
  RatFunc(MultiPoly numer, MultiPoly denom);

  static RatFunc variable(std::string_view name) { return RatFunc(MultiPoly::variable(name)); }

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Conjugates every coefficient (sqrt(a) -> -sqrt(a)).
  RatFunc conjugate() const;
  RatFunc inverse() const;
  RatFunc pow(long exponent) const;

  /// Simultaneous substitution followed by a single normalization.
  /// Throws DivisionByZero when the composed denominator vanishes identically.
  RatFunc substitute(const Bindings& bindings) const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }
  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }
  RatFunc operator-() const;

  /// Cross-multiplication test: p/q == r/s iff p*s == r*q.
  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs);

  std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(MultiPoly numer, MultiPoly denom, Canonical)
      : num_(std::move(numer)), den_(std::move(denom)) {}
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace fixedrat

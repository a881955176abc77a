// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fixedrat/arith/quad_elem.hpp"
#include "fixedrat/arith/variables.hpp"

namespace fixedrat {

/// Exponent vector indexed by VarId, trailing zeros trimmed.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VarId var, std::uint32_t exponent = 1);

  std::uint32_t exponent(VarId var) const {
    return var < exps_.size() ? exps_[var] : 0;
  }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  /// Requires divides(num).
  static Monomial quotient(const Monomial& num, const Monomial& den);
  static Monomial gcd(const Monomial& lhs, const Monomial& rhs);
  Monomial without(VarId var) const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial& lhs, const Monomial& rhs) = default;

  /// Graded lexicographic comparison: <0, 0, >0.
  static int compare(const Monomial& lhs, const Monomial& rhs);

 private:
  void trim();

  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial mono;
  QuadElem coeff;
};

/// Sparse multivariate polynomial with coefficients in Q or Q(sqrt(a)).
///
/// Terms are stored in strictly decreasing graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const QuadElem& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& constant) : MultiPoly(QuadElem(constant)) {}  // NOLINT
  MultiPoly(long constant) : MultiPoly(QuadElem(constant)) {}  // NOLINT
  MultiPoly(int constant) : MultiPoly(QuadElem(constant)) {}   // NOLINT

  static MultiPoly variable(std::string_view name);
  static MultiPoly variable(VarId var);
  static MultiPoly monomial(Monomial mono, QuadElem coeff);
  /// Sorts and merges arbitrary terms.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value (zero when absent).
  QuadElem constant_value() const;

  /// Leading term under graded-lex; undefined for the zero polynomial.
  const Term& leading() const { return terms_.front(); }

  std::uint32_t degree(VarId var) const;
  std::uint32_t total_degree() const;
  /// Ids of variables that occur, ascending.
  std::vector<VarId> variable_ids() const;
  std::vector<std::string> variables() const;
  /// Nonzero radicand shared by the coefficients, or 0 when all are rational.
  Rational radicand() const;

  MultiPoly conjugate() const;
  /// Divides by the leading coefficient.  Zero stays zero.
  MultiPoly monic() const;
  MultiPoly pow(std::uint32_t exponent) const;
  MultiPoly scaled(const QuadElem& factor) const;

  /// Quotient when `divisor` divides exactly, nothing otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Monic greatest common divisor (content extraction plus subresultant PRS).
/// gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& lhs, const MultiPoly& rhs);

}  // namespace fixedrat

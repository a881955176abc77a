// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/arith/ratfunc.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fixedrat/errors.hpp"

namespace fixedrat {

namespace {

MultiPoly exact(const MultiPoly& num, const MultiPoly& den) {
  auto q = num.divide_exact(den);
  if (!q) throw std::logic_error("ratfunc: inexact division by a gcd");
  return *std::move(q);
}

}  // namespace

RatFunc::RatFunc(MultiPoly numer, MultiPoly denom) : num_(std::move(numer)), den_(std::move(denom)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact(num_, g);
      den_ = exact(den_, g);
    }
  }
  const QuadElem lead = den_.leading().coeff;
  if (!lead.is_one()) {
    const QuadElem inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::conjugate() const { return {num_.conjugate(), den_.conjugate(), Canonical{}}; }

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of the zero rational function");
  RatFunc out(den_, num_, Canonical{});
  const QuadElem lead = out.den_.leading().coeff;
  if (!lead.is_one()) {
    const QuadElem inv = lead.inverse();
    out.num_ = out.num_.scaled(inv);
    out.den_ = out.den_.scaled(inv);
  }
  return out;
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  // Powers of coprime polynomials stay coprime.
  RatFunc out(num_.pow(static_cast<std::uint32_t>(exponent)), den_.pow(static_cast<std::uint32_t>(exponent)),
              Canonical{});
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.num_.is_zero()) return *this;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    normalize();
    return *this;
  }
  const MultiPoly g = gcd(den_, rhs.den_);
  if (g.is_constant()) {
    // Coprime denominators: the result is already reduced.
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    if (num_.is_zero()) den_ = MultiPoly(1);
    return *this;
  }
  const MultiPoly lhs_cof = exact(den_, g);
  const MultiPoly rhs_cof = exact(rhs.den_, g);
  num_ = num_ * rhs_cof + rhs.num_ * lhs_cof;
  den_ = lhs_cof * rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (num_.is_zero() || rhs.num_.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  // Cross-cancel so the product of reduced fractions stays reduced.
  const MultiPoly g1 = gcd(num_, rhs.den_);
  const MultiPoly g2 = gcd(rhs.num_, den_);
  MultiPoly num = exact(num_, g1) * exact(rhs.num_, g2);
  MultiPoly den = exact(den_, g2) * exact(rhs.den_, g1);
  num_ = std::move(num);
  den_ = std::move(den);
  const QuadElem lead = den_.leading().coeff;
  if (!lead.is_one()) {
    const QuadElem inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

RatFunc RatFunc::operator-() const { return {-num_, den_, Canonical{}}; }

bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
  return lhs.num_ * rhs.den_ == rhs.num_ * lhs.den_;
}

RatFunc RatFunc::substitute(const Bindings& bindings) const {
  // Bring every term over the common denominator prod(q_i^D_i), where D_i is
  // the largest exponent of bound variable i in either numerator or
  // denominator; that factor then cancels between the two.
  struct Bound {
    VarId var;
    const RatFunc* value;
    std::uint32_t max_degree;
    std::vector<MultiPoly> num_powers;
    std::vector<MultiPoly> den_powers;
  };
  std::vector<Bound> bound;
  for (const auto& [name, value] : bindings) {
    const VarId var = var_id(name);
    const std::uint32_t d = std::max(num_.degree(var), den_.degree(var));
    if (d == 0) continue;
    Bound b{var, &value, d, {}, {}};
    b.num_powers.reserve(d + 1);
    b.den_powers.reserve(d + 1);
    b.num_powers.emplace_back(1);
    b.den_powers.emplace_back(1);
    for (std::uint32_t k = 1; k <= d; ++k) {
      b.num_powers.push_back(b.num_powers.back() * value.num_);
      b.den_powers.push_back(b.den_powers.back() * value.den_);
    }
    bound.push_back(std::move(b));
  }
  if (bound.empty()) return *this;

  auto compose = [&bound](const MultiPoly& p) {
    MultiPoly out;
    for (const auto& t : p.terms()) {
      Monomial rest = t.mono;
      MultiPoly piece(t.coeff);
      for (const auto& b : bound) {
        const std::uint32_t e = t.mono.exponent(b.var);
        rest = rest.without(b.var);
        if (e > 0) piece *= b.num_powers[e];
        if (b.max_degree > e) piece *= b.den_powers[b.max_degree - e];
      }
      if (!rest.is_one()) piece *= MultiPoly::monomial(rest, QuadElem(1));
      out += piece;
    }
    return out;
  };

  MultiPoly den = compose(den_);
  if (den.is_zero()) throw DivisionByZero("substitution makes the denominator vanish identically");
  return RatFunc(compose(num_), std::move(den));
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.leading().coeff.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace fixedrat

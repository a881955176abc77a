// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/arith/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fixedrat/errors.hpp"

namespace fixedrat {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(VarId var, std::uint32_t exponent) {
  Monomial m;
  if (exponent == 0) return m;
  m.exps_.assign(var + 1, 0);
  m.exps_[var] = exponent;
  m.degree_ = exponent;
  return m;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size() || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& num, const Monomial& den) {
  Monomial out = num;
  for (std::size_t i = 0; i < den.exps_.size(); ++i) out.exps_[i] -= den.exps_[i];
  out.degree_ = num.degree_ - den.degree_;
  out.trim();
  return out;
}

Monomial Monomial::gcd(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  const std::size_t n = std::min(lhs.exps_.size(), rhs.exps_.size());
  out.exps_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.exps_[i] = std::min(lhs.exps_[i], rhs.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  out.trim();
  return out;
}

Monomial Monomial::without(VarId var) const {
  if (var >= exps_.size() || exps_[var] == 0) return *this;
  Monomial out = *this;
  out.degree_ -= out.exps_[var];
  out.exps_[var] = 0;
  out.trim();
  return out;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  const Monomial& longer = lhs.exps_.size() >= rhs.exps_.size() ? lhs : rhs;
  const Monomial& shorter = lhs.exps_.size() >= rhs.exps_.size() ? rhs : lhs;
  Monomial out = longer;
  for (std::size_t i = 0; i < shorter.exps_.size(); ++i) out.exps_[i] += shorter.exps_[i];
  out.degree_ = lhs.degree_ + rhs.degree_;
  return out;
}

int Monomial::compare(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.degree_ != rhs.degree_) return lhs.degree_ < rhs.degree_ ? -1 : 1;
  const std::size_t n = std::max(lhs.exps_.size(), rhs.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = lhs.exponent(static_cast<VarId>(i));
    const auto b = rhs.exponent(static_cast<VarId>(i));
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// MultiPoly basics

namespace {

bool term_greater(const Term& lhs, const Term& rhs) {
  return Monomial::compare(lhs.mono, rhs.mono) > 0;
}

// Merges two sorted term lists, `sign` applied to rhs.
std::vector<Term> merge_terms(const std::vector<Term>& lhs, const std::vector<Term>& rhs, bool negate) {
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    int c;
    if (i == lhs.size()) {
      c = -1;
    } else if (j == rhs.size()) {
      c = 1;
    } else {
      c = Monomial::compare(lhs[i].mono, rhs[j].mono);
    }
    if (c > 0) {
      out.push_back(lhs[i++]);
    } else if (c < 0) {
      out.push_back(negate ? Term{rhs[j].mono, -rhs[j].coeff} : rhs[j]);
      ++j;
    } else {
      QuadElem sum = negate ? lhs[i].coeff - rhs[j].coeff : lhs[i].coeff + rhs[j].coeff;
      if (!sum.is_zero()) out.push_back({lhs[i].mono, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const QuadElem& constant) {
  if (!constant.is_zero()) terms_.push_back({Monomial(), constant});
}

MultiPoly MultiPoly::variable(std::string_view name) { return variable(var_id(name)); }

MultiPoly MultiPoly::variable(VarId var) { return monomial(Monomial::of(var), QuadElem(1)); }

MultiPoly MultiPoly::monomial(Monomial mono, QuadElem coeff) {
  MultiPoly p;
  if (!coeff.is_zero()) p.terms_.push_back({std::move(mono), std::move(coeff)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

QuadElem MultiPoly::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return QuadElem(0);
}

std::uint32_t MultiPoly::degree(VarId var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

std::uint32_t MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

std::vector<VarId> MultiPoly::variable_ids() const {
  std::vector<bool> seen;
  for (const auto& t : terms_) {
    const auto& e = t.mono.exponents();
    if (seen.size() < e.size()) seen.resize(e.size(), false);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) seen[i] = true;
    }
  }
  std::vector<VarId> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(static_cast<VarId>(i));
  }
  return out;
}

std::vector<std::string> MultiPoly::variables() const {
  std::vector<std::string> out;
  for (VarId id : variable_ids()) out.push_back(var_name(id));
  return out;
}

Rational MultiPoly::radicand() const {
  for (const auto& t : terms_) {
    if (!t.coeff.radicand().is_zero()) return t.coeff.radicand();
  }
  return Rational(0);
}

MultiPoly MultiPoly::conjugate() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = t.coeff.conjugate();
  return out;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty() || leading().coeff.is_one()) return *this;
  return scaled(leading().coeff.inverse());
}

MultiPoly MultiPoly::scaled(const QuadElem& factor) const {
  if (factor.is_zero()) return {};
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (rhs.is_constant()) return lhs.scaled(rhs.leading().coeff);
  if (lhs.is_constant()) return rhs.scaled(lhs.leading().coeff);
  std::vector<Term> terms;
  terms.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) terms.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (!(lhs.terms_[i].mono == rhs.terms_[i].mono) || !(lhs.terms_[i].coeff == rhs.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return MultiPoly();
  if (divisor.is_constant()) return scaled(divisor.leading().coeff.inverse());
  const Term& lead = divisor.leading();
  const QuadElem lead_inv = lead.coeff.inverse();
  // Cheap rejection: every variable degree must fit.
  for (VarId v : divisor.variable_ids()) {
    if (divisor.degree(v) > degree(v)) return std::nullopt;
  }
  std::vector<Term> quotient;
  MultiPoly rem = *this;
  while (!rem.is_zero()) {
    const Term& top = rem.leading();
    if (!lead.mono.divides(top.mono)) return std::nullopt;
    Term q{Monomial::quotient(top.mono, lead.mono), top.coeff * lead_inv};
    std::vector<Term> shifted;
    shifted.reserve(divisor.terms_.size());
    for (const auto& t : divisor.terms_) shifted.push_back({t.mono * q.mono, t.coeff * q.coeff});
    rem.terms_ = merge_terms(rem.terms_, shifted, true);
    quotient.push_back(std::move(q));
  }
  MultiPoly out;
  out.terms_ = std::move(quotient);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string coeff = t.coeff.is_rational() ? t.coeff.base().to_string() : t.coeff.to_string();
    bool negative = false;
    if (t.coeff.is_rational() && t.coeff.base().sign() < 0) {
      negative = true;
      coeff = (-t.coeff.base()).to_string();
    } else if (!t.coeff.is_rational()) {
      coeff = "(" + coeff + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    const auto& e = t.mono.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<VarId>(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// GCD

namespace {

// Polynomial in one distinguished variable with multivariate coefficients;
// coeffs[i] multiplies var^i and the top entry is nonzero.
struct UPoly {
  std::vector<MultiPoly> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  std::size_t degree() const { return coeffs.size() - 1; }
  const MultiPoly& lc() const { return coeffs.back(); }
  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
};

UPoly to_upoly(const MultiPoly& p, VarId var) {
  UPoly u;
  std::vector<std::vector<Term>> buckets(p.degree(var) + 1);
  for (const auto& t : p.terms()) buckets[t.mono.exponent(var)].push_back({t.mono.without(var), t.coeff});
  u.coeffs.reserve(buckets.size());
  for (auto& b : buckets) u.coeffs.push_back(MultiPoly::from_terms(std::move(b)));
  u.trim();
  return u;
}

MultiPoly from_upoly(const UPoly& u, VarId var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < u.coeffs.size(); ++i) {
    const Monomial shift = Monomial::of(var, static_cast<std::uint32_t>(i));
    for (const auto& t : u.coeffs[i].terms()) terms.push_back({t.mono * shift, t.coeff});
  }
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly exact(const MultiPoly& num, const MultiPoly& den) {
  auto q = num.divide_exact(den);
  if (!q) throw std::logic_error("gcd: inexact division in a polynomial ring");
  return *std::move(q);
}

UPoly divide_coeffs(const UPoly& u, const MultiPoly& scalar) {
  if (scalar.is_constant() && scalar.leading().coeff.is_one()) return u;
  UPoly out;
  out.coeffs.reserve(u.coeffs.size());
  for (const auto& c : u.coeffs) out.coeffs.push_back(exact(c, scalar));
  return out;
}

MultiPoly content(const UPoly& u) {
  MultiPoly g;
  for (const auto& c : u.coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
UPoly prem(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  const std::size_t db = b.degree();
  const MultiPoly& lb = b.lc();
  std::size_t e = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    const std::size_t shift = r.degree() - db;
    const MultiPoly lr = r.lc();
    for (auto& c : r.coeffs) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) r.coeffs[i + shift] -= lr * b.coeffs[i];
    r.trim();
    --e;
  }
  if (e > 0 && !r.is_zero()) {
    const MultiPoly factor = lb.pow(static_cast<std::uint32_t>(e));
    for (auto& c : r.coeffs) c *= factor;
  }
  return r;
}

// Remainder over a field (all coefficients constant).
UPoly field_rem(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  const std::size_t db = b.degree();
  const QuadElem inv = b.lc().leading().coeff.inverse();
  while (!r.is_zero() && r.degree() >= db) {
    const std::size_t shift = r.degree() - db;
    const MultiPoly factor(r.lc().leading().coeff * inv);
    for (std::size_t i = 0; i <= db; ++i) r.coeffs[i + shift] -= factor * b.coeffs[i];
    r.coeffs.back() = MultiPoly();
    r.trim();
  }
  return r;
}

bool all_constant(const UPoly& u) {
  return std::all_of(u.coeffs.begin(), u.coeffs.end(), [](const MultiPoly& c) { return c.is_constant(); });
}

// GCD of two primitive polynomials in R[var] via the subresultant PRS.
UPoly primitive_gcd(UPoly a, UPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (all_constant(a) && all_constant(b)) {
    while (!b.is_zero()) {
      UPoly r = field_rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }
  MultiPoly g(1);
  MultiPoly h(1);
  for (;;) {
    if (b.degree() == 0) return UPoly{{MultiPoly(1)}};
    const std::size_t delta = a.degree() - b.degree();
    UPoly r = prem(a, b);
    if (r.is_zero()) return divide_coeffs(b, content(b));
    if (r.degree() == 0) return UPoly{{MultiPoly(1)}};
    a = std::move(b);
    b = divide_coeffs(r, g * h.pow(static_cast<std::uint32_t>(delta)));
    g = a.lc();
    if (delta == 0) continue;
    // h <- g^delta / h^(delta-1)
    h = exact(g.pow(static_cast<std::uint32_t>(delta)), h.pow(static_cast<std::uint32_t>(delta - 1)));
  }
}

MultiPoly monomial_gcd(const Monomial& mono, const MultiPoly& p) {
  Monomial g = mono;
  for (const auto& t : p.terms()) {
    g = Monomial::gcd(g, t.mono);
    if (g.is_one()) break;
  }
  return MultiPoly::monomial(g, QuadElem(1));
}

}  // namespace

MultiPoly gcd(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.is_zero()) return rhs.monic();
  if (rhs.is_zero()) return lhs.monic();
  if (lhs.is_constant() || rhs.is_constant()) return MultiPoly(1);
  if (lhs.is_monomial()) return monomial_gcd(lhs.leading().mono, rhs);
  if (rhs.is_monomial()) return monomial_gcd(rhs.leading().mono, lhs);
  if (lhs == rhs) return lhs.monic();

  const auto lv = lhs.variable_ids();
  const auto rv = rhs.variable_ids();
  const VarId var = std::max(lv.back(), rv.back());
  const bool in_lhs = std::binary_search(lv.begin(), lv.end(), var);
  const bool in_rhs = std::binary_search(rv.begin(), rv.end(), var);
  if (!in_lhs) return gcd(lhs, content(to_upoly(rhs, var)));
  if (!in_rhs) return gcd(content(to_upoly(lhs, var)), rhs);

  const UPoly ua = to_upoly(lhs, var);
  const UPoly ub = to_upoly(rhs, var);
  const MultiPoly ca = content(ua);
  const MultiPoly cb = content(ub);
  const MultiPoly c = gcd(ca, cb);
  const UPoly g = primitive_gcd(divide_coeffs(ua, ca), divide_coeffs(ub, cb));
  return (c * from_upoly(g, var)).monic();
}

}  // namespace fixedrat

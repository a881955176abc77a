// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/arith/rational.hpp"

#include <cctype>

#include "fixedrat/errors.hpp"

namespace fixedrat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string buffer(text.front() == '+' ? text.substr(1) : text);
  return Integer(buffer, 10);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpq_class result;
  mpz_pow_ui(result.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(std::move(result));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& n) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

// p/q is a square iff p*q is an integer square; then sqrt(p/q) = sqrt(p*q)/q.
std::optional<Rational> is_square(const Rational& q) {
  if (q.is_zero()) return Rational(0);
  if (q.sign() < 0) return std::nullopt;
  const Integer product = q.num_ref() * q.den_ref();
  if (!is_perfect_square(product)) return std::nullopt;
  return Rational(isqrt(product), q.den());
}

}  // namespace fixedrat

std::size_t std::hash<fixedrat::Rational>::operator()(const fixedrat::Rational& q) const noexcept {
  const std::size_t h1 = mpz_get_ui(q.num_ref().get_mpz_t());
  const std::size_t h2 = mpz_get_ui(q.den_ref().get_mpz_t());
  return h1 * 0x9e3779b97f4a7c15ULL ^ (h2 + static_cast<std::size_t>(q.sign()));
}

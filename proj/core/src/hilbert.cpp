// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/symbols/hilbert.hpp"

#include <algorithm>

#include "fixedrat/errors.hpp"

namespace fixedrat {

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) throw InvalidArgument(p.get_str() + " is not prime");
  Place v;
  v.real_ = false;
  v.prime_ = p;
  return v;
}

std::string Place::to_string() const { return real_ ? "infinity" : prime_.get_str(); }

std::strong_ordering operator<=>(const Place& lhs, const Place& rhs) {
  if (lhs.real_ != rhs.real_) return lhs.real_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (lhs.real_) return std::strong_ordering::equal;
  const int c = cmp(lhs.prime_, rhs.prime_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool RamificationSet::contains(const Place& v) const {
  return std::binary_search(places.begin(), places.end(), v);
}

Integer square_class_integer(const Rational& q) { return q.num_ref() * q.den_ref(); }

namespace {

// n = p^valuation * unit.
unsigned long split_off(const Integer& n, const Integer& p, Integer& unit) {
  unit = n;
  return mpz_remove(unit.get_mpz_t(), unit.get_mpz_t(), p.get_mpz_t());
}

int odd_symbol(const Integer& a, const Integer& b, const Integer& p) {
  Integer u;
  Integer w;
  const unsigned long alpha = split_off(a, p, u);
  const unsigned long beta = split_off(b, p, w);
  int result = 1;
  // (-1)^(alpha*beta*eps(p)), eps(p) = (p-1)/2 mod 2.
  if ((alpha * beta) % 2 == 1 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) result = -result;
  if (beta % 2 == 1) result *= kronecker(u, p);
  if (alpha % 2 == 1) result *= kronecker(w, p);
  return result;
}

int two_symbol(const Integer& a, const Integer& b) {
  Integer u;
  Integer w;
  const unsigned long alpha = split_off(a, Integer(2), u);
  const unsigned long beta = split_off(b, Integer(2), w);
  const unsigned long u8 = mpz_fdiv_ui(u.get_mpz_t(), 8);
  const unsigned long w8 = mpz_fdiv_ui(w.get_mpz_t(), 8);
  auto eps = [](unsigned long x) { return ((x - 1) / 2) % 2; };
  auto omega = [](unsigned long x) { return ((x * x - 1) / 8) % 2; };
  const unsigned long e = eps(u8) * eps(w8) + (alpha % 2) * omega(w8) + (beta % 2) * omega(u8);
  return e % 2 == 0 ? 1 : -1;
}

}  // namespace

int local_hilbert(const Rational& a, const Rational& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("Hilbert symbol of a zero argument");
  if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  const Integer ai = square_class_integer(a);
  const Integer bi = square_class_integer(b);
  if (v.prime() == 2) return two_symbol(ai, bi);
  return odd_symbol(ai, bi, v.prime());
}

std::vector<Place> candidate_places(const Rational& a, const Rational& b, const FactorConfig& config) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("Hilbert symbol of a zero argument");
  std::vector<Place> places;
  places.push_back(Place::finite(Integer(2)));
  std::vector<Integer> primes;
  for (const Integer& n : {square_class_integer(a), square_class_integer(b)}) {
    for (const auto& [p, e] : factor(n, config).factors) {
      if (p != 2) primes.push_back(p);
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& p : primes) places.push_back(Place::finite(p));
  places.push_back(Place::real());
  return places;
}

RamificationSet global_hilbert(const Rational& a, const Rational& b, const FactorConfig& config) {
  RamificationSet result;
  for (const Place& v : candidate_places(a, b, config)) {
    if (local_hilbert(a, b, v) == -1) result.places.push_back(v);
  }
  return result;
}

}  // namespace fixedrat

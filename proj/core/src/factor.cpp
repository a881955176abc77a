// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/symbols/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fixedrat/errors.hpp"

namespace fixedrat {

namespace {

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
  static std::mutex mutex;
  static std::vector<std::uint32_t> primes;
  static std::uint32_t sieved_to = 0;
  std::lock_guard lock(mutex);
  if (bound > sieved_to) {
    std::vector<bool> composite(bound + 1, false);
    primes.clear();
    for (std::uint32_t i = 2; i <= bound; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound; j += i) composite[j] = true;
    }
    sieved_to = bound;
  }
  return primes;
}

// Brent's cycle detection on x -> x^2 + c with batched gcds.
std::optional<Integer> brent(const Integer& n, unsigned long c, std::uint64_t& budget) {
  const Integer cc(c);
  Integer y = 2;
  Integer x;
  Integer ys;
  Integer q = 1;
  Integer g = 1;
  const std::uint64_t batch = 128;
  std::uint64_t r = 1;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = (y * y + cc) % n;
    std::uint64_t k = 0;
    do {
      ys = y;
      const std::uint64_t steps = std::min(batch, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = (y * y + cc) % n;
        q = (q * abs(x - y)) % n;
      }
      if (budget < steps) return std::nullopt;
      budget -= steps;
      g = gcd(q, n);
      k += steps;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = (ys * ys + cc) % n;
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

void split(const Integer& n, std::map<Integer, unsigned>& out, std::uint64_t& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (is_perfect_square(n)) {
    const Integer root = isqrt(n);
    std::map<Integer, unsigned> half;
    split(root, half, budget);
    for (auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  for (unsigned long c = 1; c < 64; ++c) {
    if (auto d = brent(n, c, budget)) {
      split(*d, out, budget);
      split(n / *d, out, budget);
      return;
    }
    if (budget == 0) break;
  }
  throw FactorizationLimitExceeded("could not factor " + n.get_str() + " within the rho budget");
}

}  // namespace

Integer Factorization::value() const {
  Integer v = sign;
  for (const auto& [p, e] : factors) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Factorization factor(const Integer& n, const FactorConfig& config) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  Factorization result;
  result.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (std::uint32_t p : small_primes(config.trial_bound)) {
    if (m == 1) break;
    if (Integer(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    found[Integer(p)] = e;
  }
  std::uint64_t budget = config.rho_iterations;
  split(m, found, budget);
  for (auto& [p, e] : found) result.factors.emplace_back(p, e);
  return result;
}

Integer squarefree_part(const Integer& n, const FactorConfig& config) {
  const Factorization f = factor(n, config);
  Integer core = f.sign;
  for (const auto& [p, e] : f.factors) {
    if (e % 2 == 1) core *= p;
  }
  return core;
}

// Cohen, Algorithm 1.4.10.
int kronecker(const Integer& a_in, const Integer& n_in) {
  static constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  Integer a = a_in;
  Integer b = n_in;
  if (b == 0) return abs(a) == 1 ? 1 : 0;
  if (mpz_even_p(a.get_mpz_t()) && mpz_even_p(b.get_mpz_t())) return 0;
  const auto v = static_cast<unsigned long>(mpz_scan1(b.get_mpz_t(), 0));
  mpz_tdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), v);
  int k = 1;
  if (v % 2 == 1) k = kTab2[mpz_fdiv_ui(a.get_mpz_t(), 8)];
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  for (;;) {
    if (a == 0) return b > 1 ? 0 : k;
    const auto w = static_cast<unsigned long>(mpz_scan1(a.get_mpz_t(), 0));
    mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), w);
    if (w % 2 == 1) k *= kTab2[mpz_fdiv_ui(b.get_mpz_t(), 8)];
    // Reciprocity: flip when both are 3 mod 4 (a may be negative).
    if ((mpz_fdiv_ui(a.get_mpz_t(), 4) == 3) && (mpz_fdiv_ui(b.get_mpz_t(), 4) == 3)) k = -k;
    Integer r = abs(a);
    a = b % r;
    b = r;
  }
}

// Tonelli-Shanks.
std::optional<Integer> sqrt_mod_prime(const Integer& a_in, const Integer& p) {
  Integer a;
  mpz_fdiv_r(a.get_mpz_t(), a_in.get_mpz_t(), p.get_mpz_t());
  if (a == 0) return Integer(0);
  if (p == 2) return a;
  if (kronecker(a, p) != 1) return std::nullopt;
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (kronecker(z, p) != -1) ++z;
  Integer m(s);
  Integer c;
  Integer t;
  Integer r;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  const Integer exp = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    Integer b = c;
    for (unsigned long j = 0; j + 1 < m.get_ui() - i; ++j) b = (b * b) % p;
    m = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  const Integer other = p - r;
  return std::min(r, other);
}

}  // namespace fixedrat

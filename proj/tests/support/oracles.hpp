// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force oracles shared by the unit and acceptance tests.  They only use
// machine integers and direct search, never the library's symbol code.

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "fixedrat/arith/rational.hpp"
#include "fixedrat/decide/decider.hpp"

namespace fixedrat::testing {

inline bool is_square_i64(std::int64_t n) {
  if (n < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

inline bool is_square_int(long n) {
  if (n < 0) return false;
  long r = 0;
  while (r * r < n) ++r;
  return r * r == n;
}

inline bool is_squarefree(long n) {
  if (n == 0) return false;
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

/// Nontrivial integer zero of X^2 - a Y^2 - b Z^2 with |Y|, |Z| <= height.
inline bool ternary_isotropic(long a, long b, long height) {
  for (std::int64_t y = 0; y <= height; ++y) {
    for (std::int64_t z = 0; z <= height; ++z) {
      if (y == 0 && z == 0) continue;
      if (is_square_i64(a * y * y + b * z * z)) return true;
    }
  }
  return false;
}

/// Nontrivial integer zero of X^2 - a Y^2 - b Z^2 + ab W^2 with |Y|, |Z|, |W| <= height.
inline bool quaternary_isotropic(long a, long b, long height) {
  for (std::int64_t y = 0; y <= height; ++y) {
    for (std::int64_t z = -height; z <= height; ++z) {
      for (std::int64_t w = -height; w <= height; ++w) {
        if (y == 0 && z == 0 && w == 0) continue;
        if (is_square_i64(a * y * y + b * z * z - a * b * w * w)) return true;
      }
    }
  }
  return false;
}

/// p + q sqrt(m) is a square in Q(sqrt(m)), m a squarefree nonsquare.
/// (u + v sqrt(m))^2 = p + q sqrt(m) forces u^2 = (p +- n)/2 with
/// n^2 = p^2 - m q^2, so everything reduces to integer square tests.
inline bool is_square_in_field(std::int64_t p, std::int64_t q, std::int64_t m) {
  if (q == 0) return is_square_i64(p) || (p % m == 0 && is_square_i64(p / m));
  const std::int64_t norm = p * p - m * q * q;
  if (!is_square_i64(norm)) return false;
  auto n = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(norm))));
  while (n * n > norm) --n;
  while ((n + 1) * (n + 1) <= norm) ++n;
  // u^2 = k/2 is a rational square iff 2k is a perfect square.
  return (p + n > 0 && is_square_i64(2 * (p + n))) || (p - n > 0 && is_square_i64(2 * (p - n)));
}

/// a X^2 + b Y^2 = Z^2 with X, Y in Z[sqrt(m)] of coordinate height <= h,
/// not both zero.  Equivalent to solvability of a x^2 + b y^2 = 1 over
/// Q(sqrt(m)).
inline bool ext_split_search(long a, long b, long m, long h) {
  for (long x1 = -h; x1 <= h; ++x1) {
    for (long x2 = 0; x2 <= h; ++x2) {
      for (long y1 = -h; y1 <= h; ++y1) {
        for (long y2 = -h; y2 <= h; ++y2) {
          if (x1 == 0 && x2 == 0 && y1 == 0 && y2 == 0) continue;
          const std::int64_t p = a * (x1 * x1 + m * x2 * x2) + b * (y1 * y1 + m * y2 * y2);
          const std::int64_t q = 2 * (a * x1 * x2 + b * y1 * y2);
          if (is_square_in_field(p, q, m)) return true;
        }
      }
    }
  }
  return false;
}

/// Solutions of alpha^2 - a beta^2 = b obtained from `base` by multiplying
/// with norm-one elements ((1 + a s^2) + 2 s sqrt(a))/(1 - a s^2), their
/// conjugates and negatives.
inline std::vector<ConicSolution> norm_orbit(const Rational& a, const ConicSolution& base, std::size_t count) {
  std::vector<ConicSolution> out{base};
  auto push = [&](ConicSolution s) {
    for (const auto& t : out) {
      if (t == s) return;
    }
    out.push_back(std::move(s));
  };
  for (long k = 1; out.size() < count; ++k) {
    const Rational s(k, k + 1);
    const Rational den = Rational(1) - a * s * s;
    if (den.is_zero()) continue;
    const Rational n1 = (Rational(1) + a * s * s) / den;
    const Rational n2 = Rational(2) * s / den;
    const ConicSolution prod{base.alpha * n1 + a * base.beta * n2, base.alpha * n2 + base.beta * n1};
    push(prod);
    push({prod.alpha, -prod.beta});
    push({-prod.alpha, prod.beta});
  }
  out.resize(count);
  return out;
}

/// Uniform valid spec with integer entries in [-bound, bound].
inline SurfaceSpec random_spec(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    const long a = dist(rng);
    const long b = dist(rng);
    const long c = dist(rng);
    const long d = dist(rng);
    if (a == 0 || is_square_int(a) || b == 0 || (c == 0 && d == 0)) continue;
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
  }
}

inline Rational random_rational(std::mt19937_64& rng, long bound, bool nonzero) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  for (;;) {
    Rational q(Integer(num(rng)), Integer(den(rng)));
    if (!nonzero || !q.is_zero()) return q;
  }
}

}  // namespace fixedrat::testing

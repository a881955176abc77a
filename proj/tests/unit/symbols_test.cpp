// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "fixedrat/errors.hpp"
#include "fixedrat/symbols/quad_field.hpp"
#include "oracles.hpp"

namespace fixedrat {
namespace {

using testing::is_squarefree;
using testing::random_rational;

TEST(Factor, Examples) {
  const auto f56 = factor(56);
  EXPECT_EQ(f56.sign, 1);
  ASSERT_EQ(f56.factors.size(), 2U);
  EXPECT_EQ(f56.factors[0].first, 2);
  EXPECT_EQ(f56.factors[0].second, 3U);
  EXPECT_EQ(f56.factors[1].first, 7);
  EXPECT_EQ(f56.factors[1].second, 1U);
  const auto fm3 = factor(-3);
  EXPECT_EQ(fm3.sign, -1);
  ASSERT_EQ(fm3.factors.size(), 1U);
  EXPECT_EQ(fm3.factors[0].first, 3);
  EXPECT_TRUE(factor(1).factors.empty());
  EXPECT_THROW(factor(0), InvalidArgument);
}

TEST(Factor, MatchesTrialDivision) {
  for (long n = 2; n < 3000; ++n) {
    const auto f = factor(n);
    EXPECT_EQ(f.value(), Integer(n));
    long rest = n;
    for (const auto& [p, e] : f.factors) {
      EXPECT_TRUE(is_prime(p));
      for (unsigned i = 0; i < e; ++i) {
        ASSERT_EQ(rest % p.get_si(), 0);
        rest /= p.get_si();
      }
    }
    EXPECT_EQ(rest, 1);
  }
}

TEST(Factor, BeyondTrialBound) {
  // Two primes above the trial-division bound force the rho stage.
  const Integer p("1000003");
  const Integer q("1000033");
  FactorConfig config;
  config.trial_bound = 1000;
  const auto f = factor(p * q * 12, config);
  EXPECT_EQ(f.value(), p * q * 12);
  EXPECT_EQ(f.factors.back().first, q);
}

TEST(Factor, BudgetIsEnforced) {
  FactorConfig config;
  config.trial_bound = 100;
  config.rho_iterations = 1;
  const Integer p("1000000007");
  const Integer q("998244353");
  EXPECT_THROW(factor(p * q, config), FactorizationLimitExceeded);
}

TEST(Factor, SquarefreePart) {
  EXPECT_EQ(squarefree_part(-63), -7);
  EXPECT_EQ(squarefree_part(72), 2);
  EXPECT_EQ(squarefree_part(1), 1);
}

// Euler's criterion and the Jacobi product definition.
TEST(Kronecker, AgainstEulerCriterion) {
  EXPECT_EQ(kronecker(2, 3), -1);
  EXPECT_EQ(kronecker(3, 13), 1);
  EXPECT_EQ(kronecker(0, 5), 0);
  for (long p : {3L, 5L, 7L, 11L, 13L, 101L, 997L}) {
    for (long a = -50; a <= 50; ++a) {
      long r = ((a % p) + p) % p;
      long pw = 1;
      for (long e = 0; e < (p - 1) / 2; ++e) pw = pw * r % p;
      const int euler = r == 0 ? 0 : (pw == 1 ? 1 : -1);
      EXPECT_EQ(kronecker(a, p), euler) << a << " " << p;
    }
  }
  for (long n = 1; n < 200; n += 2) {
    for (long a = -20; a <= 20; ++a) {
      int product = 1;
      for (const auto& [p, e] : factor(n).factors) {
        for (unsigned i = 0; i < e; ++i) product *= kronecker(a, p);
      }
      EXPECT_EQ(kronecker(a, n), product);
    }
  }
}

TEST(Kronecker, SqrtModPrime) {
  for (long p : {2L, 3L, 5L, 13L, 17L, 41L, 97L, 257L}) {
    for (long a = 0; a < p; ++a) {
      bool exists = false;
      for (long x = 0; x < p; ++x) exists = exists || (x * x % p == a);
      auto r = sqrt_mod_prime(a, p);
      EXPECT_EQ(r.has_value(), exists) << a << " mod " << p;
      if (r) {
        EXPECT_EQ(Integer(*r * *r % p), Integer(a));
      }
    }
  }
}

// Primitive zero of a x^2 + b y^2 - z^2 modulo p^k; k = 3 for odd p and 5
// for p = 2 suffices by Hensel's lemma when a, b are squarefree.
int local_oracle(long a, long b, long p) {
  const long k = p == 2 ? 5 : 3;
  long mod = 1;
  for (long i = 0; i < k; ++i) mod *= p;
  for (long x = 0; x < mod; ++x) {
    for (long y = 0; y < mod; ++y) {
      const long lhs = ((a * x % mod * x + b * y % mod * y) % mod + mod * mod) % mod;
      for (long z = 0; z < mod; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        if ((lhs - z * z % mod + mod) % mod == 0) return 1;
      }
    }
  }
  return -1;
}

TEST(LocalHilbert, Examples) {
  EXPECT_EQ(local_hilbert(-1, -1, Place::finite(2)), -1);
  EXPECT_EQ(local_hilbert(-1, -1, Place::real()), -1);
  EXPECT_EQ(local_hilbert(-1, 3, Place::real()), 1);
  for (long a : {2L, -3L, 7L, 10L}) {
    for (long p : {2L, 3L, 5L, 7L}) {
      EXPECT_EQ(local_hilbert(a, -a, Place::finite(p)), 1);
    }
  }
  EXPECT_THROW(local_hilbert(0, 3, Place::real()), InvalidArgument);
  EXPECT_THROW(Place::finite(9), InvalidArgument);
}

TEST(LocalHilbert, AgreesWithCongruenceOracleAt2And3) {
  std::vector<long> sf;
  for (long n = -10; n <= 10; ++n) {
    if (is_squarefree(n)) sf.push_back(n);
  }
  for (long p : {2L, 3L}) {
    for (long a : sf) {
      for (long b : sf) {
        if (b < a) continue;
        EXPECT_EQ(local_hilbert(a, b, Place::finite(p)), local_oracle(a, b, p)) << a << "," << b << " at " << p;
      }
    }
  }
}

TEST(GlobalHilbert, Examples) {
  const auto r314 = global_hilbert(3, 14);
  EXPECT_FALSE(r314.split());
  EXPECT_EQ(r314.places, (std::vector<Place>{Place::finite(3), Place::finite(7)}));
  EXPECT_TRUE(global_hilbert(5, -4).split());
  EXPECT_EQ(global_hilbert(-1, -1).places, (std::vector<Place>{Place::finite(2), Place::real()}));
  EXPECT_EQ(global_hilbert(3, 56).places, r314.places);
}

TEST(GlobalHilbert, Properties) {
  std::mt19937_64 rng(17);
  const std::vector<Place> probes{Place::real(), Place::finite(2), Place::finite(3), Place::finite(5),
                                  Place::finite(7), Place::finite(11)};
  for (int i = 0; i < 400; ++i) {
    const Rational a = random_rational(rng, 60, true);
    const Rational b1 = random_rational(rng, 60, true);
    const Rational b2 = random_rational(rng, 60, true);
    const Rational s = random_rational(rng, 30, true);
    const auto r = global_hilbert(a, b1);
    EXPECT_EQ(r.places.size() % 2, 0U);
    EXPECT_EQ(global_hilbert(b1, a).places, r.places);
    EXPECT_EQ(global_hilbert(a, b1 * s * s).places, r.places);
    for (const auto& v : probes) {
      EXPECT_EQ(local_hilbert(a, b1 * b2, v), local_hilbert(a, b1, v) * local_hilbert(a, b2, v));
      EXPECT_EQ(local_hilbert(a, b1, v) == -1, r.contains(v));
    }
    if (a != Rational(1)) {
      EXPECT_TRUE(global_hilbert(a, Rational(1) - a).split());
    }
  }
}

TEST(QuadField, Core) {
  const auto f = squarefree_core(-63);
  EXPECT_EQ(f.radicand_core, -7);
  EXPECT_FALSE(f.is_trivial());
  EXPECT_TRUE(squarefree_core(Rational(4, 9)).is_trivial());
  EXPECT_TRUE(squarefree_core(0).is_trivial());
  EXPECT_EQ(squarefree_core(Rational(3, 4)).radicand_core, 3);
  EXPECT_EQ(squarefree_core(Rational(1, 2)).radicand_core, 2);
}

TEST(QuadField, SplittingExamples) {
  EXPECT_EQ(place_splitting(Place::finite(5), squarefree_core(-1)), SplitType::split);
  EXPECT_EQ(place_splitting(Place::finite(2), squarefree_core(-3)), SplitType::inert);
  EXPECT_EQ(place_splitting(Place::real(), squarefree_core(-7)), SplitType::becomes_complex);
  EXPECT_EQ(place_splitting(Place::real(), squarefree_core(7)), SplitType::splits_into_two_real);
  EXPECT_EQ(place_splitting(Place::finite(7), squarefree_core(-7)), SplitType::ramified);
  EXPECT_THROW(place_splitting(Place::finite(3), squarefree_core(9)), InvalidArgument);
}

// Factor the minimal polynomial mod p by brute force.
SplitType splitting_oracle(long p, long m) {
  if (m % p == 0) return SplitType::ramified;
  if (p == 2) {
    if (((m % 4) + 4) % 4 != 1) return SplitType::ramified;
    const long c = (m - 1) / 4;  // x^2 - x - c
    int roots = 0;
    for (long x = 0; x < 2; ++x) roots += (((x * x - x - c) % 2) + 2) % 2 == 0;
    return roots > 0 ? SplitType::split : SplitType::inert;
  }
  for (long x = 0; x < p; ++x) {
    if ((((x * x - m) % p) + p) % p == 0) return SplitType::split;
  }
  return SplitType::inert;
}

TEST(QuadField, SplittingMatchesPolynomialFactorization) {
  for (long m = -40; m <= 40; ++m) {
    if (m == 1 || !is_squarefree(m)) continue;
    const auto field = squarefree_core(m);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
      EXPECT_EQ(place_splitting(Place::finite(p), field), splitting_oracle(p, m)) << m << " at " << p;
    }
  }
}

TEST(ExtHilbert, Examples) {
  EXPECT_FALSE(ext_hilbert(2, -13, squarefree_core(-3)).zero);
  EXPECT_EQ(ext_hilbert(2, -13, squarefree_core(-3)).witness, Place::finite(13));
  EXPECT_TRUE(ext_hilbert(2, -1, squarefree_core(-3)).zero);
  EXPECT_TRUE(ext_hilbert(2, -9, squarefree_core(-7)).zero);
  // (-1, -1) ramifies at 2 and infinity; 2 splits in Q(sqrt(-7)).
  EXPECT_FALSE(ext_hilbert(-1, -1, squarefree_core(-7)).zero);
  EXPECT_TRUE(ext_hilbert(-1, -1, squarefree_core(-1)).zero);
}

TEST(ExtHilbert, TrivialFieldMatchesQ) {
  for (long a = -12; a <= 12; ++a) {
    for (long b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0) continue;
      for (const Rational& m : {Rational(0), Rational(1), Rational(4, 9)}) {
        const auto s = ext_hilbert(a, b, squarefree_core(m));
        EXPECT_TRUE(s.degenerate_discriminant);
        EXPECT_EQ(s.zero, global_hilbert(a, b).split());
      }
    }
  }
}

TEST(ExtHilbert, InvarianceAndMonotonicity) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_rational(rng, 40, true);
    const Rational b = random_rational(rng, 40, true);
    const Rational m = random_rational(rng, 40, true);
    const Rational s = random_rational(rng, 12, true);
    const auto base = ext_hilbert(a, b, squarefree_core(m));
    EXPECT_EQ(ext_hilbert(a, b * s * s, squarefree_core(m)).zero, base.zero);
    EXPECT_EQ(ext_hilbert(a, b, squarefree_core(m * s * s)).zero, base.zero);
    if (global_hilbert(a, b).split()) {
      EXPECT_TRUE(base.zero);
    }
  }
}

// The search oracle's square test, on hand-made squares.
TEST(ExtHilbert, OracleSquareTest) {
  EXPECT_TRUE(testing::is_square_in_field(3, 2, 2));   // (1 + sqrt 2)^2
  EXPECT_TRUE(testing::is_square_in_field(2, 0, 2));   // (sqrt 2)^2
  EXPECT_TRUE(testing::is_square_in_field(-1, 0, -1));
  EXPECT_TRUE(testing::is_square_in_field(0, 0, 5));
  EXPECT_FALSE(testing::is_square_in_field(1, 1, 2));
  EXPECT_FALSE(testing::is_square_in_field(3, 0, 2));
  EXPECT_FALSE(testing::is_square_in_field(-4, 0, 3));
}

TEST(ExtHilbert, AgreesWithSearchOnSmallCorpus) {
  for (long m : {-3L, -1L, 2L, 5L}) {
    for (long a = -6; a <= 6; ++a) {
      for (long b = a; b <= 6; ++b) {
        if (a == 0 || b == 0) continue;
        const bool zero = ext_hilbert(a, b, squarefree_core(m)).zero;
        EXPECT_EQ(zero, testing::ext_split_search(a, b, m, 3)) << a << "," << b << " over " << m;
      }
    }
  }
}

}  // namespace
}  // namespace fixedrat

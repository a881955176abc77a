// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fixedrat/arith/rational.hpp"

namespace fixedrat {

/// Budgets for the deterministic factorization pipeline.
struct FactorConfig {
  /// Trial division runs over all primes below this bound.
  std::uint32_t trial_bound = 1'000'000;
  /// Total Pollard-rho/Brent iterations allowed per call.
  std::uint64_t rho_iterations = 1ULL << 22;
};

struct Factorization {
  int sign = 1;
  /// (prime, exponent), primes strictly increasing.
  std::vector<std::pair<Integer, unsigned>> factors;

  Integer value() const;
};

/// Exact factorization of a nonzero integer: trial division, then Brent's
/// variant of Pollard rho with a hard iteration budget.
///
/// Throws InvalidArgument for zero and FactorizationLimitExceeded when the
/// budget runs out.
Factorization factor(const Integer& n, const FactorConfig& config = {});

/// Deterministic primality test (BPSW plus fixed-base Miller-Rabin).
bool is_prime(const Integer& n);

/// Signed squarefree part: n = core * s^2 with core squarefree.
Integer squarefree_part(const Integer& n, const FactorConfig& config = {});

/// Kronecker symbol (a/n) for arbitrary integers.
int kronecker(const Integer& a, const Integer& n);

/// Square root of a modulo an odd prime p, when a is a residue.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

}  // namespace fixedrat

// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "fixedrat/decide/decider.hpp"

namespace fixedrat {

/// The involution of Q(sqrt(a))(x, y):
///   sqrt(a) -> -sqrt(a),  x -> b/x,  y -> (c(x + b/x) + d)/y.
struct SigmaAction {
  SurfaceSpec spec;
  /// Images of x and y.
  Bindings action;

  explicit SigmaAction(const SurfaceSpec& spec);
};

/// sigma(f): conjugate the coefficients, then substitute x and y.
RatFunc apply_sigma(const RatFunc& f, const SigmaAction& act);

/// Invariant generators of the fixed field, as functions of x and y:
///   t1 = (x + b/x)/2,  t2 = (x - b/x)/(2 sqrt(a)),
///   t3 = (y + Y)/2,    t4 = (y - Y)/(2 sqrt(a)),   Y = sigma(y).
struct GeneratorSet {
  RatFunc t1;
  RatFunc t2;
  RatFunc t3;
  RatFunc t4;
};

GeneratorSet build_generators(const SurfaceSpec& spec);

struct CheckResult {
  std::string check;
  bool passed = false;
  std::string detail;
};

using Report = std::vector<CheckResult>;

bool all_passed(const Report& report);

/// sigma^2 = id on x and y, sigma(t_i) = t_i, both defining relations, and
/// x = t1 + sqrt(a) t2, y = t3 + sqrt(a) t4.
Report verify_involution_and_invariance(const SurfaceSpec& spec);

/// Identities behind the b-nonsquare case for a solution alpha^2 - a beta^2 = b:
/// the t0 substitution, the t5/t6 factorization, and the action on the
/// coordinates z, u, w.  Throws InvalidArgument when (alpha, beta) is not a
/// solution or b is a square.
Report verify_proof_chain_nonsquare(const SurfaceSpec& spec, const Rational& alpha, const Rational& beta);

/// Identities behind the b = beta^2 case: sigma on u = sqrt(a)(beta - x)/(beta + x)
/// and v = (sqrt(a) - u) y, and the round trip back to x and y.  Throws
/// InvalidArgument unless beta^2 = b and beta != 0.
Report verify_proof_chain_square(const SurfaceSpec& spec, const Rational& beta);

/// (x1^2 - a x2^2)(y1^2 - a y2^2) = (x1 y1 + a x2 y2)^2 - a (x1 y2 + x2 y1)^2
/// and its quotient form, with a, x1, x2, y1, y2 indeterminates.
Report verify_norm_identity();

}  // namespace fixedrat

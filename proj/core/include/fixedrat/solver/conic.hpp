// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fixedrat/arith/ratfunc.hpp"
#include "fixedrat/symbols/factor.hpp"

namespace fixedrat {

/// Search budgets.  Every knob is a plain value so results are a pure
/// function of (input, config).
struct SolverConfig {
  /// Largest |modulus| for which the descent solves a square-root congruence.
  std::uint64_t descent_height = 1'000'000;
  /// Height bound of the exhaustive fallback for norm equations.
  std::uint64_t fallback_height = 10'000;
  /// Height bound for the sieved quaternary search and its fiber fallback.
  std::uint64_t quadric_height = 200;
  FactorConfig factor;
};

/// alpha^2 - a*beta^2 = b.
struct ConicSolution {
  Rational alpha;
  Rational beta;

  friend bool operator==(const ConicSolution&, const ConicSolution&) = default;
};

/// Solves x^2 - a*y^2 = b over Q.
///
/// Returns nothing iff (a, b) is ramified somewhere.  Otherwise descends on
/// x^2 - a*y^2 - b*z^2 (Lagrange), falling back to a bounded exhaustive
/// search; throws SearchBudgetExceeded only when both give up.  Requires
/// a, b nonzero and a not a square.
std::optional<ConicSolution> solve_norm_equation(const Rational& a, const Rational& b,
                                                 const SolverConfig& config = {},
                                                 std::stop_token stop = {});

/// Same, without the nonsquare requirement on a (used internally by fiber
/// searches where the binary form may be isotropic).
std::optional<ConicSolution> solve_binary_norm(const Rational& a, const Rational& b,
                                               const SolverConfig& config = {},
                                               std::stop_token stop = {});

/// q1 X^2 + q2 Y^2 + q3 Z^2 + q4 W^2 = 0 with all qi nonzero and mixed signs.
class QuadricSpec {
 public:
  /// Throws InvalidArgument on a zero or all-same-sign coefficient set.
  explicit QuadricSpec(std::array<Rational, 4> coeffs);

  const std::array<Rational, 4>& coeffs() const { return coeffs_; }
  Rational evaluate(const std::array<Rational, 4>& point) const;

 private:
  std::array<Rational, 4> coeffs_;
};

/// q1 x^2 + q2 y^2 + q3 z^2 = 0, same conditions.
class ConicSpec {
 public:
  explicit ConicSpec(std::array<Rational, 3> coeffs);

  const std::array<Rational, 3>& coeffs() const { return coeffs_; }
  Rational evaluate(const std::array<Rational, 3>& point) const;

 private:
  std::array<Rational, 3> coeffs_;
};

using QuadricPoint = std::array<Integer, 4>;

/// Primitive integer zero of the quadric, first nonzero coordinate positive.
///
/// Height-ordered search over (X, Y, Z) up to `quadric_height`, solving for W
/// after a sieve modulo 8, 9, 5 and 7; then a fiber search that solves
/// q1 X^2 + q2 Y^2 = -(q3 Z^2 + q4 W^2) as a norm equation for small (Z, W).
/// Returns nothing at once when some completion Q_p has no zero, and after
/// both budgets are exhausted otherwise.
std::optional<QuadricPoint> find_quadric_point(const QuadricSpec& quadric, const SolverConfig& config = {},
                                               std::stop_token stop = {});

/// Rational maps from the parameter plane onto an affine quadric or conic.
struct RationalParametrization {
  std::vector<std::string> parameters;
  /// Coordinate name -> map in the parameters.
  std::vector<std::pair<std::string, RatFunc>> maps;
  /// Projection center in homogeneous coordinates.
  std::vector<Rational> base_point;

  /// Throws std::out_of_range for an unknown coordinate.
  const RatFunc& map(std::string_view coordinate) const;
};

using SurfaceParam = RationalParametrization;

/// Projection from `center` onto the affine chart W = 1: coordinates "X",
/// "Y", "Z" as maps in (u, v) (names overridable).  Satisfies the quadric
/// identically; throws DegenerateCenter when every chart degenerates and
/// InvalidArgument when `center` is not on the quadric.
SurfaceParam stereographic_parametrize(const QuadricSpec& quadric, const std::array<Rational, 4>& center,
                                       const std::array<std::string, 2>& parameters = {"u", "v"},
                                       const std::array<std::string, 3>& coordinates = {"X", "Y", "Z"});

/// One-parameter version for conics: coordinates "x", "y" on z = 1 in `t`.
RationalParametrization parametrize_conic(const ConicSpec& conic, const std::array<Rational, 3>& center,
                                          const std::string& parameter = "t",
                                          const std::array<std::string, 2>& coordinates = {"x", "y"});

}  // namespace fixedrat

// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stop_token>
#include <string>
#include <variant>
#include <vector>

#include "fixedrat/solver/conic.hpp"
#include "fixedrat/symbols/quad_field.hpp"

namespace fixedrat {

/// Parameters of the surface
///   t1^2 - a t2^2 = b,   t3^2 - a t4^2 = 2c t1 + d
/// with a a nonsquare, b != 0 and (c, d) != (0, 0).
struct SurfaceSpec {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  /// Throws InvalidSpec when the hypotheses fail.
  void validate() const;
  /// d^2 - 4 b c^2, the radicand of the base-change field.
  Rational discriminant() const { return d * d - Rational(4) * b * c * c; }

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

enum class Verdict { rational, not_rational };

/// How the rational parametrization is assembled.
enum class Route {
  case1_quadric,    ///< b nonsquare; quadric surface in (t5, t6, t-hat).
  case2_linear,     ///< b nonsquare; t0 is a rational function of (t5, t6).
  square_b_conic,   ///< b square; conic bundle over the t0-line, via a quadric.
  square_b_linear,  ///< b square; conic times a free affine line.
};

enum class FailedCondition {
  norm_form_b,      ///< (a, b) ramified over Q.
  ext_symbol,       ///< (a, d - 2c alpha) nonsplit over Q(sqrt(d^2 - 4bc^2)).
  square_b_symbol,  ///< b square: the single symbol condition fails.
};

std::string to_string(Verdict v);
std::string to_string(Route r);
std::string to_string(FailedCondition f);

/// Rational point (alpha, beta, gamma, delta) of
///   alpha^2 - a beta^2 = b,  gamma^2 - a delta^2 = 2c alpha + d.
struct SurfacePoint {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;

  bool satisfies(const SurfaceSpec& spec) const;
  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

/// The symbol that decided the verdict.
struct SymbolCheck {
  Rational a;
  Rational b;
  /// Raw radicand of the base field; absent for a symbol over Q.
  std::optional<Rational> field_radicand;
  ExtSymbol value;
};

struct RationalCertificate {
  std::optional<SurfacePoint> point;
  /// alpha^2 - a beta^2 = b used by the decision (beta = 0 when b is square).
  ConicSolution norm_solution;
  Route route = Route::case1_quadric;
  std::optional<SymbolCheck> symbol;
  std::optional<SurfaceParam> parametrization;
};

struct NotRationalCertificate {
  FailedCondition failed_condition = FailedCondition::norm_form_b;
  /// For norm_form_b and the b-square "(a, 2d)" case.
  std::optional<RamificationSet> ramification;
  std::optional<SymbolCheck> symbol;
};

using Certificate = std::variant<RationalCertificate, NotRationalCertificate>;

struct Decision {
  SurfaceSpec spec;
  Verdict verdict = Verdict::not_rational;
  Certificate certificate;
  std::vector<std::string> notes;
};

namespace notes {
inline constexpr const char* kEquivalence = "rational <=> stably rational <=> unirational";
inline constexpr const char* kDegenerateDiscriminant = "degenerate_discriminant";
inline constexpr const char* kPointUnavailable = "point-unavailable-for-chosen-alpha";
inline constexpr const char* kLinearTermVanishes = "d-2c*beta=0";
}  // namespace notes

struct DecideOptions {
  SolverConfig solver;
  /// Also build and verify the birational parametrization.
  bool certify = false;
};

/// Decides rationality of the fixed field over Q by the symbol conditions;
/// searches are used only to fill in the certificate.
Decision decide(const SurfaceSpec& spec, const DecideOptions& options = {}, std::stop_token stop = {});

/// Verdict computed from a caller-supplied solution of alpha^2 - a beta^2 = b
/// (b nonsquare).  Throws InvalidArgument when the solution is wrong.
Verdict verdict_from_solution(const SurfaceSpec& spec, const ConicSolution& solution,
                              const FactorConfig& config = {});

/// Verdict for b = root^2 using the given square root (either sign).
Verdict verdict_from_root(const SurfaceSpec& spec, const Rational& root, const FactorConfig& config = {});

/// A rational point of the surface, found constructively: solve for
/// (alpha, beta), then for (gamma, delta), retrying sign variants of the
/// first solution.
std::optional<SurfacePoint> point_on_X(const SurfaceSpec& spec, const SolverConfig& config = {},
                                       std::stop_token stop = {});

/// Route the parametrization takes for a given (alpha, beta).
Route choose_route(const SurfaceSpec& spec, const ConicSolution& solution);

/// Rational maps t1..t4 in (u, v), verified against both defining relations.
/// Requires a rational verdict.  Throws VerificationFailure if the composed
/// maps fail the check and SearchBudgetExceeded if no base point is found.
SurfaceParam build_parametrization(const SurfaceSpec& spec, const std::optional<SurfacePoint>& point,
                                   const SolverConfig& config = {}, std::stop_token stop = {});

/// Substitutes the maps into both relations; true iff both vanish.
bool parametrization_satisfies(const SurfaceSpec& spec, const SurfaceParam& param);

struct Component {
  Rational b;
  Rational c;
  Rational d;
};

/// Compositum of several surfaces sharing a: rational iff every component is.
struct MultiDecision {
  Verdict verdict = Verdict::rational;
  std::vector<Decision> components;
  /// Index of the first non-rational component.
  std::optional<std::size_t> failing_component;
};

MultiDecision decide_multi(const Rational& a, const std::vector<Component>& components,
                           const DecideOptions& options = {}, std::stop_token stop = {});

/// Product of norm-one tori s_i^2 - a t_i^2 = b_i.
struct NormToriDecision {
  Verdict verdict = Verdict::rational;
  std::vector<RamificationSet> symbols;
};

NormToriDecision decide_norm_tori(const Rational& a, const std::vector<Rational>& bs, const FactorConfig& config = {});

/// d as a function of c in a scan: d = slope * c + offset.
struct DRule {
  Rational slope = 1;
  Rational offset = 0;

  /// Accepts "c", "-c", "<q>*c", "<q>*c+<r>", or a constant "<r>".
  static DRule parse(std::string_view text);
  Rational apply(const Rational& c) const { return slope * c + offset; }
};

struct ScanRequest {
  Rational a;
  Rational b;
  long c_lo = 1;
  long c_hi = 0;
  DRule d_rule;
};

enum class ScanStatus { rational, not_rational, skipped, error };

std::string to_string(ScanStatus s);

struct ScanEntry {
  long c = 0;
  ScanStatus status = ScanStatus::skipped;
  std::string message;
};

/// Built-in families: (2, 1, c, c) for 1 <= c <= 100 and (2, 2, c, c) for
/// -100 <= c <= 100.
ScanRequest scan_family(std::string_view name);

/// Deterministic table in increasing c.  Entries are independent; errors are
/// reported inline.  `jobs` > 1 evaluates entries on worker threads.
std::vector<ScanEntry> scan(const ScanRequest& request, unsigned jobs = 1, const DecideOptions& options = {},
                            std::stop_token stop = {});

}  // namespace fixedrat

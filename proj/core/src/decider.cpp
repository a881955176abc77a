// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/decide/decider.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

#include "fixedrat/errors.hpp"

namespace fixedrat {

namespace {

void poll(const std::stop_token& stop) {
  if (stop.stop_requested()) throw Cancelled();
}

bool is_rational_square(const Rational& q) { return is_square(q).has_value(); }

// Outcome of the symbol condition for one choice of alpha.
struct AlphaOutcome {
  bool rational = true;
  std::optional<SymbolCheck> symbol;
  std::optional<RamificationSet> ramification;
  std::vector<std::string> notes;
};

// Condition "d - 2c alpha = 0, or (a, d - 2c alpha) splits over
// Q(sqrt(d^2 - 4bc^2))".  When b = alpha^2 and d = 2c alpha the condition is
// instead (a, 2d) = 0 over Q.
AlphaOutcome evaluate_alpha(const SurfaceSpec& spec, const Rational& alpha, bool b_square,
                            const FactorConfig& config) {
  AlphaOutcome out;
  const Rational e = spec.d - Rational(2) * spec.c * alpha;
  if (e.is_zero()) {
    if (!b_square) return out;
    out.notes.emplace_back(notes::kLinearTermVanishes);
    RamificationSet ram = global_hilbert(spec.a, Rational(2) * spec.d, config);
    ExtSymbol value;
    value.zero = ram.split();
    if (!value.zero) value.witness = ram.places.front();
    out.rational = value.zero;
    out.symbol = SymbolCheck{spec.a, Rational(2) * spec.d, std::nullopt, value};
    out.ramification = std::move(ram);
    return out;
  }
  const Rational disc = spec.discriminant();
  QuadField field = squarefree_core(disc, config);
  ExtSymbol value = ext_hilbert(spec.a, e, field, config);
  if (value.degenerate_discriminant) out.notes.emplace_back(notes::kDegenerateDiscriminant);
  out.rational = value.zero;
  out.symbol = SymbolCheck{spec.a, e, disc, value};
  return out;
}

Rational nonneg_root(const Rational& b) {
  auto root = is_square(b);
  return root->abs();
}

std::vector<ConicSolution> sign_variants(const ConicSolution& s) {
  std::vector<ConicSolution> out;
  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      ConicSolution v{s.alpha * Rational(sa), s.beta * Rational(sb)};
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  return out;
}

std::optional<SurfacePoint> point_for(const SurfaceSpec& spec, const ConicSolution& s, const SolverConfig& config,
                                      const std::stop_token& stop) {
  const Rational m = Rational(2) * spec.c * s.alpha + spec.d;
  if (m.is_zero()) return SurfacePoint{s.alpha, s.beta, Rational(0), Rational(0)};
  auto gd = solve_norm_equation(spec.a, m, config, stop);
  if (!gd) return std::nullopt;
  return SurfacePoint{s.alpha, s.beta, gd->alpha, gd->beta};
}

}  // namespace

void SurfaceSpec::validate() const {
  if (a.is_zero() || is_rational_square(a)) throw InvalidSpec("a must be a nonsquare, got " + a.to_string());
  if (b.is_zero()) throw InvalidSpec("b must be nonzero");
  if (c.is_zero() && d.is_zero()) throw InvalidSpec("c and d are both zero");
}

std::string to_string(Verdict v) { return v == Verdict::rational ? "rational" : "not_rational"; }

std::string to_string(Route r) {
  switch (r) {
    case Route::case1_quadric: return "case1-quadric";
    case Route::case2_linear: return "case2-linear";
    case Route::square_b_conic: return "square-b-conic";
    case Route::square_b_linear: return "square-b-linear";
  }
  return "unknown";
}

std::string to_string(FailedCondition f) {
  switch (f) {
    case FailedCondition::norm_form_b: return "norm-form-b";
    case FailedCondition::ext_symbol: return "ext-symbol";
    case FailedCondition::square_b_symbol: return "square-b-symbol";
  }
  return "unknown";
}

std::string to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::rational: return "rational";
    case ScanStatus::not_rational: return "not_rational";
    case ScanStatus::skipped: return "skipped";
    case ScanStatus::error: return "error";
  }
  return "unknown";
}

bool SurfacePoint::satisfies(const SurfaceSpec& spec) const {
  return alpha * alpha - spec.a * beta * beta == spec.b &&
         gamma * gamma - spec.a * delta * delta == Rational(2) * spec.c * alpha + spec.d;
}

Verdict verdict_from_solution(const SurfaceSpec& spec, const ConicSolution& solution, const FactorConfig& config) {
  spec.validate();
  if (solution.alpha * solution.alpha - spec.a * solution.beta * solution.beta != spec.b) {
    throw InvalidArgument("(alpha, beta) does not satisfy alpha^2 - a*beta^2 = b");
  }
  const bool b_square = is_rational_square(spec.b);
  return evaluate_alpha(spec, solution.alpha, b_square, config).rational ? Verdict::rational : Verdict::not_rational;
}

Verdict verdict_from_root(const SurfaceSpec& spec, const Rational& root, const FactorConfig& config) {
  spec.validate();
  if (root * root != spec.b) throw InvalidArgument("root^2 != b");
  return evaluate_alpha(spec, root, true, config).rational ? Verdict::rational : Verdict::not_rational;
}

std::optional<SurfacePoint> point_on_X(const SurfaceSpec& spec, const SolverConfig& config, std::stop_token stop) {
  spec.validate();
  std::optional<ConicSolution> first;
  if (is_rational_square(spec.b)) {
    first = ConicSolution{nonneg_root(spec.b), Rational(0)};
  } else {
    first = solve_norm_equation(spec.a, spec.b, config, stop);
  }
  if (!first) return std::nullopt;
  for (const auto& s : sign_variants(*first)) {
    if (auto p = point_for(spec, s, config, stop)) return p;
  }
  return std::nullopt;
}

Decision decide(const SurfaceSpec& spec, const DecideOptions& options, std::stop_token stop) {
  spec.validate();
  const FactorConfig& fc = options.solver.factor;
  Decision out;
  out.spec = spec;
  out.notes.emplace_back(notes::kEquivalence);

  const bool b_square = is_rational_square(spec.b);
  ConicSolution solution;
  if (b_square) {
    solution = {nonneg_root(spec.b), Rational(0)};
  } else {
    RamificationSet ram = global_hilbert(spec.a, spec.b, fc);
    if (!ram.split()) {
      NotRationalCertificate cert;
      cert.failed_condition = FailedCondition::norm_form_b;
      cert.ramification = std::move(ram);
      out.verdict = Verdict::not_rational;
      out.certificate = std::move(cert);
      return out;
    }
    auto found = solve_norm_equation(spec.a, spec.b, options.solver, stop);
    if (!found) throw Error("norm equation unsolvable although (a, b) splits");
    solution = *found;
  }

  AlphaOutcome outcome = evaluate_alpha(spec, solution.alpha, b_square, fc);
  out.notes.insert(out.notes.end(), outcome.notes.begin(), outcome.notes.end());
  if (!outcome.rational) {
    NotRationalCertificate cert;
    cert.failed_condition = b_square ? FailedCondition::square_b_symbol : FailedCondition::ext_symbol;
    cert.symbol = std::move(outcome.symbol);
    cert.ramification = std::move(outcome.ramification);
    out.verdict = Verdict::not_rational;
    out.certificate = std::move(cert);
    return out;
  }

  RationalCertificate cert;
  cert.symbol = std::move(outcome.symbol);
  for (const auto& s : sign_variants(solution)) {
    if (auto p = point_for(spec, s, options.solver, stop)) {
      cert.point = p;
      break;
    }
  }
  if (cert.point) {
    cert.norm_solution = {cert.point->alpha, cert.point->beta};
    if (cert.norm_solution.alpha != solution.alpha) {
      // Report the symbol for the alpha that is shown; the verdict may not
      // depend on the choice of solution.
      AlphaOutcome again = evaluate_alpha(spec, cert.norm_solution.alpha, b_square, fc);
      if (!again.rational) throw VerificationFailure("verdict depends on the choice of (alpha, beta)");
      cert.symbol = std::move(again.symbol);
    }
  } else {
    cert.norm_solution = solution;
    out.notes.emplace_back(notes::kPointUnavailable);
  }
  cert.route = choose_route(spec, cert.norm_solution);
  if (options.certify) cert.parametrization = build_parametrization(spec, cert.point, options.solver, stop);
  out.verdict = Verdict::rational;
  out.certificate = std::move(cert);
  return out;
}

Route choose_route(const SurfaceSpec& spec, const ConicSolution& s) {
  const Rational two_c_alpha = Rational(2) * spec.c * s.alpha;
  const bool lead_zero = two_c_alpha == spec.d;
  const bool const_zero = two_c_alpha == -spec.d;
  if (s.beta.is_zero()) return (lead_zero || const_zero) ? Route::square_b_linear : Route::square_b_conic;
  if (spec.c.is_zero()) return Route::case1_quadric;
  return (lead_zero || const_zero) ? Route::case2_linear : Route::case1_quadric;
}

// With t0 = (t2 - beta)/(t1 + alpha), t5 = t3 + a t0 t4, t6 = t0 t3 + t4 the
// surface becomes
//   t5^2 - a t6^2 = B t0^2 + L t0 + E,
//   B = a(2c alpha - d), L = 4ac beta, E = 2c alpha + d,
// and L0 = Q(t0, t5, t6).  Each route writes (t0, t5, t6) in two parameters;
// the maps are then pushed back to (t1, ..., t4).
SurfaceParam build_parametrization(const SurfaceSpec& spec, const std::optional<SurfacePoint>& point,
                                   const SolverConfig& config, std::stop_token stop) {
  spec.validate();
  if (point && !point->satisfies(spec)) throw InvalidArgument("supplied point is not on the surface");

  ConicSolution sol;
  if (point) {
    sol = {point->alpha, point->beta};
  } else if (is_rational_square(spec.b)) {
    sol = {nonneg_root(spec.b), Rational(0)};
  } else {
    auto found = solve_norm_equation(spec.a, spec.b, config, stop);
    if (!found) throw InvalidArgument("(a, b) does not split; the surface is not rational");
    sol = *found;
  }
  const Rational& a = spec.a;
  const Rational& alpha = sol.alpha;
  const Rational& beta = sol.beta;
  const Rational B = a * (Rational(2) * spec.c * alpha - spec.d);
  const Rational L = Rational(4) * a * spec.c * beta;
  const Rational E = Rational(2) * spec.c * alpha + spec.d;

  const RatFunc u = RatFunc::variable("u");
  const RatFunc v = RatFunc::variable("v");
  RatFunc t0;
  RatFunc t5;
  RatFunc t6;
  std::vector<Rational> base;

  // Conic p^2 - a q^2 = n parametrized in v; `known` is a point if one is at hand.
  auto conic_in_v = [&](const Rational& n, std::optional<ConicSolution> known) {
    if (!known) known = solve_norm_equation(a, n, config, stop);
    if (!known) throw InvalidArgument("conic has no rational point; the surface is not rational");
    ConicSpec conic({Rational(1), -a, -n});
    auto p = parametrize_conic(conic, {known->alpha, known->beta, Rational(1)}, "v", {"p", "q"});
    base = p.base_point;
    return std::pair{p.map("p"), p.map("q")};
  };

  if (B.is_zero() && !L.is_zero()) {
    t5 = u;
    t6 = v;
    t0 = (u * u - RatFunc(a) * v * v - RatFunc(E)) / RatFunc(L);
  } else if (E.is_zero() && !L.is_zero()) {
    // p = t5/t0, q = t6/t0:  p^2 - a q^2 = B + L/t0.
    t0 = RatFunc(L) / (u * u - RatFunc(a) * v * v - RatFunc(B));
    t5 = u * t0;
    t6 = v * t0;
  } else if (B.is_zero()) {
    std::optional<ConicSolution> known;
    if (point) known = ConicSolution{point->gamma, point->delta};
    auto [p, q] = conic_in_v(E, known);
    t0 = u;
    t5 = p;
    t6 = q;
  } else if (E.is_zero()) {
    auto [p, q] = conic_in_v(B, std::nullopt);
    t0 = u;
    t5 = p * u;
    t6 = q * u;
  } else {
    // t-hat = t0 + L/(2B):  t5^2 - a t6^2 - B t-hat^2 + D = 0.
    const Rational shift = L / (Rational(2) * B);
    const Rational D = L * L / (Rational(4) * B) - E;
    QuadricSpec quadric({Rational(1), -a, -B, D});
    std::optional<SurfaceParam> proj;
    if (point) {
      try {
        proj = stereographic_parametrize(quadric, {point->gamma, point->delta, shift, Rational(1)});
      } catch (const DegenerateCenter&) {
      }
    }
    if (!proj) {
      auto found = find_quadric_point(quadric, config, stop);
      if (!found) throw SearchBudgetExceeded("no rational point found on the auxiliary quadric");
      std::array<Rational, 4> center;
      for (std::size_t i = 0; i < 4; ++i) center[i] = Rational((*found)[i]);
      proj = stereographic_parametrize(quadric, center);
    }
    base = proj->base_point;
    t5 = proj->map("X");
    t6 = proj->map("Y");
    t0 = proj->map("Z") - RatFunc(shift);
  }
  poll(stop);

  const RatFunc one(1);
  const RatFunc at0sq = RatFunc(a) * t0 * t0;
  const RatFunc den = one - at0sq;
  SurfaceParam out;
  out.parameters = {"u", "v"};
  out.base_point = std::move(base);
  out.maps.emplace_back("t1", (RatFunc(alpha) * (one + at0sq) + RatFunc(Rational(2) * a * beta) * t0) / den);
  out.maps.emplace_back("t2", (RatFunc(beta) * (one + at0sq) + RatFunc(Rational(2) * alpha) * t0) / den);
  out.maps.emplace_back("t3", (t5 - RatFunc(a) * t0 * t6) / den);
  out.maps.emplace_back("t4", (t6 - t0 * t5) / den);
  poll(stop);
  if (!parametrization_satisfies(spec, out)) throw VerificationFailure("parametrization fails the defining relations");
  return out;
}

bool parametrization_satisfies(const SurfaceSpec& spec, const SurfaceParam& param) {
  const RatFunc& t1 = param.map("t1");
  const RatFunc& t2 = param.map("t2");
  const RatFunc& t3 = param.map("t3");
  const RatFunc& t4 = param.map("t4");
  const RatFunc a(spec.a);
  const RatFunc first = t1 * t1 - a * t2 * t2 - RatFunc(spec.b);
  const RatFunc second = t3 * t3 - a * t4 * t4 - RatFunc(Rational(2) * spec.c) * t1 - RatFunc(spec.d);
  return first.is_zero() && second.is_zero();
}

MultiDecision decide_multi(const Rational& a, const std::vector<Component>& components, const DecideOptions& options,
                           std::stop_token stop) {
  for (const auto& comp : components) SurfaceSpec{a, comp.b, comp.c, comp.d}.validate();
  MultiDecision out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& comp = components[i];
    out.components.push_back(decide({a, comp.b, comp.c, comp.d}, options, stop));
    if (out.components.back().verdict == Verdict::not_rational && !out.failing_component) {
      out.failing_component = i;
      out.verdict = Verdict::not_rational;
    }
  }
  return out;
}

NormToriDecision decide_norm_tori(const Rational& a, const std::vector<Rational>& bs, const FactorConfig& config) {
  if (a.is_zero() || is_rational_square(a)) throw InvalidArgument("a must be a nonsquare");
  for (const auto& b : bs) {
    if (b.is_zero()) throw InvalidArgument("b_i must be nonzero");
  }
  NormToriDecision out;
  for (const auto& b : bs) {
    out.symbols.push_back(global_hilbert(a, b, config));
    if (!out.symbols.back().split()) out.verdict = Verdict::not_rational;
  }
  return out;
}

DRule DRule::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty d rule");
  DRule rule;
  const auto pos = s.find('c');
  if (pos == std::string::npos) {
    rule.slope = 0;
    rule.offset = Rational::parse(s);
    return rule;
  }
  std::string coef = s.substr(0, pos);
  if (coef.empty() || coef == "+") {
    rule.slope = 1;
  } else if (coef == "-") {
    rule.slope = -1;
  } else {
    if (coef.back() != '*') throw ParseError("bad d rule: " + s);
    coef.pop_back();
    rule.slope = Rational::parse(coef);
  }
  std::string rest = s.substr(pos + 1);
  if (rest.empty()) {
    rule.offset = 0;
  } else if (rest.front() == '+') {
    rule.offset = Rational::parse(rest.substr(1));
  } else if (rest.front() == '-') {
    rule.offset = Rational::parse(rest);
  } else {
    throw ParseError("bad d rule: " + s);
  }
  return rule;
}

ScanRequest scan_family(std::string_view name) {
  if (name == "ex22") return {Rational(2), Rational(1), 1, 100, DRule{}};
  if (name == "ex23") return {Rational(2), Rational(2), -100, 100, DRule{}};
  throw InvalidArgument("unknown scan family: " + std::string(name));
}

std::vector<ScanEntry> scan(const ScanRequest& request, unsigned jobs, const DecideOptions& options,
                            std::stop_token stop) {
  if (request.c_hi < request.c_lo) return {};
  const std::size_t count = static_cast<std::size_t>(request.c_hi - request.c_lo) + 1;
  std::vector<ScanEntry> table(count);

  auto evaluate = [&](std::size_t i) {
    ScanEntry& entry = table[i];
    entry.c = request.c_lo + static_cast<long>(i);
    const Rational c(entry.c);
    SurfaceSpec spec{request.a, request.b, c, request.d_rule.apply(c)};
    try {
      spec.validate();
    } catch (const InvalidSpec& e) {
      entry.status = ScanStatus::skipped;
      entry.message = e.what();
      return;
    }
    try {
      DecideOptions local = options;
      local.certify = false;
      const Decision d = decide(spec, local, stop);
      entry.status = d.verdict == Verdict::rational ? ScanStatus::rational : ScanStatus::not_rational;
    } catch (const Cancelled&) {
      throw;
    } catch (const std::exception& e) {
      entry.status = ScanStatus::error;
      entry.message = e.what();
    }
  };

  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      poll(stop);
      evaluate(i);
    }
    return table;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> cancelled{false};
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < count; i = next++) {
            poll(stop);
            evaluate(i);
          }
        } catch (const Cancelled&) {
          cancelled = true;
        }
      });
    }
  }
  if (cancelled) throw Cancelled();
  return table;
}

}  // namespace fixedrat

// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/verify/sigma.hpp"

#include <algorithm>

#include "fixedrat/errors.hpp"

namespace fixedrat {

namespace {

RatFunc var(std::string_view name) { return RatFunc::variable(name); }

RatFunc sqrt_a(const Rational& a) { return RatFunc(QuadElem::sqrt_of(a)); }

void add(Report& report, std::string check, bool passed, std::string detail = {}) {
  report.push_back({std::move(check), passed, std::move(detail)});
}

// Records `lhs == rhs`; a mismatch keeps the difference for the report.
void add_identity(Report& report, std::string check, const RatFunc& lhs, const RatFunc& rhs) {
  const RatFunc diff = lhs - rhs;
  add(report, std::move(check), diff.is_zero(), diff.is_zero() ? "" : "difference: " + diff.to_string());
}

}  // namespace

SigmaAction::SigmaAction(const SurfaceSpec& s) : spec(s) {
  spec.validate();
  const RatFunc x = var("x");
  const RatFunc y = var("y");
  const RatFunc bx = RatFunc(spec.b) / x;
  action.emplace("x", bx);
  action.emplace("y", (RatFunc(spec.c) * (x + bx) + RatFunc(spec.d)) / y);
}

RatFunc apply_sigma(const RatFunc& f, const SigmaAction& act) { return f.conjugate().substitute(act.action); }

GeneratorSet build_generators(const SurfaceSpec& spec) {
  const SigmaAction act(spec);
  const RatFunc x = var("x");
  const RatFunc y = var("y");
  const RatFunc& bx = act.action.at("x");
  const RatFunc& sy = act.action.at("y");
  const RatFunc two_root = RatFunc(2) * sqrt_a(spec.a);
  return {(x + bx) / RatFunc(2), (x - bx) / two_root, (y + sy) / RatFunc(2), (y - sy) / two_root};
}

bool all_passed(const Report& report) {
  return std::all_of(report.begin(), report.end(), [](const CheckResult& r) { return r.passed; });
}

Report verify_involution_and_invariance(const SurfaceSpec& spec) {
  const SigmaAction act(spec);
  const GeneratorSet g = build_generators(spec);
  const RatFunc x = var("x");
  const RatFunc y = var("y");
  const RatFunc a(spec.a);
  Report report;
  add_identity(report, "sigma^2(x) = x", apply_sigma(apply_sigma(x, act), act), x);
  add_identity(report, "sigma^2(y) = y", apply_sigma(apply_sigma(y, act), act), y);
  add_identity(report, "sigma(sqrt(a)) = -sqrt(a)", apply_sigma(sqrt_a(spec.a), act), -sqrt_a(spec.a));
  add_identity(report, "sigma(t1) = t1", apply_sigma(g.t1, act), g.t1);
  add_identity(report, "sigma(t2) = t2", apply_sigma(g.t2, act), g.t2);
  add_identity(report, "sigma(t3) = t3", apply_sigma(g.t3, act), g.t3);
  add_identity(report, "sigma(t4) = t4", apply_sigma(g.t4, act), g.t4);
  add_identity(report, "t1^2 - a t2^2 = b", g.t1 * g.t1 - a * g.t2 * g.t2, RatFunc(spec.b));
  add_identity(report, "t3^2 - a t4^2 = 2c t1 + d", g.t3 * g.t3 - a * g.t4 * g.t4,
               RatFunc(Rational(2) * spec.c) * g.t1 + RatFunc(spec.d));
  add_identity(report, "x = t1 + sqrt(a) t2", g.t1 + sqrt_a(spec.a) * g.t2, x);
  add_identity(report, "y = t3 + sqrt(a) t4", g.t3 + sqrt_a(spec.a) * g.t4, y);
  return report;
}

Report verify_proof_chain_nonsquare(const SurfaceSpec& spec, const Rational& alpha, const Rational& beta) {
  spec.validate();
  if (is_square(spec.b)) throw InvalidArgument("b is a square; use the square-b chain");
  if (alpha * alpha - spec.a * beta * beta != spec.b) {
    throw InvalidArgument("(alpha, beta) does not satisfy alpha^2 - a*beta^2 = b");
  }
  const SigmaAction act(spec);
  const GeneratorSet g = build_generators(spec);
  const RatFunc a(spec.a);
  const RatFunc al(alpha);
  const RatFunc be(beta);
  const RatFunc c(spec.c);
  const RatFunc d(spec.d);
  const RatFunc one(1);
  const RatFunc two(2);
  const RatFunc root = sqrt_a(spec.a);
  Report report;

  const RatFunc t0 = (g.t2 - be) / (g.t1 + al);
  const RatFunc q = one - a * t0 * t0;
  add_identity(report, "(1 - a t0^2) t1 = alpha(1 + a t0^2) + 2a beta t0", q * g.t1,
               al * (one + a * t0 * t0) + two * a * be * t0);
  add_identity(report, "(1 - a t0^2) t2 = beta(1 + a t0^2) + 2 alpha t0", q * g.t2,
               be * (one + a * t0 * t0) + two * al * t0);
  const RatFunc n34 = g.t3 * g.t3 - a * g.t4 * g.t4;
  const RatFunc two_c_alpha = two * c * al;
  const RatFunc rhs = a * (two_c_alpha - d) * t0 * t0 + RatFunc(4) * a * c * be * t0 + (two_c_alpha + d);
  add_identity(report, "(t3^2 - a t4^2)(1 - a t0^2) = a(2c alpha - d) t0^2 + 4ac beta t0 + (2c alpha + d)", n34 * q,
               rhs);
  const RatFunc t5 = g.t3 + a * t0 * g.t4;
  const RatFunc t6 = t0 * g.t3 + g.t4;
  add_identity(report, "(t3^2 - a t4^2)(1 - a t0^2) = t5^2 - a t6^2", n34 * q, t5 * t5 - a * t6 * t6);

  const RatFunc x = var("x");
  const RatFunc y = var("y");
  const RatFunc s = x / (al - root * be);
  const RatFunc z = root * (one - s) / (one + s);
  const RatFunc u = y * (one - z * z / a);
  const RatFunc w = u / (one - z / root);
  add_identity(report, "sigma(z) = z", apply_sigma(z, act), z);
  const RatFunc f = two_c_alpha * (one - z.pow(4) / (a * a)) + d * (one - z * z / a).pow(2) +
                    RatFunc(4) * c * be * z * (one - z * z / a);
  add_identity(report, "sigma(u) = f(z)/u", apply_sigma(u, act), f / u);
  const RatFunc gz = ((two_c_alpha - d) / a) * z * z + RatFunc(4) * c * be * z + (two_c_alpha + d);
  add_identity(report, "sigma(w) = g(z)/w", apply_sigma(w, act), gz / w);

  // Q(sqrt(a))(x, y) = Q(sqrt(a))(z, w).
  const RatFunc zv = var("z");
  const RatFunc wv = var("w");
  const RatFunc s_of = (root - zv) / (root + zv);
  const RatFunc x_of = s_of * (al - root * be);
  const RatFunc y_of = wv * (one - zv / root) / (one - zv * zv / a);
  const Bindings back{{"z", z}, {"w", w}};
  add_identity(report, "x(z, w) = x", x_of.substitute(back), x);
  add_identity(report, "y(z, w) = y", y_of.substitute(back), y);
  return report;
}

Report verify_proof_chain_square(const SurfaceSpec& spec, const Rational& beta) {
  spec.validate();
  if (beta.is_zero() || beta * beta != spec.b) throw InvalidArgument("beta must be a nonzero square root of b");
  const SigmaAction act(spec);
  const RatFunc a(spec.a);
  const RatFunc be(beta);
  const RatFunc c(spec.c);
  const RatFunc d(spec.d);
  const RatFunc two(2);
  const RatFunc root = sqrt_a(spec.a);
  const RatFunc x = var("x");
  const RatFunc y = var("y");
  Report report;

  const RatFunc u = root * (be - x) / (be + x);
  const RatFunc v = (root - u) * y;
  add_identity(report, "sigma(u) = u", apply_sigma(u, act), u);
  const RatFunc lead = d - two * c * be;
  add_identity(report, "sigma(v) = ((d - 2c beta) u^2 - (ad + 2ac beta))/v", apply_sigma(v, act),
               (lead * u * u - (a * d + two * a * c * be)) / v);
  // Informational: decides which symbol governs rationality.
  add(report, "u^2 coefficient d - 2c beta", true, lead.is_zero() ? "zero (flagged)" : "nonzero");

  const RatFunc uv = var("u");
  const RatFunc vv = var("v");
  const Bindings back{{"u", u}, {"v", v}};
  const RatFunc x_of = be * (root - uv) / (root + uv);
  const RatFunc y_of = vv / (root - uv);
  add_identity(report, "x(u, v) = x", x_of.substitute(back), x);
  add_identity(report, "y(u, v) = y", y_of.substitute(back), y);
  return report;
}

Report verify_norm_identity() {
  const RatFunc a = var("a");
  const RatFunc x1 = var("x1");
  const RatFunc x2 = var("x2");
  const RatFunc y1 = var("y1");
  const RatFunc y2 = var("y2");
  const RatFunc nx = x1 * x1 - a * x2 * x2;
  const RatFunc ny = y1 * y1 - a * y2 * y2;
  Report report;
  const RatFunc p = x1 * y1 + a * x2 * y2;
  const RatFunc q = x1 * y2 + x2 * y1;
  add_identity(report, "product of norms", nx * ny, p * p - a * q * q);
  const RatFunc r = (x1 * y1 - a * x2 * y2) / ny;
  const RatFunc s = (x1 * y2 - x2 * y1) / ny;
  add_identity(report, "quotient of norms", nx / ny, r * r - a * s * s);
  return report;
}

}  // namespace fixedrat

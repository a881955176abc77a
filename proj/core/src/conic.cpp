// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/solver/conic.hpp"

#include <algorithm>
#include <stdexcept>

#include "fixedrat/errors.hpp"
#include "fixedrat/symbols/hilbert.hpp"

namespace fixedrat {

namespace {

constexpr int kMaxDescentDepth = 256;

void poll(const std::stop_token& stop) {
  if (stop.stop_requested()) throw Cancelled();
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::logic_error("modular inverse does not exist");
  }
  return inv;
}

// Root of t^2 = a modulo a squarefree m > 1 by CRT over the prime factors.
std::optional<Integer> sqrt_mod_squarefree(const Integer& a, const Integer& m, const FactorConfig& config) {
  Integer x = 0;
  Integer modulus = 1;
  for (const auto& [p, e] : factor(m, config).factors) {
    const auto r = sqrt_mod_prime(a, p);
    if (!r) return std::nullopt;
    // x <- x + modulus * ((r - x) * modulus^-1 mod p)
    Integer k = ((*r - x) * mod_inverse(modulus, p)) % p;
    if (k < 0) k += p;
    x += modulus * k;
    modulus *= p;
  }
  return x;
}

struct Descent {
  const SolverConfig& config;
  const std::stop_token& stop;

  // Solves x^2 - a*y^2 = b for squarefree integers a, b.
  std::optional<ConicSolution> run(const Integer& a, const Integer& b, int depth) const {
    poll(stop);
    if (depth > kMaxDescentDepth) return std::nullopt;
    if (b == 1) return ConicSolution{1, 0};
    if (a == 1) return ConicSolution{Rational(b + 1, 2), Rational(b - 1, 2)};
    if (abs(a) > abs(b)) {
      // X^2 - b*Y^2 = a  =>  (X/Y)^2 - a*(1/Y)^2 = b.
      auto swapped = run(b, a, depth + 1);
      if (!swapped || swapped->beta.is_zero()) return std::nullopt;
      return ConicSolution{swapped->alpha / swapped->beta, swapped->beta.inverse()};
    }
    const Integer modulus = abs(b);
    if (modulus > Integer(static_cast<unsigned long>(config.descent_height))) return std::nullopt;
    auto root = sqrt_mod_squarefree(a, modulus, config.factor);
    if (!root) return std::nullopt;
    Integer t = *root;
    if (2 * t > modulus) t -= modulus;
    // t^2 - a = b * b',  |b'| < |b|.
    const Integer next = (t * t - a) / b;
    if (next == 0) return std::nullopt;
    const Integer core = squarefree_part(next, config.factor);
    const Integer scale = isqrt(next / core);
    auto sub = run(a, core, depth + 1);
    if (!sub) return std::nullopt;
    // x + y*sqrt(a) = (t + sqrt(a)) (X - Y sqrt(a)) / (core * scale)
    const Rational denom(Integer(core * scale));
    return ConicSolution{(Rational(t) * sub->alpha - Rational(a) * sub->beta) / denom,
                         (sub->alpha - Rational(t) * sub->beta) / denom};
  }
};

// Height-ordered search for X^2 = A*Y^2 + B*Z^2 with Z != 0.
std::optional<std::pair<Integer, Integer>> exhaustive_norm_search(const Integer& a, const Integer& b, Integer& x,
                                                                  const SolverConfig& config,
                                                                  const std::stop_token& stop) {
  for (std::uint64_t h = 1; h <= config.fallback_height; ++h) {
    poll(stop);
    const Integer hh(static_cast<unsigned long>(h));
    // Pairs with max(|Y|, Z) = h, Y >= 0, Z >= 1.
    for (std::uint64_t k = 0; k <= h; ++k) {
      const Integer kk(static_cast<unsigned long>(k));
      for (const auto& [y, z] : {std::pair{kk, hh}, std::pair{hh, kk}}) {
        if (z == 0) continue;
        if (k == h && y != hh) continue;
        const Integer value = a * y * y + b * z * z;
        if (is_perfect_square(value)) {
          x = isqrt(value);
          return std::pair{y, z};
        }
      }
    }
  }
  return std::nullopt;
}

bool satisfies(const ConicSolution& s, const Rational& a, const Rational& b) {
  return s.alpha * s.alpha - a * s.beta * s.beta == b;
}

std::optional<ConicSolution> solve_impl(const Rational& a, const Rational& b, const SolverConfig& config,
                                        const std::stop_token& stop) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("norm equation needs nonzero a and b");
  if (auto r = is_square(a)) {
    // (x - r y)(x + r y) = b
    const Rational& root = *r;
    return ConicSolution{(b + 1) / 2, (b - 1) / (Rational(2) * root)};
  }
  if (!global_hilbert(a, b, config.factor).split()) return std::nullopt;

  // a = core_a * (sa/den_a)^2, b = core_b * (sb/den_b)^2.
  const Integer a_int = square_class_integer(a);
  const Integer b_int = square_class_integer(b);
  const Integer core_a = squarefree_part(a_int, config.factor);
  const Integer core_b = squarefree_part(b_int, config.factor);
  const Rational sa = Rational(isqrt(a_int / core_a), a.den());
  const Rational sb = Rational(isqrt(b_int / core_b), b.den());

  Descent descent{config, stop};
  if (auto s = descent.run(core_a, core_b, 0)) {
    ConicSolution out{sb * s->alpha, sb * s->beta / sa};
    if (satisfies(out, a, b)) return out;
  }

  Integer x;
  if (auto found = exhaustive_norm_search(a_int, b_int, x, config, stop)) {
    const auto& [y, z] = *found;
    // x^2 - a (den_a y)^2 = b (den_b z)^2
    const Rational scale = Rational(Integer(b.den() * z)).inverse();
    ConicSolution out{Rational(x) * scale, Rational(Integer(a.den() * y)) * scale};
    if (satisfies(out, a, b)) return out;
  }
  throw SearchBudgetExceeded("norm equation x^2 - (" + a.to_string() + ")y^2 = " + b.to_string() +
                             " is solvable but descent and fallback both gave up");
}

template <std::size_t N>
void check_diagonal(const std::array<Rational, N>& coeffs) {
  bool pos = false;
  bool neg = false;
  for (const auto& q : coeffs) {
    if (q.is_zero()) throw InvalidArgument("diagonal form with a zero coefficient");
    (q.sign() > 0 ? pos : neg) = true;
  }
  if (!(pos && neg)) throw InvalidArgument("definite diagonal form has no nontrivial zero");
}

// Primitive integer vector on the same projective point.
template <std::size_t N>
std::array<Integer, N> primitive(const std::array<Rational, N>& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, q.den());
  std::array<Integer, N> out;
  Integer g = 0;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = (v[i] * Rational(l)).num();
    g = gcd(g, out[i]);
  }
  int sign = 0;
  for (const auto& x : out) {
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  }
  if (g != 0) {
    for (auto& x : out) x = x / g * sign;
  }
  return out;
}

// Residues q*s^2 mod m, as a bitmask.
std::uint32_t residue_mask(const Integer& q, unsigned m) {
  std::uint32_t mask = 0;
  const unsigned long qm = mpz_fdiv_ui(q.get_mpz_t(), m);
  for (unsigned s = 0; s < m; ++s) mask |= 1U << ((qm * s * s) % m);
  return mask;
}

std::optional<QuadricPoint> sieved_search(const std::array<Integer, 4>& c, const SolverConfig& config,
                                          const std::stop_token& stop) {
  static constexpr unsigned kModuli[4] = {8, 9, 5, 7};
  std::array<std::uint32_t, 4> masks{};
  std::array<std::array<unsigned long, 3>, 4> cm{};
  for (int k = 0; k < 4; ++k) {
    masks[k] = residue_mask(c[3], kModuli[k]);
    for (int i = 0; i < 3; ++i) cm[k][i] = mpz_fdiv_ui(c[i].get_mpz_t(), kModuli[k]);
  }
  auto passes = [&](unsigned long x, unsigned long y, unsigned long z) {
    for (int k = 0; k < 4; ++k) {
      const unsigned long m = kModuli[k];
      const unsigned long v = (cm[k][0] * (x * x % m) + cm[k][1] * (y * y % m) + cm[k][2] * (z * z % m)) % m;
      // -v must be in q4 * squares.
      if ((masks[k] & (1U << ((m - v) % m))) == 0) return false;
    }
    return true;
  };
  Integer value;
  Integer w2;
  for (std::uint64_t h = 1; h <= config.quadric_height; ++h) {
    poll(stop);
    // Triples in [0, h]^3 with max = h, lexicographic.
    for (unsigned long x = 0; x <= h; ++x) {
      for (unsigned long y = 0; y <= h; ++y) {
        for (unsigned long z = 0; z <= h; ++z) {
          if (x != h && y != h && z != h) continue;
          if (!passes(x, y, z)) continue;
          value = -(c[0] * x * x + c[1] * y * y + c[2] * z * z);
          if (mpz_divisible_p(value.get_mpz_t(), c[3].get_mpz_t()) == 0) continue;
          w2 = value / c[3];
          if (!is_perfect_square(w2)) continue;
          return primitive<4>({Rational(Integer(x)), Rational(Integer(y)), Rational(Integer(z)), Rational(isqrt(w2))});
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<QuadricPoint> fiber_search(const std::array<Integer, 4>& c, const SolverConfig& config,
                                         const std::stop_token& stop) {
  const Rational c1(c[0]);
  const Rational c2(c[1]);
  const Rational ratio = -Rational(c[1]) / c1;
  for (std::uint64_t h = 1; h <= config.quadric_height; ++h) {
    poll(stop);
    for (std::uint64_t k = 0; k <= h; ++k) {
      for (const auto& [z, w] : {std::pair{k, h}, std::pair{h, k}}) {
        if (k == h && z != w) continue;
        const Rational zz(Integer(static_cast<unsigned long>(z)));
        const Rational ww(Integer(static_cast<unsigned long>(w)));
        const Rational m = -(Rational(c[2]) * zz * zz + Rational(c[3]) * ww * ww);
        std::optional<std::array<Rational, 2>> xy;
        if (m.is_zero()) {
          if (auto r = is_square(ratio)) xy = std::array<Rational, 2>{*r, 1};
        } else if (auto s = solve_impl(ratio, m / c1, config, stop)) {
          xy = std::array<Rational, 2>{s->alpha, s->beta};
        }
        if (!xy) continue;
        return primitive<4>({(*xy)[0], (*xy)[1], zz, ww});
      }
    }
  }
  return std::nullopt;
}

RatFunc build_map(const MultiPoly& num, const MultiPoly& den) { return RatFunc(num, den); }

// Projection from `center` on the diagonal form sum q_i X_i^2, dehomogenized
// by the last coordinate.
RationalParametrization project(const std::vector<Rational>& q, const std::vector<Rational>& center,
                                const std::vector<std::string>& params, const std::vector<std::string>& coords) {
  const std::size_t n = q.size();
  Rational at_center = 0;
  for (std::size_t i = 0; i < n; ++i) at_center += q[i] * center[i] * center[i];
  if (!at_center.is_zero()) throw InvalidArgument("projection center is not on the quadric");

  for (std::size_t fixed = 0; fixed < n; ++fixed) {
    if (center[fixed].is_zero()) continue;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != fixed) free.push_back(j);
    }
    for (std::size_t one = 0; one < free.size(); ++one) {
      std::vector<MultiPoly> dir(n);
      std::size_t next_param = 0;
      for (std::size_t k = 0; k < free.size(); ++k) {
        dir[free[k]] = k == one ? MultiPoly(1) : MultiPoly::variable(params[next_param++]);
      }
      MultiPoly form;
      MultiPoly bilinear;
      for (std::size_t j = 0; j < n; ++j) {
        form += dir[j] * dir[j] * MultiPoly(q[j]);
        bilinear += dir[j] * MultiPoly(q[j] * center[j]);
      }
      std::vector<MultiPoly> image(n);
      for (std::size_t j = 0; j < n; ++j) image[j] = form * MultiPoly(center[j]) - MultiPoly(2) * bilinear * dir[j];
      if (image[n - 1].is_zero()) continue;

      RationalParametrization out;
      out.parameters = params;
      out.base_point = center;
      bool varies = false;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        RatFunc f = build_map(image[j], image[n - 1]);
        varies = varies || !f.is_constant();
        out.maps.emplace_back(coords[j], std::move(f));
      }
      if (!varies) continue;
      RatFunc check = RatFunc(q[n - 1]);
      for (std::size_t j = 0; j + 1 < n; ++j) check += RatFunc(q[j]) * out.maps[j].second * out.maps[j].second;
      if (!check.is_zero()) throw VerificationFailure("stereographic map does not satisfy the quadric");
      return out;
    }
  }
  throw DegenerateCenter("every projection chart is degenerate for this center");
}

}  // namespace

std::optional<ConicSolution> solve_norm_equation(const Rational& a, const Rational& b, const SolverConfig& config,
                                                 std::stop_token stop) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("norm equation needs nonzero a and b");
  if (is_square(a)) throw InvalidArgument("norm equation needs a nonsquare a, got " + a.to_string());
  return solve_impl(a, b, config, stop);
}

std::optional<ConicSolution> solve_binary_norm(const Rational& a, const Rational& b, const SolverConfig& config,
                                               std::stop_token stop) {
  return solve_impl(a, b, config, stop);
}

QuadricSpec::QuadricSpec(std::array<Rational, 4> coeffs) : coeffs_(std::move(coeffs)) { check_diagonal(coeffs_); }

Rational QuadricSpec::evaluate(const std::array<Rational, 4>& p) const {
  Rational v = 0;
  for (std::size_t i = 0; i < 4; ++i) v += coeffs_[i] * p[i] * p[i];
  return v;
}

ConicSpec::ConicSpec(std::array<Rational, 3> coeffs) : coeffs_(std::move(coeffs)) { check_diagonal(coeffs_); }

Rational ConicSpec::evaluate(const std::array<Rational, 3>& p) const {
  Rational v = 0;
  for (std::size_t i = 0; i < 3; ++i) v += coeffs_[i] * p[i] * p[i];
  return v;
}

namespace {

bool is_padic_square(Integer n, const Integer& p) {
  unsigned v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  if (v % 2 != 0) return false;
  if (p == 2) return mpz_fdiv_ui(n.get_mpz_t(), 8) == 1;
  return kronecker(n, p) == 1;
}

// A nondegenerate quaternary form over Q_p is anisotropic exactly when its
// discriminant is a square and its Hasse invariant differs from (-1,-1)_p.
bool locally_isotropic_everywhere(const std::array<Integer, 4>& c, const FactorConfig& config) {
  const Integer disc = c[0] * c[1] * c[2] * c[3];
  for (const Place& v : candidate_places(Rational(Integer(c[0] * c[1])), Rational(Integer(c[2] * c[3])), config)) {
    if (v.is_real()) continue;
    if (!is_padic_square(disc, v.prime())) continue;
    int hasse = 1;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) hasse *= local_hilbert(Rational(c[i]), Rational(c[j]), v);
    }
    if (hasse != local_hilbert(-1, -1, v)) return false;
  }
  return true;
}

}  // namespace

std::optional<QuadricPoint> find_quadric_point(const QuadricSpec& quadric, const SolverConfig& config,
                                               std::stop_token stop) {
  const std::array<Integer, 4> c = primitive<4>(quadric.coeffs());
  if (!locally_isotropic_everywhere(c, config.factor)) return std::nullopt;
  std::optional<QuadricPoint> found = sieved_search(c, config, stop);
  if (!found) found = fiber_search(c, config, stop);
  if (found) {
    std::array<Rational, 4> p;
    for (std::size_t i = 0; i < 4; ++i) p[i] = Rational((*found)[i]);
    if (!quadric.evaluate(p).is_zero()) throw VerificationFailure("quadric point check failed");
  }
  return found;
}

const RatFunc& RationalParametrization::map(std::string_view coordinate) const {
  for (const auto& [name, f] : maps) {
    if (name == coordinate) return f;
  }
  throw std::out_of_range("no map for coordinate " + std::string(coordinate));
}

SurfaceParam stereographic_parametrize(const QuadricSpec& quadric, const std::array<Rational, 4>& center,
                                       const std::array<std::string, 2>& parameters,
                                       const std::array<std::string, 3>& coordinates) {
  const auto& q = quadric.coeffs();
  return project({q.begin(), q.end()}, {center.begin(), center.end()}, {parameters.begin(), parameters.end()},
                 {coordinates.begin(), coordinates.end()});
}

RationalParametrization parametrize_conic(const ConicSpec& conic, const std::array<Rational, 3>& center,
                                          const std::string& parameter,
                                          const std::array<std::string, 2>& coordinates) {
  const auto& q = conic.coeffs();
  return project({q.begin(), q.end()}, {center.begin(), center.end()}, {parameter},
                 {coordinates.begin(), coordinates.end()});
}

}  // namespace fixedrat

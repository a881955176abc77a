// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.  Every criterion runs at its stated size; nothing is
// sampled down.
//
// Criterion 6 uses a brute-force search over Z[sqrt(m)] with coordinate
// height h.  On the full corpus (|a|, |b| <= 20, |m| <= 15) every split
// triple is found by h = 11 (e.g. lower heights miss 17 triples at h = 5)
// and no nonsplit triple is ever found.  The cap is fixed one above the
// observed stabilizing height, which is printed on each run.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "fixedrat/decide/decider.hpp"
#include "fixedrat/errors.hpp"
#include "fixedrat/verify/sigma.hpp"
#include "oracles.hpp"

namespace {

using namespace fixedrat;
using fixedrat::testing::is_square_int;
using fixedrat::testing::is_squarefree;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::set<long> with_status(const std::vector<ScanEntry>& table, ScanStatus status) {
  std::set<long> out;
  for (const auto& e : table) {
    if (e.status == status) out.insert(e.c);
  }
  return out;
}

const std::set<long> kScan22NotRational{13, 19, 26, 37, 38, 39, 43, 52, 57, 61, 65, 67, 74, 76, 78, 86, 91, 95};
const std::set<long> kScan23Rational{3,  5,  6,  10, 12, 13, 19, 20, 21, 24, 26, 27, 35, 38, 40, 42, 45, 48,
                                     51, 52, 54, 59, 61, 69, 70, 75, 76, 80, 83, 84, 85, 90, 91, 93, 96};

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const auto table = scan(scan_family("ex22"));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto bad = with_status(table, ScanStatus::not_rational);
  std::ostringstream os;
  os << bad.size() << " non-rational values, " << secs << " s";
  return {table.size() == 100 && bad == kScan22NotRational && with_status(table, ScanStatus::error).empty() &&
              secs < 10.0,
          os.str()};
}

Outcome criterion2() {
  const auto table = scan(scan_family("ex23"));
  std::set<long> expected;
  for (long c : kScan23Rational) {
    expected.insert(c);
    expected.insert(-c);
  }
  const auto good = with_status(table, ScanStatus::rational);
  const auto skipped = with_status(table, ScanStatus::skipped);
  std::ostringstream os;
  os << good.size() << " rational values, skipped c = " << (skipped.size() == 1 ? *skipped.begin() : 999);
  return {table.size() == 201 && good == expected && skipped == std::set<long>{0} &&
              with_status(table, ScanStatus::error).empty(),
          os.str()};
}

Outcome criterion3() {
  const SurfaceSpec spec{3, 4, 7, 28};
  const bool not_rational = decide(spec).verdict == Verdict::not_rational;
  const auto point = point_on_X(spec);
  const bool point_ok = point && point->satisfies(spec);
  int checked = 0;
  bool all_ramified = true;
  for (long m = 2; m <= 200; m += 3) {
    all_ramified = all_ramified && !global_hilbert(3, m).split();
    ++checked;
  }
  std::ostringstream os;
  os << "verdict " << (not_rational ? "not_rational" : "rational") << ", point "
     << (point ? "(" + point->alpha.to_string() + "," + point->beta.to_string() + "," + point->gamma.to_string() +
                     "," + point->delta.to_string() + ")"
               : std::string("none"))
     << ", (3,m) ramified for " << checked << " values m = 2 mod 3";
  return {not_rational && point_ok && all_ramified, os.str()};
}

Outcome criterion4() {
  std::mt19937_64 rng(20261017);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const Rational a = testing::random_rational(rng, 1000, true);
    const Rational b = testing::random_rational(rng, 1000, true);
    int product = 1;
    for (const Place& v : candidate_places(a, b)) product *= local_hilbert(a, b, v);
    failures += product != 1;
  }
  return {failures == 0, "1000 pairs, " + std::to_string(failures) + " violations"};
}

// Pairs for criteria 5 and 10.
template <typename F>
void for_each_small_pair(F&& f) {
  for (long a = -30; a <= 30; ++a) {
    if (a == 0 || is_square_int(a)) continue;
    for (long b = -30; b <= 30; ++b) {
      if (b != 0) f(a, b);
    }
  }
}

Outcome criterion5() {
  int pairs = 0;
  int ternary_mismatch = 0;
  int quaternary_mismatch = 0;
  for_each_small_pair([&](long a, long b) {
    const bool split = global_hilbert(a, b).split();
    const bool ternary = testing::ternary_isotropic(a, b, 200);
    const bool quaternary = testing::quaternary_isotropic(a, b, 40);
    ternary_mismatch += split != ternary;
    quaternary_mismatch += ternary != quaternary;
    ++pairs;
  });
  std::ostringstream os;
  os << pairs << " pairs; symbol vs ternary mismatches " << ternary_mismatch << ", ternary vs quaternary mismatches "
     << quaternary_mismatch << " (heights 200 / 40)";
  return {ternary_mismatch == 0 && quaternary_mismatch == 0, os.str()};
}

constexpr long kExtHeightCap = 12;

Outcome criterion6() {
  // The symbol only depends on square classes, so search each class once.
  std::vector<long> ms;
  for (long m = -15; m <= 15; ++m) {
    if (m != 1 && is_squarefree(m)) ms.push_back(m);
  }
  std::set<std::tuple<long, long, long>> triples;
  for (long a = -20; a <= 20; ++a) {
    for (long b = -20; b <= 20; ++b) {
      if (a == 0 || b == 0) continue;
      const long sa = squarefree_part(a).get_si();
      const long sb = squarefree_part(b).get_si();
      for (long m : ms) triples.emplace(std::min(sa, sb), std::max(sa, sb), m);
    }
  }
  int unsound = 0;
  int missed = 0;
  long stabilizing = 0;
  for (const auto& [a, b, m] : triples) {
    const bool zero = ext_hilbert(a, b, squarefree_core(m)).zero;
    long found_at = 0;
    if (zero) {
      for (long h = 1; h <= kExtHeightCap && found_at == 0; ++h) {
        if (testing::ext_split_search(a, b, m, h)) found_at = h;
      }
    } else if (testing::ext_split_search(a, b, m, kExtHeightCap)) {
      found_at = kExtHeightCap;
    }
    if (found_at > 0 && !zero) ++unsound;
    if (found_at == 0 && zero) ++missed;
    if (zero) stabilizing = std::max(stabilizing, found_at);
  }
  std::ostringstream os;
  os << triples.size() << " square-class triples (" << 40 * 40 * ms.size() << " raw); unsound " << unsound
     << ", unfound " << missed << "; stabilizing height " << stabilizing;
  return {unsound == 0 && missed == 0, os.str()};
}

// Exact evaluation at a few rational parameter values, independent of the
// symbolic identity test.
bool param_spot_check(const SurfaceSpec& spec, const SurfaceParam& param) {
  int hits = 0;
  for (long u = 1; u <= 4 && hits < 2; ++u) {
    for (long v = -2; v <= 2 && hits < 2; ++v) {
      const Bindings at{{"u", RatFunc(Rational(u, 3))}, {"v", RatFunc(Rational(v, 5))}};
      std::array<Rational, 4> t;
      try {
        for (int i = 0; i < 4; ++i) {
          const RatFunc value = param.map("t" + std::to_string(i + 1)).substitute(at);
          t[i] = value.numerator().constant_value().base();
        }
      } catch (const DivisionByZero&) {
        continue;
      }
      if (t[0] * t[0] - spec.a * t[1] * t[1] != spec.b) return false;
      if (t[2] * t[2] - spec.a * t[3] * t[3] != Rational(2) * spec.c * t[0] + spec.d) return false;
      ++hits;
    }
  }
  return hits > 0;
}

Outcome criterion7() {
  std::vector<SurfaceSpec> corpus;
  for (const char* family : {"ex22", "ex23"}) {
    const ScanRequest req = scan_family(family);
    for (long c = req.c_lo; c <= req.c_hi; ++c) {
      if (c != 0) corpus.push_back({req.a, req.b, Rational(c), req.d_rule.apply(Rational(c))});
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) corpus.push_back(testing::random_spec(rng, 25));

  DecideOptions options;
  options.certify = true;
  int certificates = 0;
  int points = 0;
  int failures = 0;
  for (const auto& spec : corpus) {
    const Decision d = decide(spec, options);
    if (d.verdict != Verdict::rational) continue;
    const auto& cert = std::get<RationalCertificate>(d.certificate);
    ++certificates;
    if (cert.point) {
      ++points;
      failures += !cert.point->satisfies(spec);
    }
    failures += !cert.parametrization || !parametrization_satisfies(spec, *cert.parametrization) ||
                !param_spot_check(spec, *cert.parametrization);
  }
  std::ostringstream os;
  os << certificates << " rational certificates (" << points << " with points) over " << corpus.size()
     << " specs; " << failures << " failures";
  return {failures == 0 && certificates > 0, os.str()};
}

Outcome criterion8() {
  int failures = all_passed(verify_norm_identity()) ? 0 : 1;
  std::mt19937_64 rng(88);
  for (int i = 0; i < 200; ++i) failures += !all_passed(verify_involution_and_invariance(testing::random_spec(rng, 20)));
  int nonsquare = 0;
  while (nonsquare < 50) {
    const SurfaceSpec spec = testing::random_spec(rng, 20);
    if (is_square(spec.b)) continue;
    const auto s = solve_norm_equation(spec.a, spec.b);
    if (!s) continue;
    failures += !all_passed(verify_proof_chain_nonsquare(spec, s->alpha, s->beta));
    ++nonsquare;
  }
  std::uniform_int_distribution<long> beta_dist(-12, 12);
  int square = 0;
  while (square < 50) {
    SurfaceSpec spec = testing::random_spec(rng, 20);
    const long beta = beta_dist(rng);
    if (beta == 0) continue;
    spec.b = Rational(beta * beta);
    failures += !all_passed(verify_proof_chain_square(spec, beta));
    ++square;
  }
  return {failures == 0, "1 identity + 200 involution + 50 nonsquare + 50 square reports; " +
                             std::to_string(failures) + " with failures"};
}

Outcome criterion9() {
  std::mt19937_64 rng(99);
  int specs = 0;
  int disagreements = 0;
  while (specs < 50) {
    const SurfaceSpec spec = testing::random_spec(rng, 30);
    if (is_square(spec.b) || !global_hilbert(spec.a, spec.b).split()) continue;
    const Verdict v = decide(spec).verdict;
    const auto base = solve_norm_equation(spec.a, spec.b);
    const auto orbit = testing::norm_orbit(spec.a, *base, 20);
    for (const auto& s : orbit) disagreements += verdict_from_solution(spec, s) != v;
    ++specs;
  }
  return {disagreements == 0, "50 specs x 20 solutions; " + std::to_string(disagreements) + " disagreements"};
}

Outcome criterion10() {
  int budget_errors = 0;
  int wrong = 0;
  int pairs = 0;
  for_each_small_pair([&](long a, long b) {
    try {
      const auto s = solve_norm_equation(a, b);
      wrong += s.has_value() != global_hilbert(a, b).split();
    } catch (const SearchBudgetExceeded&) {
      ++budget_errors;
    }
    ++pairs;
  });
  int scan_errors = 0;
  for (const char* family : {"ex22", "ex23"}) {
    scan_errors += static_cast<int>(with_status(scan(scan_family(family)), ScanStatus::error).size());
  }
  std::ostringstream os;
  os << pairs << " norm equations: " << budget_errors << " budget errors, " << wrong << " wrong; scan errors "
     << scan_errors;
  return {budget_errors == 0 && wrong == 0 && scan_errors == 0, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 scan (2,1,c,c), 1<=c<=100: exact non-rational set, < 10 s", criterion1},
      {"2 scan (2,2,c,c), -100<=c<=100: exact rational set", criterion2},
      {"3 (3,4,7,28) not rational with a point; (3,m) ramified for m = 2 mod 3", criterion3},
      {"4 product formula on 1000 random pairs", criterion4},
      {"5 symbol vs ternary/quaternary brute force, |a|,|b| <= 30", criterion5},
      {"6 base-change symbol vs search over Q(sqrt m)", criterion6},
      {"7 certificate soundness", criterion7},
      {"8 symbolic verification suite", criterion8},
      {"9 verdict independent of the norm solution", criterion9},
      {"10 solver completeness at desk scale", criterion10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << out.detail << "] (" << secs
              << " s)" << std::endl;
    failed += !out.pass;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}

// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

// fixedrat: decide, certify and verify rationality of the fixed fields
// Q(sqrt(a))(x, y)^sigma from the command line.
//
// Exit codes: decide/certify/multi/tori 0 rational, 1 not rational;
// verify 0 all checks pass, 1 some check failed; hilbert and scan 0.
// Any invalid input or internal error exits with 2.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fixedrat/errors.hpp"
#include "fixedrat/io/json.hpp"

namespace {

using fixedrat::Rational;
using nlohmann::json;

constexpr int kExitError = 2;

struct Options {
  std::string format = "json";
  fixedrat::SolverConfig solver;
};

void env_override(const char* name, std::uint64_t& target) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return;
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(value, &used);
    if (used != std::string(value).size() || parsed == 0) throw std::invalid_argument(name);
    target = parsed;
  } catch (const std::exception&) {
    throw fixedrat::ParseError(std::string("bad value for ") + name + ": " + value);
  }
}

void emit(const Options& opts, const json& j, const std::string& text) {
  if (opts.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string symbol_text(const fixedrat::SymbolCheck& s) {
  std::ostringstream os;
  os << "(" << s.a << ", " << s.b << ") over ";
  if (s.field_radicand) {
    os << "Q(sqrt(" << s.field_radicand->to_string() << "))";
  } else {
    os << "Q";
  }
  os << ": " << (s.value.zero ? "zero" : "nonzero");
  if (s.value.witness) os << ", witness place " << s.value.witness->to_string();
  return os.str();
}

std::string places_text(const fixedrat::RamificationSet& r) {
  if (r.places.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < r.places.size(); ++i) {
    if (i > 0) out += ", ";
    out += r.places[i].to_string();
  }
  return out + "}";
}

std::string decision_text(const fixedrat::Decision& d) {
  std::ostringstream os;
  os << "spec: a=" << d.spec.a << " b=" << d.spec.b << " c=" << d.spec.c << " d=" << d.spec.d << '\n';
  os << "verdict: " << to_string(d.verdict) << '\n';
  if (const auto* r = std::get_if<fixedrat::RationalCertificate>(&d.certificate)) {
    os << "route: " << to_string(r->route) << '\n';
    os << "norm solution: alpha=" << r->norm_solution.alpha << " beta=" << r->norm_solution.beta << '\n';
    if (r->point) {
      os << "point: (" << r->point->alpha << ", " << r->point->beta << ", " << r->point->gamma << ", "
         << r->point->delta << ")\n";
    }
    if (r->symbol) os << "symbol: " << symbol_text(*r->symbol) << '\n';
    if (r->parametrization) {
      for (const auto& [name, f] : r->parametrization->maps) os << name << " = " << f << '\n';
    }
  } else {
    const auto& n = std::get<fixedrat::NotRationalCertificate>(d.certificate);
    os << "failed condition: " << to_string(n.failed_condition) << '\n';
    if (n.symbol) os << "symbol: " << symbol_text(*n.symbol) << '\n';
    if (n.ramification) os << "ramified at: " << places_text(*n.ramification) << '\n';
  }
  for (const auto& note : d.notes) os << "note: " << note << '\n';
  return os.str();
}

std::string report_text(const fixedrat::Report& report) {
  std::ostringstream os;
  for (const auto& r : report) {
    os << (r.passed ? "pass  " : "FAIL  ") << r.check;
    if (!r.detail.empty()) os << "  [" << r.detail << "]";
    os << '\n';
  }
  return os.str();
}

struct SpecArgs {
  std::string a, b, c, d;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--a", a, "nonsquare radicand")->required();
    cmd->add_option("--b", b)->required();
    cmd->add_option("--c", c)->required();
    cmd->add_option("--d", d)->required();
  }
  fixedrat::SurfaceSpec spec() const {
    fixedrat::SurfaceSpec s{Rational::parse(a), Rational::parse(b), Rational::parse(c), Rational::parse(d)};
    s.validate();
    return s;
  }
};

std::pair<long, long> parse_range(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw fixedrat::ParseError("range must look like lo:hi, got " + text);
  try {
    std::size_t u1 = 0;
    std::size_t u2 = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    const long l = std::stol(lo, &u1);
    const long h = std::stol(hi, &u2);
    if (u1 != lo.size() || u2 != hi.size()) throw std::invalid_argument(text);
    return {l, h};
  } catch (const std::exception&) {
    throw fixedrat::ParseError("bad range: " + text);
  }
}

int run(int argc, char** argv) {
  Options opts;
  env_override("FIXEDRAT_DESCENT_HEIGHT", opts.solver.descent_height);
  env_override("FIXEDRAT_FALLBACK_HEIGHT", opts.solver.fallback_height);
  env_override("FIXEDRAT_QUADRIC_HEIGHT", opts.solver.quadric_height);

  CLI::App app{"Rationality of fixed fields of Q(sqrt(a))(x, y) under a monomial-type involution"};
  app.require_subcommand(1);
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--descent-height", opts.solver.descent_height, "descent modulus bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--fallback-height", opts.solver.fallback_height, "exhaustive norm search height")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--quadric-height", opts.solver.quadric_height, "quaternary point search height")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  SpecArgs decide_args;
  auto* decide = app.add_subcommand("decide", "decide rationality of the fixed field");
  decide_args.add_to(decide);

  SpecArgs certify_args;
  auto* certify = app.add_subcommand("certify", "decide and, when rational, build a verified parametrization");
  certify_args.add_to(certify);

  std::string ha, hb, hm;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b) over Q or over Q(sqrt(m))");
  hilbert->alias("symbol");
  hilbert->add_option("--a", ha)->required();
  hilbert->add_option("--b", hb)->required();
  auto* ext_opt = hilbert->add_option("--ext", hm, "radicand m of the base field");

  std::string family = "custom", sa, sb, crange, drule = "c";
  unsigned jobs = 1;
  auto* scan = app.add_subcommand("scan", "decide over a range of c with d a function of c");
  scan->add_option("--family", family)->check(CLI::IsMember({"ex22", "ex23", "custom"}))->capture_default_str();
  scan->add_option("--a", sa);
  scan->add_option("--b", sb);
  scan->add_option("--c", crange, "range lo:hi");
  scan->add_option("--d", drule, "d as a function of c: c, -c, q*c, q*c+r, or a constant")->capture_default_str();
  scan->add_option("--jobs", jobs)->check(CLI::PositiveNumber)->capture_default_str();

  SpecArgs verify_args;
  std::string valpha, vbeta;
  auto* verify = app.add_subcommand("verify", "symbolic verification of the invariant generators and proof chains");
  verify_args.add_to(verify);
  auto* alpha_opt = verify->add_option("--alpha", valpha);
  auto* beta_opt = verify->add_option("--beta", vbeta);

  std::string ma;
  std::vector<std::string> mcomponents;
  auto* multi = app.add_subcommand("multi", "compositum of several surfaces sharing a");
  multi->add_option("--a", ma)->required();
  multi->add_option("--component", mcomponents, "b,c,d (repeatable)");

  std::string ta;
  std::vector<std::string> tbs;
  auto* tori = app.add_subcommand("tori", "product of norm-one tori s^2 - a t^2 = b_i");
  tori->add_option("--a", ta)->required();
  tori->add_option("--b", tbs, "b_i (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (*decide || *certify) {
    const SpecArgs& args = *decide ? decide_args : certify_args;
    fixedrat::DecideOptions options{opts.solver, static_cast<bool>(*certify)};
    const auto d = fixedrat::decide(args.spec(), options);
    emit(opts, json{{"schema", fixedrat::kSchemaVersion}, {"decision", d}}, decision_text(d));
    return d.verdict == fixedrat::Verdict::rational ? 0 : 1;
  }

  if (*hilbert) {
    const Rational a = Rational::parse(ha);
    const Rational b = Rational::parse(hb);
    if (a.is_zero() || b.is_zero()) throw fixedrat::InvalidArgument("a and b must be nonzero");
    if (*ext_opt) {
      const auto field = fixedrat::squarefree_core(Rational::parse(hm), opts.solver.factor);
      const auto s = fixedrat::ext_hilbert(a, b, field, opts.solver.factor);
      json j{{"schema", fixedrat::kSchemaVersion}, {"a", a}, {"b", b}, {"ext", hm}, {"symbol", s}};
      std::ostringstream os;
      os << "(" << a << ", " << b << ") over Q(sqrt(" << hm << ")): " << (s.zero ? "zero" : "nonzero");
      if (s.witness) os << ", witness place " << s.witness->to_string();
      if (s.degenerate_discriminant) os << " (field is Q)";
      os << '\n';
      emit(opts, j, os.str());
    } else {
      const auto r = fixedrat::global_hilbert(a, b, opts.solver.factor);
      json j{{"schema", fixedrat::kSchemaVersion}, {"a", a}, {"b", b},
             {"value", r.split() ? "zero" : "nonzero"}, {"ramification", r}};
      emit(opts, j,
           "(" + a.to_string() + ", " + b.to_string() + ") over Q: " + (r.split() ? "zero" : "nonzero") +
               ", ramified at " + places_text(r) + "\n");
    }
    return 0;
  }

  if (*scan) {
    fixedrat::ScanRequest request;
    if (family != "custom") {
      request = fixedrat::scan_family(family);
    } else {
      if (sa.empty() || sb.empty() || crange.empty()) {
        throw fixedrat::InvalidArgument("custom scan needs --a, --b and --c lo:hi");
      }
      request.a = Rational::parse(sa);
      request.b = Rational::parse(sb);
      std::tie(request.c_lo, request.c_hi) = parse_range(crange);
      request.d_rule = fixedrat::DRule::parse(drule);
    }
    const auto table = fixedrat::scan(request, jobs, {opts.solver, false});
    json summary{{"rational", json::array()}, {"not_rational", json::array()},
                 {"skipped", json::array()}, {"error", json::array()}};
    std::ostringstream os;
    for (const auto& e : table) {
      summary[to_string(e.status)].push_back(e.c);
      os << e.c << '\t' << to_string(e.status);
      if (!e.message.empty()) os << '\t' << e.message;
      os << '\n';
    }
    for (const char* key : {"rational", "not_rational"}) {
      os << key << " (" << summary[key].size() << "):";
      for (const auto& c : summary[key]) os << ' ' << c.get<long>();
      os << '\n';
    }
    json j{{"schema", fixedrat::kSchemaVersion},
           {"request",
            {{"family", family},
             {"a", request.a},
             {"b", request.b},
             {"c_lo", request.c_lo},
             {"c_hi", request.c_hi},
             {"d_slope", request.d_rule.slope},
             {"d_offset", request.d_rule.offset}}},
           {"entries", table},
           {"summary", summary}};
    emit(opts, j, os.str());
    return 0;
  }

  if (*verify) {
    const auto spec = verify_args.spec();
    fixedrat::Report report = fixedrat::verify_involution_and_invariance(spec);
    const auto root = fixedrat::is_square(spec.b);
    if (*alpha_opt || *beta_opt) {
      if (!*alpha_opt && root && *beta_opt) {
        auto chain = fixedrat::verify_proof_chain_square(spec, Rational::parse(vbeta));
        report.insert(report.end(), chain.begin(), chain.end());
      } else {
        if (!*alpha_opt || !*beta_opt) throw fixedrat::InvalidArgument("--alpha and --beta go together");
        auto chain = fixedrat::verify_proof_chain_nonsquare(spec, Rational::parse(valpha), Rational::parse(vbeta));
        report.insert(report.end(), chain.begin(), chain.end());
      }
    } else if (root) {
      auto chain = fixedrat::verify_proof_chain_square(spec, root->abs());
      report.insert(report.end(), chain.begin(), chain.end());
    }
    auto norm = fixedrat::verify_norm_identity();
    report.insert(report.end(), norm.begin(), norm.end());
    const bool ok = fixedrat::all_passed(report);
    emit(opts, json{{"schema", fixedrat::kSchemaVersion}, {"spec", spec}, {"all_passed", ok}, {"report", report}},
         report_text(report));
    return ok ? 0 : 1;
  }

  if (*multi) {
    const Rational a = Rational::parse(ma);
    std::vector<fixedrat::Component> comps;
    for (const auto& text : mcomponents) {
      std::vector<std::string> parts;
      std::stringstream ss(text);
      for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
      if (parts.size() != 3) throw fixedrat::ParseError("component must be b,c,d: " + text);
      comps.push_back({Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2])});
    }
    const auto d = fixedrat::decide_multi(a, comps, {opts.solver, false});
    std::ostringstream os;
    os << "verdict: " << to_string(d.verdict) << '\n';
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      os << "component " << i << ": " << to_string(d.components[i].verdict) << '\n';
    }
    emit(opts, json{{"schema", fixedrat::kSchemaVersion}, {"a", a}, {"decision", d}}, os.str());
    return d.verdict == fixedrat::Verdict::rational ? 0 : 1;
  }

  if (*tori) {
    const Rational a = Rational::parse(ta);
    std::vector<Rational> bs;
    for (const auto& t : tbs) bs.push_back(Rational::parse(t));
    const auto d = fixedrat::decide_norm_tori(a, bs, opts.solver.factor);
    std::ostringstream os;
    os << "verdict: " << to_string(d.verdict) << '\n';
    for (std::size_t i = 0; i < bs.size(); ++i) os << "(" << a << ", " << bs[i] << "): " << places_text(d.symbols[i]) << '\n';
    json j{{"schema", fixedrat::kSchemaVersion}, {"a", a}, {"bs", bs}, {"decision", d}};
    emit(opts, j, os.str());
    return d.verdict == fixedrat::Verdict::rational ? 0 : 1;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fixedrat::Error& e) {
    std::cerr << "fixedrat: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "fixedrat: internal error: " << e.what() << '\n';
  }
  return kExitError;
}

// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/io/json.hpp"

#include "fixedrat/errors.hpp"

namespace fixedrat {

using nlohmann::json;

void to_json(json& j, const Rational& q) { j = q.to_string(); }

void from_json(const json& j, Rational& q) {
  if (j.is_string()) {
    q = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    q = Rational(j.get<long>());
  } else {
    throw ParseError("expected a rational string or integer");
  }
}

void to_json(json& j, const QuadElem& e) { j = e.to_string(); }

void to_json(json& j, const Place& v) { j = v.to_string(); }

void to_json(json& j, const RamificationSet& r) {
  j = json::array();
  for (const auto& v : r.places) j.push_back(v);
}

void to_json(json& j, const ExtSymbol& s) {
  j = json{{"value", s.zero ? "zero" : "nonzero"},
           {"witness_place", s.witness ? json(*s.witness) : json(nullptr)},
           {"field_core", to_string(s.field_core)},
           {"degenerate_discriminant", s.degenerate_discriminant}};
}

void to_json(json& j, const SurfaceSpec& s) { j = json{{"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d}}; }

void from_json(const json& j, SurfaceSpec& s) {
  s.a = j.at("a").get<Rational>();
  s.b = j.at("b").get<Rational>();
  s.c = j.at("c").get<Rational>();
  s.d = j.at("d").get<Rational>();
}

void to_json(json& j, const SurfacePoint& p) {
  j = json{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"delta", p.delta}};
}

void to_json(json& j, const ConicSolution& s) { j = json{{"alpha", s.alpha}, {"beta", s.beta}}; }

void to_json(json& j, const SymbolCheck& s) {
  j = json{{"a", s.a}, {"b", s.b}};
  j["field_radicand"] = s.field_radicand ? json(*s.field_radicand) : json(nullptr);
  j["result"] = s.value;
}

void to_json(json& j, const RationalParametrization& p) {
  json maps = json::object();
  for (const auto& [name, f] : p.maps) maps[name] = f.to_string();
  j = json{{"parameters", p.parameters}, {"maps", maps}, {"base_point", p.base_point}};
}

namespace {

json certificate_json(const Certificate& cert) {
  if (const auto* r = std::get_if<RationalCertificate>(&cert)) {
    json j{{"kind", "rational"}, {"route", to_string(r->route)}, {"norm_solution", r->norm_solution}};
    j["point"] = r->point ? json(*r->point) : json(nullptr);
    if (r->symbol) j["symbol"] = *r->symbol;
    if (r->parametrization) j["parametrization"] = *r->parametrization;
    return j;
  }
  const auto& n = std::get<NotRationalCertificate>(cert);
  json j{{"kind", "not_rational"}, {"failed_condition", to_string(n.failed_condition)}};
  if (n.ramification) j["ramification"] = *n.ramification;
  if (n.symbol) j["symbol"] = *n.symbol;
  return j;
}

}  // namespace

void to_json(json& j, const Decision& d) {
  j = json{{"spec", d.spec}, {"verdict", to_string(d.verdict)}, {"certificate", certificate_json(d.certificate)},
           {"notes", d.notes}};
}

void to_json(json& j, const MultiDecision& d) {
  j = json{{"verdict", to_string(d.verdict)}, {"components", d.components}};
  j["failing_component"] = d.failing_component ? json(*d.failing_component) : json(nullptr);
}

void to_json(json& j, const NormToriDecision& d) {
  j = json{{"verdict", to_string(d.verdict)}, {"symbols", d.symbols}};
}

void to_json(json& j, const ScanEntry& e) {
  j = json{{"c", e.c}, {"status", to_string(e.status)}};
  if (!e.message.empty()) j["message"] = e.message;
}

void to_json(json& j, const CheckResult& r) {
  j = json{{"check", r.check}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}};
}

}  // namespace fixedrat

// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

// nlohmann::json conversions.  Rationals serialize as "p/q" or "p" strings so
// that no precision is lost; places as "p" or "infinity".

#pragma once

#include <nlohmann/json.hpp>

#include "fixedrat/decide/decider.hpp"
#include "fixedrat/verify/sigma.hpp"

namespace fixedrat {

inline constexpr const char* kSchemaVersion = "fixedrat/1";

void to_json(nlohmann::json& j, const Rational& q);
/// Accepts a string ("p", "p/q") or a JSON integer.
void from_json(const nlohmann::json& j, Rational& q);

void to_json(nlohmann::json& j, const QuadElem& e);
void to_json(nlohmann::json& j, const Place& v);
void to_json(nlohmann::json& j, const RamificationSet& r);
void to_json(nlohmann::json& j, const ExtSymbol& s);
void to_json(nlohmann::json& j, const SurfaceSpec& s);
void from_json(const nlohmann::json& j, SurfaceSpec& s);
void to_json(nlohmann::json& j, const SurfacePoint& p);
void to_json(nlohmann::json& j, const ConicSolution& s);
void to_json(nlohmann::json& j, const SymbolCheck& s);
void to_json(nlohmann::json& j, const RationalParametrization& p);
void to_json(nlohmann::json& j, const Decision& d);
void to_json(nlohmann::json& j, const MultiDecision& d);
void to_json(nlohmann::json& j, const NormToriDecision& d);
void to_json(nlohmann::json& j, const ScanEntry& e);
void to_json(nlohmann::json& j, const CheckResult& r);

}  // namespace fixedrat

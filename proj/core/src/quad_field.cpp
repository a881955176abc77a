// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/symbols/quad_field.hpp"

#include "fixedrat/errors.hpp"

namespace fixedrat {

std::string to_string(SplitType type) {
  switch (type) {
    case SplitType::split: return "split";
    case SplitType::inert: return "inert";
    case SplitType::ramified: return "ramified";
    case SplitType::splits_into_two_real: return "splits-into-two-real";
    case SplitType::becomes_complex: return "becomes-complex";
  }
  return "unknown";
}

QuadField squarefree_core(const Rational& m, const FactorConfig& config) {
  QuadField field;
  field.radicand_raw = m;
  if (m.is_zero()) return field;
  field.radicand_core = squarefree_part(square_class_integer(m), config);
  return field;
}

SplitType place_splitting(const Place& v, const QuadField& field) {
  if (field.is_trivial()) throw InvalidArgument("splitting requested in the trivial field");
  const Integer& core = field.radicand_core;
  if (v.is_real()) return core > 0 ? SplitType::splits_into_two_real : SplitType::becomes_complex;
  const Integer& p = v.prime();
  if (p == 2) {
    const unsigned long r = mpz_fdiv_ui(core.get_mpz_t(), 8);
    if (r == 1) return SplitType::split;
    if (r == 5) return SplitType::inert;
    return SplitType::ramified;
  }
  if (mpz_divisible_p(core.get_mpz_t(), p.get_mpz_t()) != 0) return SplitType::ramified;
  return kronecker(core, p) == 1 ? SplitType::split : SplitType::inert;
}

ExtSymbol ext_hilbert(const Rational& a, const Rational& b, const QuadField& field, const FactorConfig& config) {
  ExtSymbol out;
  out.field_core = field.radicand_core;
  out.degenerate_discriminant = field.degenerate();
  const RamificationSet ram = global_hilbert(a, b, config);
  for (const Place& v : ram.places) {
    if (field.is_trivial()) {
      out.zero = false;
      out.witness = v;
      break;
    }
    const SplitType s = place_splitting(v, field);
    if (s == SplitType::split || s == SplitType::splits_into_two_real) {
      out.zero = false;
      out.witness = v;
      break;
    }
  }
  return out;
}

}  // namespace fixedrat

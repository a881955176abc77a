// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "fixedrat/symbols/hilbert.hpp"

namespace fixedrat {

/// Q(sqrt(m)) identified by the squarefree core of m.  A square m, including
/// m = 0, yields the trivial field Q (core 1).
struct QuadField {
  Rational radicand_raw;
  Integer radicand_core = 1;

  bool is_trivial() const { return radicand_core == 1; }
  /// True when the raw radicand was 0 or a nonzero square.
  bool degenerate() const { return is_trivial(); }
};

enum class SplitType {
  split,
  inert,
  ramified,
  splits_into_two_real,
  becomes_complex,
};

std::string to_string(SplitType type);

QuadField squarefree_core(const Rational& m, const FactorConfig& config = {});

/// Decomposition of `v` in the nontrivial field K.  Throws InvalidArgument
/// for the trivial field.
SplitType place_splitting(const Place& v, const QuadField& field);

/// Whether (a, b) becomes split over K, with the first ramified place of
/// (a, b) that splits in K as witness when it does not.
struct ExtSymbol {
  bool zero = true;
  std::optional<Place> witness;
  Integer field_core = 1;
  bool degenerate_discriminant = false;
};

/// (a, b) over Q(sqrt(m)): zero iff no place ramified in (a, b) over Q
/// splits in K.  Over the trivial field this is global_hilbert.
ExtSymbol ext_hilbert(const Rational& a, const Rational& b, const QuadField& field,
                      const FactorConfig& config = {});

}  // namespace fixedrat

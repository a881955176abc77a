// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fixedrat/arith/rational.hpp"
#include "fixedrat/symbols/factor.hpp"

namespace fixedrat {

/// A place of Q: a finite prime or the real place.
class Place {
 public:
  /// Throws InvalidArgument when `p` is not prime.
  static Place finite(const Integer& p);
  static Place real() { return Place(); }

  bool is_real() const { return real_; }
  /// Only meaningful for finite places.
  const Integer& prime() const { return prime_; }

  /// "p" for finite places, "infinity" for the real place.
  std::string to_string() const;

  /// Finite primes ascending, the real place last.
  friend std::strong_ordering operator<=>(const Place& lhs, const Place& rhs);
  friend bool operator==(const Place& lhs, const Place& rhs) {
    return lhs.real_ == rhs.real_ && (lhs.real_ || lhs.prime_ == rhs.prime_);
  }

 private:
  Place() = default;

  bool real_ = true;
  Integer prime_;
};

/// Sorted set of places where a quaternion algebra (a, b) over Q ramifies.
/// Empty iff the algebra splits; always of even size.
struct RamificationSet {
  std::vector<Place> places;

  bool split() const { return places.empty(); }
  bool contains(const Place& v) const;
};

/// Local Hilbert symbol (a, b)_v in {+1, -1}.  Throws InvalidArgument when a
/// or b is zero.
int local_hilbert(const Rational& a, const Rational& b, const Place& v);

/// The real place, 2, and the odd primes dividing a*b once both are scaled to
/// integers.  The symbol is +1 at every other place.
std::vector<Place> candidate_places(const Rational& a, const Rational& b, const FactorConfig& config = {});

/// Set of places where local_hilbert(a, b, v) == -1.
RamificationSet global_hilbert(const Rational& a, const Rational& b, const FactorConfig& config = {});

/// Integer representative a*den(a)^2 in the same square class.
Integer square_class_integer(const Rational& q);

}  // namespace fixedrat

// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixedrat/arith/quad_elem.hpp"

#include "fixedrat/errors.hpp"

namespace fixedrat {

QuadElem::QuadElem(Rational base, Rational coef, Rational radicand)
    : base_(std::move(base)), coef_(std::move(coef)), radicand_(std::move(radicand)) {
  if (radicand_.is_zero()) {
    if (!coef_.is_zero()) throw InvalidArgument("sqrt(0) coefficient must vanish");
    return;
  }
  if (is_square(radicand_)) {
    throw InvalidArgument("radicand " + radicand_.to_string() + " is a rational square");
  }
}

void QuadElem::adopt_radicand(const QuadElem& other) {
  if (other.radicand_.is_zero() || radicand_ == other.radicand_) return;
  if (radicand_.is_zero()) {
    radicand_ = other.radicand_;
    return;
  }
  throw InvalidArgument("incompatible quadratic fields: sqrt(" + radicand_.to_string() +
                        ") vs sqrt(" + other.radicand_.to_string() + ")");
}

QuadElem QuadElem::conjugate() const {
  QuadElem out = *this;
  out.coef_ = -coef_;
  return out;
}

Rational QuadElem::norm() const { return base_ * base_ - radicand_ * coef_ * coef_; }

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational n = norm();
  QuadElem out = *this;
  out.base_ = base_ / n;
  out.coef_ = -coef_ / n;
  return out;
}

QuadElem& QuadElem::operator+=(const QuadElem& rhs) {
  adopt_radicand(rhs);
  base_ += rhs.base_;
  coef_ += rhs.coef_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& rhs) {
  adopt_radicand(rhs);
  base_ -= rhs.base_;
  coef_ -= rhs.coef_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& rhs) {
  adopt_radicand(rhs);
  if (coef_.is_zero() && rhs.coef_.is_zero()) {
    base_ *= rhs.base_;
    return *this;
  }
  Rational base = base_ * rhs.base_ + radicand_ * coef_ * rhs.coef_;
  coef_ = base_ * rhs.coef_ + coef_ * rhs.base_;
  base_ = std::move(base);
  return *this;
}

QuadElem QuadElem::operator-() const {
  QuadElem out = *this;
  out.base_ = -base_;
  out.coef_ = -coef_;
  return out;
}

bool operator==(const QuadElem& lhs, const QuadElem& rhs) {
  if (!lhs.radicand_.is_zero() && !rhs.radicand_.is_zero() && lhs.radicand_ != rhs.radicand_) {
    throw InvalidArgument("comparing elements of different quadratic fields");
  }
  return lhs.base_ == rhs.base_ && lhs.coef_ == rhs.coef_;
}

std::string QuadElem::to_string() const {
  if (radicand_.is_zero()) return base_.to_string();
  std::string out = base_.to_string();
  if (coef_.sign() < 0) {
    out += "-" + (-coef_).to_string();
  } else {
    out += "+" + coef_.to_string();
  }
  return out + "*sqrt(" + radicand_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadElem& e) { return os << e.to_string(); }

}  // namespace fixedrat

// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fixedrat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments violate a documented precondition (zero symbol argument,
/// square radicand, incompatible quadratic fields, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The surface parameters (a, b, c, d) do not satisfy the family hypotheses.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class FactorizationLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget.  Distinct from "no solution exists".
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class Cancelled : public Error {
 public:
  Cancelled() : Error("operation cancelled") {}
};

/// Every projection chart put the center on the degenerate locus.
class DegenerateCenter : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its own symbolic self-check.  Always a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace fixedrat

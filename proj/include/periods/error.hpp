#pragma once

#include <stdexcept>
#include <string>

namespace periods {

enum class ErrorKind {
  DivisionByZero,
  MixedRadicand,
  OutOfRange,
  DimensionMismatch,
  InvalidArgument,
  EmptyDomain,
  UnknownName,
  ZeroPolynomial,
  EndpointRoot,
  PoleInInterval,
  Unfactorable,
  InconsistentFactorization,
  NonConvergence,
  Syntax,
  TooLarge,
  Internal,
};

const char* error_kind_name(ErrorKind kind) noexcept;

/// Every failure path in the library throws this; `kind` is stable and
/// machine-readable, `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace periods

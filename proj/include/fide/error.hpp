#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fide {

enum class ErrorKind {
  Domain,
  UnsupportedOrder,
  NonFiniteValue,
  LengthMismatch,
  InvalidArgument,
  NearSingularPivot,
  MissingExact,
  Unbounded,
  SyntaxError,
  UnknownIdentifier,
  ArityMismatch,
  EvalError,
  MissingField,
  OutOfRange,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fide

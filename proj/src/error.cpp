#include "fide/error.hpp"

namespace fide {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NearSingularPivot: return "NearSingularPivot";
    case ErrorKind::MissingExact: return "MissingExactSolution";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::EvalError: return "EvalError";
    case ErrorKind::MissingField: return "MissingField";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

}  // namespace fide

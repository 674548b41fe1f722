#include "cmod/error.hpp"

namespace cmod {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Divisibility: return "divisibility";
    case ErrorKind::UndefinedGcd: return "undefined-gcd";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::NonHomogeneous: return "non-homogeneous";
    case ErrorKind::ZeroPolynomial: return "zero-polynomial";
    case ErrorKind::IllConditioned: return "ill-conditioned";
    case ErrorKind::UnsupportedDegree: return "unsupported-degree";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::LineContained: return "line-contained-in-curve";
    case ErrorKind::NonReduced: return "non-reduced";
    case ErrorKind::DegenerateLine: return "degenerate-line";
    case ErrorKind::SingularPoint: return "singular-point";
    case ErrorKind::InsufficientSamples: return "insufficient-samples";
    case ErrorKind::SizeMismatch: return "size-mismatch";
    case ErrorKind::NonRepresentable: return "non-representable";
    case ErrorKind::DegenerateFamily: return "degenerate-family";
    case ErrorKind::Internal: return "internal-inconsistency";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(std::size_t column, const std::string& message)
    : Error(ErrorKind::Parse,
            "parse error at column " + std::to_string(column) + ": " + message),
      column_(column) {}

}  // namespace cmod

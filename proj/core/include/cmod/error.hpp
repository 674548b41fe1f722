#pragma once

#include <stdexcept>
#include <string>

namespace cmod {

enum class ErrorKind {
  Divisibility,
  UndefinedGcd,
  Parse,
  NonHomogeneous,
  ZeroPolynomial,
  IllConditioned,
  UnsupportedDegree,
  InvalidInput,
  LineContained,
  NonReduced,
  DegenerateLine,
  SingularPoint,
  InsufficientSamples,
  SizeMismatch,
  NonRepresentable,
  DegenerateFamily,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& message);

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace cmod

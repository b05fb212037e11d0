#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cibench {

enum class ErrorKind {
  MalformedCsv,
  SchemaViolation,
  DuplicateKey,
  EmptyDataset,
  InsufficientData,
  InvalidValue,
  UnknownScope,
  BasisMismatch,
  UnsupportedFormat,
  Usage,
  SingularDesign,
  DegenerateResponse,
  InsufficientRows,
  DomainError,
  LengthMismatch,
  DegenerateSample,
  TooManyPredictors,
  ZeroBasis,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code for an error kind: 2 validation, 3 statistical
/// degeneracy, 4 I/O.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cibench

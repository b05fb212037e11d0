#include "cibench/error.hpp"

namespace cibench {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCsv: return "MalformedCsv";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::InvalidValue: return "InvalidValue";
    case ErrorKind::UnknownScope: return "UnknownScope";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::SingularDesign: return "SingularDesign";
    case ErrorKind::DegenerateResponse: return "DegenerateResponse";
    case ErrorKind::InsufficientRows: return "InsufficientRows";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::TooManyPredictors: return "TooManyPredictors";
    case ErrorKind::ZeroBasis: return "ZeroBasis";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io:
      return 4;
    case ErrorKind::SingularDesign:
    case ErrorKind::DegenerateResponse:
    case ErrorKind::InsufficientRows:
    case ErrorKind::DomainError:
    case ErrorKind::LengthMismatch:
    case ErrorKind::DegenerateSample:
    case ErrorKind::TooManyPredictors:
    case ErrorKind::ZeroBasis:
      return 3;
    default:
      return 2;
  }
}

}  // namespace cibench

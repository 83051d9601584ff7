#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trajent {

enum class ErrorKind {
  NonSquare,
  NonFiniteEntry,
  NegativeEntry,
  RowSumViolation,
  NotIrreducible,
  SingularSystem,
  NotReversible,
  DegenerateSpectrum,
  StatesNotDistinct,
  StatesEqual,
  StateOutOfRange,
  ParameterOutOfRange,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::RowSumViolation: return "RowSumViolation";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NotReversible: return "NotReversible";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::StatesNotDistinct: return "StatesNotDistinct";
    case ErrorKind::StatesEqual: return "StatesEqual";
    case ErrorKind::StateOutOfRange: return "StateOutOfRange";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it onto a stable exit code.
class ChainError : public std::runtime_error {
 public:
  ChainError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trajent

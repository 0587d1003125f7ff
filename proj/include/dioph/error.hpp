#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

enum class ErrorCode {
  NoSignChange,
  NegativeArgument,
  DegenerateDenominator,
  BadIndex,
  BadKind,
  UnknownRule,
  InvalidParams,
  UnknownSpec,
  PrecisionUnreachable,
  BudgetExceeded,
  InsufficientData,
  ParseError,
  NotIrreducible,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::NegativeArgument: return "NegativeArgument";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadKind: return "BadKind";
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::UnknownSpec: return "UnknownSpec";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dioph

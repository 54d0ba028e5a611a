#pragma once

#include <stdexcept>
#include <string>

namespace tame {

enum class ErrorCode {
  InvalidArgument = 1,
  ParseError,
  UnsupportedPrime,
  ConflictingConstraints,
  NonCoprimeModuli,
  NotAUnit,
  ZeroPolynomial,
  DegreeTooSmall,
  GenusZero,
  RamifiedCase,
  WrongPrime,
  IncompleteSpec,
  ConstructionFailed,
  BadReduction,
  BudgetExceeded,
  InsufficientData,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::ConflictingConstraints: return "ConflictingConstraints";
    case ErrorCode::NonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::GenusZero: return "GenusZero";
    case ErrorCode::RamifiedCase: return "RamifiedCase";
    case ErrorCode::WrongPrime: return "WrongPrime";
    case ErrorCode::IncompleteSpec: return "IncompleteSpec";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Library-wide exception carrying a stable error code; the C API maps the
/// code to a tc_status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace tame

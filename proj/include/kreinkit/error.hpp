#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace kreinkit {

enum class ErrorKind {
  DimensionMismatch,
  InvalidInput,
  NonConvergence,
  NotCompletable,
  HypothesisViolated,
  KNotJContractive,
  NegativeTargetIndex,
  RangeInclusionFailed,
  ParameterInvariantViolated,
  NotALifting,
  IndexMismatch,
  NotJContractive,
  NotSolvable,
  NotAnExtension,
  NotSymmetric,
  NotSelfadjoint,
  ShiftNotAdmissible,
  PreconditionViolated,
  CayleyNotOperator,
  AssertionFailed,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotCompletable: return "NotCompletable";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::KNotJContractive: return "KNotJContractive";
    case ErrorKind::NegativeTargetIndex: return "NegativeTargetIndex";
    case ErrorKind::RangeInclusionFailed: return "RangeInclusionFailed";
    case ErrorKind::ParameterInvariantViolated: return "ParameterInvariantViolated";
    case ErrorKind::NotALifting: return "NotALifting";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::NotJContractive: return "NotJContractive";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::NotAnExtension: return "NotAnExtension";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotSelfadjoint: return "NotSelfadjoint";
    case ErrorKind::ShiftNotAdmissible: return "ShiftNotAdmissible";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::CayleyNotOperator: return "CayleyNotOperator";
    case ErrorKind::AssertionFailed: return "AssertionFailed";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<double> residual = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        residual_(residual) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Diagnostic payload, e.g. the least-squares residual of a failed factorization.
  std::optional<double> residual() const noexcept { return residual_; }

 private:
  ErrorKind kind_;
  std::optional<double> residual_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what,
                              std::optional<double> residual = std::nullopt) {
  throw Error(kind, what, residual);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace kreinkit

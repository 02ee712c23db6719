#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pjx {

enum class ErrorCode {
  WindowViolation,
  NegativeFactorial,
  EndpointRoot,
  ZeroPolynomial,
  InexactDivision,
  DegenerateDenominator,
  IrregularChain,
  BadIndex,
  WrongArity,
  PoleAtZ,
  GaugeMismatch,
  SolverFailure,
  NonRegularChain,
  SweepOutsideRegularity,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code. All library failures that a
/// caller can act on are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::WindowViolation: return "WindowViolation";
    case ErrorCode::NegativeFactorial: return "NegativeFactorial";
    case ErrorCode::EndpointRoot: return "EndpointRoot";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::IrregularChain: return "IrregularChain";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::PoleAtZ: return "PoleAtZ";
    case ErrorCode::GaugeMismatch: return "GaugeMismatch";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::NonRegularChain: return "NonRegularChain";
    case ErrorCode::SweepOutsideRegularity: return "SweepOutsideRegularity";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pjx

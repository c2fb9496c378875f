#include "sspkit/errors.hpp"

namespace ssp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ScalarKindMismatch: return "ScalarKindMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NoShapeFactorization: return "NoShapeFactorization";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::NotSuperspecial: return "NotSuperspecial";
    case ErrorCode::VariantUnavailable: return "VariantUnavailable";
    case ErrorCode::OppositionNontrivial: return "OppositionNontrivial";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace ssp

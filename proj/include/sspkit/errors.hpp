#pragma once

#include <stdexcept>
#include <string>

namespace ssp {

enum class ErrorCode {
  ScalarKindMismatch,
  DivisionByZero,
  NotDivisible,
  ZeroPolynomial,
  NoShapeFactorization,
  InvalidRank,
  GuardExceeded,
  NotSuperspecial,
  VariantUnavailable,
  OppositionNontrivial,
  UnsupportedType,
  BudgetExceeded,
  VerificationFailure,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; the code tells callers what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ssp

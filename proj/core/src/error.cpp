#include "cayley/error.hpp"

#include <string>

namespace cayley {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonIntegralFamily: return "NonIntegralFamily";
    case ErrorCode::kNotASolution: return "NotASolution";
    case ErrorCode::kNonPositiveResult: return "NonPositiveResult";
    case ErrorCode::kDegenerateD: return "DegenerateD";
    case ErrorCode::kNonIntegralA: return "NonIntegralA";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kOddAlpha: return "OddAlpha";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

}  // namespace cayley

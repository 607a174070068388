#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cayley {

enum class ErrorCode {
  kInvalidArgument,
  kNonIntegralFamily,  // s does not divide 2b
  kNotASolution,
  kNonPositiveResult,
  kDegenerateD,        // d = y^2 - s^2 is < 2 or a perfect square
  kNonIntegralA,
  kBudgetExceeded,
  kTooShort,
  kOddAlpha,
  kBothZero,
  kInvariantViolation,  // an internal exact cross-check failed
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cayley

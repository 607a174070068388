#include "cayley/exact_ratio.hpp"

#include "cayley/error.hpp"

namespace cayley {

ExactRatio::ExactRatio(const Integer& value) : value_(value) {}

ExactRatio::ExactRatio(const Integer& numerator, const Integer& denominator) {
  if (sgn(denominator) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Integer ExactRatio::to_integer() const {
  if (!is_integral()) {
    throw Error(ErrorCode::kInvalidArgument,
                "ratio " + to_string() + " is not an integer");
  }
  return value_.get_num();
}

std::string ExactRatio::to_string() const {
  if (is_integral()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRatio operator+(const ExactRatio& x, const ExactRatio& y) {
  return ExactRatio(mpq_class(x.value_ + y.value_));
}
ExactRatio operator-(const ExactRatio& x, const ExactRatio& y) {
  return ExactRatio(mpq_class(x.value_ - y.value_));
}
ExactRatio operator*(const ExactRatio& x, const ExactRatio& y) {
  return ExactRatio(mpq_class(x.value_ * y.value_));
}
ExactRatio operator/(const ExactRatio& x, const ExactRatio& y) {
  if (sgn(y.value_) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "division by zero");
  }
  return ExactRatio(mpq_class(x.value_ / y.value_));
}

}  // namespace cayley

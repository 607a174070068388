#pragma once

#include <compare>
#include <string>

#include "cayley/integer.hpp"

namespace cayley {

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Conjugates of triple components are generally rational (for example
/// 577/2), so conjugation returns this type and callers test integrality.
class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(const Integer& value);  // NOLINT(google-explicit-constructor)
  ExactRatio(const Integer& numerator, const Integer& denominator);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_integral() const { return value_.get_den() == 1; }
  bool is_positive() const { return sgn(value_) > 0; }

  // Requires is_integral().
  Integer to_integer() const;

  // "n" when integral, otherwise "n/d".
  std::string to_string() const;

  friend ExactRatio operator+(const ExactRatio& x, const ExactRatio& y);
  friend ExactRatio operator-(const ExactRatio& x, const ExactRatio& y);
  friend ExactRatio operator*(const ExactRatio& x, const ExactRatio& y);
  friend ExactRatio operator/(const ExactRatio& x, const ExactRatio& y);
  friend bool operator==(const ExactRatio& x, const ExactRatio& y) {
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRatio& x,
                                          const ExactRatio& y) {
    const int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  explicit ExactRatio(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

}  // namespace cayley

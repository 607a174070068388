#include "cayley/integer.hpp"

#include <string>

#include "cayley/error.hpp"

namespace cayley {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected an integer, got '" + std::string(text) + "'");
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::kInvalidArgument,
                  "expected an integer, got '" + std::string(text) + "'");
    }
  }
  // mpz_set_str rejects a leading '+'.
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  return Integer(normalized, 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) {
    throw Error(ErrorCode::kInvalidArgument, "isqrt of a negative integer");
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool divides(const Integer& divisor, const Integer& n) {
  if (sgn(divisor) == 0) return false;
  return mpz_divisible_p(n.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

}  // namespace cayley

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cayley {

// Arbitrary-precision signed integer used for every sequence value and
// triple component.
using Integer = mpz_class;

// Parses an optionally signed decimal integer. Throws Error(InvalidArgument)
// on anything else, including empty input and embedded whitespace.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

// True iff divisor != 0 and divisor | n.
bool divides(const Integer& divisor, const Integer& n);

}  // namespace cayley

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace foliadeg {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;
using Integer = mpz_class;

/// Decimal "num/den", with "/den" omitted when the denominator is 1.
std::string to_string(const Scalar& x);
std::string to_string(const Integer& x);

/// Inverse of to_string. Throws std::invalid_argument on malformed input or zero denominator.
Scalar parse_scalar(std::string_view text);

bool is_integer(const Scalar& x);

}  // namespace foliadeg

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spschub {

using Integer = mpz_class;
using Rational = mpq_class;

/// Decimal rendering, "p/q" for non-integral rationals.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Accepts "-12" or "3/4"; throws Error(Parse) otherwise.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

Integer factorial(unsigned k);

}  // namespace spschub

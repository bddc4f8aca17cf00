#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace besselpow {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Accepts an optional sign, digits, and an optional "/digits" part.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// p/q in lowest terms; q must be nonzero.
Rational make_rational(long p, long q);

bool is_integer(const Rational& x);

/// 1/x; throws std::domain_error for x == 0 instead of trapping in GMP.
Rational inverse(const Rational& x);
Rational checked_div(const Rational& a, const Rational& b);

Rational pow(const Rational& base, long exponent);

}  // namespace besselpow

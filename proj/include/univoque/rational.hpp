#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "univoque/errors.hpp"

namespace univoque {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den reduced to canonical form; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

/// 2^-k as an exact rational (k >= 0).
Rational pow2_inv(unsigned long k);

/// Parse a number written either as a decimal literal ("1.25", "-3", "2.5e-3")
/// or as a fraction of integers ("31/25").  Throws ParseError on anything else.
Rational parse_number(std::string_view text);

/// v rounded to the nearest multiple of 10^-frac_digits (ties away from zero).
Rational round_decimal(const Rational& v, int frac_digits);

/// Fixed-point decimal rendering of v with exactly frac_digits fractional
/// digits (v is rounded to that grid first).  Exact: no binary floats involved.
std::string decimal_string(const Rational& v, int frac_digits);

} // namespace univoque

#pragma once

#include "univoque/precise.hpp"
#include "univoque/rational.hpp"
#include "univoque/words.hpp"

namespace univoque::precise {

/// Value of the power series sum_i d_i q^-i for the eventually periodic digit
/// stream s, as a certified enclosure.  q must be an enclosure inside (1, 2).
///
/// With preamble length L and cycle length M the sum collapses to
///   [ P(q) (q^M - 1) + C(q) ] / [ q^L (q^M - 1) ]
/// where P and C are the integer-coefficient Horner polynomials of the
/// preamble and cycle, so one division suffices.
Real eval_at(const words::Seq& s, const Real& q);

/// Exact rational value of the same sum at a rational q in (1, 2).
Rational eval_at(const words::Seq& s, const Rational& q);

} // namespace univoque::precise

#pragma once

#include <functional>
#include <string>

#include "univoque/precise.hpp"
#include "univoque/rational.hpp"

namespace univoque::precise {

enum class Sign { Negative, Zero, Positive, Undecided };

/// Certified sign of a function at an exact rational point.
using SignFn = std::function<Sign(const Rational&)>;

/// A certified bracket around a root: the bracketed function changes sign
/// across [lo, hi] (or vanishes at a point inside).
struct RootInterval {
    Rational lo, hi;
    std::string problem; // what equation this bracket solves

    Rational mid() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
    /// Enclosure view at the current working precision.
    Real enclosure() const { return Real::from_endpoints(lo, hi); }
};

/// Shrink [lo, hi] by bisection until its width is at most tol.  The supplied
/// endpoints must produce opposite nonzero signs (a Zero at an endpoint or
/// midpoint yields a degenerate bracket of width about tol/2 around the exact
/// root).  Signs of Undecided abort with PrecisionError; invalid starting
/// signs abort with BracketError.  Deterministic: same inputs, same bracket.
RootInterval bisect_root(const SignFn& f, Rational lo, Rational hi,
                         const Rational& tol, std::string problem);

/// Sign callback from an exact rational evaluation.
SignFn exact_sign_fn(std::function<Rational(const Rational&)> f);

/// Sign callback from an enclosure evaluation, retried at doubling precision
/// up to the adaptive cap; returns Undecided only at the cap.
SignFn interval_sign_fn(std::function<Real(const Real&)> f);

} // namespace univoque::precise

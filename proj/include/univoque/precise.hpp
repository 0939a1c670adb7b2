#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "univoque/errors.hpp"
#include "univoque/rational.hpp"

namespace univoque::precise {

/// Working precision in bits for newly created enclosures, thread-local.
int current_precision();

/// Adaptive-precision limits consulted by retry loops, thread-local.
struct Limits {
    int start = 128;
    int cap = 4096;
};
Limits& limits();

/// Scoped override of the working precision.
class PrecisionGuard {
public:
    explicit PrecisionGuard(int bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    int old_;
};

template <class F>
auto with_precision(int bits, F&& f) {
    PrecisionGuard guard(bits);
    return std::forward<F>(f)();
}

/// Run f at the starting precision; on an undecided comparison retry with the
/// precision doubled, up to the cap.  At the cap the last UndecidedError is
/// rethrown for the caller to surface as a boundary condition.
template <class F>
auto adaptive(F&& f) -> decltype(f()) {
    int p = limits().start;
    for (;;) {
        try {
            PrecisionGuard guard(p);
            return f();
        } catch (const detail::UndecidedError&) {
            if (p >= limits().cap) throw;
            p *= 2;
        }
    }
}

enum class Cmp { Less, Greater, Undecided };

/// A real number represented by certified bounds [lo, hi].  Every operation
/// rounds the lower endpoint down and the upper endpoint up, so the true
/// value of any expression always lies inside the computed enclosure.
/// Results are produced at the current working precision.
class Real {
public:
    Real();                 // [0, 0]
    Real(long v);           // exact point
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real from_rational(const Rational& v);
    static Real from_endpoints(const Rational& lo, const Rational& hi);

    Real operator+(const Real& o) const;
    Real operator-(const Real& o) const;
    Real operator*(const Real& o) const;
    Real operator/(const Real& o) const;   // o must exclude 0
    Real operator-() const;
    Real inv() const;                      // must exclude 0
    Real pow_int(long e) const;            // integer power, outward rounding
    Real sqrt() const;                     // lo must be >= 0

    bool contains_zero() const;
    bool contains(const Rational& v) const;
    Cmp compare(const Real& o) const;
    Cmp compare(const Rational& v) const;
    int sign_lo() const;                   // sign of the lower endpoint
    int sign_hi() const;

    /// Exact rational value of an endpoint (endpoints are dyadic).
    Rational lo_rational() const;
    Rational hi_rational() const;
    Rational width() const { return hi_rational() - lo_rational(); }
    double width_approx() const;

    /// Decimal rendering keeping only digits certified by the enclosure,
    /// capped at max_digits fractional digits.
    std::string decimal(int max_digits = 30) const;

private:
    mpfr_t lo_, hi_;
};

} // namespace univoque::precise

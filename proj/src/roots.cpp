#include "univoque/roots.hpp"

namespace univoque::precise {
namespace {

constexpr int kMaxBisectionSteps = 200000;

RootInterval degenerate(const Rational& root, const Rational& lo, const Rational& hi,
                        const Rational& tol, std::string problem) {
    // The function vanishes exactly at root; return a tight valid bracket.
    Rational a = std::max(lo, Rational(root - tol / 4));
    Rational b = std::min(hi, Rational(root + tol / 4));
    return RootInterval{a, b, std::move(problem)};
}

} // namespace

RootInterval bisect_root(const SignFn& f, Rational lo, Rational hi,
                         const Rational& tol, std::string problem) {
    if (!(lo < hi)) throw BracketError("bracket endpoints out of order: " + problem);
    if (tol <= 0) throw DomainError("tolerance must be positive");

    Sign slo = f(lo), shi = f(hi);
    if (slo == Sign::Undecided || shi == Sign::Undecided)
        throw PrecisionError("sign undecided at bracket endpoint: " + problem);
    if (slo == Sign::Zero) return degenerate(lo, lo, hi, tol, std::move(problem));
    if (shi == Sign::Zero) return degenerate(hi, lo, hi, tol, std::move(problem));
    if (slo == shi)
        throw BracketError("no sign change across bracket: " + problem);

    for (int step = 0; hi - lo > tol; ++step) {
        if (step > kMaxBisectionSteps)
            throw PrecisionError("bisection failed to converge: " + problem);
        Rational m = (lo + hi) / 2;
        Sign sm = f(m);
        switch (sm) {
        case Sign::Zero:
            return degenerate(m, lo, hi, tol, std::move(problem));
        case Sign::Undecided:
            throw PrecisionError("sign undecided inside bracket: " + problem);
        default:
            if (sm == slo) lo = m; else hi = m;
        }
    }
    return RootInterval{lo, hi, std::move(problem)};
}

SignFn exact_sign_fn(std::function<Rational(const Rational&)> f) {
    return [f = std::move(f)](const Rational& x) {
        int s = sgn(f(x));
        if (s < 0) return Sign::Negative;
        if (s > 0) return Sign::Positive;
        return Sign::Zero;
    };
}

SignFn interval_sign_fn(std::function<Real(const Real&)> f) {
    return [f = std::move(f)](const Rational& x) {
        for (int p = limits().start;; p *= 2) {
            PrecisionGuard guard(p);
            try {
                Real v = f(Real::from_rational(x));
                if (v.sign_hi() < 0) return Sign::Negative;
                if (v.sign_lo() > 0) return Sign::Positive;
                if (v.sign_lo() == 0 && v.sign_hi() == 0) return Sign::Zero;
            } catch (const detail::UndecidedError&) {
                // fall through to a retry at doubled precision
            }
            if (p >= limits().cap) return Sign::Undecided;
        }
    };
}

} // namespace univoque::precise

#include "univoque/eval.hpp"

namespace univoque::precise {
namespace {

// P(q) = d_1 q^{L-1} + ... + d_L by ascending Horner.
template <class Num>
Num horner(const words::BinaryWord& w, const Num& q, const Num& zero, const Num& one) {
    Num acc = zero;
    for (size_t i = 0; i < w.size(); ++i) {
        acc = acc * q;
        if (w[i]) acc = acc + one;
    }
    return acc;
}

} // namespace

Real eval_at(const words::Seq& s, const Real& q) {
    Rational lo = q.lo_rational(), hi = q.hi_rational();
    if (lo <= 1 || hi >= 2)
        throw DomainError("base enclosure must lie inside (1, 2)");

    const auto& pre = s.preamble();
    const auto& cyc = s.cycle();
    Real zero(0), one(1);
    Real p = horner(pre, q, zero, one);
    Real c = horner(cyc, q, zero, one);
    Real qM = q.pow_int(static_cast<long>(cyc.size()));
    Real qL = q.pow_int(static_cast<long>(pre.size()));
    Real qM1 = qM - one;
    if (qM1.sign_lo() <= 0)
        throw detail::UndecidedError("cycle denominator not separated from zero");
    return (p * qM1 + c) / (qL * qM1);
}

Rational eval_at(const words::Seq& s, const Rational& q) {
    if (q <= 1 || q >= 2) throw DomainError("base must lie inside (1, 2)");

    const auto& pre = s.preamble();
    const auto& cyc = s.cycle();
    Rational zero(0), one(1);
    Rational p = horner(pre, q, zero, one);
    Rational c = horner(cyc, q, zero, one);

    Rational qM(1), qL(1);
    for (size_t i = 0; i < cyc.size(); ++i) qM *= q;
    for (size_t i = 0; i < pre.size(); ++i) qL *= q;
    Rational qM1 = qM - 1; // positive: q > 1
    return (p * qM1 + c) / (qL * qM1);
}

} // namespace univoque::precise

#pragma once

#include <optional>

#include "univoque/oracle_types.hpp"
#include "univoque/precise.hpp"
#include "univoque/qn_ring.hpp"
#include "univoque/rational.hpp"
#include "univoque/words.hpp"

// Digit recurrences shared by the expansion oracles and the quasi-greedy
// machinery.  A walk keeps the remainder r_k of the target after k digits
// (r_0 = x, r_k = q r_{k-1} - d_k) and chooses digits from the signs of
//   q r - 1            (digit 1 stays representable iff this is >= 0)
//   q^2 r - q r - 1    (digit 0 stays representable iff this is <= 0)
// A context supplies the arithmetic: exact rational at rational q, exact
// algebraic at a ladder base, enclosure arithmetic at an interval q.  Sign
// queries return nullopt when an enclosure straddles zero.

namespace univoque::detail {

struct RationalWalkCtx {
    Rational q;
    using Value = Rational;

    explicit RationalWalkCtx(Rational base) : q(std::move(base)) {
        if (q <= 1 || q >= 2) throw DomainError("base must lie inside (1, 2)");
    }
    Value init(const Rational& x) const { return x; }
    Value shift(const Value& r, int digit) const { return q * r - digit; }
    std::optional<int> sign_digit1(const Value& r) const { return sgn(q * r - 1); }
    std::optional<int> sign_digit0(const Value& r) const {
        return sgn(q * q * r - q * r - 1);
    }
    std::optional<int> sign_above_cap(const Rational& x) const {
        return sgn(x * (q - 1) - 1);
    }
};

/// Remainders are ring elements over a fixed positive denominator, so every
/// sign test reduces to an exact sign of a ring element at the root.
struct RingWalkCtx {
    const bases::QnRing& ring;
    Integer den;
    using Value = bases::QnRing::Elem;

    explicit RingWalkCtx(const bases::QnRing& r) : ring(r), den(1) {}
    Value init(const Rational& x) {
        den = x.get_den();
        return ring.from_integer(x.get_num());
    }
    Value shift(const Value& r, int digit) const {
        Value qr = ring.mul_q(r);
        return digit ? ring.sub(qr, ring.from_integer(den)) : qr;
    }
    std::optional<int> sign_digit1(const Value& r) const {
        return ring.sign_at_root(ring.sub(ring.mul_q(r), ring.from_integer(den)));
    }
    std::optional<int> sign_digit0(const Value& r) const {
        Value qr = ring.mul_q(r);
        Value q2r = ring.mul_q(qr);
        return ring.sign_at_root(ring.sub(ring.sub(q2r, qr), ring.from_integer(den)));
    }
    std::optional<int> sign_above_cap(const Rational& x) const {
        // sign of x (q - 1) - 1, scaled by den(x) > 0.
        Value e = ring.from_integer(x.get_num());
        Value v = ring.sub(ring.mul_q(e), e);
        return ring.sign_at_root(ring.sub(v, ring.from_integer(x.get_den())));
    }
};

struct IntervalWalkCtx {
    precise::Real q;
    using Value = precise::Real;

    explicit IntervalWalkCtx(precise::Real base) : q(std::move(base)) {
        if (q.lo_rational() <= 1 || q.hi_rational() >= 2)
            throw DomainError("base enclosure must lie inside (1, 2)");
    }
    Value init(const Rational& x) const { return precise::Real::from_rational(x); }
    Value shift(const Value& r, int digit) const {
        return q * r - precise::Real(digit);
    }
    static std::optional<int> enclosure_sign(const precise::Real& v) {
        if (v.sign_hi() < 0) return -1;
        if (v.sign_lo() > 0) return 1;
        if (v.sign_lo() == 0 && v.sign_hi() == 0) return 0;
        return std::nullopt;
    }
    std::optional<int> sign_digit1(const Value& r) const {
        return enclosure_sign(q * r - precise::Real(1));
    }
    std::optional<int> sign_digit0(const Value& r) const {
        Value qr = q * r;
        return enclosure_sign(q * qr - qr - precise::Real(1));
    }
    std::optional<int> sign_above_cap(const Rational& x) const {
        precise::Real xr = precise::Real::from_rational(x);
        return enclosure_sign(xr * (q - precise::Real(1)) - precise::Real(1));
    }
};

/// Follow both-digit admissibility for depth steps.
template <class Ctx>
oracle::BranchResult branch_walk(Ctx& ctx, const Rational& x, int depth) {
    using oracle::BranchResult;
    using oracle::BranchVerdict;
    if (depth < 0) throw DomainError("depth must be non-negative");
    if (sgn(x) < 0) return BranchResult{BranchVerdict::Infeasible, 0};
    auto above = ctx.sign_above_cap(x);
    if (!above) return BranchResult{BranchVerdict::Undecided, 0};
    if (*above > 0) return BranchResult{BranchVerdict::Infeasible, 0};

    auto r = ctx.init(x);
    for (int step = 1; step <= depth; ++step) {
        auto s1 = ctx.sign_digit1(r);
        auto s0 = ctx.sign_digit0(r);
        if (!s1 || !s0) return BranchResult{BranchVerdict::Undecided, step};
        bool can1 = *s1 >= 0, can0 = *s0 <= 0;
        if (can1 && can0) return BranchResult{BranchVerdict::Multiple, step};
        if (!can1 && !can0) return BranchResult{BranchVerdict::Infeasible, step};
        r = ctx.shift(r, can1 ? 1 : 0);
    }
    return BranchResult{BranchVerdict::Unique, depth};
}

/// Largest digit first: d_k = 1 whenever the remainder allows it (ties take 1).
/// The caller must have checked x lies in the representable interval.
/// An unresolved digit sign aborts with BoundaryError carrying the 1-based
/// digit index.
template <class Ctx>
words::BinaryWord greedy_walk(Ctx& ctx, const Rational& x, size_t count) {
    if (count > words::kMaxWordLength) throw SizeError("digit count above cap");
    auto r = ctx.init(x);
    words::BinaryWord w;
    for (size_t k = 1; k <= count; ++k) {
        auto s1 = ctx.sign_digit1(r);
        if (!s1)
            throw BoundaryError("greedy digit undecided at the working precision",
                                static_cast<long>(k));
        int d = (*s1 >= 0) ? 1 : 0;
        w.push_back(d);
        r = ctx.shift(r, d);
    }
    return w;
}

/// Like greedy, but ties take 0, which keeps every remainder strictly
/// positive and yields the largest expansion with infinitely many ones.
template <class Ctx>
words::BinaryWord quasi_greedy_walk(Ctx& ctx, const Rational& x, size_t count) {
    if (count > words::kMaxWordLength) throw SizeError("digit count above cap");
    auto r = ctx.init(x);
    words::BinaryWord w;
    for (size_t k = 1; k <= count; ++k) {
        auto s1 = ctx.sign_digit1(r);
        if (!s1)
            throw BoundaryError("quasi-greedy digit undecided at the working precision",
                                static_cast<long>(k));
        int d = (*s1 > 0) ? 1 : 0;
        w.push_back(d);
        r = ctx.shift(r, d);
    }
    return w;
}

} // namespace univoque::detail

#pragma once

#include <vector>

#include "univoque/rational.hpp"
#include "univoque/words.hpp"

namespace univoque::bases {

/// Exact arithmetic in Z[q] / (q^N - sum_{i=1}^{N} t_i q^{N-i}), N = 2^n,
/// where t is the first block of the parity sequence.  The defining relation
/// is the degree-N equation whose unique root in (1, 2) is the level-n base
/// of the ladder, so ring elements can be evaluated there with certified
/// signs.
///
/// Elements are coefficient vectors of length N (index = power of q).
/// Signs at the root are decided by exact rational interval evaluation over
/// a dyadic bracket of the root, refined on demand by exact bisection.  The
/// relation need not be irreducible (at level 2 it splits off q + 1), so a
/// nonzero residue can still vanish at the root; when refinement stalls, the
/// gcd of the residue with the relation decides vanishing exactly, since the
/// root is simple and any common factor changes sign across the bracket.
class QnRing {
public:
    static constexpr int kMaxLevel = 10;

    explicit QnRing(int n);

    using Elem = std::vector<Integer>;

    int level() const { return n_; }
    size_t degree() const { return deg_; }

    Elem zero() const;
    Elem from_integer(const Integer& v) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, const Integer& c) const;
    /// a * q reduced by the defining relation.
    Elem mul_q(const Elem& a) const;

    bool is_zero(const Elem& a) const;

    /// Sign of a evaluated at the root in (1, 2): -1, 0, +1.  Exact: zeros at
    /// the root are recognized even when the residue is nonzero.  Throws
    /// PrecisionError only if the refinement cap is exhausted first.
    int sign_at_root(const Elem& a) const;

    /// Current dyadic bracket of the root (refined as sign queries demand).
    Rational bracket_lo() const { return lo_; }
    Rational bracket_hi() const { return hi_; }

private:
    int n_;
    size_t deg_;
    words::BinaryWord coeff_; // t_1 ... t_N of the defining relation
    mutable Rational lo_, hi_;

    int relation_sign_at(const Rational& m) const;
    void refine_bracket_once() const;
    bool vanishes_at_root(const Elem& a) const;
};

/// Exact sign of (value of s at the ring's root) - x, where the value is the
/// power-series sum of the digit stream s.  Lets callers settle comparisons
/// that straddle an algebraic base exactly, e.g. ties on family values.
int compare_value_at_root(const QnRing& ring, const words::Seq& s, const Rational& x);

} // namespace univoque::bases

#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "univoque/eval.hpp"
#include "univoque/precise.hpp"
#include "univoque/qn_ring.hpp"
#include "univoque/roots.hpp"
#include "univoque/words.hpp"

namespace univoque::bases {

/// The increasing ladder of algebraic bases q_1 < q_2 < ... -> q_lim and its
/// limit.  Level n solves  sum_{i=1}^{2^n} t_i q^-i = 1  over (1, 2) with t
/// the parity sequence; the limit solves the full series equation and is the
/// threshold base at which 1 first admits a unique expansion.
///
/// Brackets are certified sign-change intervals, cached per level and
/// narrowed on demand, so repeated queries resume rather than restart.
/// All methods are safe to call concurrently.
class BaseLadder {
public:
    explicit BaseLadder(Rational tol = pow2_inv(40), int max_level = 20);

    int max_level() const { return max_level_; }
    const Rational& tol() const { return tol_; }

    /// Level-n base at the ladder tolerance, or at a caller-chosen width.
    precise::RootInterval qn(int n) const;
    precise::RootInterval qn(int n, const Rational& width) const;

    /// The limit base.
    precise::RootInterval q_limit() const;
    precise::RootInterval q_limit(const Rational& width) const;

    /// First level whose base is within 2^-46 (~1.4e-14) of the limit: past
    /// it the remaining levels are numerically indistinguishable from the
    /// limit at solver tolerances, so scans stop there.
    int scan_limit() const;

    /// z_n: the value at the level-n base of the sequence whose preamble is
    /// the first 2^(n-1) parity digits and whose cycle is the reflected
    /// preamble with its last digit raised.  Decreases strictly to 1.
    /// The width argument, here and below, sets how tight a base bracket the
    /// evaluation uses; the default is the ladder tolerance.
    precise::Real zn(int n) const;
    precise::Real zn(int n, const Rational& width) const;

    /// z_n - 1 without cancellation: the first 2^n digits of that sequence
    /// evaluate to exactly 1 at the level-n base (they are the digits of the
    /// defining relation), so the excess is the shifted tail
    /// q^-(2^n) * value(cycle part).  Usable far past the point where
    /// subtracting 1 from zn() would lose every certified digit.
    precise::Real zn_minus_one(int n) const;
    precise::Real zn_minus_one(int n, const Rational& width) const;

    /// z_{1,k}: value of 1^k (01)^inf at the level-1 base.  Increases to z_1.
    precise::Real z1k(int k) const;
    precise::Real z1k(int k, const Rational& width) const;

    /// Left and right endpoints of the k-th exclusion gap (k = 1, 2, 3):
    /// the values of 0^k (10)^inf at the level-1 base and of 0^(k-1) (10)^inf
    /// at the limit base.  Targets inside a gap have their smallest unique
    /// base above the limit; the three gaps cover all of (0, 1) where that
    /// happens.
    precise::Real gap_left(int k) const;
    precise::Real gap_left(int k, const Rational& width) const;
    precise::Real gap_right(int k) const;
    precise::Real gap_right(int k, const Rational& width) const;

    /// Quasi-greedy expansion of 1 at the exact level-n base, by ring
    /// arithmetic: every digit certified, including the exact ties at
    /// multiples of 2^n where the remainder vanishes identically.
    words::BinaryWord alpha_at_level(int n, size_t count) const;

private:
    struct Bracket {
        Rational lo, hi;
    };

    Rational tol_;
    int max_level_;
    mutable std::mutex mu_;
    mutable std::vector<std::optional<Bracket>> levels_;
    mutable std::optional<Bracket> limit_;
    mutable int scan_limit_ = -1;

    Bracket refined_level(int n, const Rational& width) const;
    Bracket refined_limit(const Rational& width) const;
};

/// Quasi-greedy expansion of 1 at an exact rational base in (1, 2).
words::BinaryWord quasi_greedy_alpha(const Rational& q, size_t count);

/// Quasi-greedy expansion of 1 at an enclosure base.  If some digit cannot
/// be certified at the enclosure's width (e.g. the enclosure brackets a
/// ladder base, where exact ties occur), throws BoundaryError carrying the
/// 1-based index of the first undecidable digit.
words::BinaryWord quasi_greedy_alpha(const precise::Real& q, size_t count);

} // namespace univoque::bases

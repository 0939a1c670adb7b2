#include "univoque/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "univoque/digit_walk.hpp"
#include "univoque/eval.hpp"
#include "univoque/family.hpp"
#include "univoque/qn_ring.hpp"

namespace univoque::oracle {

namespace {

// Shared domain guard for expansion walks: x must lie in [0, 1/(q-1)]
// (strictly positive for the quasi-greedy flavor, which needs a nonzero
// remainder to place infinitely many ones).
template <class Ctx>
void require_representable(Ctx& ctx, const Rational& x, bool strictly_positive) {
    if (strictly_positive ? sgn(x) <= 0 : sgn(x) < 0)
        throw DomainError(strictly_positive ? "target must be positive"
                                            : "target must be non-negative");
    auto above = ctx.sign_above_cap(x);
    if (!above)
        throw BoundaryError("representability test undecided at the working precision", 0);
    if (*above > 0)
        throw DomainError("target exceeds 1/(q-1): no expansion in this base");
}

// Branch walk over a base bracket, tightened on demand.  The bracket solves
// value(gamma, q) = x with a strictly decreasing left side, so exact rational
// signs of that equation can re-bisect it as far as the walk requires; the
// representation precision escalates alongside.  Verdicts other than
// Undecided hold for every base in the bracket used, in particular at the
// root.
BranchResult walk_over_bracket(const Rational& x, const precise::RootInterval& bracket,
                               const words::Seq& gamma, int depth,
                               std::ostringstream& notes) {
    auto witness = precise::exact_sign_fn(
        [&gamma, &x](const Rational& q) -> Rational { return precise::eval_at(gamma, q) - x; });

    Rational lo = bracket.lo, hi = bracket.hi;
    BranchResult res{BranchVerdict::Undecided, 0};
    constexpr int kAttempts = 48;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        int p = std::min(precise::limits().cap,
                         precise::limits().start << std::min(attempt, 12));
        try {
            res = precise::with_precision(p, [&] {
                detail::IntervalWalkCtx ctx(precise::Real::from_endpoints(lo, hi));
                return detail::branch_walk(ctx, x, depth);
            });
        } catch (const DomainError&) {
            // An endpoint collapsed onto 1 at this representation precision;
            // only finer precision can separate it.
            continue;
        }
        if (res.verdict != BranchVerdict::Undecided) return res;
        try {
            auto refined = precise::bisect_root(witness, lo, hi, (hi - lo) / 16,
                                                "witness-equation bracket refinement");
            lo = refined.lo;
            hi = refined.hi;
        } catch (const BracketError&) {
            notes << "bracket does not straddle the witness equation; ";
            return res;
        }
    }
    notes << "branch test unresolved after bracket refinement; ";
    return res;
}

} // namespace

BranchResult expansion_branches(const Rational& x, const Rational& q, int depth) {
    detail::RationalWalkCtx ctx(q);
    return detail::branch_walk(ctx, x, depth);
}

BranchResult expansion_branches(const Rational& x, const precise::Real& q, int depth) {
    detail::IntervalWalkCtx ctx(q);
    return detail::branch_walk(ctx, x, depth);
}

BranchResult expansion_branches_at_level(const Rational& x, int n, int depth) {
    bases::QnRing ring(n);
    detail::RingWalkCtx ctx(ring);
    return detail::branch_walk(ctx, x, depth);
}

words::BinaryWord greedy_expansion(const Rational& x, const Rational& q, size_t count) {
    detail::RationalWalkCtx ctx(q);
    require_representable(ctx, x, false);
    return detail::greedy_walk(ctx, x, count);
}

words::BinaryWord greedy_expansion(const Rational& x, const precise::Real& q, size_t count) {
    detail::IntervalWalkCtx ctx(q);
    require_representable(ctx, x, false);
    return detail::greedy_walk(ctx, x, count);
}

words::BinaryWord greedy_expansion_at_level(const Rational& x, int n, size_t count) {
    bases::QnRing ring(n);
    detail::RingWalkCtx ctx(ring);
    require_representable(ctx, x, false);
    return detail::greedy_walk(ctx, x, count);
}

words::BinaryWord quasi_greedy_expansion(const Rational& x, const Rational& q, size_t count) {
    detail::RationalWalkCtx ctx(q);
    require_representable(ctx, x, true);
    return detail::quasi_greedy_walk(ctx, x, count);
}

words::BinaryWord quasi_greedy_expansion_at_level(const Rational& x, int n, size_t count) {
    bases::QnRing ring(n);
    detail::RingWalkCtx ctx(ring);
    require_representable(ctx, x, true);
    return detail::quasi_greedy_walk(ctx, x, count);
}

UniquenessReport verify_uniqueness_at(const Rational& x,
                                      const precise::RootInterval& qs_bracket,
                                      const words::Seq& gamma, int level, int depth) {
    if (sgn(x) <= 0) throw DomainError("target must be positive");
    if (depth < 0) throw DomainError("depth must be non-negative");
    if (!(qs_bracket.lo > 1) || !(qs_bracket.hi < 2) || qs_bracket.lo > qs_bracket.hi)
        throw DomainError("base bracket must lie inside (1, 2)");

    UniquenessReport rep;
    std::ostringstream notes;

    family::FamilyAutomaton fam(level);
    rep.is_family_member = fam.is_member(gamma);
    if (!rep.is_family_member) notes << "witness lies outside the level family; ";

    rep.value_enclosed = precise::eval_at(gamma, qs_bracket.enclosure()).contains(x);
    if (!rep.value_enclosed) notes << "bracket value does not enclose the target; ";

    if (gamma == words::periodic(words::BinaryWord{1})) {
        // value(1^inf, q) = 1/(q-1), so the root is exactly 1 + 1/x and the
        // target sits exactly on the representable cap there, where digit 1
        // is forced with the remainder a fixed point of the shift.  No
        // interval can certify the cap equality; walk at the exact root.
        Rational root = 1 + Rational(1) / x;
        if (root < qs_bracket.lo || root > qs_bracket.hi) {
            notes << "all-ones witness root 1 + 1/x misses the bracket; ";
            rep.branches = BranchResult{BranchVerdict::Undecided, 0};
        } else {
            detail::RationalWalkCtx ctx(root);
            rep.branches = detail::branch_walk(ctx, x, depth);
        }
    } else {
        rep.branches = walk_over_bracket(x, qs_bracket, gamma, depth, notes);
    }

    switch (rep.branches.verdict) {
        case BranchVerdict::Unique:
            break;
        case BranchVerdict::Multiple:
            notes << "expansion branches at digit " << rep.branches.depth << "; ";
            break;
        case BranchVerdict::Infeasible:
            notes << "expansion leaves the representable interval at digit "
                  << rep.branches.depth << "; ";
            break;
        case BranchVerdict::Undecided:
            notes << "branch walk undecided at digit " << rep.branches.depth << "; ";
            break;
    }

    rep.pass = rep.is_family_member && rep.value_enclosed &&
               rep.branches.verdict == BranchVerdict::Unique;
    if (rep.pass) {
        std::ostringstream ok;
        ok << "unique through " << depth << " digits over the bracket";
        rep.detail = ok.str();
    } else {
        std::string d = notes.str();
        if (d.size() >= 2) d.erase(d.size() - 2); // trailing "; "
        rep.detail = d;
    }
    return rep;
}

} // namespace univoque::oracle

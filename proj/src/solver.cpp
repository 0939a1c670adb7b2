#include "univoque/solver.hpp"

#include <algorithm>

#include "univoque/eval.hpp"
#include "univoque/qn_ring.hpp"

namespace univoque::solver {
namespace {

using precise::Cmp;
using precise::Real;

Rational width_for_precision(int p) {
    return pow2_inv(static_cast<unsigned long>(std::max(32, p / 2)));
}

/// Certified comparison of a width-refinable enclosure against an exact
/// rational: retries at doubled precision and tightened base brackets until
/// the comparison decides.  The compared values here are irrational, so a
/// decision always exists; the cap guards against runaway cost.
template <class MakeEnclosure>
Cmp certified_cmp(MakeEnclosure make, const Rational& x, const std::string& what) {
    for (int p = precise::limits().start;; p *= 2) {
        precise::PrecisionGuard guard(p);
        Cmp c = make(width_for_precision(p)).compare(x);
        if (c != Cmp::Undecided) return c;
        if (p >= precise::limits().cap)
            throw BoundaryError("comparison undecided at the precision cap: " + what);
    }
}

/// Certified value(gamma, level-n base) <= x.  Interval comparison first,
/// exact ring arithmetic to settle ties (values can coincide with rational
/// targets, e.g. periodic witnesses evaluating to 1).
bool value_at_level_leq(const words::Seq& gamma, int n, const Rational& x,
                        const bases::BaseLadder& ladder) {
    for (int p = precise::limits().start;; p *= 2) {
        precise::PrecisionGuard guard(p);
        Real v = precise::eval_at(gamma, ladder.qn(n, width_for_precision(p)).enclosure());
        Cmp c = v.compare(x);
        if (c == Cmp::Less) return true;
        if (c == Cmp::Greater) return false;
        if (n <= bases::QnRing::kMaxLevel) {
            bases::QnRing ring(n);
            return bases::compare_value_at_root(ring, gamma, x) <= 0;
        }
        if (p >= precise::limits().cap)
            throw BoundaryError("level membership undecided at the precision cap");
    }
}

/// Left endpoint for the root bracket at level n: a rational a above the
/// level-(n-1) base with value(gamma, a) > x, obtained by walking the cached
/// bracket toward the base.  For n = 1 the endpoint walks down to 1 instead,
/// where the witness value grows without bound.
Rational left_bracket_endpoint(const words::Seq& gamma, int n, const Rational& x,
                               const bases::BaseLadder& ladder) {
    if (n == 1) {
        for (unsigned long t = 2; t <= 200; ++t) {
            Rational a = 1 + pow2_inv(t);
            if (precise::eval_at(gamma, a) > x) return a;
        }
        throw PrecisionError("no left bracket endpoint above 1");
    }
    Rational width = ladder.qn(n - 1).width();
    for (int tries = 0; tries < 2000; ++tries) {
        Rational a = ladder.qn(n - 1, width).hi;
        if (precise::eval_at(gamma, a) > x) return a;
        width /= 16;
    }
    throw PrecisionError("no left bracket endpoint above the previous level");
}

precise::RootInterval solve_level_root(const words::Seq& gamma, int n, const Rational& x,
                                       const bases::BaseLadder& ladder,
                                       const Rational& tol) {
    Rational a = left_bracket_endpoint(gamma, n, x, ladder);
    Rational b = ladder.qn(n, std::min(tol, ladder.tol())).hi;
    auto sign = precise::exact_sign_fn(
        [&gamma, &x](const Rational& q) -> Rational { return precise::eval_at(gamma, q) - x; });
    return precise::bisect_root(sign, a, b, tol,
                                "smallest unique base at level " + std::to_string(n));
}

/// The level witness and certified root, when x belongs to the level.
std::optional<QsResult> level_result(const Rational& x, int n,
                                     const bases::BaseLadder& ladder,
                                     const Rational& tol) {
    family::GammaSearchResult g = family::smallest_gamma(ladder, n, x);
    if (!g.found || !value_at_level_leq(*g.gamma, n, x, ladder)) return std::nullopt;
    QsResult r;
    r.cls = QsClass::BelowLimit;
    r.level = n;
    r.gamma = *g.gamma;
    r.qs = solve_level_root(*g.gamma, n, x, ladder, tol);
    r.path = "general-scan";
    return r;
}

} // namespace

Classification classify(const Rational& x, const bases::BaseLadder& ladder) {
    if (sgn(x) <= 0) throw DomainError("target must be positive");
    if (x == 1) return Classification{TargetClass::Exceptional, 0};
    if (x > 1) return Classification{TargetClass::Scannable, 0};

    // x in (0, 1): test the three gaps.  Endpoints are irrational, so every
    // comparison against rational x decides at some finite precision.
    for (int p = precise::limits().start;; p *= 2) {
        precise::PrecisionGuard guard(p);
        Rational width = width_for_precision(p);
        bool undecided = false;
        int undecided_gap = 0;
        for (int k = 1; k <= 3; ++k) {
            Cmp cl = ladder.gap_left(k, width).compare(x);
            Cmp cr = ladder.gap_right(k, width).compare(x);
            if (cl == Cmp::Less && cr == Cmp::Greater)
                return Classification{TargetClass::InGap, k};
            if (cl == Cmp::Undecided || cr == Cmp::Undecided) {
                undecided = true;
                undecided_gap = k;
            }
        }
        if (!undecided) return Classification{TargetClass::Scannable, 0};
        if (p >= precise::limits().cap)
            throw BoundaryError("gap comparison undecided at the precision cap",
                                undecided_gap);
    }
}

precise::RootInterval qs_closed_large(const Rational& x, const bases::BaseLadder& ladder,
                                      const Rational& tol) {
    if (tol <= 0) throw DomainError("tolerance must be positive");
    Cmp against = certified_cmp(
        [&ladder](const Rational& w) {
            return precise::eval_at(words::periodic(words::BinaryWord{1}),
                                    ladder.qn(1, w).enclosure());
        },
        x, "target against z_1");
    if (against == Cmp::Greater)
        throw DomainError("closed form requires the target at or above z_1");
    Rational root = 1 + 1 / x;
    Rational d = std::min(Rational(tol / 4), Rational((root - 1) / 2));
    return precise::RootInterval{root - d, root + d, "smallest unique base (large target)"};
}

MidbandResult qs_closed_midband(const Rational& x, const bases::BaseLadder& ladder,
                                const Rational& tol) {
    if (tol <= 0) throw DomainError("tolerance must be positive");
    Cmp below = certified_cmp(
        [&ladder](const Rational& w) { return ladder.zn(2, w); }, x,
        "target against z_2");
    if (below == Cmp::Greater)
        throw DomainError("closed form requires the target at or above z_2");
    Cmp above = certified_cmp(
        [&ladder](const Rational& w) {
            return precise::eval_at(words::periodic(words::BinaryWord{1}),
                                    ladder.qn(1, w).enclosure());
        },
        x, "target against z_1");
    if (above == Cmp::Less)
        throw DomainError("closed form requires the target below z_1");

    int k = 1;
    for (; k < 10000; ++k) {
        Cmp c = certified_cmp(
            [&ladder, k](const Rational& w) { return ladder.z1k(k + 1, w); }, x,
            "target against z_{1," + std::to_string(k + 1) + "}");
        if (c == Cmp::Greater) break; // z_{1,k+1} > x: cell found
    }
    words::Seq gamma(words::BinaryWord::repeated(1, static_cast<size_t>(k) + 1),
                     words::BinaryWord{0, 1});
    MidbandResult r{k, gamma, precise::RootInterval{}};

    Rational a = left_bracket_endpoint(gamma, 2, x, ladder);
    Rational b = ladder.qn(2, std::min(tol, ladder.tol())).hi;
    auto sign = precise::exact_sign_fn(
        [&gamma, &x](const Rational& q) -> Rational { return precise::eval_at(gamma, q) - x; });
    r.root = precise::bisect_root(sign, a, b, tol, "smallest unique base (midband)");
    return r;
}

bool membership_dn(const Rational& x, int n, const bases::BaseLadder& ladder) {
    family::GammaSearchResult g = family::smallest_gamma(ladder, n, x);
    return g.found && value_at_level_leq(*g.gamma, n, x, ladder);
}

QsResult qs(const Rational& x, const bases::BaseLadder& ladder, const QsOptions& opt) {
    if (opt.tol <= 0) throw DomainError("tolerance must be positive");
    if (opt.max_level < 1) throw DomainError("max level must be positive");

    Classification cls = classify(x, ladder);
    if (cls.kind == TargetClass::Exceptional) {
        QsResult r;
        r.cls = QsClass::AtLimit;
        r.qs = ladder.q_limit(opt.tol);
        r.path = "exceptional-point";
        return r;
    }
    if (cls.kind == TargetClass::InGap) {
        QsResult r;
        r.cls = QsClass::AboveLimit;
        r.gap_index = cls.gap_index;
        r.path = "gap-interval";
        return r;
    }

    if (!opt.force_general) {
        // Closed forms cover everything from z_2 up.
        Cmp vs_z2 = certified_cmp(
            [&ladder](const Rational& w) { return ladder.zn(2, w); }, x,
            "target against z_2");
        if (vs_z2 == Cmp::Less) { // z_2 < x
            Cmp vs_z1 = certified_cmp(
                [&ladder](const Rational& w) {
                    return precise::eval_at(words::periodic(words::BinaryWord{1}),
                                            ladder.qn(1, w).enclosure());
                },
                x, "target against z_1");
            QsResult r;
            r.cls = QsClass::BelowLimit;
            if (vs_z1 == Cmp::Less) {
                r.level = 1;
                r.gamma = words::periodic(words::BinaryWord{1});
                r.qs = qs_closed_large(x, ladder, opt.tol);
                r.path = "closed-form-large";
            } else {
                MidbandResult m = qs_closed_midband(x, ladder, opt.tol);
                r.level = 2;
                r.gamma = m.gamma;
                r.qs = m.root;
                r.path = "closed-form-midband";
            }
            return r;
        }
    }

    int top = std::min(opt.max_level, ladder.scan_limit());
    for (int n = 1; n <= top; ++n) {
        if (auto r = level_result(x, n, ladder, opt.tol)) return *r;
    }

    QsResult r;
    r.cls = QsClass::NearLimit;
    r.level = top;
    r.qs = precise::RootInterval{ladder.qn(top).lo, ladder.q_limit(opt.tol).hi,
                                 "bracket between the last scanned level and the limit"};
    r.path = "level-cap";
    return r;
}

QsClass classify_enclosure(const precise::Real& x, const bases::BaseLadder& ladder) {
    if (x.sign_lo() <= 0) throw DomainError("target enclosure must be positive");
    Rational width = x.width();
    if (width == 0) width = width_for_precision(precise::current_precision());

    // The exceptional points: 1 and the three gap right endpoints.
    if (x.contains(Rational(1))) return QsClass::AtLimit;
    for (int k = 1; k <= 3; ++k)
        if (x.compare(ladder.gap_right(k, width)) == Cmp::Undecided)
            return QsClass::AtLimit;

    bool outside_all = true;
    for (int k = 1; k <= 3; ++k) {
        Real left = ladder.gap_left(k, width);
        Real right = ladder.gap_right(k, width);
        if (left.compare(x) == Cmp::Less && right.compare(x) == Cmp::Greater)
            return QsClass::AboveLimit; // certified inside the k-th gap
        bool outside = (x.compare(left) == Cmp::Less) ||
                       (x.compare(right) == Cmp::Greater);
        outside_all = outside_all && outside;
    }
    if (outside_all) return QsClass::BelowLimit;
    throw BoundaryError("enclosure straddles a gap endpoint");
}

} // namespace univoque::solver

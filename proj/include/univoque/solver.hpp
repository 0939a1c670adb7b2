#pragma once

#include <optional>
#include <string>

#include "univoque/bases.hpp"
#include "univoque/family.hpp"
#include "univoque/roots.hpp"

namespace univoque::solver {

/// Where a positive target sits relative to the regions that decide its
/// smallest unique base.
enum class TargetClass {
    Scannable,   // the level scan (or a closed form) applies
    InGap,       // inside one of the three exclusion gaps in (0, 1)
    Exceptional, // equal to a point whose smallest unique base is the limit
};

struct Classification {
    TargetClass kind;
    int gap_index = 0; // 1..3 when InGap
};

/// Classify an exact positive rational target.  Gap endpoints are irrational,
/// so membership is decidable; the only rational exceptional point is 1.
Classification classify(const Rational& x, const bases::BaseLadder& ladder);

enum class QsClass {
    BelowLimit, // q_s(x) < limit: witnessed at a finite ladder level
    AtLimit,    // q_s(x) = limit (exceptional points)
    AboveLimit, // q_s(x) > limit (gap targets)
    NearLimit,  // q_s(x) lies between the last scanned level and the limit
};

struct QsOptions {
    Rational tol = make_rational(1, Integer("1000000000000")); // 1e-12
    int max_level = 20;
    bool force_general = false; // skip the closed forms, always scan
};

struct QsResult {
    QsClass cls;
    int level = 0;                           // witnessing level (BelowLimit),
                                             // last level scanned (NearLimit)
    std::optional<words::Seq> gamma;         // the witness expansion
    std::optional<precise::RootInterval> qs; // enclosure of the smallest
                                             // unique base (absent AboveLimit)
    int gap_index = 0;                       // when AboveLimit
    std::string path; // closed-form-large | closed-form-midband |
                      // general-scan | gap-interval | exceptional-point |
                      // level-cap
};

/// The smallest base in (1, 2] at which the target has a unique expansion.
/// Certified at every step: classification, level membership, and the final
/// root bracket of width at most opt.tol.
QsResult qs(const Rational& x, const bases::BaseLadder& ladder,
            const QsOptions& opt = {});

/// Closed form for x at or above z_1: the smallest unique base solves
/// x = 1/(q - 1) with witness 1^inf, so q = 1 + 1/x exactly.
precise::RootInterval qs_closed_large(const Rational& x,
                                      const bases::BaseLadder& ladder,
                                      const Rational& tol);

struct MidbandResult {
    int k;            // cell index: z_{1,k} <= x < z_{1,k+1} (k = 1 covers [z_2, z_{1,2}))
    words::Seq gamma; // 1^(k+1) (01)^inf
    precise::RootInterval root;
};

/// Closed form on [z_2, z_1): locate the cell between consecutive z_{1,k}
/// and solve value(1^(k+1) (01)^inf, q) = x on (q_1, q_2] by exact bisection.
MidbandResult qs_closed_midband(const Rational& x, const bases::BaseLadder& ladder,
                                const Rational& tol);

/// Does x keep a unique expansion at every base of the open level-n ladder
/// interval?  Holds iff the smallest witness exists and its value at the
/// level-n base does not exceed x.
bool membership_dn(const Rational& x, int n, const bases::BaseLadder& ladder);

/// Classification of an enclosure input, decided at the current working
/// precision: an enclosure meeting an exceptional value's enclosure counts
/// as AtLimit, one certified inside a gap is AboveLimit, one certified away
/// from the gaps and the exceptional points is BelowLimit.  Undecidable
/// mixtures raise BoundaryError.
QsClass classify_enclosure(const precise::Real& x, const bases::BaseLadder& ladder);

} // namespace univoque::solver

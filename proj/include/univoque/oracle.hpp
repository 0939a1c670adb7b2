#pragma once

#include <string>

#include "univoque/bases.hpp"
#include "univoque/oracle_types.hpp"
#include "univoque/precise.hpp"
#include "univoque/rational.hpp"
#include "univoque/roots.hpp"
#include "univoque/words.hpp"

namespace univoque::oracle {

/// Walk the expansion of x in base q, testing at each step whether both
/// digits keep the remainder representable.  Exact rational arithmetic:
/// verdicts are never Undecided.
BranchResult expansion_branches(const Rational& x, const Rational& q, int depth);

/// Same walk over a base enclosure.  Returns Undecided when an admissibility
/// sign cannot be certified at the enclosure's width.
BranchResult expansion_branches(const Rational& x, const precise::Real& q, int depth);

/// Same walk at the exact level-n ladder base, by ring arithmetic.
BranchResult expansion_branches_at_level(const Rational& x, int n, int depth);

/// Greedy expansion (ties take digit 1) of x in base q.  x must lie in
/// [0, 1/(q-1)].  The enclosure variant raises BoundaryError with the digit
/// index when a digit cannot be certified.
words::BinaryWord greedy_expansion(const Rational& x, const Rational& q, size_t count);
words::BinaryWord greedy_expansion(const Rational& x, const precise::Real& q, size_t count);
words::BinaryWord greedy_expansion_at_level(const Rational& x, int n, size_t count);

/// Quasi-greedy expansion (ties take digit 0) of x in base q; x in (0, 1/(q-1)].
words::BinaryWord quasi_greedy_expansion(const Rational& x, const Rational& q, size_t count);
words::BinaryWord quasi_greedy_expansion_at_level(const Rational& x, int n, size_t count);

struct UniquenessReport {
    bool pass = false;           // all three checks below hold
    bool is_family_member = false;
    bool value_enclosed = false; // value(gamma, bracket) encloses x
    BranchResult branches{BranchVerdict::Undecided, 0};
    std::string detail;
};

/// Cross-check a solved smallest unique base: the witness belongs to the
/// level family, its value over the bracket encloses x, and the expansion of
/// x is branch-free through the requested depth at bases inside the bracket
/// (the bracket is re-bisected as tight as the walk demands).
UniquenessReport verify_uniqueness_at(const Rational& x,
                                      const precise::RootInterval& qs_bracket,
                                      const words::Seq& gamma, int level, int depth);

} // namespace univoque::oracle

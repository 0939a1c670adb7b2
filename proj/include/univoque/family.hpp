#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univoque/bases.hpp"
#include "univoque/rational.hpp"
#include "univoque/words.hpp"

namespace univoque::family {

/// Recognizer for the level-n family of sequences
///   B_1^{a_1} B_2^{a_2} ... B_{j-1}^{a_{j-1}} (B_j)^inf,   1 <= j <= n,
/// together with their digitwise reflections, where B_j is the j-th parity
/// block: the first 2^(j-1) parity digits with the last digit lowered.
/// These are exactly the unique expansions that exist at every base of the
/// open level-n ladder interval.
///
/// The plain branch is a DFA over states (j, p): "inside an occurrence of a
/// block of index >= j, p digits of the underlying parity prefix consumed".
/// Off block boundaries the next parity digit is forced; at a boundary
/// (p = 2^(j-1) - 1, where the parity digit is 1 and the block digit is 0)
/// digit 0 closes the block and restarts at (j, 0), while digit 1 follows
/// the parity prefix into the next block index, if any.  A sequence belongs
/// to the family iff the plain branch never rejects it or never rejects its
/// reflection; no acceptance marking is needed because every infinite
/// surviving run settles into repeating some (B_j)^inf.
class FamilyAutomaton {
public:
    static constexpr int kMaxLevel = 16;

    explicit FamilyAutomaton(int n);

    int level() const { return n_; }
    size_t state_count() const { return trans_.size(); }

    /// A joint state of the plain branch and the reflected branch
    /// (-1 = that branch has rejected).  Tracking both at once makes the
    /// family prefix-decidable: a prefix extends to a member iff some branch
    /// is alive.
    struct State {
        int plain;
        int refl;
        bool operator==(const State&) const = default;
    };

    State initial() const;
    bool alive(const State& s) const { return s.plain >= 0 || s.refl >= 0; }
    State step(const State& s, int digit) const;
    bool allows(const State& s, int digit) const;

    /// Full-sequence membership.
    bool is_member(const words::Seq& s) const;

    /// The lexicographically smallest / largest member continuation from a
    /// live state.  Deterministic digit choice makes the continuation
    /// eventually periodic; it is returned in canonical form.
    words::Seq lexmin_continuation(const State& s) const;
    words::Seq lexmax_continuation(const State& s) const;

private:
    int n_;
    words::BinaryWord parity_; // t_1 .. t_{2^(n-1)}
    std::vector<std::array<int, 2>> trans_;
    int start_;

    bool accepts_plain(const words::Seq& s) const;
    words::Seq extremal_continuation(const State& s, int preferred) const;
};

/// Outcome of the smallest-witness search at one ladder level.
struct GammaSearchResult {
    bool found = false;
    std::optional<words::Seq> gamma; // lexicographically smallest witness
    int depth_used = 0;
    std::string note;
};

/// The lexicographically smallest level-n family member gamma whose value at
/// the level-(n-1) base exceeds x, or found = false when no member's value
/// does.  All comparisons are certified against enclosures of the base that
/// tighten adaptively; a comparison that stays undecided at the precision
/// cap raises BoundaryError (x sits exactly on a family value), and
/// exceeding depth_cap digits of descent reports found = false with a note.
///
/// Level 1 is immediate: the family is {0^inf, 1^inf} and the value of
/// 1^inf at the empty-product base 1 is unbounded, so gamma = 1^inf for
/// every positive x.
GammaSearchResult smallest_gamma(const bases::BaseLadder& ladder, int n,
                                 const Rational& x, size_t depth_cap = 4096);

} // namespace univoque::family

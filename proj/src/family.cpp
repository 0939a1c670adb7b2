#include "univoque/family.hpp"

#include <map>
#include <unordered_map>
#include <utility>

#include "univoque/eval.hpp"

namespace univoque::family {
namespace {

uint64_t pair_key(const FamilyAutomaton::State& s) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(s.plain + 1)) << 32) |
           static_cast<uint32_t>(s.refl + 1);
}

} // namespace

FamilyAutomaton::FamilyAutomaton(int n) : n_(n) {
    if (n < 1 || n > kMaxLevel) throw SizeError("family level out of range");
    size_t top_len = size_t{1} << (n - 1);
    parity_ = words::thue_morse_word(top_len);

    // Plain states (j, p): p parity digits of the current block-index-j run
    // consumed.  Every p below the block length is reachable: the forced
    // chain from (j, 0) walks through all of them, and a bump from the level
    // below enters at p = 2^(j-2).
    std::map<std::pair<int, size_t>, int> id;
    std::vector<std::pair<int, size_t>> states;
    auto add_state = [&](int j, size_t p) {
        auto [it, fresh] = id.try_emplace({j, p}, static_cast<int>(states.size()));
        if (fresh) states.emplace_back(j, p);
        return it->second;
    };
    for (int j = 1; j <= n; ++j) {
        size_t len = size_t{1} << (j - 1);
        for (size_t p = 0; p < len; ++p) add_state(j, p);
    }

    trans_.assign(states.size(), {-1, -1});
    for (size_t s = 0; s < states.size(); ++s) {
        auto [j, p] = states[s];
        size_t len = size_t{1} << (j - 1);
        if (p == len - 1) {
            // Block boundary; the parity digit here is 1 (the index is a
            // power of two), the block digit is its lowered form 0.
            if (parity_[p] != 1) throw Error("internal: parity block boundary");
            trans_[s][0] = id.at({j, 0});
            if (j < n) trans_[s][1] = id.at({j + 1, p + 1});
        } else {
            int forced = parity_[p];
            trans_[s][forced] = id.at({j, p + 1});
        }
    }
    start_ = id.at({1, 0});
}

FamilyAutomaton::State FamilyAutomaton::initial() const {
    return State{start_, start_};
}

FamilyAutomaton::State FamilyAutomaton::step(const State& s, int digit) const {
    if (digit != 0 && digit != 1) throw DomainError("digit must be 0 or 1");
    State t{-1, -1};
    if (s.plain >= 0) t.plain = trans_[static_cast<size_t>(s.plain)][digit];
    if (s.refl >= 0) t.refl = trans_[static_cast<size_t>(s.refl)][1 - digit];
    return t;
}

bool FamilyAutomaton::allows(const State& s, int digit) const {
    return alive(step(s, digit));
}

bool FamilyAutomaton::accepts_plain(const words::Seq& s) const {
    int st = start_;
    const auto& pre = s.preamble();
    for (size_t i = 0; i < pre.size(); ++i) {
        st = trans_[static_cast<size_t>(st)][pre[i]];
        if (st < 0) return false;
    }
    const auto& cyc = s.cycle();
    std::vector<bool> seen(trans_.size(), false);
    while (!seen[static_cast<size_t>(st)]) {
        seen[static_cast<size_t>(st)] = true;
        for (size_t i = 0; i < cyc.size(); ++i) {
            st = trans_[static_cast<size_t>(st)][cyc[i]];
            if (st < 0) return false;
        }
    }
    // A full cycle pass returned to an already-visited state without dying:
    // the run survives forever.
    return true;
}

bool FamilyAutomaton::is_member(const words::Seq& s) const {
    return accepts_plain(s) || accepts_plain(words::reflect(s));
}

words::Seq FamilyAutomaton::extremal_continuation(const State& s, int preferred) const {
    if (!alive(s)) throw DomainError("continuation from a dead state");
    std::unordered_map<uint64_t, size_t> seen;
    words::BinaryWord digits;
    State cur = s;
    for (;;) {
        auto [it, fresh] = seen.try_emplace(pair_key(cur), digits.size());
        if (!fresh) {
            size_t split = it->second;
            words::BinaryWord pre = digits.prefix(split);
            words::BinaryWord cyc;
            for (size_t i = split; i < digits.size(); ++i) cyc.push_back(digits[i]);
            return words::Seq(std::move(pre), std::move(cyc));
        }
        int d = preferred;
        if (!allows(cur, d)) d = 1 - d;
        if (!allows(cur, d)) throw Error("internal: live state with no continuation");
        digits.push_back(d);
        cur = step(cur, d);
    }
}

words::Seq FamilyAutomaton::lexmin_continuation(const State& s) const {
    return extremal_continuation(s, 0);
}

words::Seq FamilyAutomaton::lexmax_continuation(const State& s) const {
    return extremal_continuation(s, 1);
}

namespace {

// One full descent at a fixed working precision.  Throws UndecidedError when
// an enclosure comparison cannot be settled (the caller retries at doubled
// precision); exact ties against x are settled by ring arithmetic where the
// ring level allows it.
GammaSearchResult descend(const FamilyAutomaton& aut, const bases::BaseLadder& ladder,
                          int n, const Rational& x, size_t depth_cap) {
    using precise::Cmp;
    using precise::Real;

    Rational width = pow2_inv(static_cast<unsigned long>(
        std::max(32, precise::current_precision() / 2)));
    Real q = ladder.qn(n - 1, width).enclosure();
    Real qinv = q.inv();

    std::optional<bases::QnRing> ring;
    if (n - 1 <= bases::QnRing::kMaxLevel) ring.emplace(n - 1);

    // Settle value(full) vs x for a fully described candidate; +1/0/-1, and
    // UndecidedError when no exact route exists.
    auto exact_compare = [&](const words::Seq& full) -> int {
        if (!ring)
            throw detail::UndecidedError("comparison against the target undecided");
        return bases::compare_value_at_root(*ring, full, x);
    };

    struct ContInfo {
        words::Seq seq;
        Real value;
    };
    std::unordered_map<uint64_t, ContInfo> mins, maxs;
    auto continuation = [&](const FamilyAutomaton::State& s, bool want_max) -> const ContInfo& {
        auto& memo = want_max ? maxs : mins;
        uint64_t key = pair_key(s);
        auto it = memo.find(key);
        if (it == memo.end()) {
            words::Seq c = want_max ? aut.lexmax_continuation(s) : aut.lexmin_continuation(s);
            Real v = precise::eval_at(c, q);
            it = memo.emplace(key, ContInfo{std::move(c), std::move(v)}).first;
        }
        return it->second;
    };

    auto assemble = [](const words::BinaryWord& chosen, const words::Seq& cont) {
        return words::Seq(chosen + cont.preamble(), cont.cycle());
    };

    FamilyAutomaton::State state = aut.initial();
    Real pv(0);   // value of the digits fixed so far
    Real qpow(1); // q^-depth
    words::BinaryWord chosen;

    // Viability: some member value must exceed x, else there is no witness.
    {
        const ContInfo& top = continuation(state, true);
        Cmp c = top.value.compare(x);
        if (c == Cmp::Undecided && exact_compare(assemble(chosen, top.seq)) <= 0)
            c = Cmp::Less;
        if (c == Cmp::Less)
            return GammaSearchResult{false, std::nullopt, 0,
                                     "no family value exceeds the target"};
    }

    for (size_t depth = 0;; ++depth) {
        const ContInfo& low = continuation(state, false);
        Cmp c = (pv + qpow * low.value).compare(x);
        if (c == Cmp::Undecided) {
            // Could be an exact tie sitting on a family value; settle it.
            int sign = exact_compare(assemble(chosen, low.seq));
            c = sign > 0 ? Cmp::Greater : Cmp::Less; // a tie is not a witness
        }
        if (c == Cmp::Greater) {
            return GammaSearchResult{true, assemble(chosen, low.seq),
                                     static_cast<int>(depth),
                                     "certified against the level-" +
                                         std::to_string(n - 1) + " base enclosure"};
        }
        if (depth == depth_cap)
            return GammaSearchResult{false, std::nullopt, static_cast<int>(depth),
                                     "descent exceeded the depth cap"};

        // Keep digit 0 iff the 0-subtree still contains a witness.
        bool take0 = false;
        if (aut.allows(state, 0)) {
            FamilyAutomaton::State s0 = aut.step(state, 0);
            const ContInfo& high0 = continuation(s0, true);
            Cmp c0 = (pv + qpow * qinv * high0.value).compare(x);
            if (c0 == Cmp::Undecided) {
                words::BinaryWord with0 = chosen;
                with0.push_back(0);
                // A subtree whose maximum merely ties x holds no witness.
                c0 = exact_compare(assemble(with0, high0.seq)) > 0 ? Cmp::Greater
                                                                   : Cmp::Less;
            }
            take0 = (c0 == Cmp::Greater);
        }
        if (take0) {
            chosen.push_back(0);
            state = aut.step(state, 0);
        } else {
            if (!aut.allows(state, 1))
                throw detail::UndecidedError("descent dead end under enclosure slack");
            FamilyAutomaton::State s1 = aut.step(state, 1);
            const ContInfo& high1 = continuation(s1, true);
            // The candidate total includes the digit 1 itself: q^-(d+1) (1 + cont).
            Cmp c1 = (pv + qpow * qinv * (Real(1) + high1.value)).compare(x);
            if (c1 == Cmp::Undecided) {
                words::BinaryWord with1 = chosen;
                with1.push_back(1);
                c1 = exact_compare(assemble(with1, high1.seq)) > 0 ? Cmp::Greater
                                                                   : Cmp::Less;
            }
            if (c1 != Cmp::Greater)
                throw detail::UndecidedError("descent lost the witness under enclosure slack");
            chosen.push_back(1);
            pv = pv + qpow * qinv;
            state = s1;
        }
        qpow = qpow * qinv;
    }
}

} // namespace

GammaSearchResult smallest_gamma(const bases::BaseLadder& ladder, int n,
                                 const Rational& x, size_t depth_cap) {
    if (sgn(x) <= 0) throw DomainError("target must be positive");
    if (n < 1 || n > FamilyAutomaton::kMaxLevel)
        throw DomainError("family level out of range");
    if (n == 1) {
        // The family is {0^inf, 1^inf}; at level 0 there is no base interval
        // to evaluate over, and the nonzero member dominates every target.
        return GammaSearchResult{true, words::periodic(words::BinaryWord{1}), 0,
                                 "level 1 is immediate"};
    }

    FamilyAutomaton aut(n);
    int p = precise::limits().start;
    for (;;) {
        try {
            precise::PrecisionGuard guard(p);
            return descend(aut, ladder, n, x, depth_cap);
        } catch (const detail::UndecidedError& e) {
            if (p >= precise::limits().cap)
                throw BoundaryError(
                    std::string("witness search undecided at the precision cap: ") +
                    e.what());
            p *= 2;
        }
    }
}

} // namespace univoque::family

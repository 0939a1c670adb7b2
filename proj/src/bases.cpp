#include "univoque/bases.hpp"

#include "univoque/digit_walk.hpp"

namespace univoque::bases {
namespace {

// f_n(q) = sum_{i=1}^{2^n} t_i q^-i - 1, strictly decreasing on (1, 2),
// positive at 3/2 and negative at 2 for every level.
precise::Real level_relation(const words::BinaryWord& coeff, const precise::Real& q) {
    precise::Real y = q.inv();
    precise::Real acc(0), one(1);
    for (size_t i = coeff.size(); i >= 1; --i) {
        if (coeff[i - 1]) acc = acc + one;
        acc = acc * y;
    }
    return acc - one;
}

// Enclosure of sum_{i>m} t_i q^-i: [0, q^-m / (q - 1)].
precise::Real series_tail(const precise::Real& q, size_t m) {
    precise::Real hi = q.pow_int(-static_cast<long>(m)) / (q - precise::Real(1));
    return precise::Real::from_endpoints(Rational(0), hi.hi_rational());
}

// Sign of the full-series relation sum_{i>=1} t_i q^-i - 1 at a rational
// point, deciding with as few terms and bits as the point allows.
precise::Sign limit_relation_sign(const Rational& m) {
    size_t terms = 64;
    for (int p = precise::limits().start;; p *= 2, terms *= 2) {
        precise::PrecisionGuard guard(p);
        if (terms > words::kMaxWordLength) terms = words::kMaxWordLength;
        precise::Real q = precise::Real::from_rational(m);
        precise::Real partial = level_relation(words::thue_morse_word(terms), q);
        precise::Real v = partial + series_tail(q, terms);
        if (v.sign_hi() < 0) return precise::Sign::Negative;
        if (v.sign_lo() > 0) return precise::Sign::Positive;
        if (p >= precise::limits().cap) return precise::Sign::Undecided;
    }
}

} // namespace

BaseLadder::BaseLadder(Rational tol, int max_level)
    : tol_(std::move(tol)), max_level_(max_level) {
    if (tol_ <= 0) throw DomainError("ladder tolerance must be positive");
    if (max_level_ < 1 || max_level_ > 20)
        throw DomainError("ladder max level out of range [1, 20]");
    levels_.resize(static_cast<size_t>(max_level_) + 1);
}

BaseLadder::Bracket BaseLadder::refined_level(int n, const Rational& width) const {
    if (n < 1 || n > max_level_) throw DomainError("ladder level out of range");
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = levels_[static_cast<size_t>(n)];
    if (!slot) slot = Bracket{Rational(3, 2), Rational(2)};
    if (slot->hi - slot->lo > width) {
        words::BinaryWord coeff = words::thue_morse_word(size_t{1} << n);
        auto sign = precise::interval_sign_fn(
            [&coeff](const precise::Real& q) { return level_relation(coeff, q); });
        auto r = precise::bisect_root(sign, slot->lo, slot->hi, width,
                                      "ladder base level " + std::to_string(n));
        *slot = Bracket{r.lo, r.hi};
    }
    return *slot;
}

BaseLadder::Bracket BaseLadder::refined_limit(const Rational& width) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!limit_) limit_ = Bracket{Rational(3, 2), Rational(2)};
    if (limit_->hi - limit_->lo > width) {
        auto sign = [](const Rational& m) { return limit_relation_sign(m); };
        auto r = precise::bisect_root(sign, limit_->lo, limit_->hi, width,
                                      "ladder limit base");
        *limit_ = Bracket{r.lo, r.hi};
    }
    return *limit_;
}

precise::RootInterval BaseLadder::qn(int n) const { return qn(n, tol_); }

precise::RootInterval BaseLadder::qn(int n, const Rational& width) const {
    Bracket b = refined_level(n, width);
    return precise::RootInterval{b.lo, b.hi, "ladder base level " + std::to_string(n)};
}

precise::RootInterval BaseLadder::q_limit() const { return q_limit(tol_); }

precise::RootInterval BaseLadder::q_limit(const Rational& width) const {
    Bracket b = refined_limit(width);
    return precise::RootInterval{b.lo, b.hi, "ladder limit base"};
}

int BaseLadder::scan_limit() const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (scan_limit_ >= 0) return scan_limit_;
    }
    Rational near = pow2_inv(46); // ~1.4e-14
    Rational width = pow2_inv(50);
    int found = max_level_;
    for (int n = 1; n <= max_level_; ++n) {
        Bracket level = refined_level(n, width);
        Bracket limit = refined_limit(width);
        if (limit.hi - level.lo < near) {
            found = n;
            break;
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    scan_limit_ = found;
    return scan_limit_;
}

precise::Real BaseLadder::zn(int n) const { return zn(n, tol_); }

precise::Real BaseLadder::zn(int n, const Rational& width) const {
    size_t half = size_t{1} << (n - 1);
    words::BinaryWord head = words::thue_morse_word(half);
    words::Seq seq(head, words::word_plus(words::reflect(head)));
    return precise::eval_at(seq, qn(n, width).enclosure());
}

precise::Real BaseLadder::zn_minus_one(int n) const { return zn_minus_one(n, tol_); }

precise::Real BaseLadder::zn_minus_one(int n, const Rational& width) const {
    size_t half = size_t{1} << (n - 1);
    words::BinaryWord head = words::thue_morse_word(half);
    words::BinaryWord cyc = words::word_plus(words::reflect(head));
    // The first 2^n digits of head (cyc)^inf are head + cyc, which are
    // exactly the defining-relation digits t_1 .. t_{2^n}: indices
    // 2^(n-1)+i mirror the complement of index i for i < 2^(n-1), while the
    // top index is a power of two and has parity 1, which is the raised
    // final digit.
    if (!(head + cyc == words::thue_morse_word(half * 2)))
        throw Error("internal: block identity violated");
    precise::Real q = qn(n, width).enclosure();
    precise::Real tail = precise::eval_at(words::periodic(cyc), q);
    return q.pow_int(-static_cast<long>(half * 2)) * tail;
}

precise::Real BaseLadder::z1k(int k) const { return z1k(k, tol_); }

precise::Real BaseLadder::z1k(int k, const Rational& width) const {
    if (k < 1) throw DomainError("z1k index must be positive");
    words::Seq seq(words::BinaryWord::repeated(1, static_cast<size_t>(k)),
                   words::BinaryWord{0, 1});
    return precise::eval_at(seq, qn(1, width).enclosure());
}

precise::Real BaseLadder::gap_left(int k) const { return gap_left(k, tol_); }

precise::Real BaseLadder::gap_left(int k, const Rational& width) const {
    if (k < 1 || k > 3) throw DomainError("gap index must be 1, 2 or 3");
    words::Seq seq(words::BinaryWord::repeated(0, static_cast<size_t>(k)),
                   words::BinaryWord{1, 0});
    return precise::eval_at(seq, qn(1, width).enclosure());
}

precise::Real BaseLadder::gap_right(int k) const { return gap_right(k, tol_); }

precise::Real BaseLadder::gap_right(int k, const Rational& width) const {
    if (k < 1 || k > 3) throw DomainError("gap index must be 1, 2 or 3");
    words::Seq seq(words::BinaryWord::repeated(0, static_cast<size_t>(k - 1)),
                   words::BinaryWord{1, 0});
    return precise::eval_at(seq, q_limit(width).enclosure());
}

words::BinaryWord BaseLadder::alpha_at_level(int n, size_t count) const {
    QnRing ring(n);
    detail::RingWalkCtx ctx(ring);
    return detail::quasi_greedy_walk(ctx, Rational(1), count);
}

words::BinaryWord quasi_greedy_alpha(const Rational& q, size_t count) {
    detail::RationalWalkCtx ctx(q);
    return detail::quasi_greedy_walk(ctx, Rational(1), count);
}

words::BinaryWord quasi_greedy_alpha(const precise::Real& q, size_t count) {
    detail::IntervalWalkCtx ctx(q);
    return detail::quasi_greedy_walk(ctx, Rational(1), count);
}

} // namespace univoque::bases

#include "univoque/qn_ring.hpp"

#include "univoque/errors.hpp"

namespace univoque::bases {
namespace {

// Bracket width at which a stalled sign query checks for exact vanishing.
constexpr unsigned long kVanishTestBits = 256;
// Bracket widths below 2^-kMaxRefineBits abort sign queries.
constexpr unsigned long kMaxRefineBits = 8192;

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Remainder of a by b over Q[q]; b trimmed and nonzero.
Poly poly_rem(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int sign_at(const Poly& p, const Rational& t) {
    Rational acc(0);
    for (size_t i = p.size(); i > 0; --i) acc = acc * t + p[i - 1];
    return sgn(acc);
}

} // namespace

QnRing::QnRing(int n) : n_(n), lo_(3, 2), hi_(2) {
    if (n < 1 || n > kMaxLevel) throw SizeError("ring level out of range");
    deg_ = size_t{1} << n;
    coeff_ = words::thue_morse_word(deg_);
    // The relation value sum t_i q^-i - 1 is positive at 3/2 (its first two
    // terms already exceed 1) and negative at 2, so [3/2, 2] brackets the
    // root at every level.
}

QnRing::Elem QnRing::zero() const { return Elem(deg_, Integer(0)); }

QnRing::Elem QnRing::from_integer(const Integer& v) const {
    Elem e = zero();
    e[0] = v;
    return e;
}

QnRing::Elem QnRing::add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (size_t i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
    return r;
}

QnRing::Elem QnRing::sub(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (size_t i = 0; i < deg_; ++i) r[i] = a[i] - b[i];
    return r;
}

QnRing::Elem QnRing::scale(const Elem& a, const Integer& c) const {
    Elem r(deg_);
    for (size_t i = 0; i < deg_; ++i) r[i] = a[i] * c;
    return r;
}

QnRing::Elem QnRing::mul_q(const Elem& a) const {
    Elem r(deg_);
    Integer top = a[deg_ - 1];
    for (size_t i = deg_ - 1; i > 0; --i) r[i] = a[i - 1];
    r[0] = 0;
    if (top != 0) {
        // q^N = sum_i t_i q^{N-i}; fold the overflowing coefficient back in.
        for (size_t i = 1; i <= deg_; ++i)
            if (coeff_[i - 1]) r[deg_ - i] += top;
    }
    return r;
}

bool QnRing::is_zero(const Elem& a) const {
    for (const Integer& c : a)
        if (c != 0) return false;
    return true;
}

int QnRing::relation_sign_at(const Rational& m) const {
    // sign of sum t_i m^-i - 1, by exact Horner in 1/m.
    Rational minv = 1 / m;
    Rational acc(0);
    for (size_t i = deg_; i >= 1; --i) {
        if (coeff_[i - 1]) acc += 1;
        acc *= minv;
    }
    return sgn(acc - 1);
}

void QnRing::refine_bracket_once() const {
    Rational m = (lo_ + hi_) / 2;
    // The relation value is strictly decreasing on (1, 2).
    if (relation_sign_at(m) > 0) lo_ = m; else hi_ = m;
}

bool QnRing::vanishes_at_root(const Elem& a) const {
    Poly pa(deg_);
    for (size_t i = 0; i < deg_; ++i) pa[i] = Rational(a[i]);
    Poly pf(deg_ + 1);
    pf[deg_] = 1;
    for (size_t i = 1; i <= deg_; ++i)
        pf[deg_ - i] = coeff_[i - 1] ? Rational(-1) : Rational(0);
    Poly h = poly_gcd(std::move(pf), std::move(pa));
    if (h.size() <= 1) return false; // constant gcd: no common root at all
    // h divides the relation, whose only root in [lo_, hi_] is the base and
    // is simple, so vanishing shows as a strict sign change across the
    // bracket (endpoints are rational, never roots of the monic relation).
    return sign_at(h, lo_) * sign_at(h, hi_) < 0;
}

int QnRing::sign_at_root(const Elem& a) const {
    if (is_zero(a)) return 0;
    bool vanish_tested = false;
    Rational test_width = pow2_inv(kVanishTestBits);
    Rational cap = pow2_inv(kMaxRefineBits);
    for (;;) {
        // Interval Horner of a over [lo_, hi_]; the variable is positive.
        Rational vlo(0), vhi(0);
        for (size_t i = deg_; i > 0; --i) {
            Rational nlo = (sgn(vlo) >= 0 ? vlo * lo_ : vlo * hi_);
            Rational nhi = (sgn(vhi) >= 0 ? vhi * hi_ : vhi * lo_);
            vlo = nlo + a[i - 1];
            vhi = nhi + a[i - 1];
        }
        if (sgn(vlo) > 0) return 1;
        if (sgn(vhi) < 0) return -1;
        if (!vanish_tested && hi_ - lo_ < test_width) {
            // The relation can factor, so a nonzero residue may still vanish
            // at the root; the gcd with the relation settles this exactly.
            if (vanishes_at_root(a)) return 0;
            vanish_tested = true;
        }
        if (hi_ - lo_ < cap)
            throw PrecisionError("ring element not separable from zero at the root");
        refine_bracket_once();
    }
}

int compare_value_at_root(const QnRing& ring, const words::Seq& s, const Rational& x) {
    // value = [P(q)(q^M - 1) + C(q)] / [q^L (q^M - 1)] with both denominator
    // factors positive at the root, so
    //   sign(value - x) = sign( den(x) (P q^M - P + C) - num(x) (q^(L+M) - q^L) ).
    const auto& pre = s.preamble();
    const auto& cyc = s.cycle();
    size_t L = pre.size(), M = cyc.size();

    auto horner = [&ring](const words::BinaryWord& w) {
        QnRing::Elem e = ring.zero();
        for (size_t i = 0; i < w.size(); ++i) {
            e = ring.mul_q(e);
            if (w[i]) e[0] += 1;
        }
        return e;
    };
    QnRing::Elem P = horner(pre), C = horner(cyc);
    QnRing::Elem PqM = P;
    for (size_t i = 0; i < M; ++i) PqM = ring.mul_q(PqM);
    QnRing::Elem A = ring.add(ring.sub(PqM, P), C);

    QnRing::Elem unit = ring.from_integer(1);
    for (size_t i = 0; i < L; ++i) unit = ring.mul_q(unit);
    QnRing::Elem qL = unit;
    for (size_t i = 0; i < M; ++i) unit = ring.mul_q(unit);
    QnRing::Elem B = ring.sub(unit, qL);

    QnRing::Elem g = ring.sub(ring.scale(A, x.get_den()), ring.scale(B, x.get_num()));
    return ring.sign_at_root(g);
}

} // namespace univoque::bases

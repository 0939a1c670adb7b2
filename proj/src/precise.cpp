#include "univoque/precise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace univoque::precise {
namespace {

thread_local int g_precision = 128;
thread_local Limits g_limits;

int checked_bits(int bits) {
    if (bits < 2 || bits > (1 << 24))
        throw DomainError("precision out of range");
    return bits;
}

} // namespace

int current_precision() { return g_precision; }

Limits& limits() { return g_limits; }

PrecisionGuard::PrecisionGuard(int bits) : old_(g_precision) {
    g_precision = checked_bits(bits);
}

PrecisionGuard::~PrecisionGuard() { g_precision = old_; }

Real::Real() {
    mpfr_init2(lo_, g_precision);
    mpfr_init2(hi_, g_precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Real::Real(long v) {
    mpfr_init2(lo_, std::max(g_precision, 64));
    mpfr_init2(hi_, std::max(g_precision, 64));
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Real::Real(const Real& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

Real::~Real() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Real Real::from_rational(const Rational& v) {
    Real r;
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Real Real::from_endpoints(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw DomainError("enclosure endpoints out of order");
    Real r;
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

Real Real::operator+(const Real& o) const {
    Real r;
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Real Real::operator-(const Real& o) const {
    Real r;
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Real Real::operator*(const Real& o) const {
    Real r;
    mpfr_t t;
    mpfr_init2(t, g_precision);

    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);

    mpfr_clear(t);
    return r;
}

Real Real::operator/(const Real& o) const {
    if (o.contains_zero())
        throw DomainError("division by an enclosure containing zero");
    Real r;
    mpfr_t t;
    mpfr_init2(t, g_precision);

    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);

    mpfr_clear(t);
    return r;
}

Real Real::operator-() const {
    Real r;
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Real Real::inv() const { return Real(1) / *this; }

Real Real::pow_int(long e) const {
    if (e < 0) return pow_int(-e).inv();
    Real result(1);
    Real base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Real Real::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw DomainError("sqrt of an enclosure below zero");
    Real r;
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

bool Real::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Real::contains(const Rational& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

Cmp Real::compare(const Real& o) const {
    if (mpfr_cmp(hi_, o.lo_) < 0) return Cmp::Less;
    if (mpfr_cmp(lo_, o.hi_) > 0) return Cmp::Greater;
    return Cmp::Undecided;
}

Cmp Real::compare(const Rational& v) const {
    if (mpfr_cmp_q(hi_, v.get_mpq_t()) < 0) return Cmp::Less;
    if (mpfr_cmp_q(lo_, v.get_mpq_t()) > 0) return Cmp::Greater;
    return Cmp::Undecided;
}

int Real::sign_lo() const { return mpfr_sgn(lo_); }
int Real::sign_hi() const { return mpfr_sgn(hi_); }

namespace {

Rational mpfr_to_rational(const mpfr_t x) {
    if (!mpfr_number_p(x)) throw PrecisionError("endpoint is not finite");
    if (mpfr_zero_p(x)) return Rational(0);
    Integer mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rational r(mant);
    if (e >= 0) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= p;
    } else {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= p;
    }
    return r;
}

} // namespace

Rational Real::lo_rational() const { return mpfr_to_rational(lo_); }
Rational Real::hi_rational() const { return mpfr_to_rational(hi_); }

double Real::width_approx() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

std::string Real::decimal(int max_digits) const {
    if (max_digits < 0) throw DomainError("negative digit count");

    mpfr_t mid, w;
    mpfr_init2(mid, mpfr_get_prec(lo_) + 8);
    mpfr_init2(w, 64);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);

    int digits;
    if (mpfr_zero_p(w)) {
        digits = max_digits;
    } else {
        // Largest d with 10^-d at least the enclosure width.
        double lw = mpfr_get_d(w, MPFR_RNDU);
        digits = static_cast<int>(std::floor(-std::log10(lw)));
        digits = std::clamp(digits, 0, max_digits);
    }

    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*R*f", digits, MPFR_RNDN, mid);
    mpfr_clear(mid);
    mpfr_clear(w);
    return std::string(buf.data());
}

} // namespace univoque::precise

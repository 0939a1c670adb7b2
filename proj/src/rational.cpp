#include "univoque/rational.hpp"

#include <cctype>

namespace univoque {
namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer pow10(unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational pow2_inv(unsigned long k) {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
    return make_rational(1, d);
}

Rational parse_number(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty number");

    bool negative = false;
    size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        pos = 1;
    }
    std::string body = s.substr(pos);
    if (body.empty()) throw ParseError("sign without digits: '" + s + "'");

    // Fraction form p/q.
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction: '" + s + "'");
        // Base must be explicit: gmpxx's base-0 default would read leading zeros as octal.
        Integer n(num, 10), d(den, 10);
        if (d == 0) throw ParseError("fraction with zero denominator: '" + s + "'");
        Rational r = make_rational(n, d);
        return negative ? Rational(-r) : r;
    }

    // Decimal form: digits [. digits] [e|E [+-] digits]
    long exp10 = 0;
    if (auto epos = body.find_first_of("eE"); epos != std::string::npos) {
        std::string etail = body.substr(epos + 1);
        body = body.substr(0, epos);
        bool eneg = false;
        if (!etail.empty() && (etail[0] == '+' || etail[0] == '-')) {
            eneg = (etail[0] == '-');
            etail = etail.substr(1);
        }
        if (!all_digits(etail) || etail.size() > 6)
            throw ParseError("malformed exponent: '" + s + "'");
        exp10 = std::stol(etail);
        if (eneg) exp10 = -exp10;
    }

    std::string int_part = body, frac_part;
    if (auto dot = body.find('.'); dot != std::string::npos) {
        int_part = body.substr(0, dot);
        frac_part = body.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
        throw ParseError("no digits in number: '" + s + "'");
    if (!int_part.empty() && !all_digits(int_part))
        throw ParseError("malformed number: '" + s + "'");
    if (!frac_part.empty() && !all_digits(frac_part))
        throw ParseError("malformed number: '" + s + "'");

    // Base must be explicit: gmpxx's base-0 default would read leading zeros as octal.
    Integer mantissa(int_part.empty() ? std::string("0") : int_part, 10);
    mantissa *= pow10(frac_part.size());
    if (!frac_part.empty()) mantissa += Integer(frac_part, 10);

    long shift = exp10 - static_cast<long>(frac_part.size());
    Rational r = shift >= 0
        ? Rational(mantissa * pow10(static_cast<unsigned long>(shift)))
        : make_rational(mantissa, pow10(static_cast<unsigned long>(-shift)));
    return negative ? Rational(-r) : r;
}

Rational round_decimal(const Rational& v, int frac_digits) {
    if (frac_digits < 0) throw DomainError("negative digit count");
    Integer scale = pow10(static_cast<unsigned long>(frac_digits));
    Rational scaled = v * scale;
    // Round half away from zero: floor(|x| + 1/2) with the sign restored.
    Rational mag = abs(scaled) + make_rational(1, 2);
    Integer q = mag.get_num() / mag.get_den();
    if (sgn(scaled) < 0) q = -q;
    return make_rational(q, scale);
}

std::string decimal_string(const Rational& v, int frac_digits) {
    if (frac_digits < 0) throw DomainError("negative digit count");
    Integer scale = pow10(static_cast<unsigned long>(frac_digits));
    Rational grid = round_decimal(v, frac_digits) * scale;
    Integer units(grid.get_num() / grid.get_den()); // grid is integral

    bool negative = units < 0;
    Integer mag = abs(units);
    Integer whole = mag / scale, frac = mag % scale;

    std::string out = negative ? "-" : "";
    out += whole.get_str();
    if (frac_digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<size_t>(frac_digits) - f.size(), '0') + f;
    }
    return out;
}

} // namespace univoque

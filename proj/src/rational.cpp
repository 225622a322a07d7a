#include "translab/rational.hpp"

#include <cctype>
#include <cmath>

namespace translab {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.find('.') != std::string::npos) {
        // exact decimal: sign, integer part, fractional part
        std::string t = s;
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') {
            neg = (t[0] == '-');
            t.erase(0, 1);
        }
        auto dot = t.find('.');
        std::string ip = t.substr(0, dot);
        std::string fp = t.substr(dot + 1);
        if (ip.empty()) ip = "0";
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad decimal literal: " + s);
        Integer num;
        if (mpz_set_str(num.get_mpz_t(), (ip + fp).c_str(), 10) != 0)
            throw std::invalid_argument("bad decimal literal: " + s);
        Integer den(1);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        Rational r(num, den);
        r.canonicalize();
        if (neg) r = -r;
        return r;
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() <= 0) throw std::invalid_argument("bad rational literal: " + s);
    return r;
}

std::string to_fraction_string(const Rational& r) { return r.get_str(); }

double log2_rational(const Rational& r) {
    if (sgn(r) <= 0) throw std::domain_error("log2_rational needs a positive value");
    long en, ed;
    double mn = mpz_get_d_2exp(&en, r.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, r.get_den().get_mpz_t());
    return (std::log2(mn) + static_cast<double>(en)) - (std::log2(md) + static_cast<double>(ed));
}

Rational pow_int(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    bool inv = exp < 0;
    unsigned long e = static_cast<unsigned long>(inv ? -exp : exp);
    if (inv && sgn(base) == 0) throw std::domain_error("0 raised to a negative power");
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational r = inv ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

long long floor_root(const Rational& bound, int e) {
    if (e < 1) throw std::invalid_argument("floor_root needs exponent >= 1");
    if (sgn(bound) < 0) throw std::domain_error("floor_root of a negative bound");
    if (sgn(bound) == 0) return 0;
    // initial guess from doubles, then fix up exactly
    double guess = std::pow(to_double(bound), 1.0 / e);
    long long k = guess > 1e17 ? 100000000000000000LL : static_cast<long long>(guess);
    if (k < 0) k = 0;
    while (pow_int(rat(k + 1), e) <= bound) ++k;
    while (k > 0 && pow_int(rat(k), e) > bound) --k;
    return k;
}

Integer nearest_integer(const Rational& v) {
    const Integer& p = v.get_num();
    const Integer& q = v.get_den();
    Integer fl, rem;
    mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    Integer twice = rem * 2;
    int c = cmp(twice, q);
    if (c < 0) return fl;
    if (c > 0) return fl + 1;
    // exact half: round toward zero
    return sgn(v) > 0 ? fl : fl + 1;
}

}  // namespace translab

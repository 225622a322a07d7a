#include "translab/core.hpp"

namespace translab {

Rational pi_power(const RationalVector& z) {
    Rational p(1);
    for (const Rational& v : z) {
        if (sgn(v) == 0) return Rational(0);
        p *= abs(v);
    }
    return p;
}

Rational pi_power(const IntVector& z) {
    Rational p(1);
    for (long long v : z) {
        if (v == 0) return Rational(0);
        p *= rat(v < 0 ? -v : v);
    }
    return p;
}

Rational pi_prime_power(const RationalVector& z) {
    Rational p(1);
    for (const Rational& v : z) {
        Rational a = abs(v);
        if (a > 1) p *= a;
    }
    return p;
}

Rational pi_prime_power(const IntVector& z) {
    Rational p(1);
    for (long long v : z) {
        long long a = v < 0 ? -v : v;
        if (a > 1) p *= rat(a);
    }
    return p;
}

Rational sup_norm(const RationalVector& z) {
    Rational s(0);
    for (const Rational& v : z) {
        Rational a = abs(v);
        if (a > s) s = a;
    }
    return s;
}

long long sup_norm(const IntVector& z) {
    long long s = 0;
    for (long long v : z) {
        long long a = v < 0 ? -v : v;
        if (a > s) s = a;
    }
    return s;
}

RationalVector residual(const SystemMatrix& theta, const IntVector& x, const IntVector& y) {
    if (static_cast<int>(x.size()) != theta.m() || static_cast<int>(y.size()) != theta.n())
        throw std::invalid_argument("residual: dimension mismatch");
    RationalVector r(theta.n());
    for (int i = 0; i < theta.n(); ++i) {
        Rational acc(0);
        for (int j = 0; j < theta.m(); ++j) acc += theta.at(i, j) * rat(x[j]);
        acc -= rat(y[i]);
        r[i] = acc;
    }
    return r;
}

RationalVector transpose_residual(const SystemMatrix& theta, const IntVector& y,
                                  const IntVector& x) {
    if (static_cast<int>(y.size()) != theta.n() || static_cast<int>(x.size()) != theta.m())
        throw std::invalid_argument("transpose_residual: dimension mismatch");
    RationalVector r(theta.m());
    for (int j = 0; j < theta.m(); ++j) {
        Rational acc(0);
        for (int i = 0; i < theta.n(); ++i) acc += theta.at(i, j) * rat(y[i]);
        acc -= rat(x[j]);
        r[j] = acc;
    }
    return r;
}

IntVector nearest_integer_vector(const RationalVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Integer n = nearest_integer(v[i]);
        if (!n.fits_slong_p()) throw std::overflow_error("nearest_integer_vector: entry too large");
        out[i] = n.get_si();
    }
    return out;
}

IntegerPair make_integer_pair(const SystemMatrix& theta, const IntVector& x, const IntVector& y) {
    return IntegerPair{x, y, residual(theta, x, y)};
}

}  // namespace translab

#pragma once

#include "translab/rational.hpp"

namespace translab::testutil {

// 40 correct decimal digits of each target, truncated (error < 1e-40, declared
// via eps = 1e-40). Used wherever an irrational target is ingested.
inline const char* kSqrt2Digits = "1.4142135623730950488016887242096980785696";
inline const char* kSqrt3Digits = "1.7320508075688772935274463415058723669428";
inline const char* kGoldenDigits = "1.6180339887498948482045868343656381177203";
inline const char* kGoldenFracDigits = "0.6180339887498948482045868343656381177203";

inline ApproxReal approx_from_digits(const char* digits) {
    ApproxReal a;
    a.value = rational_from_string(digits);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 40);
    a.eps = Rational(1, den);
    a.eps.canonicalize();
    return a;
}

inline SystemMatrix system_1x1(const Rational& v, const Rational& eps = Rational(0)) {
    SystemMatrix t(1, 1);
    t.at(0, 0) = v;
    t.entry_eps = eps;
    return t;
}

// Fibonacci with F(1) = F(2) = 1.
inline long long fibonacci(int k) {
    long long a = 1, b = 1;
    for (int i = 3; i <= k; ++i) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return k <= 2 ? 1 : b;
}

}  // namespace translab::testutil

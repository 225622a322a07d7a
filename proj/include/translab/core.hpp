#pragma once

#include "translab/rational.hpp"

namespace translab {

// Quality functionals in power form. The geometric-mean functionals carry a
// 1/k-th root in their definition; every comparison in this project is done
// on the k-th powers instead, which are exact rationals. Roots are taken only
// for display.

// prod |z_i|  (the k-th power of the geometric mean of |z_i|)
Rational pi_power(const RationalVector& z);
Rational pi_power(const IntVector& z);

// prod max(1, |z_i|)  (the k-th power of the clamped geometric mean); >= 1
Rational pi_prime_power(const RationalVector& z);
Rational pi_prime_power(const IntVector& z);

Rational sup_norm(const RationalVector& z);
long long sup_norm(const IntVector& z);

// Theta*x - y, exact, length n
RationalVector residual(const SystemMatrix& theta, const IntVector& x, const IntVector& y);

// tr(Theta)*y - x, exact, length m
RationalVector transpose_residual(const SystemMatrix& theta, const IntVector& y,
                                  const IntVector& x);

// Componentwise nearest integers, ties toward zero. Because the rounding is
// per coordinate it simultaneously minimizes every residual entry, hence both
// the sup-norm and the product of entries over all integer vectors.
IntVector nearest_integer_vector(const RationalVector& v);

// Candidate pair with its residual cached.
struct IntegerPair {
    IntVector x;
    IntVector y;
    RationalVector residual;  // Theta*x - y
};

IntegerPair make_integer_pair(const SystemMatrix& theta, const IntVector& x, const IntVector& y);

}  // namespace translab

#pragma once

#include "translab/rational.hpp"

namespace translab {

// Exact transference budget for the multiplicative theorem. With tight
// hypothesis data X^m = xpow = prod max(1,|x_j|) and U^n = upow = prod |r_i|,
// the conclusion bounds
//
//   Y = D^{-1/(d-1)} (X^m U^{1-m})^{1/(d-1)},
//   V = D^{-1/(d-1)} (X^{1-n} U^n)^{1/(d-1)},   D = delta(d)
//
// are irrational in general, so witness predicates are decided on their
// (d-1)-th powers, which are rational:
//
//   (prod max(1,|y_i|))^{d-1}   <= ypow_cmp   = D^-n  xpow^n  upow^{1-m}
//   (prod |trTheta y - x|_j)^{d-1} <= vpow_cmp = D^-m  xpow^{1-n} upow^m
//   (sup  |trTheta y - x|)^{d-1} <= suppow_cmp = D^-1  xpow upow
//
// (raise the three conclusion inequalities to the powers n(d-1), m(d-1), d-1
// and substitute; the identities are unit-tested symbolically.)
struct QualityBudget {
    int m = 0;
    int n = 0;
    Rational delta_d;
    Rational xpow;  // X^m >= 1
    Rational upow;  // U^n, in (0,1) unless exact_solution
    Rational ypow_cmp;
    Rational vpow_cmp;
    Rational suppow_cmp;
    bool exact_solution = false;  // upow == 0; transfer short-circuits

    int d() const { return m + n; }
};

// Sup-norm (Mahler) budget: Y = (d-1) (X^m U^{1-m})^{1/(d-1)} and
// V = (d-1) (X^{1-n} U^n)^{1/(d-1)}, compared through (d-1)-th powers:
//
//   |y|_inf^{d-1}              <= ypow_cmp = (d-1)^{d-1} X^m U^{1-m}
//   |trTheta y - x|_inf^{d-1}  <= vpow_cmp = (d-1)^{d-1} X^{1-n} U^n
struct MahlerBudget {
    int m = 0;
    int n = 0;
    Rational X;  // = |x|_inf >= 1
    Rational U;  // = |Theta x - y|_inf in (0,1) unless exact_solution
    Rational ypow_cmp;
    Rational vpow_cmp;
    bool exact_solution = false;

    int d() const { return m + n; }
};

}  // namespace translab

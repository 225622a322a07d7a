#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "translab/budget.hpp"
#include "translab/core.hpp"
#include "translab/rational.hpp"

namespace translab {

// One record-breaking approximation. For multiplicative records,
// t_pow = prod max(1,|x_j|) and u_pow = prod |(Theta x - y)_i| (the m-th and
// n-th powers of the clamped/plain geometric means). For sup-norm records the
// same fields carry |x|_inf^m and |Theta x - y|_inf^n so the exponent
// estimator treats both kinds uniformly. Within either stream t_pow is
// strictly increasing and u_pow strictly decreasing.
struct ApproxRecord {
    IntVector x;
    IntVector y;
    Rational t_pow;
    Rational u_pow;
};

struct SearchBudget {
    long long sup_bound = 100;                       // enumeration shell limit
    Rational guard_margin = Rational(1, 1000000);    // precision-guard factor
};

struct ScanResult {
    std::vector<ApproxRecord> mult_records;
    std::vector<ApproxRecord> sup_records;
    long long shells_done = 0;
    bool hit_exact = false;               // a multiplicative record with u_pow = 0
    Rational min_residual_entry;          // smallest nonzero |r_i| seen (0 if none)
};

// Enumerates x in Z^m \ {0} by increasing sup-norm shells (lexicographic
// within a shell, antipodal pairs collapsed), pairs each x with the nearest
// integer vector y to Theta x, and keeps the record-breaking sequences for
// both quality functionals. Stops early once an exact multiplicative record
// (u_pow = 0) is found. For matrices with entry_eps > 0 a precision guard
// aborts the scan as soon as sup_bound * eps * d could perturb comparisons
// beyond guard_margin times the smallest residual entry encountered.
ScanResult best_approximations(const SystemMatrix& theta, const SearchBudget& budget);

// Searches y in Z^n \ {0} with (prod max(1,|y_i|))^{d-1} <= ypow_cmp by
// increasing sup-norm shells with subtree pruning on the partial product,
// takes x = nearest integer vector to tr(Theta) y, and returns the first pair
// (shell-lexicographic order) satisfying all three power-form predicates of
// the budget, or nullopt if the region is exhausted.
std::optional<IntegerPair> find_witness(const SystemMatrix& theta, const QualityBudget& budget);

// Sup-norm variant: |y|_inf^{d-1} <= ypow_cmp region, first pair with
// |tr(Theta) y - x|_inf^{d-1} <= vpow_cmp.
std::optional<IntegerPair> find_witness_mahler(const SystemMatrix& theta,
                                               const MahlerBudget& budget);

// True iff some x != 0 with pi_prime_power(x) <= t^m admits y with
// (prod |r_i|)^q <= t^{-p n}, gamma = p/q. Throws InconclusiveError when the
// region exceeds budget.sup_bound (never silently treated as infeasible).
bool uniform_feasible(const SystemMatrix& theta, const Rational& t, const Rational& gamma,
                      const SearchBudget& budget);

struct BadnessResult {
    Rational min_value;  // min over region of pi_prime_power(x) * pi_power(residual)
    IntegerPair argmin;
    bool exact_zero = false;
};

// Region-restricted minimum of the badness product (the power-form quantity
// whose positivity defines multiplicative bad approximability).
BadnessResult badness_infimum(const SystemMatrix& theta, const SearchBudget& budget);

struct LittlewoodRecord {
    long long q;
    Rational value;  // q * ||q alpha|| * ||q beta||, exact
    Rational dist_alpha;
    Rational dist_beta;
};

struct LittlewoodScanResult {
    std::vector<LittlewoodRecord> records;  // strictly decreasing in value
    long long qmax = 0;
    Rational min_value;
};

// Record-breaking sequence of q ||q alpha|| ||q beta|| for q = 1..qmax, exact
// rational arithmetic over the approximants' common denominators. The
// precision guard uses the approximants' declared error bounds.
LittlewoodScanResult littlewood_scan(const ApproxReal& alpha, const ApproxReal& beta,
                                     long long qmax);

// Direct scan for the first q <= qmax with both
//   q ||q alpha|| ||q beta|| <= (4/3)^{9/4} mu^{1/4}   and
//   max(||q alpha||, ||q beta||) <= (4/3)^{5/4} mu^{1/4},
// decided exactly on fourth powers. Returns the q or nullopt.
std::optional<long long> littlewood_corollary_check(const ApproxReal& alpha,
                                                    const ApproxReal& beta, long long qmax,
                                                    const Rational& mu);

}  // namespace translab

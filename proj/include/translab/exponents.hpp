#pragma once

#include <string>
#include <vector>

#include "translab/rational.hpp"
#include "translab/search.hpp"

namespace translab {

// Transfer map for multiplicative exponents (and, with the same shape, for
// ordinary ones): gamma -> (n gamma + n - 1) / ((m - 1) gamma + m). A Moebius
// map with determinant d - 1 > 0, hence increasing; fixed point at
// gamma = m/n, image n/m. Domain of interest is gamma >= m/n.
Rational dyson_map(const Rational& gamma, int m, int n);
double dyson_map(double gamma, int m, int n);  // +infinity propagates

struct BoundValue {
    double value = 0;
    bool vacuous = false;  // clamped to 0 because the bound says nothing
};

// n = 1 mixed bound: (gamma - m) / ((m - 1) gamma + m); ordinary exponent of
// the transposed system from the multiplicative exponent of the primal one.
Rational tr_beta_lower_exact(const Rational& gamma_mult, int m);
BoundValue tr_beta_lower(double gamma_mult, int m);

// m = 1 double-transfer bound:
// (n gamma - 1) / (n(n-1) gamma + n^2 - n + 1).
Rational beta_lower_from_mbeta_exact(const Rational& gamma_mult, int n);
BoundValue beta_lower_from_mbeta(double gamma_mult, int n);

enum class UniformMapKind { dyson, german };

// Uniform-exponent transfer. The dyson branch reuses dyson_map; the german
// branch is (n-1)/(m - alpha) for alpha <= 1 and (n - 1/alpha)/(m - 1) for
// alpha >= 1, +infinity when m = 1 and alpha >= 1. Requires alpha <= m and
// (m, n) != (1, 1) for the german branch.
BoundValue uniform_map(double gamma, int m, int n, UniformMapKind kind);

// Diagnostic residual of the identity 1/alpha + alpha_tr = 1 (n=1, m=2 case);
// reported, never asserted, for estimated inputs.
double jarnik_identity_residual(double alpha_val, double alpha_tr_val);

struct ExponentReport {
    double beta_est = 0;   // ordinary, from sup-norm records
    double mbeta_est = 0;  // multiplicative, from product records
    double t_min = 0, t_max = 0;  // window of t_pow^(1/m) used
    int records_used = 0;
    std::string method;
};

// Tail-window estimator: over the last ceil(tail_fraction * count) records,
// max of the decay ratio (-d log u_pow / n) / (d log t_pow / m) anchored at
// the first record; +infinity when a tail record has u_pow = 0. Needs >= 3
// records in each stream. Early records bias the raw slope, hence the tail.
ExponentReport estimate_exponents(const std::vector<ApproxRecord>& mult_records,
                                  const std::vector<ApproxRecord>& sup_records, int m, int n,
                                  double tail_fraction);

struct BoundsCheck {
    std::string name;
    bool pass;
};

// Sanity from the trivial inequalities: beta <= mbeta; mbeta <= m*beta when
// n = 1 (with 0.05 estimation slack); beta >= m/n - 0.05.
std::vector<BoundsCheck> trivial_bounds_check(const ExponentReport& report, int m, int n);

}  // namespace translab

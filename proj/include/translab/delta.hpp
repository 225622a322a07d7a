#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "translab/rational.hpp"

namespace translab {

// The transference constant of dimension d: 1/(2^{d-1} sqrt(d)) times the
// (d-1)-volume of the central section of [-1,1]^d orthogonal to the main
// diagonal. The sqrt factors cancel and the value is rational:
//
//   delta(d) = (1 / (2^{d-1} (d-1)!)) * sum_{k=0}^{floor(d/2)}
//              (-1)^k C(d,k) (d-2k)^{d-1}
//
// which is the density at 0 of a sum of d independent uniforms on [-1,1],
// times 2. Validated against the definitional Monte-Carlo estimator below.
Rational delta(int d);

struct DeltaRow {
    int d;
    Rational value;
    bool bounds_ok;    // d * delta^2 in [1,2]  (squared section-volume bounds)
    bool monotone_ok;  // delta(d) <= delta(d-1); true by convention at d = 2
};

struct DeltaTable {
    std::map<int, Rational> values;
    std::vector<DeltaRow> rows;
    bool all_ok = true;
};

DeltaTable delta_bounds_report(int d_max);

// Definitional Monte-Carlo oracle: sample the cube uniformly, measure the
// slab |sum x_i| <= eps, and divide by eps. Unbiased up to O(eps) curvature
// of the section profile; eps defaults small enough that the bias is well
// below one standard error at 10^6 samples.
struct DeltaMcCheck {
    int d;
    std::uint64_t samples;
    double eps;
    double estimate;
    double std_error;
    double exact;
    bool within_3_sigma;
};

DeltaMcCheck delta_monte_carlo_check(int d, std::uint64_t samples, std::uint64_t seed,
                                     double eps = 0.01);

}  // namespace translab

#include "translab/delta.hpp"

#include <cmath>

#include "translab/rng.hpp"

namespace translab {

Rational delta(int d) {
    if (d < 2) throw std::invalid_argument("delta: dimension must be >= 2");
    Integer sum(0);
    for (int k = 0; 2 * k <= d; ++k) {
        Integer binom, power;
        mpz_bin_uiui(binom.get_mpz_t(), d, k);
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d - 2 * k), d - 1);
        Integer term = binom * power;
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    Integer denom;
    mpz_fac_ui(denom.get_mpz_t(), d - 1);
    denom <<= (d - 1);
    Rational r(sum, denom);
    r.canonicalize();
    return r;
}

DeltaTable delta_bounds_report(int d_max) {
    if (d_max < 2) throw std::invalid_argument("delta_bounds_report: d_max must be >= 2");
    DeltaTable table;
    Rational prev;
    for (int d = 2; d <= d_max; ++d) {
        Rational v = delta(d);
        Rational squared_scaled = Rational(d) * v * v;
        bool bounds_ok = squared_scaled >= 1 && squared_scaled <= 2;
        bool monotone_ok = d == 2 || v <= prev;
        table.values[d] = v;
        table.rows.push_back({d, v, bounds_ok, monotone_ok});
        table.all_ok = table.all_ok && bounds_ok && monotone_ok;
        prev = v;
    }
    return table;
}

DeltaMcCheck delta_monte_carlo_check(int d, std::uint64_t samples, std::uint64_t seed,
                                     double eps) {
    if (d < 2) throw std::invalid_argument("delta_monte_carlo_check: dimension must be >= 2");
    RandomStream rng = RandomStream::derived(seed, static_cast<std::uint64_t>(d));
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        double acc = 0;
        for (int i = 0; i < d; ++i) acc += rng.next_symmetric();
        if (std::abs(acc) <= eps) ++hits;
    }
    double p = static_cast<double>(hits) / static_cast<double>(samples);
    double estimate = p / eps;
    double std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) / eps;
    double exact = to_double(delta(d));
    bool ok = std::abs(estimate - exact) <= 3.0 * std_error;
    return DeltaMcCheck{d, samples, eps, estimate, std_error, exact, ok};
}

}  // namespace translab

#include "translab/transfer.hpp"

#include <cmath>

#include "translab/delta.hpp"

namespace translab {

static QualityBudget budget_from_powers(int m, int n, const Rational& xpow,
                                        const Rational& upow) {
    if (xpow < 1) throw std::invalid_argument("budget: X^m must be >= 1");
    if (sgn(upow) < 0) throw std::invalid_argument("budget: U^n must be nonnegative");
    QualityBudget b;
    b.m = m;
    b.n = n;
    b.delta_d = delta(m + n);
    b.xpow = xpow;
    b.upow = upow;
    if (sgn(upow) == 0) {
        b.exact_solution = true;
        return b;
    }
    if (upow >= 1) throw std::invalid_argument("budget: hypothesis violated, U^n must be < 1");
    b.ypow_cmp = pow_int(b.delta_d, -n) * pow_int(xpow, n) * pow_int(upow, 1 - m);
    b.vpow_cmp = pow_int(b.delta_d, -m) * pow_int(xpow, 1 - n) * pow_int(upow, m);
    b.suppow_cmp = pow_int(b.delta_d, -1) * xpow * upow;
    return b;
}

QualityBudget make_budget(const SystemMatrix& theta, const IntVector& x, const IntVector& y) {
    if (sup_norm(x) == 0) throw std::invalid_argument("make_budget: x must be nonzero");
    Rational xpow = pi_prime_power(x);
    Rational upow = pi_power(residual(theta, x, y));
    return budget_from_powers(theta.m(), theta.n(), xpow, upow);
}

QualityBudget make_budget_explicit(const SystemMatrix& theta, const Rational& xpow,
                                   const Rational& upow) {
    return budget_from_powers(theta.m(), theta.n(), xpow, upow);
}

MahlerBudget make_mahler_budget(const SystemMatrix& theta, const IntVector& x,
                                const IntVector& y) {
    if (sup_norm(x) == 0) throw std::invalid_argument("make_mahler_budget: x must be nonzero");
    MahlerBudget b;
    b.m = theta.m();
    b.n = theta.n();
    b.X = rat(sup_norm(x));
    b.U = sup_norm(residual(theta, x, y));
    if (sgn(b.U) == 0) {
        b.exact_solution = true;
        return b;
    }
    if (b.U >= 1)
        throw std::invalid_argument("make_mahler_budget: hypothesis violated, U must be < 1");
    Rational factor = pow_int(Rational(b.d() - 1), b.d() - 1);
    b.ypow_cmp = factor * pow_int(b.X, b.m) * pow_int(b.U, 1 - b.m);
    b.vpow_cmp = factor * pow_int(b.X, 1 - b.n) * pow_int(b.U, b.n);
    return b;
}

bool multiplicative_budget_tighter(int d) {
    Rational lhs = delta(d) * pow_int(Rational(d - 1), d - 1);
    return lhs > 1;
}

// For rational matrices an exact primal solution transfers to an exact
// transposed solution by clearing denominators: y = (L, 0, ..., 0) with L the
// lcm of the first-row denominators gives integer tr(Theta) y.
static std::pair<IntVector, IntVector> exact_transposed_solution(const SystemMatrix& theta) {
    Integer lcm(1);
    for (int j = 0; j < theta.m(); ++j) {
        Integer den = theta.at(0, j).get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    if (!lcm.fits_slong_p())
        throw std::overflow_error("exact transposed solution needs an oversized multiplier");
    IntVector y(static_cast<std::size_t>(theta.n()), 0);
    y[0] = lcm.get_si();
    RationalVector ty(static_cast<std::size_t>(theta.m()));
    for (int j = 0; j < theta.m(); ++j) ty[static_cast<std::size_t>(j)] = theta.at(0, j) * rat(y[0]);
    IntVector x = nearest_integer_vector(ty);
    return {x, y};
}

Certificate verify_multitrans(const SystemMatrix& theta, const IntVector& x, const IntVector& y,
                              const std::optional<QualityBudget>& explicit_budget) {
    Certificate cert;
    cert.theta = theta;
    cert.input_x = x;
    cert.input_y = y;
    cert.mahler = false;
    cert.budget = explicit_budget ? *explicit_budget : make_budget(theta, x, y);
    const QualityBudget& b = cert.budget;
    const int dm1 = b.d() - 1;

    auto line = [&cert](const std::string& name, const Rational& lhs, const Rational& rhs,
                        bool ok) { cert.checks.push_back({name, lhs, rhs, ok}); };

    // hypothesis side
    Rational xq = pi_prime_power(x);
    Rational uq = pi_power(residual(theta, x, y));
    line("hypothesis: prod max(1,|x|) <= X^m", xq, b.xpow, xq <= b.xpow);
    line("hypothesis: prod |Theta x - y| <= U^n", uq, b.upow, uq <= b.upow);
    line("hypothesis domain: X^m >= 1", b.xpow, Rational(1), b.xpow >= 1);
    line("hypothesis domain: U^n < 1", b.upow, Rational(1),
         b.exact_solution || b.upow < 1);

    std::optional<IntegerPair> witness;
    if (b.exact_solution) {
        cert.exact_shortcut = true;
        auto [wx, wy] = exact_transposed_solution(theta);
        witness = IntegerPair{wx, wy, transpose_residual(theta, wy, wx)};
        Rational wu = pi_power(witness->residual);
        line("witness: exact transposed residual", wu, Rational(0), sgn(wu) == 0);
        line("witness: y nonzero", rat(sup_norm(wy)), Rational(1), sup_norm(wy) >= 1);
    } else {
        witness = find_witness(theta, b);
    }

    if (!witness) {
        cert.witness_found = false;
        cert.all_ok = false;
        return cert;
    }
    cert.witness_found = true;
    cert.witness_x = witness->x;
    cert.witness_y = witness->y;

    if (!b.exact_solution) {
        // independent re-computation of all three conclusion predicates
        RationalVector r = transpose_residual(theta, witness->y, witness->x);
        Rational ypred = pow_int(pi_prime_power(witness->y), dm1);
        Rational vpred = pow_int(pi_power(r), dm1);
        Rational spred = pow_int(sup_norm(r), dm1);
        line("witness: (prod max(1,|y|))^{d-1} <= Y-comparator", ypred, b.ypow_cmp,
             ypred <= b.ypow_cmp);
        line("witness: (prod |trTheta y - x|)^{d-1} <= V-comparator", vpred, b.vpow_cmp,
             vpred <= b.vpow_cmp);
        line("witness: (sup |trTheta y - x|)^{d-1} <= sup-comparator", spred, b.suppow_cmp,
             spred <= b.suppow_cmp);
        line("witness: y nonzero", rat(sup_norm(witness->y)), Rational(1),
             sup_norm(witness->y) >= 1);
    }

    cert.all_ok = true;
    for (const auto& c : cert.checks) cert.all_ok = cert.all_ok && c.ok;
    return cert;
}

Certificate verify_mahler(const SystemMatrix& theta, const IntVector& x, const IntVector& y) {
    Certificate cert;
    cert.theta = theta;
    cert.input_x = x;
    cert.input_y = y;
    cert.mahler = true;
    cert.mahler_budget = make_mahler_budget(theta, x, y);
    const MahlerBudget& b = cert.mahler_budget;
    const int dm1 = b.d() - 1;

    auto line = [&cert](const std::string& name, const Rational& lhs, const Rational& rhs,
                        bool ok) { cert.checks.push_back({name, lhs, rhs, ok}); };

    Rational xs = rat(sup_norm(x));
    Rational us = sup_norm(residual(theta, x, y));
    line("hypothesis: |x| <= X", xs, b.X, xs <= b.X);
    line("hypothesis: |Theta x - y| <= U", us, b.U, us <= b.U);
    line("hypothesis domain: X >= 1", b.X, Rational(1), b.X >= 1);
    line("hypothesis domain: U < 1", b.U, Rational(1), b.exact_solution || b.U < 1);

    std::optional<IntegerPair> witness;
    if (b.exact_solution) {
        cert.exact_shortcut = true;
        auto [wx, wy] = exact_transposed_solution(theta);
        witness = IntegerPair{wx, wy, transpose_residual(theta, wy, wx)};
        Rational wu = sup_norm(witness->residual);
        line("witness: exact transposed residual", wu, Rational(0), sgn(wu) == 0);
    } else {
        witness = find_witness_mahler(theta, b);
    }

    if (!witness) {
        cert.witness_found = false;
        cert.all_ok = false;
        return cert;
    }
    cert.witness_found = true;
    cert.witness_x = witness->x;
    cert.witness_y = witness->y;

    if (!b.exact_solution) {
        RationalVector r = transpose_residual(theta, witness->y, witness->x);
        Rational ypred = pow_int(rat(sup_norm(witness->y)), dm1);
        Rational vpred = pow_int(sup_norm(r), dm1);
        line("witness: |y|^{d-1} <= Y-comparator", ypred, b.ypow_cmp, ypred <= b.ypow_cmp);
        line("witness: |trTheta y - x|^{d-1} <= V-comparator", vpred, b.vpow_cmp,
             vpred <= b.vpow_cmp);
        line("witness: y nonzero", rat(sup_norm(witness->y)), Rational(1),
             sup_norm(witness->y) >= 1);
    }

    cert.all_ok = true;
    for (const auto& c : cert.checks) cert.all_ok = cert.all_ok && c.ok;
    return cert;
}

bool revalidate(const Certificate& cert) {
    Certificate fresh;
    if (cert.mahler) {
        fresh = verify_mahler(cert.theta, cert.input_x, cert.input_y);
    } else {
        std::optional<QualityBudget> b;
        if (!cert.budget.exact_solution &&
            (cert.budget.xpow != pi_prime_power(cert.input_x) ||
             cert.budget.upow != pi_power(residual(cert.theta, cert.input_x, cert.input_y))))
            b = cert.budget;  // explicitly supplied, keep it
        fresh = verify_multitrans(cert.theta, cert.input_x, cert.input_y, b);
    }
    if (!fresh.all_ok || !fresh.witness_found) return false;
    if (fresh.checks.size() != cert.checks.size()) return false;
    for (std::size_t i = 0; i < fresh.checks.size(); ++i) {
        if (fresh.checks[i].name != cert.checks[i].name) return false;
        if (fresh.checks[i].lhs != cert.checks[i].lhs) return false;
        if (fresh.checks[i].rhs != cert.checks[i].rhs) return false;
        if (!fresh.checks[i].ok) return false;
    }
    return fresh.witness_x == cert.witness_x && fresh.witness_y == cert.witness_y;
}

// ---------------------------------------------------------------------------
// Arbitrary-function transference
// ---------------------------------------------------------------------------

FunctionSpec FunctionSpec::power(const Rational& gamma) {
    FunctionSpec s;
    s.kind = Kind::power;
    s.gamma = gamma;
    return s;
}

FunctionSpec FunctionSpec::log_littlewood_1() {
    FunctionSpec s;
    s.kind = Kind::log_littlewood_1;
    return s;
}

FunctionSpec FunctionSpec::log_littlewood_2() {
    FunctionSpec s;
    s.kind = Kind::log_littlewood_2;
    return s;
}

FunctionSpec FunctionSpec::tabulated(std::vector<std::pair<double, double>> table) {
    if (table.size() < 2) throw std::invalid_argument("tabulated spec needs >= 2 points");
    for (std::size_t i = 1; i < table.size(); ++i)
        if (table[i].first <= table[i - 1].first)
            throw std::invalid_argument("tabulated spec needs strictly increasing t");
    FunctionSpec s;
    s.kind = Kind::tabulated;
    s.table = std::move(table);
    return s;
}

double FunctionSpec::psi(double t) const {
    switch (kind) {
        case Kind::power:
            return std::pow(t, -to_double(gamma));
        case Kind::log_littlewood_1:
            return 1.0 / std::sqrt(t * std::log(t));
        case Kind::log_littlewood_2:
            return 1.0 / (t * t * std::log1p(t));
        case Kind::tabulated: {
            if (t <= table.front().first) return table.front().second;
            if (t >= table.back().first) return table.back().second;
            std::size_t lo = 0, hi = table.size() - 1;
            while (hi - lo > 1) {
                std::size_t mid = (lo + hi) / 2;
                (table[mid].first <= t ? lo : hi) = mid;
            }
            // log-linear interpolation
            double t0 = std::log(table[lo].first), t1 = std::log(table[hi].first);
            double p0 = std::log(table[lo].second), p1 = std::log(table[hi].second);
            double w = (std::log(t) - t0) / (t1 - t0);
            return std::exp(p0 + w * (p1 - p0));
        }
    }
    return 0;
}

double FunctionSpec::t_min() const {
    switch (kind) {
        case Kind::power:
            return 1.0;
        case Kind::log_littlewood_1:
            return std::exp(1.0);  // keep log t bounded away from 0
        case Kind::log_littlewood_2:
            return 1.0;
        case Kind::tabulated:
            return table.front().first;
    }
    return 1.0;
}

double FunctionSpec::t_max() const {
    return kind == Kind::tabulated ? table.back().first : 1e30;
}

PhiTransfer::PhiTransfer(const FunctionSpec& spec, int m, int n)
    : spec_(spec), m_(m), n_(n), delta_d_(to_double(delta(m + n))) {
    if (m < 1 || n < 1) throw std::invalid_argument("phi transfer needs m, n >= 1");

    // f must be strictly increasing; checked on a geometric grid
    const int kGrid = 96;
    double lo = spec_.t_min(), hi = spec_.t_max();
    double prev = f(lo);
    report_.f_increasing = true;
    for (int i = 1; i <= kGrid; ++i) {
        double t = lo * std::pow(hi / lo, static_cast<double>(i) / kGrid);
        double cur = f(t);
        if (!(cur > prev)) {
            report_.f_increasing = false;
            break;
        }
        prev = cur;
    }
    if (!report_.f_increasing)
        throw std::domain_error("phi transfer: f is not strictly increasing on the domain");

    // psi(t) < 1 threshold and the decay condition t^{(1-n)/n} psi(t) -> 0,
    // checked on the tail of the grid
    report_.psi_below_one_from = lo;
    for (int i = 0; i <= kGrid; ++i) {
        double t = lo * std::pow(hi / lo, static_cast<double>(i) / kGrid);
        if (spec_.psi(t) >= 1) report_.psi_below_one_from = t;
    }
    double g_prev = 0;
    bool decay = true;
    for (int i = kGrid / 2; i <= kGrid; ++i) {
        double t = lo * std::pow(hi / lo, static_cast<double>(i) / kGrid);
        double v = std::pow(t, (1.0 - n_) / n_) * spec_.psi(t);
        if (i > kGrid / 2 && !(v <= g_prev * (1 + 1e-9))) decay = false;
        g_prev = v;
    }
    report_.growth_condition_ok = decay;
}

double PhiTransfer::f(double t) const {
    double inner = static_cast<double>(m_) * std::log(t) +
                   (1.0 - m_) * std::log(spec_.psi(t));
    return std::exp((inner - std::log(delta_d_)) / (m_ + n_ - 1));
}

double PhiTransfer::g(double t) const {
    double inner = (1.0 - n_) * std::log(t) +
                   static_cast<double>(n_) * std::log(spec_.psi(t));
    return std::exp((inner - std::log(delta_d_)) / (m_ + n_ - 1));
}

double PhiTransfer::f_inverse(double s) const {
    double lo = spec_.t_min(), hi = spec_.t_max();
    if (s < f(lo) || s > f(hi))
        throw std::domain_error("phi transfer: target outside the invertible range");
    // bisection on log t to 1e-12 relative tolerance (f is monotone)
    double llo = std::log(lo), lhi = std::log(hi);
    for (int it = 0; it < 200 && (lhi - llo) > 1e-13; ++it) {
        double mid = 0.5 * (llo + lhi);
        if (f(std::exp(mid)) < s)
            llo = mid;
        else
            lhi = mid;
    }
    return std::exp(0.5 * (llo + lhi));
}

double PhiTransfer::operator()(double s) const { return g(f_inverse(s)); }

PhiTransfer phi_from_psi(const FunctionSpec& spec, int m, int n) {
    return PhiTransfer(spec, m, n);
}

ChiTransfer::ChiTransfer(const FunctionSpec& spec, int m)
    : spec_(spec), m_(m), delta_d_(to_double(delta(m + 1))), base_(spec, m, 1) {}

double ChiTransfer::h(double t) const {
    double inner = static_cast<double>(m_) * std::log(t) + std::log(spec_.psi(t));
    return std::exp((inner - std::log(delta_d_)) / m_);
}

double ChiTransfer::operator()(double s) const { return h(base_.f_inverse(s)); }

ChiTransfer chi_from_psi(const FunctionSpec& spec, int m) { return ChiTransfer(spec, m); }

}  // namespace translab

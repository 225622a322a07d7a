#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_constants.hpp"
#include "test_util.hpp"
#include "translab/delta.hpp"
#include "translab/exponents.hpp"
#include "translab/transfer.hpp"

using namespace translab;
using namespace translab::testutil;

TEST_CASE("budget comparators on the 2x1 instance") {
    SystemMatrix theta(1, 2);
    theta.at(0, 0) = rat(7, 10);
    theta.at(0, 1) = rat(11, 17);
    QualityBudget b = make_budget_explicit(theta, rat(100), rat(1, 10));
    CHECK(b.delta_d == rat(3, 4));
    CHECK(b.ypow_cmp == rat(4, 3) * 100 * 10);       // 4000/3
    CHECK(b.vpow_cmp == rat(16, 9) * rat(1, 100));   // 16/900
    CHECK(b.suppow_cmp == rat(4, 3) * 100 * rat(1, 10));  // 40/3
}

TEST_CASE("budget reduces to the mirror at d = 2") {
    SystemMatrix theta(1, 1);
    theta.at(0, 0) = rat(3, 2);
    QualityBudget b = make_budget_explicit(theta, rat(7), rat(2, 5));
    CHECK(b.delta_d == 1);
    CHECK(b.ypow_cmp == rat(7));      // Y = X
    CHECK(b.vpow_cmp == rat(2, 5));   // V = U
    CHECK(b.suppow_cmp == rat(14, 5));
}

TEST_CASE("budget domain handling") {
    SystemMatrix theta(1, 1);
    theta.at(0, 0) = rat(3, 2);
    QualityBudget exact = make_budget(theta, {2}, {3});
    CHECK(exact.exact_solution);
    CHECK(exact.upow == 0);

    CHECK_THROWS_AS(make_budget(theta, {1}, {3}), std::invalid_argument);  // U = 3/2 >= 1
    CHECK_THROWS_AS(make_budget(theta, {0}, {0}), std::invalid_argument);  // x = 0
}

TEST_CASE("comparator identities against the literal bounds") {
    RandomStream rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        int m = static_cast<int>(rng.next_int(1, 3));
        int n = static_cast<int>(rng.next_int(1, 3));
        SystemMatrix theta(n, m);  // entries unused by the budget
        Rational xpow = rat(rng.next_int(1, 500));
        Rational upow = rat(1, rng.next_int(2, 500));
        QualityBudget b = make_budget_explicit(theta, xpow, upow);
        int d = m + n;

        // exact structure: the delta power factors out of each comparator
        CHECK(b.ypow_cmp * pow_int(b.delta_d, n) == pow_int(xpow, n) * pow_int(upow, 1 - m));
        CHECK(b.vpow_cmp * pow_int(b.delta_d, m) == pow_int(xpow, 1 - n) * pow_int(upow, m));
        CHECK(b.suppow_cmp * b.delta_d == xpow * upow);

        // float cross-check: literal bounds raised to the matching powers
        double X = std::pow(to_double(xpow), 1.0 / m);
        double U = std::pow(to_double(upow), 1.0 / n);
        double D = to_double(b.delta_d);
        double Y = std::pow(D, -1.0 / (d - 1)) *
                   std::pow(std::pow(X, m) * std::pow(U, 1 - m), 1.0 / (d - 1));
        double V = std::pow(D, -1.0 / (d - 1)) *
                   std::pow(std::pow(X, 1 - n) * std::pow(U, n), 1.0 / (d - 1));
        CHECK(std::abs(std::log(std::pow(Y, n * (d - 1))) -
                       std::log(to_double(b.ypow_cmp))) < 1e-9);
        CHECK(std::abs(std::log(std::pow(V, m * (d - 1))) -
                       std::log(to_double(b.vpow_cmp))) < 1e-9);
        CHECK(std::abs(std::log(std::pow(D * std::pow(V, m) * std::pow(Y, n), d - 1)) -
                       std::log(to_double(b.suppow_cmp))) < 1e-9);

        // round-trip: D V^m Y^n computed from floats vs the exact identity
        double via_floats = D * std::pow(V, m) * std::pow(Y, n);
        double via_identity = std::pow(D, -1.0 / (d - 1)) *
                              std::pow(to_double(xpow) * to_double(upow), 1.0 / (d - 1));
        CHECK(std::abs(via_floats / via_identity - 1.0) < 1e-12);
    }
}

TEST_CASE("exact rational systems transfer exactly") {
    SystemMatrix theta(1, 1);
    theta.at(0, 0) = rat(3, 2);
    Certificate cert = verify_multitrans(theta, {2}, {3});
    CHECK(cert.exact_shortcut);
    CHECK(cert.witness_found);
    CHECK(cert.witness_x == IntVector{3});
    CHECK(cert.witness_y == IntVector{2});
    CHECK(cert.all_ok);
}

TEST_CASE("multiplicative transference on the 2x1 instance") {
    SystemMatrix theta(1, 2);
    theta.at(0, 0) = rat(7, 10);
    theta.at(0, 1) = rat(11, 17);
    QualityBudget b = make_budget_explicit(theta, rat(100), rat(1, 10));
    // hypothesis pair inside the budget: 7/10 - 11/17 = 9/170 < 1/10
    Certificate cert = verify_multitrans(theta, {1, -1}, {0}, b);
    CHECK(cert.witness_found);
    CHECK(cert.all_ok);
    CHECK(sup_norm(cert.witness_y) <= 37);
}

TEST_CASE("random instances: multiplicative and sup-norm transfers never falsify") {
    RandomStream rng(42);
    int done = 0;
    for (int trial = 0; done < 20 && trial < 200; ++trial) {
        int m = static_cast<int>(rng.next_int(1, 3));
        int n = static_cast<int>(rng.next_int(1, 3));
        SystemMatrix theta = random_system(rng, m, n, 50);
        ScanResult scan = best_approximations(theta, SearchBudget{8});
        const ApproxRecord* pick = nullptr;
        for (const auto& r : scan.mult_records)
            if (sgn(r.u_pow) > 0 && r.u_pow < 1) {
                pick = &r;
                break;
            }
        if (!pick) continue;
        Certificate cert = verify_multitrans(theta, pick->x, pick->y);
        CAPTURE(trial);
        CHECK(cert.witness_found);
        CHECK(cert.all_ok);

        Certificate mahler = verify_mahler(theta, pick->x, pick->y);
        CHECK(mahler.witness_found);
        CHECK(mahler.all_ok);
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("multiplicative budget beats the sup-norm factor for d >= 3") {
    CHECK_FALSE(multiplicative_budget_tighter(2));  // both factors are 1
    for (int d = 3; d <= 10; ++d) {
        CAPTURE(d);
        CHECK(multiplicative_budget_tighter(d));
    }
}

TEST_CASE("mahler transfer mirrors at d = 2") {
    SystemMatrix theta(1, 1);
    theta.at(0, 0) = rat(13, 8);
    ScanResult scan = best_approximations(theta, SearchBudget{4});
    const ApproxRecord& r = scan.mult_records.front();
    MahlerBudget b = make_mahler_budget(theta, r.x, r.y);
    CHECK(b.ypow_cmp == b.X);  // (d-1)^{d-1} = 1: Y = X
    CHECK(b.vpow_cmp == b.U);
    Certificate cert = verify_mahler(theta, r.x, r.y);
    CHECK(cert.witness_found);
    CHECK(cert.all_ok);
}

// ---------------------------------------------------------------------------
// Arbitrary-function transference
// ---------------------------------------------------------------------------

TEST_CASE("power-spec phi matches the closed form and the exponent map") {
    struct Dims {
        int m, n;
        double gamma;
    };
    for (const Dims& c : {Dims{1, 2, 1.3}, Dims{2, 1, 3.0}, Dims{2, 2, 1.5}}) {
        PhiTransfer phi = phi_from_psi(FunctionSpec::power(rat(static_cast<long long>(c.gamma * 10), 10)),
                                       c.m, c.n);
        double gamma = c.gamma;
        int d = c.m + c.n;
        double gp = dyson_map(gamma, c.m, c.n);
        double D = to_double(delta(d));
        double C = std::pow(D, -(1.0 + gp) / (d - 1));
        for (int k = 0; k < 20; ++k) {
            double s = std::pow(10.0, 1.0 + 0.55 * k);  // 10 .. 10^11.45
            double expect = C * std::pow(s, -gp);
            CAPTURE(c.m);
            CAPTURE(c.n);
            CAPTURE(s);
            CHECK(std::abs(phi(s) / expect - 1.0) < 1e-9);
        }
        // asymptotic slope reproduces the exponent map
        double s1 = 1e10, s2 = 1e12;
        double slope = -(std::log(phi(s2)) - std::log(phi(s1))) / (std::log(s2) - std::log(s1));
        CHECK(std::abs(slope - gp) < 1e-9);
    }
}

TEST_CASE("log spec 1: the product-side logarithmic corollary formula") {
    PhiTransfer phi = phi_from_psi(FunctionSpec::log_littlewood_1(), 1, 2);
    double c = 2.0 / std::sqrt(3.0);  // delta(3)^{-1/2}
    for (int k = 0; k < 20; ++k) {
        double s = std::pow(10.0, 0.5 + 0.3 * k);
        double expect = c * c * c / (s * s * std::sqrt(2.0 * std::log(s / c)));
        CAPTURE(s);
        CHECK(std::abs(phi(s) / expect - 1.0) < 1e-9);
    }
}

TEST_CASE("log spec 2: the sup-side logarithmic corollary formula") {
    PhiTransfer phi = phi_from_psi(FunctionSpec::log_littlewood_2(), 2, 1);
    double c = 2.0 / std::sqrt(3.0);
    // independent inversion of f(t) = c t^2 sqrt(log(1+t))
    auto rho = [&](double s) {
        double lo = 1e-9, hi = 1e12;
        for (int i = 0; i < 200; ++i) {
            double mid = std::sqrt(lo * hi);
            (c * mid * mid * std::sqrt(std::log1p(mid)) < s ? lo : hi) = mid;
        }
        return std::sqrt(lo * hi);
    };
    for (int k = 0; k < 15; ++k) {
        double s = std::pow(10.0, 1.0 + 0.5 * k);
        double r = rho(s);
        double expect_sq = c * c / (r * r * std::log1p(r));
        double got = phi(s);
        CAPTURE(s);
        // phi bounds the geometric mean; its square is the product bound
        CHECK(std::abs(got * got / expect_sq - 1.0) < 1e-8);
    }
}

TEST_CASE("phi transfer rejects a non-invertible spec") {
    // psi growing faster than t^2 makes f decreasing for m = 2
    std::vector<std::pair<double, double>> table;
    for (int i = 0; i <= 12; ++i) {
        double t = std::pow(2.0, i);
        table.emplace_back(t, std::pow(t, 3.0));
    }
    CHECK_THROWS_AS(phi_from_psi(FunctionSpec::tabulated(table), 2, 1), std::domain_error);
}

TEST_CASE("phi transfer reports domain exhaustion") {
    PhiTransfer phi = phi_from_psi(FunctionSpec::power(rat(2)), 1, 2);
    CHECK_THROWS_AS(phi(1e-9), std::domain_error);
}

TEST_CASE("chi transfer: power specs reproduce the mixed exponent map") {
    for (int m : {1, 2, 3}) {
        double gamma = m + 1.5;
        ChiTransfer chi = chi_from_psi(FunctionSpec::power(rat(static_cast<long long>(gamma * 2), 2)), m);
        double expect = tr_beta_lower(gamma, m).value;
        double s1 = 1e8, s2 = 1e10;
        double slope = -(std::log(chi(s2)) - std::log(chi(s1))) / (std::log(s2) - std::log(s1));
        CAPTURE(m);
        CHECK(std::abs(slope - expect) < 1e-9);
    }
}

TEST_CASE("chi transfer mirrors at m = n = 1") {
    ChiTransfer chi = chi_from_psi(FunctionSpec::power(rat(3, 2)), 1);
    for (double s : {2.0, 5.0, 10.0, 100.0}) {
        double expect = s * std::pow(s, -1.5);  // s * psi(s): f is the identity at d = 2
        CHECK(std::abs(chi(s) / expect - 1.0) < 1e-9);
    }
}

TEST_CASE("chi transfer is monotone decreasing on tabulated input") {
    std::vector<std::pair<double, double>> table;
    for (int i = 0; i <= 40; ++i) {
        double t = std::pow(10.0, 0.25 * i);
        table.emplace_back(t, 0.9 / (t * t * std::sqrt(1.0 + std::log(t))));
    }
    ChiTransfer chi = chi_from_psi(FunctionSpec::tabulated(table), 2);
    double lo = chi.base().f(table.front().first * 1.01);
    double hi = chi.base().f(table.back().first * 0.99);
    double prev = 0;
    for (int i = 0; i <= 24; ++i) {
        double s = lo * std::pow(hi / lo, i / 24.0);
        double v = chi(s);
        if (i > 0) CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("certificates revalidate") {
    SystemMatrix theta(1, 2);
    theta.at(0, 0) = rat(7, 10);
    theta.at(0, 1) = rat(11, 17);
    ScanResult scan = best_approximations(theta, SearchBudget{8});
    const ApproxRecord* pick = nullptr;
    for (const auto& r : scan.mult_records)
        if (sgn(r.u_pow) > 0 && r.u_pow < 1) {
            pick = &r;
            break;
        }
    REQUIRE(pick != nullptr);
    Certificate cert = verify_multitrans(theta, pick->x, pick->y);
    CHECK(cert.all_ok);
    CHECK(revalidate(cert));

    Certificate broken = cert;
    broken.witness_y[0] += 1;
    CHECK_FALSE(revalidate(broken));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "test_constants.hpp"
#include "test_util.hpp"
#include "translab/search.hpp"
#include "translab/transfer.hpp"

using namespace translab;
using namespace translab::testutil;

namespace {

// Independent oracle: plain double loop over the box [-bound, bound]^m with
// no shell structure or pruning, Pareto-filtered afterwards.
std::vector<std::pair<Rational, Rational>> brute_force_mult_records(const SystemMatrix& theta,
                                                                    long long bound) {
    std::vector<std::pair<Rational, Rational>> candidates;
    const int m = theta.m(), n = theta.n();
    IntVector x(m, -bound);
    while (true) {
        bool zero = true, canonical_seen = false, canonical = true;
        for (int j = 0; j < m; ++j) {
            if (x[j] != 0) {
                zero = false;
                if (!canonical_seen) {
                    canonical = x[j] > 0;
                    canonical_seen = true;
                }
            }
        }
        if (!zero && canonical) {
            RationalVector tx(n);
            for (int i = 0; i < n; ++i) {
                Rational acc(0);
                for (int j = 0; j < m; ++j) acc += theta.at(i, j) * rat(x[j]);
                tx[i] = acc;
            }
            IntVector y = nearest_integer_vector(tx);
            Rational u(1);
            for (int i = 0; i < n; ++i) u *= abs(tx[i] - rat(y[i]));
            candidates.emplace_back(pi_prime_power(x), u);
        }
        int i = m - 1;
        while (i >= 0 && x[i] == bound) {
            x[i] = -bound;
            --i;
        }
        if (i < 0) break;
        ++x[i];
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::pair<Rational, Rational>> records;
    for (const auto& [t, u] : candidates) {
        if (!records.empty() && records.back().first == t) continue;
        if (records.empty() || u < records.back().second) records.emplace_back(t, u);
    }
    return records;
}

}  // namespace

TEST_CASE("scan of a 1x1 rational stops at the exact solution") {
    ScanResult res = best_approximations(system_1x1(rat(1, 3)), SearchBudget{3});
    CHECK(res.hit_exact);
    REQUIRE(res.mult_records.size() == 2);
    CHECK(res.mult_records[0].x == IntVector{1});
    CHECK(res.mult_records[0].u_pow == rat(1, 3));
    CHECK(res.mult_records[1].x == IntVector{3});
    CHECK(res.mult_records[1].u_pow == 0);
}

TEST_CASE("rational 1x1 terminates with zero quality at a divisor of the denominator") {
    RandomStream rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        long long q = rng.next_int(2, 60);
        long long p = rng.next_int(-3 * q, 3 * q);
        ScanResult res = best_approximations(system_1x1(rat(p, q)), SearchBudget{q});
        CAPTURE(p);
        CAPTURE(q);
        CHECK(res.hit_exact);
        long long xq = res.mult_records.back().x[0];
        CHECK(q % xq == 0);
    }
}

TEST_CASE("golden ratio records are Fibonacci numbers") {
    SystemMatrix theta = system_1x1(rat(fibonacci(40), fibonacci(39)));
    ScanResult res = best_approximations(theta, SearchBudget{100});
    std::vector<long long> expect = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    REQUIRE(res.mult_records.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(res.mult_records[i].x == IntVector{expect[i]});
        if (i > 0) {
            CHECK(res.mult_records[i].t_pow > res.mult_records[i - 1].t_pow);
            CHECK(res.mult_records[i].u_pow < res.mult_records[i - 1].u_pow);
        }
    }
    // 1x1: the sup-norm records coincide with the multiplicative ones
    REQUIRE(res.sup_records.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(res.sup_records[i].x == res.mult_records[i].x);
}

TEST_CASE("1x2 row of sqrt approximants matches the brute-force oracle") {
    SystemMatrix theta(1, 2);
    ApproxReal a = approx_from_digits(kSqrt2Digits);
    ApproxReal b = approx_from_digits(kSqrt3Digits);
    theta.at(0, 0) = a.value;
    theta.at(0, 1) = b.value;
    theta.entry_eps = a.eps;

    ScanResult res = best_approximations(theta, SearchBudget{40});
    auto oracle = brute_force_mult_records(theta, 40);
    REQUIRE(res.mult_records.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        CHECK(res.mult_records[i].t_pow == oracle[i].first);
        CHECK(res.mult_records[i].u_pow == oracle[i].second);
    }
}

TEST_CASE("random small systems match the brute-force oracle") {
    RandomStream rng(32);
    for (int trial = 0; trial < 15; ++trial) {
        int m = static_cast<int>(rng.next_int(1, 2));
        int n = static_cast<int>(rng.next_int(1, 2));
        SystemMatrix theta = testutil::random_system(rng, m, n, 30);
        long long bound = 12;
        ScanResult res = best_approximations(theta, SearchBudget{bound});
        auto oracle = brute_force_mult_records(theta, bound);
        // scans stop early on exact hits; compare the common prefix
        REQUIRE(res.mult_records.size() <= oracle.size());
        for (std::size_t i = 0; i < res.mult_records.size(); ++i) {
            CHECK(res.mult_records[i].t_pow == oracle[i].first);
            CHECK(res.mult_records[i].u_pow == oracle[i].second);
        }
        if (!res.hit_exact) CHECK(res.mult_records.size() == oracle.size());
    }
}

TEST_CASE("precision guard aborts an under-declared scan") {
    SystemMatrix theta = system_1x1(rat(16180339887LL, 10000000000LL), rat(1, 1000));
    CHECK_THROWS_AS(best_approximations(theta, SearchBudget{10000}), PrecisionGuardError);
}

TEST_CASE("find_witness on the 2x1 instance budget") {
    SystemMatrix theta(1, 2);
    theta.at(0, 0) = rat(7, 10);
    theta.at(0, 1) = rat(11, 17);
    QualityBudget budget = make_budget_explicit(theta, rat(100), rat(1, 10));
    auto witness = find_witness(theta, budget);
    REQUIRE(witness.has_value());
    CHECK(sup_norm(witness->y) <= 37);
    // re-verify the three power-form predicates independently
    RationalVector r = transpose_residual(theta, witness->y, witness->x);
    CHECK(pow_int(pi_prime_power(witness->y), 2) <= budget.ypow_cmp);
    CHECK(pow_int(pi_power(r), 2) <= budget.vpow_cmp);
    CHECK(pow_int(sup_norm(r), 2) <= budget.suppow_cmp);
}

TEST_CASE("find_witness reports an empty region as none") {
    SystemMatrix theta(1, 1);
    theta.at(0, 0) = rat(3, 2);
    QualityBudget budget;
    budget.m = budget.n = 1;
    budget.delta_d = rat(1);
    budget.xpow = rat(1);
    budget.upow = rat(1, 2);
    budget.ypow_cmp = rat(1, 2);  // below 1: no nonzero y can qualify
    budget.vpow_cmp = rat(1, 2);
    budget.suppow_cmp = rat(1, 2);
    CHECK_FALSE(find_witness(theta, budget).has_value());
}

TEST_CASE("uniform feasibility") {
    SystemMatrix third = system_1x1(rat(1, 3));
    CHECK(uniform_feasible(third, rat(3), rat(1), SearchBudget{100}));

    // below the Minkowski line m/n everything is eventually feasible
    SystemMatrix golden = system_1x1(rat(fibonacci(40), fibonacci(39)));
    CHECK(uniform_feasible(golden, rat(100), rat(1, 2), SearchBudget{1000}));

    CHECK_FALSE(uniform_feasible(golden, rat(10), rat(3), SearchBudget{1000}));

    CHECK_THROWS_AS(uniform_feasible(golden, rat(100000), rat(1), SearchBudget{100}),
                    InconclusiveError);
    CHECK_THROWS_AS(uniform_feasible(golden, rat(1), rat(1), SearchBudget{100}),
                    std::invalid_argument);
}

TEST_CASE("badness infimum") {
    BadnessResult res = badness_infimum(system_1x1(rat(5, 7)), SearchBudget{10});
    CHECK(res.exact_zero);
    CHECK(res.min_value == 0);

    ApproxReal s2 = approx_from_digits(kSqrt2Digits);
    SystemMatrix theta = system_1x1(s2.value, s2.eps);
    BadnessResult bad = badness_infimum(theta, SearchBudget{100});
    CHECK(bad.min_value >= rat(34, 100));
    CHECK(bad.min_value < rat(35, 100));
    CHECK(bad.argmin.x == IntVector{2});  // q ||q sqrt2|| dips at q = 2

    // consistency: the minimum equals the best record product
    ScanResult scan = best_approximations(theta, SearchBudget{100});
    Rational best(-1);
    for (const auto& r : scan.mult_records) {
        Rational v = r.t_pow * r.u_pow;
        if (best < 0 || v < best) best = v;
    }
    CHECK(bad.min_value == best);
}

TEST_CASE("littlewood scan") {
    ApproxReal a = approx_from_digits(kSqrt2Digits);
    ApproxReal b = approx_from_digits(kSqrt3Digits);
    LittlewoodScanResult res = littlewood_scan(a, b, 1000);
    REQUIRE(!res.records.empty());
    CHECK(res.records.front().q == 1);
    CHECK(to_double(res.records.front().value) == doctest::Approx(0.11096).epsilon(1e-3));
    for (std::size_t i = 1; i < res.records.size(); ++i)
        CHECK(res.records[i].value < res.records[i - 1].value);

    LittlewoodScanResult halves =
        littlewood_scan(ApproxReal{rat(1, 2)}, ApproxReal{rat(1, 2)}, 2);
    REQUIRE(halves.records.size() == 2);
    CHECK(halves.records[0].q == 1);
    CHECK(halves.records[0].value == rat(1, 4));
    CHECK(halves.records[1].q == 2);
    CHECK(halves.records[1].value == 0);

    // guard: declared precision far too small for the scan depth
    ApproxReal sloppy{rat(141, 100), rat(1, 100)};
    CHECK_THROWS_AS(littlewood_scan(sloppy, b, 100000), PrecisionGuardError);
}

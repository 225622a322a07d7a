#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "translab/delta.hpp"

using namespace translab;

// Geometry oracles for the first two values: the d = 2 section is the segment
// from (-1,1) to (1,-1) of length 2*sqrt(2), so (1/(2 sqrt 2)) * 2 sqrt 2 = 1;
// the d = 3 section is the regular hexagon with vertices at permutations of
// (1,-1,0), area 3*sqrt(3), so (1/(4 sqrt 3)) * 3 sqrt 3 = 3/4.
TEST_CASE("delta values match the geometric sections") {
    CHECK(delta(2) == rat(1));
    CHECK(delta(3) == rat(3, 4));
    CHECK(delta(4) == rat(2, 3));   // (1/(8*6)) * (4^3 - 4*2^3) = 32/48
    CHECK(delta(5) == rat(115, 192));
    CHECK_THROWS_AS(delta(1), std::invalid_argument);
}

TEST_CASE("bounds report to d = 30") {
    DeltaTable table = delta_bounds_report(30);
    CHECK(table.rows.size() == 29);
    CHECK(table.all_ok);
    for (const auto& row : table.rows) {
        CHECK(row.bounds_ok);
        CHECK(row.monotone_ok);
        CHECK(sgn(row.value) > 0);
    }
    // boundary case of the squared bound: d = 2 sits exactly on d*delta^2 = 2
    CHECK(Rational(2) * table.values[2] * table.values[2] == 2);
}

TEST_CASE("bounds report small example") {
    DeltaTable table = delta_bounds_report(3);
    CHECK(table.values[2] == rat(1));
    CHECK(table.values[3] == rat(3, 4));
    CHECK(table.all_ok);
}

TEST_CASE("table stays exact and monotone far out") {
    DeltaTable table = delta_bounds_report(64);
    CHECK(table.all_ok);
}

// Definitional Monte-Carlo oracle vs the closed form. The acceptance suite
// reruns this at 10^6 samples for d = 2..8; keep the unit test lighter.
TEST_CASE("monte carlo oracle agrees with the closed form") {
    for (int d = 2; d <= 5; ++d) {
        DeltaMcCheck check = delta_monte_carlo_check(d, 200000, 0);
        CAPTURE(d);
        CAPTURE(check.estimate);
        CAPTURE(check.exact);
        CHECK(check.within_3_sigma);
    }
}

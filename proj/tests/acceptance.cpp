// Acceptance suite: end-to-end checks of the laboratory's guarantees, one
// printed line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "test_constants.hpp"
#include "test_util.hpp"
#include "translab/delta.hpp"
#include "translab/exponents.hpp"
#include "translab/parallel.hpp"
#include "translab/rng.hpp"
#include "translab/search.hpp"
#include "translab/secdual.hpp"
#include "translab/transfer.hpp"

using namespace translab;
using namespace translab::testutil;

namespace {

int g_failures = 0;

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void report(int index, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] %d. %s: %s  (%.2f s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

struct Instance {
    SystemMatrix theta;
    IntVector x, y;
};

// Random systems with denominators <= 50 seeded with their first
// record-breaking pair; instances whose tight budgets would blow up the
// integer enumerations are regenerated (selection happens before any
// verification, so it cannot mask a falsification).
std::vector<Instance> make_instances(int count, std::uint64_t seed) {
    std::vector<Instance> out;
    RandomStream rng(seed);
    while (static_cast<int>(out.size()) < count) {
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
        QualityBudget b = make_budget(theta, pick->x, pick->y);
        if (floor_root(b.ypow_cmp, b.d() - 1) > 200) continue;
        MahlerBudget mb = make_mahler_budget(theta, pick->x, pick->y);
        if (floor_root(mb.ypow_cmp, mb.d() - 1) > 60) continue;
        out.push_back(Instance{theta, pick->x, pick->y});
    }
    return out;
}

void criterion_1_delta_exactness() {
    Timer t;
    bool pass = delta(2) == rat(1) && delta(3) == rat(3, 4) && delta(4) == rat(2, 3) &&
                delta(5) == rat(115, 192);

    Timer table_timer;
    DeltaTable table = delta_bounds_report(30);
    double table_seconds = table_timer.seconds();
    pass = pass && table.all_ok && table_seconds < 1.0;

    std::vector<DeltaMcCheck> checks(7);
    parallel_for(checks.size(), default_thread_count(), [&](std::size_t i) {
        checks[i] = delta_monte_carlo_check(static_cast<int>(i) + 2, 1000000, 0);
    });
    std::ostringstream detail;
    detail << "closed form {1, 3/4, 2/3, 115/192}; table d<=30 in " << table_seconds
           << " s; MC 1e6 z-checks d=2..8:";
    for (const auto& c : checks) {
        pass = pass && c.within_3_sigma;
        detail << " " << (c.within_3_sigma ? "ok" : "MISS");
    }
    report(1, "delta table exactness + definitional Monte-Carlo oracle", pass, detail.str(),
           t.seconds());
}

void criterion_2_delta_bounds() {
    Timer t;
    DeltaTable table = delta_bounds_report(30);
    int failures = 0;
    for (const auto& row : table.rows)
        if (!row.bounds_ok || !row.monotone_ok) ++failures;
    report(2, "squared section bounds and monotonicity, 2 <= d <= 30", failures == 0,
           failures == 0 ? "29 rows, zero failures" : "failures detected", t.seconds());
}

void criterion_3_wedge_lemmas() {
    Timer t;
    std::vector<Parallelepiped> bodies;
    std::vector<int> trials;
    for (int d : {2, 3}) {
        bodies.push_back(Parallelepiped::cube(d));
        trials.push_back(1000);
    }
    RandomStream rng(303);
    for (int d : {2, 3})
        for (int i = 0; i < 100; ++i) {
            bodies.push_back(random_parallelepiped(rng, d));
            trials.push_back(64);
        }
    std::vector<WedgeLemmaReport> reports(bodies.size());
    parallel_for(bodies.size(), default_thread_count(), [&](std::size_t i) {
        reports[i] = check_wedge_lemma(bodies[i], trials[i], 7000 + 13 * i);
    });
    int failures = 0;
    long long wedge_points = 0;
    for (const auto& r : reports) {
        if (!r.all_ok()) ++failures;
        wedge_points += r.wedge_integer_points;
    }
    double sec = t.seconds();
    bool pass = failures == 0 && sec < 60.0;
    std::ostringstream detail;
    detail << "cube + 200 random bodies at d in {2,3}, four properties each, property (i) "
              "exhaustive ("
           << wedge_points << " wedge lattice points checked), failures: " << failures;
    report(3, "section-dual lemma suite", pass, detail.str(), sec);
}

std::vector<Instance> g_instances;

void criterion_4_multiplicative_transference() {
    Timer t;
    g_instances = make_instances(100, 404);
    std::vector<char> ok(g_instances.size(), 0);
    parallel_for(g_instances.size(), default_thread_count(), [&](std::size_t i) {
        Certificate cert = verify_multitrans(g_instances[i].theta, g_instances[i].x,
                                             g_instances[i].y);
        ok[i] = cert.witness_found && cert.all_ok;
    });
    int falsified = 0;
    for (char c : ok)
        if (!c) ++falsified;
    double sec = t.seconds();
    bool pass = falsified == 0 && sec < 600.0;
    std::ostringstream detail;
    detail << "100 random systems (m,n <= 3, denominators <= 50), tight budgets from first "
              "records; falsifications: "
           << falsified;
    report(4, "constructive multiplicative transference", pass, detail.str(), sec);
}

void criterion_5_mahler_and_tightness() {
    Timer t;
    std::vector<char> ok(g_instances.size(), 0);
    parallel_for(g_instances.size(), default_thread_count(), [&](std::size_t i) {
        const Instance& inst = g_instances[i];
        Certificate cert = verify_mahler(inst.theta, inst.x, inst.y);
        bool good = cert.witness_found && cert.all_ok;
        // budget comparison at the common sup-norm hypothesis (X, U): the
        // multiplicative Y-comparator must be strictly below the sup-norm one
        // for d >= 3 and equal at d = 2
        int d = inst.theta.d();
        int n = inst.theta.n();
        Rational lhs = pow_int(delta(d), -n);
        Rational rhs = pow_int(rat(d - 1), static_cast<long>(n) * (d - 1));
        good = good && (d >= 3 ? lhs < rhs : lhs == rhs) &&
               multiplicative_budget_tighter(d) == (d >= 3);
        ok[i] = good;
    });
    int falsified = 0;
    for (char c : ok)
        if (!c) ++falsified;
    bool pass = falsified == 0;
    std::ostringstream detail;
    detail << "same 100 instances under sup-norm budgets; multiplicative Y-comparator "
              "strictly tighter for every d >= 3 instance; falsifications: "
           << falsified;
    report(5, "constructive sup-norm transference + budget comparison", pass, detail.str(),
           t.seconds());
}

void criterion_6_exponent_sanity() {
    Timer t;
    ApproxReal golden = approx_from_digits(kGoldenDigits);
    SystemMatrix theta = system_1x1(golden.value, golden.eps);
    ScanResult scan = best_approximations(theta, SearchBudget{100000});
    ExponentReport rep = estimate_exponents(scan.mult_records, scan.sup_records, 1, 1, 0.5);
    bool pass = rep.beta_est == rep.mbeta_est && rep.beta_est >= 0.9 && rep.beta_est <= 1.1;

    ApproxReal s2 = approx_from_digits(kSqrt2Digits);
    SystemMatrix sqrt2 = system_1x1(s2.value, s2.eps);
    BadnessResult bad = badness_infimum(sqrt2, SearchBudget{10000});
    bool bad_ok = bad.min_value >= rat(34, 100) && bad.min_value < rat(3436, 10000) &&
                  bad.argmin.x == IntVector{2};
    pass = pass && bad_ok;
    std::ostringstream detail;
    detail << "golden approximant, shells to 1e5: beta ~ " << rep.beta_est
           << " in [0.9, 1.1]; sqrt2 badness min over q <= 1e4 = "
           << to_double(bad.min_value) << " >= 0.34 at q = " << bad.argmin.x[0];
    report(6, "exponent estimation sanity", pass, detail.str(), t.seconds());
}

void criterion_7_inequality_calculus() {
    Timer t;
    bool pass = true;
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) pass = pass && dyson_map(rat(m, n), m, n) == rat(n, m);
    for (int m = 1; m <= 6; ++m)
        pass = pass && tr_beta_lower_exact(rat(m + m * m), m) == rat(1, m);
    for (int n = 1; n <= 6; ++n)
        pass = pass && beta_lower_from_mbeta_exact(rat(n) + rat(1, n), n) == rat(1, n);
    int grid_checked = 0;
    for (int n = 1; n <= 4 && pass; ++n)
        for (int k = 0; k < 100; ++k) {
            Rational gamma = rat(1, n) + rat(k, 10);
            if (tr_beta_lower_exact(dyson_map(gamma, 1, n), n) !=
                beta_lower_from_mbeta_exact(gamma, n)) {
                pass = false;
                break;
            }
            ++grid_checked;
        }
    std::ostringstream detail;
    detail << "fixed points m,n <= 6 exact; threshold identities exact; composition "
              "identity on "
           << grid_checked << " rational grid points";
    report(7, "exponent inequality calculus", pass, detail.str(), t.seconds());
}

void criterion_8_function_transference() {
    Timer t;
    bool pass = true;
    double worst = 0;
    struct Dims {
        int m, n;
        Rational gamma;
    };
    for (const Dims& c : {Dims{1, 2, rat(13, 10)}, Dims{2, 1, rat(3)}}) {
        PhiTransfer phi = phi_from_psi(FunctionSpec::power(c.gamma), c.m, c.n);
        int d = c.m + c.n;
        double gp = dyson_map(to_double(c.gamma), c.m, c.n);
        double C = std::pow(to_double(delta(d)), -(1.0 + gp) / (d - 1));
        for (int k = 0; k < 20; ++k) {
            double s = std::pow(10.0, 1.0 + 0.5 * k);
            double err = std::abs(phi(s) / (C * std::pow(s, -gp)) - 1.0);
            worst = std::max(worst, err);
            pass = pass && err < 1e-9;
        }
    }
    PhiTransfer log1 = phi_from_psi(FunctionSpec::log_littlewood_1(), 1, 2);
    double c3 = 2.0 / std::sqrt(3.0);
    for (int k = 0; k < 20; ++k) {
        double s = std::pow(10.0, 0.5 + 0.35 * k);
        double expect = c3 * c3 * c3 / (s * s * std::sqrt(2.0 * std::log(s / c3)));
        double err = std::abs(log1(s) / expect - 1.0);
        worst = std::max(worst, err);
        pass = pass && err < 1e-9;
    }
    std::ostringstream detail;
    detail << "power specs track the exponent map and the logarithmic corollary formula "
              "(c = 2/sqrt(3)); worst relative error "
           << worst;
    report(8, "arbitrary-function transference", pass, detail.str(), t.seconds());
}

void criterion_9_littlewood_desk_test() {
    Timer t;
    ApproxReal a = approx_from_digits(kSqrt2Digits);
    ApproxReal b = approx_from_digits(kSqrt3Digits);
    LittlewoodScanResult scan = littlewood_scan(a, b, 1000000);
    bool pass = sgn(scan.min_value) > 0;
    std::optional<long long> q;
    if (pass) {
        q = littlewood_corollary_check(a, b, 1000000, scan.min_value);
        pass = q.has_value();
    }
    std::ostringstream detail;
    detail << "sqrt2/sqrt3 scan to q <= 1e6: best mu = " << to_double(scan.min_value)
           << (q ? "; both mu^(1/4) budget inequalities satisfied at q = " +
                       std::to_string(*q)
                 : "; no q satisfied the budget pair");
    report(9, "Littlewood transfer desk test", pass, detail.str(), t.seconds());
}

}  // namespace

int main() {
    std::printf("acceptance suite (threads: %d)\n", default_thread_count());
    Timer total;
    criterion_1_delta_exactness();
    criterion_2_delta_bounds();
    criterion_3_wedge_lemmas();
    criterion_4_multiplicative_transference();
    criterion_5_mahler_and_tightness();
    criterion_6_exponent_sanity();
    criterion_7_inequality_calculus();
    criterion_8_function_transference();
    criterion_9_littlewood_desk_test();
    std::printf("%d/9 criteria passed in %.1f s\n", 9 - g_failures, total.seconds());
    return g_failures == 0 ? 0 : 1;
}

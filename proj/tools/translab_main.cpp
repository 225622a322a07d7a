// translab: exact-arithmetic laboratory for multiplicative Diophantine
// transference. Subcommands cover the constant table, section volumes, pruned
// record scans, constructive transference certificates, function transfer,
// exponent calculus, Littlewood scans, and the section-dual lemma checks.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "translab/delta.hpp"
#include "translab/exponents.hpp"
#include "translab/io.hpp"
#include "translab/parallel.hpp"
#include "translab/rng.hpp"
#include "translab/search.hpp"
#include "translab/secdual.hpp"
#include "translab/transfer.hpp"

using namespace translab;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct GlobalOptions {
    int threads = default_thread_count();
    std::uint64_t seed = 0;
    bool stable_output = false;
};

RunManifest make_manifest(const GlobalOptions& g, const std::string& command,
                          const std::vector<std::string>& args,
                          const std::vector<std::string>& input_files) {
    RunManifest m;
    m.command = command;
    m.arguments = args;
    m.seed = g.seed;
    m.version = kVersion;
    if (!g.stable_output) m.started_at = iso8601_now();
    for (const auto& path : input_files) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(fnv1a_file(path)));
        m.input_hashes.emplace_back(path, buf);
    }
    return m;
}

void finish_manifest(RunManifest& m, const GlobalOptions& g) {
    if (!g.stable_output) m.finished_at = iso8601_now();
}

void emit(const json& payload, const std::string& out_path) {
    std::string text = payload.dump(2);
    std::cout << text << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write output file: " + out_path);
        out << text << "\n";
    }
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rational_from_string(item));
    if (out.empty()) throw std::invalid_argument("empty list: " + csv);
    return out;
}

IntVector parse_int_list(const std::string& csv) {
    IntVector out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::pair<IntVector, IntVector> parse_pair(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("pair must look like x1,...,xm:y1,...,yn");
    return {parse_int_list(text.substr(0, colon)), parse_int_list(text.substr(colon + 1))};
}

// ---------------------------------------------------------------------------

int run_delta(const GlobalOptions& g, int dmax, bool mc_check, std::uint64_t samples,
              const std::string& out_path, RunManifest manifest) {
    DeltaTable table = delta_bounds_report(dmax);
    std::vector<DeltaMcCheck> mc(table.rows.size());
    if (mc_check) {
        parallel_for(table.rows.size(), g.threads, [&](std::size_t i) {
            mc[i] = delta_monte_carlo_check(table.rows[i].d, samples, g.seed);
        });
    }
    bool all_ok = table.all_ok;
    json rows = json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const DeltaRow& r = table.rows[i];
        json row{{"d", r.d},
                 {"delta", to_fraction_string(r.value)},
                 {"delta_float", to_double(r.value)},
                 {"bounds_ok", r.bounds_ok},
                 {"monotone_ok", r.monotone_ok}};
        if (mc_check) {
            row["mc_estimate"] = mc[i].estimate;
            row["mc_std_error"] = mc[i].std_error;
            row["mc_within_3_sigma"] = mc[i].within_3_sigma;
            all_ok = all_ok && mc[i].within_3_sigma;
        }
        rows.push_back(row);
    }
    finish_manifest(manifest, g);
    emit(json{{"manifest", manifest_json(manifest)}, {"table", rows}, {"all_ok", all_ok}},
         out_path);
    return all_ok ? kExitOk : kExitFalsified;
}

int run_section(const GlobalOptions& g, const std::string& box_csv, const std::string& dir_csv,
                bool mc, std::uint64_t samples, const std::string& out_path,
                RunManifest manifest) {
    AxisBox box{parse_rational_list(box_csv)};
    RationalVector dir = parse_rational_list(dir_csv);
    if (dir.size() != box.half_sides.size())
        throw std::invalid_argument("--box and --dir need the same dimension");
    SectionValue exact = box_section_volume(box, dir);
    json out{{"coeff", to_fraction_string(exact.coeff)},
             {"norm_sq", to_fraction_string(exact.norm_sq)},
             {"volume_float", exact.value()}};
    if (mc) {
        double min_c = 1e300;
        for (const Rational& c : box.half_sides) min_c = std::min(min_c, to_double(c));
        double se = 0;
        double est = box_section_volume_mc(box, dir, samples, g.seed, 0.02 * min_c, &se);
        out["mc_estimate"] = est;
        out["mc_std_error"] = se;
        out["mc_within_3_sigma"] = std::abs(est - exact.value()) <= 3 * se;
    }
    finish_manifest(manifest, g);
    emit(json{{"manifest", manifest_json(manifest)}, {"section", out}}, out_path);
    return kExitOk;
}

int run_scan(const GlobalOptions& g, const std::string& theta_path, long long sup_bound,
             const std::string& records_path, RunManifest manifest) {
    SystemMatrix theta = parse_matrix_file(theta_path);
    ScanResult res = best_approximations(theta, SearchBudget{sup_bound});
    finish_manifest(manifest, g);
    if (!records_path.empty()) {
        std::ofstream out(records_path);
        if (!out) throw std::invalid_argument("cannot write records file: " + records_path);
        out << json{{"kind", "manifest"}, {"manifest", manifest_json(manifest)}}.dump() << "\n";
        for (const auto& r : res.mult_records) out << record_json(r, "mult").dump() << "\n";
        for (const auto& r : res.sup_records) out << record_json(r, "sup").dump() << "\n";
    }
    json summary{{"manifest", manifest_json(manifest)},
                 {"m", theta.m()},
                 {"n", theta.n()},
                 {"shells_done", res.shells_done},
                 {"hit_exact", res.hit_exact},
                 {"mult_record_count", res.mult_records.size()},
                 {"sup_record_count", res.sup_records.size()}};
    if (sgn(res.min_residual_entry) > 0)
        summary["min_residual_entry"] = to_fraction_string(res.min_residual_entry);
    json best = json::array();
    for (const auto& r : res.mult_records) best.push_back(record_json(r, "mult"));
    summary["records"] = best;
    emit(summary, "");
    return kExitOk;
}

int run_transfer(const GlobalOptions& g, const std::string& theta_path, const std::string& pair,
                 bool mahler, const std::string& xpow, const std::string& upow,
                 const std::string& cert_path, RunManifest manifest) {
    SystemMatrix theta = parse_matrix_file(theta_path);
    auto [x, y] = parse_pair(pair);
    Certificate cert;
    if (mahler) {
        if (!xpow.empty() || !upow.empty())
            throw std::invalid_argument("explicit budgets apply to the multiplicative mode only");
        cert = verify_mahler(theta, x, y);
    } else if (!xpow.empty() || !upow.empty()) {
        if (xpow.empty() || upow.empty())
            throw std::invalid_argument("explicit budgets need both --xpow and --upow");
        QualityBudget b = make_budget_explicit(theta, rational_from_string(xpow),
                                               rational_from_string(upow));
        cert = verify_multitrans(theta, x, y, b);
    } else {
        cert = verify_multitrans(theta, x, y);
    }
    finish_manifest(manifest, g);
    json out = certificate_json(cert);
    out["manifest"] = manifest_json(manifest);
    if (!mahler) out["mult_budget_tighter_than_supnorm"] = multiplicative_budget_tighter(theta.d());
    emit(out, cert_path);
    return cert.witness_found && cert.all_ok ? kExitOk : kExitFalsified;
}

int run_revalidate(const GlobalOptions& g, const std::string& cert_path, RunManifest manifest) {
    std::ifstream in(cert_path);
    if (!in) throw std::invalid_argument("cannot open certificate: " + cert_path);
    json j;
    in >> j;
    Certificate cert = certificate_from_json(j);
    bool ok = revalidate(cert);
    finish_manifest(manifest, g);
    emit(json{{"manifest", manifest_json(manifest)},
              {"certificate", cert_path},
              {"revalidated", ok}},
         "");
    return ok ? kExitOk : kExitFalsified;
}

FunctionSpec parse_spec(const std::string& text) {
    if (text.rfind("power:", 0) == 0)
        return FunctionSpec::power(rational_from_string(text.substr(6)));
    if (text == "log1") return FunctionSpec::log_littlewood_1();
    if (text == "log2") return FunctionSpec::log_littlewood_2();
    if (text.rfind("table:", 0) == 0) {
        std::ifstream in(text.substr(6));
        if (!in) throw std::invalid_argument("cannot open table file");
        json j;
        in >> j;
        std::vector<std::pair<double, double>> table;
        for (const auto& row : j) table.emplace_back(row[0].get<double>(), row[1].get<double>());
        return FunctionSpec::tabulated(table);
    }
    throw std::invalid_argument("spec must be power:G, log1, log2 or table:FILE");
}

int run_psi_transfer(const GlobalOptions& g, const std::string& spec_text, int m, int n,
                     const std::string& eval_csv, bool with_chi, const std::string& out_path,
                     RunManifest manifest) {
    FunctionSpec spec = parse_spec(spec_text);
    PhiTransfer phi = phi_from_psi(spec, m, n);
    json evals = json::array();
    for (const Rational& sr : parse_rational_list(eval_csv)) {
        double s = to_double(sr);
        json row{{"s", s}, {"phi", phi(s)}};
        if (with_chi && n == 1) row["chi"] = chi_from_psi(spec, m)(s);
        evals.push_back(row);
    }
    finish_manifest(manifest, g);
    emit(json{{"manifest", manifest_json(manifest)},
              {"m", m},
              {"n", n},
              {"report",
               json{{"f_increasing", phi.report().f_increasing},
                    {"psi_below_one_from", phi.report().psi_below_one_from},
                    {"growth_condition_ok", phi.report().growth_condition_ok}}},
              {"evaluations", evals}},
         out_path);
    return kExitOk;
}

int run_exponents(const GlobalOptions& g, const std::string& records_path, int m, int n,
                  double tail, RunManifest manifest) {
    std::ifstream in(records_path);
    if (!in) throw std::invalid_argument("cannot open records file: " + records_path);
    std::vector<ApproxRecord> mult, sup;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        if (!j.contains("kind")) continue;
        std::string kind = j["kind"].get<std::string>();
        if (kind == "mult")
            mult.push_back(record_from_json(j));
        else if (kind == "sup")
            sup.push_back(record_from_json(j));
    }
    ExponentReport rep = estimate_exponents(mult, sup, m, n, tail);
    auto checks = trivial_bounds_check(rep, m, n);
    bool all_ok = true;
    json checks_json = json::array();
    for (const auto& c : checks) {
        checks_json.push_back(json{{"name", c.name}, {"pass", c.pass}});
        all_ok = all_ok && c.pass;
    }
    finish_manifest(manifest, g);
    emit(json{{"manifest", manifest_json(manifest)},
              {"report", exponent_report_json(rep)},
              {"trivial_bounds", checks_json},
              {"all_ok", all_ok}},
         "");
    return all_ok ? kExitOk : kExitFalsified;
}

int run_exponents_map(const GlobalOptions& g, const std::string& gamma_text, int m, int n,
                      const std::string& which, RunManifest manifest) {
    double gamma = gamma_text == "inf" ? std::numeric_limits<double>::infinity()
                                       : to_double(rational_from_string(gamma_text));
    double value = 0;
    bool vacuous = false;
    if (which == "dyson") {
        value = dyson_map(gamma, m, n);
    } else if (which == "german") {
        BoundValue b = uniform_map(gamma, m, n, UniformMapKind::german);
        value = b.value;
        vacuous = b.vacuous;
    } else if (which == "tr-beta") {
        BoundValue b = tr_beta_lower(gamma, m);
        value = b.value;
        vacuous = b.vacuous;
    } else if (which == "beta-from-mbeta") {
        BoundValue b = beta_lower_from_mbeta(gamma, n);
        value = b.value;
        vacuous = b.vacuous;
    } else {
        throw std::invalid_argument("--which must be dyson|german|tr-beta|beta-from-mbeta");
    }
    finish_manifest(manifest, g);
    emit(json{{"manifest", manifest_json(manifest)},
              {"gamma", gamma_text},
              {"which", which},
              {"value", std::isinf(value) ? json("inf") : json(value)},
              {"vacuous", vacuous}},
         "");
    return kExitOk;
}

int run_littlewood(const GlobalOptions& g, const std::string& alpha_text,
                   const std::string& beta_text, int precision, long long qmax,
                   bool corollary_check, const std::string& records_path,
                   RunManifest manifest) {
    ApproxReal alpha = parse_approx_real(alpha_text, precision);
    ApproxReal beta = parse_approx_real(beta_text, precision);
    LittlewoodScanResult res = littlewood_scan(alpha, beta, qmax);
    finish_manifest(manifest, g);
    json records = json::array();
    for (const auto& r : res.records)
        records.push_back(json{{"q", r.q},
                               {"value", to_fraction_string(r.value)},
                               {"value_float", to_double(r.value)},
                               {"dist_alpha_float", to_double(r.dist_alpha)},
                               {"dist_beta_float", to_double(r.dist_beta)}});
    json out{{"manifest", manifest_json(manifest)},
             {"qmax", res.qmax},
             {"records", records},
             {"min_value", to_fraction_string(res.min_value)},
             {"min_value_float", to_double(res.min_value)}};
    bool ok = true;
    if (corollary_check) {
        if (sgn(res.min_value) == 0) {
            out["corollary_check"] = json{{"skipped", "scan minimum is exactly zero"}};
        } else {
            auto q = littlewood_corollary_check(alpha, beta, qmax, res.min_value);
            ok = q.has_value();
            out["corollary_check"] = json{{"found", ok}, {"q", ok ? json(*q) : json()}};
        }
    }
    if (!records_path.empty()) {
        std::ofstream f(records_path);
        if (!f) throw std::invalid_argument("cannot write records file: " + records_path);
        f << json{{"kind", "manifest"}, {"manifest", manifest_json(manifest)}}.dump() << "\n";
        for (const auto& r : records) f << r.dump() << "\n";
    }
    emit(out, "");
    return ok ? kExitOk : kExitFalsified;
}

int run_verify_lemmas(const GlobalOptions& g, int d, int trials, int bodies,
                      const std::string& out_path, RunManifest manifest) {
    std::vector<Parallelepiped> targets;
    targets.push_back(Parallelepiped::cube(d));
    {
        RandomStream rng(g.seed);
        for (int i = 0; i < bodies; ++i) targets.push_back(random_parallelepiped(rng, d));
    }
    std::vector<WedgeLemmaReport> reports(targets.size());
    parallel_for(targets.size(), g.threads, [&](std::size_t i) {
        reports[i] = check_wedge_lemma(targets[i], trials, g.seed + 17 * i);
    });
    bool all_ok = true;
    json rows = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        all_ok = all_ok && r.all_ok();
        rows.push_back(json{{"body", i == 0 ? "cube" : "random"},
                            {"integer_transfer_ok", r.integer_transfer_ok},
                            {"convexity_ok", r.convexity_ok},
                            {"cofactor_map_ok", r.cofactor_map_ok},
                            {"cube_inclusion_ok", r.cube_inclusion_ok},
                            {"wedge_integer_points", r.wedge_integer_points},
                            {"body_integer_points", r.body_integer_points},
                            {"first_failure", r.first_failure}});
    }
    finish_manifest(manifest, g);
    emit(json{{"manifest", manifest_json(manifest)},
              {"d", d},
              {"trials", trials},
              {"reports", rows},
              {"all_ok", all_ok}},
         out_path);
    return all_ok ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicative-transference laboratory"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--threads", g.threads,
                   "worker threads (results are thread-count independent)");
    app.add_option("--seed", g.seed, "seed for all sampled checks");
    app.add_flag("--stable-output", g.stable_output,
                 "omit timestamps for byte-identical reruns");

    auto* cmd_delta = app.add_subcommand("delta", "constant table with bound checks");
    int dmax = 64;
    bool mc_check = false;
    std::uint64_t samples = 1000000;
    std::string out_path;
    cmd_delta->add_option("--dmax", dmax, "largest dimension (default 64)");
    cmd_delta->add_flag("--mc-check", mc_check, "run the Monte-Carlo definitional oracle");
    cmd_delta->add_option("--samples", samples, "Monte-Carlo samples per dimension");
    cmd_delta->add_option("--out", out_path, "also write the JSON to a file");

    auto* cmd_section = app.add_subcommand("section", "central hyperplane section of a box");
    std::string box_csv, dir_csv;
    bool section_mc = false;
    cmd_section->add_option("--box", box_csv, "half-sides c1,...,cd")->required();
    cmd_section->add_option("--dir", dir_csv, "direction e1,...,ed")->required();
    cmd_section->add_flag("--mc", section_mc, "cross-check with the slab estimator");
    cmd_section->add_option("--samples", samples, "Monte-Carlo samples");
    cmd_section->add_option("--out", out_path, "also write the JSON to a file");

    auto* cmd_scan = app.add_subcommand("scan", "record-breaking approximation scan");
    std::string theta_path, records_path;
    long long sup_bound = 100;
    cmd_scan->add_option("--theta", theta_path, "matrix file")->required();
    cmd_scan->add_option("--sup-bound", sup_bound, "largest sup-norm shell")->required();
    cmd_scan->add_option("--records-out", records_path, "JSONL records output");

    auto* cmd_transfer = app.add_subcommand("transfer", "constructive transference certificate");
    std::string pair_text, cert_path, revalidate_path, xpow_text, upow_text;
    bool mahler = false;
    cmd_transfer->add_option("--theta", theta_path, "matrix file");
    cmd_transfer->add_option("--pair", pair_text, "hypothesis pair x1,...,xm:y1,...,yn");
    cmd_transfer->add_flag("--mahler", mahler, "sup-norm budgets instead of multiplicative");
    cmd_transfer->add_option("--xpow", xpow_text, "explicit X^m (rational)");
    cmd_transfer->add_option("--upow", upow_text, "explicit U^n (rational)");
    cmd_transfer->add_option("--certificate-out", cert_path, "certificate JSON output");
    cmd_transfer->add_option("--revalidate", revalidate_path,
                             "recheck a stored certificate instead of searching");

    auto* cmd_psi = app.add_subcommand("psi-transfer", "arbitrary-function transference");
    std::string spec_text, eval_csv;
    int m_opt = 1, n_opt = 1;
    bool with_chi = false;
    cmd_psi->add_option("--spec", spec_text, "power:G | log1 | log2 | table:FILE")->required();
    cmd_psi->add_option("--m", m_opt, "columns m")->required();
    cmd_psi->add_option("--n", n_opt, "rows n")->required();
    cmd_psi->add_option("--eval", eval_csv, "points s1,s2,...")->required();
    cmd_psi->add_flag("--chi", with_chi, "also evaluate the sup-norm transfer (n = 1)");
    cmd_psi->add_option("--out", out_path, "also write the JSON to a file");

    auto* cmd_exp = app.add_subcommand("exponents", "estimate exponents from records");
    double tail = 0.5;
    std::string gamma_text, which;
    cmd_exp->add_option("--records", records_path, "JSONL records file");
    cmd_exp->add_option("--m", m_opt, "columns m");
    cmd_exp->add_option("--n", n_opt, "rows n");
    cmd_exp->add_option("--tail", tail, "tail fraction of records used");
    auto* cmd_map = cmd_exp->add_subcommand("map", "evaluate a transfer inequality");
    cmd_map->add_option("--gamma", gamma_text, "exponent value or 'inf'")->required();
    cmd_map->add_option("--m", m_opt, "columns m")->required();
    cmd_map->add_option("--n", n_opt, "rows n")->required();
    cmd_map->add_option("--which", which, "dyson|german|tr-beta|beta-from-mbeta")->required();

    auto* cmd_lw = app.add_subcommand("littlewood", "scan q ||qa|| ||qb|| records");
    std::string alpha_text, beta_text;
    int precision = 0;
    long long qmax = 1000;
    bool corollary_check = false;
    cmd_lw->add_option("--alpha", alpha_text, "rational or decimal")->required();
    cmd_lw->add_option("--beta", beta_text, "rational or decimal")->required();
    cmd_lw->add_option("--precision", precision, "declared digits for decimal approximants");
    cmd_lw->add_option("--qmax", qmax, "scan limit")->required();
    cmd_lw->add_flag("--corollary-check", corollary_check,
                     "find q within the mu^(1/4) budget pair");
    cmd_lw->add_option("--records-out", records_path, "JSONL records output");

    auto* cmd_lemmas = app.add_subcommand("verify-lemmas", "section-dual property checks");
    int lemma_d = 3, trials = 200, bodies = 20;
    cmd_lemmas->add_option("--d", lemma_d, "dimension")->required();
    cmd_lemmas->add_option("--trials", trials, "sampled trials per property");
    cmd_lemmas->add_option("--bodies", bodies, "random parallelepipeds besides the cube");
    cmd_lemmas->add_option("--out", out_path, "also write the JSON to a file");

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough(true);

    std::vector<std::string> raw_args(argv + 1, argv + argc);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_delta->parsed())
            return run_delta(g, dmax, mc_check, samples, out_path,
                             make_manifest(g, "delta", raw_args, {}));
        if (cmd_section->parsed())
            return run_section(g, box_csv, dir_csv, section_mc, samples, out_path,
                               make_manifest(g, "section", raw_args, {}));
        if (cmd_scan->parsed()) {
            if (sup_bound < 1) throw std::invalid_argument("--sup-bound must be >= 1");
            return run_scan(g, theta_path, sup_bound, records_path,
                            make_manifest(g, "scan", raw_args, {theta_path}));
        }
        if (cmd_transfer->parsed()) {
            if (!revalidate_path.empty())
                return run_revalidate(
                    g, revalidate_path,
                    make_manifest(g, "transfer", raw_args, {revalidate_path}));
            if (theta_path.empty() || pair_text.empty())
                throw std::invalid_argument("transfer needs --theta and --pair");
            return run_transfer(g, theta_path, pair_text, mahler, xpow_text, upow_text,
                                cert_path,
                                make_manifest(g, "transfer", raw_args, {theta_path}));
        }
        if (cmd_psi->parsed())
            return run_psi_transfer(g, spec_text, m_opt, n_opt, eval_csv, with_chi, out_path,
                                    make_manifest(g, "psi-transfer", raw_args, {}));
        if (cmd_exp->parsed()) {
            if (cmd_map->parsed())
                return run_exponents_map(g, gamma_text, m_opt, n_opt, which,
                                         make_manifest(g, "exponents map", raw_args, {}));
            if (records_path.empty())
                throw std::invalid_argument("exponents needs --records (or the map subcommand)");
            return run_exponents(g, records_path, m_opt, n_opt, tail,
                                 make_manifest(g, "exponents", raw_args, {records_path}));
        }
        if (cmd_lw->parsed())
            return run_littlewood(g, alpha_text, beta_text, precision, qmax, corollary_check,
                                  records_path, make_manifest(g, "littlewood", raw_args, {}));
        if (cmd_lemmas->parsed())
            return run_verify_lemmas(g, lemma_d, trials, bodies, out_path,
                                     make_manifest(g, "verify-lemmas", raw_args, {}));
        throw std::invalid_argument("no subcommand selected");
    } catch (const InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const PrecisionGuardError& e) {
        std::cerr << "aborted: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFalsified;
    }
}

#include "translab/io.hpp"

#include <ctime>
#include <fstream>

namespace translab {

static std::pair<Rational, Rational> parse_entry(const json& e) {
    if (e.is_number_integer())
        return {Rational(static_cast<long>(e.get<long long>())), Rational(0)};
    if (e.is_string()) {
        const std::string s = e.get<std::string>();
        if (s.find('.') != std::string::npos)
            throw std::invalid_argument(
                "decimal matrix entries must declare a precision: [\"" + s +
                "\", {\"precision\": N}]");
        return {rational_from_string(s), Rational(0)};
    }
    std::string value;
    long precision = -1;
    if (e.is_array()) {
        if (e.size() != 2 || !e[0].is_string() || !e[1].is_object() ||
            !e[1].contains("precision"))
            throw std::invalid_argument(
                "matrix entry array must be [\"decimal\", {\"precision\": N}]");
        value = e[0].get<std::string>();
        precision = e[1]["precision"].get<long>();
    } else if (e.is_object()) {
        if (!e.contains("value") || !e.contains("precision"))
            throw std::invalid_argument("matrix entry object needs value and precision");
        value = e["value"].get<std::string>();
        precision = e["precision"].get<long>();
    } else {
        throw std::invalid_argument("unsupported matrix entry type");
    }
    if (precision < 1) throw std::invalid_argument("declared precision must be >= 1 digit");
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(precision));
    Rational eps(1, den);
    eps.canonicalize();
    return {rational_from_string(value), eps};
}

SystemMatrix parse_matrix_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("theta"))
        throw std::invalid_argument("matrix file needs m, n and theta");
    int m = j["m"].get<int>();
    int n = j["n"].get<int>();
    if (m < 1 || n < 1) throw std::invalid_argument("matrix file: m and n must be positive");
    const json& rows = j["theta"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix file: theta must have n rows");
    SystemMatrix theta(n, m);
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != m)
            throw std::invalid_argument("matrix file: each theta row must have m entries");
        for (int jcol = 0; jcol < m; ++jcol) {
            auto [value, eps] = parse_entry(rows[i][jcol]);
            theta.at(i, jcol) = value;
            if (eps > theta.entry_eps) theta.entry_eps = eps;
        }
    }
    if (j.contains("label")) theta.label = j["label"].get<std::string>();
    return theta;
}

SystemMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("matrix file " + path + " is not valid JSON: " + e.what());
    }
    return parse_matrix_json(j);
}

json matrix_to_json(const SystemMatrix& theta) {
    json rows = json::array();
    for (int i = 0; i < theta.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < theta.m(); ++j) row.push_back(to_fraction_string(theta.at(i, j)));
        rows.push_back(row);
    }
    json out{{"m", theta.m()}, {"n", theta.n()}, {"theta", rows}};
    if (sgn(theta.entry_eps) > 0) out["entry_eps"] = to_fraction_string(theta.entry_eps);
    if (!theta.label.empty()) out["label"] = theta.label;
    return out;
}

json rational_json(const Rational& r) {
    return json{{"value", to_fraction_string(r)}, {"value_float", to_double(r)}};
}

static json int_vector_json(const IntVector& v) {
    json a = json::array();
    for (long long x : v) a.push_back(x);
    return a;
}

static IntVector int_vector_from_json(const json& j) {
    IntVector v;
    for (const auto& e : j) v.push_back(e.get<long long>());
    return v;
}

json record_json(const ApproxRecord& r, const std::string& kind) {
    return json{{"kind", kind},
                {"x", int_vector_json(r.x)},
                {"y", int_vector_json(r.y)},
                {"t_pow", to_fraction_string(r.t_pow)},
                {"t_pow_float", to_double(r.t_pow)},
                {"u_pow", to_fraction_string(r.u_pow)},
                {"u_pow_float", to_double(r.u_pow)}};
}

ApproxRecord record_from_json(const json& j) {
    ApproxRecord r;
    r.x = int_vector_from_json(j.at("x"));
    r.y = int_vector_from_json(j.at("y"));
    r.t_pow = rational_from_string(j.at("t_pow").get<std::string>());
    r.u_pow = rational_from_string(j.at("u_pow").get<std::string>());
    return r;
}

static json checks_json(const std::vector<CheckLine>& checks) {
    json a = json::array();
    for (const auto& c : checks)
        a.push_back(json{{"name", c.name},
                         {"lhs", to_fraction_string(c.lhs)},
                         {"lhs_float", to_double(c.lhs)},
                         {"rhs", to_fraction_string(c.rhs)},
                         {"rhs_float", to_double(c.rhs)},
                         {"ok", c.ok}});
    return a;
}

json certificate_json(const Certificate& cert) {
    json j;
    j["mode"] = cert.mahler ? "supnorm" : "multiplicative";
    j["theta"] = matrix_to_json(cert.theta);
    j["input"] = json{{"x", int_vector_json(cert.input_x)}, {"y", int_vector_json(cert.input_y)}};
    if (cert.mahler) {
        const MahlerBudget& b = cert.mahler_budget;
        j["budget"] = json{{"m", b.m},
                           {"n", b.n},
                           {"X", to_fraction_string(b.X)},
                           {"U", to_fraction_string(b.U)},
                           {"ypow_cmp", to_fraction_string(b.ypow_cmp)},
                           {"vpow_cmp", to_fraction_string(b.vpow_cmp)},
                           {"exact_solution", b.exact_solution}};
    } else {
        const QualityBudget& b = cert.budget;
        j["budget"] = json{{"m", b.m},
                           {"n", b.n},
                           {"delta_d", to_fraction_string(b.delta_d)},
                           {"xpow", to_fraction_string(b.xpow)},
                           {"upow", to_fraction_string(b.upow)},
                           {"ypow_cmp", to_fraction_string(b.ypow_cmp)},
                           {"vpow_cmp", to_fraction_string(b.vpow_cmp)},
                           {"suppow_cmp", to_fraction_string(b.suppow_cmp)},
                           {"exact_solution", b.exact_solution}};
    }
    j["exact_shortcut"] = cert.exact_shortcut;
    j["witness_found"] = cert.witness_found;
    if (cert.witness_found)
        j["witness"] = json{{"x", int_vector_json(cert.witness_x)},
                            {"y", int_vector_json(cert.witness_y)}};
    j["checks"] = checks_json(cert.checks);
    j["all_ok"] = cert.all_ok;
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate cert;
    cert.mahler = j.at("mode").get<std::string>() == "supnorm";
    cert.theta = parse_matrix_json(j.at("theta"));
    if (j.at("theta").contains("entry_eps"))
        cert.theta.entry_eps = rational_from_string(j["theta"]["entry_eps"].get<std::string>());
    cert.input_x = int_vector_from_json(j.at("input").at("x"));
    cert.input_y = int_vector_from_json(j.at("input").at("y"));
    const json& b = j.at("budget");
    if (cert.mahler) {
        cert.mahler_budget.m = b.at("m").get<int>();
        cert.mahler_budget.n = b.at("n").get<int>();
        cert.mahler_budget.X = rational_from_string(b.at("X").get<std::string>());
        cert.mahler_budget.U = rational_from_string(b.at("U").get<std::string>());
        cert.mahler_budget.ypow_cmp = rational_from_string(b.at("ypow_cmp").get<std::string>());
        cert.mahler_budget.vpow_cmp = rational_from_string(b.at("vpow_cmp").get<std::string>());
        cert.mahler_budget.exact_solution = b.at("exact_solution").get<bool>();
    } else {
        cert.budget.m = b.at("m").get<int>();
        cert.budget.n = b.at("n").get<int>();
        cert.budget.delta_d = rational_from_string(b.at("delta_d").get<std::string>());
        cert.budget.xpow = rational_from_string(b.at("xpow").get<std::string>());
        cert.budget.upow = rational_from_string(b.at("upow").get<std::string>());
        cert.budget.exact_solution = b.at("exact_solution").get<bool>();
        if (!cert.budget.exact_solution) {
            cert.budget.ypow_cmp = rational_from_string(b.at("ypow_cmp").get<std::string>());
            cert.budget.vpow_cmp = rational_from_string(b.at("vpow_cmp").get<std::string>());
            cert.budget.suppow_cmp =
                rational_from_string(b.at("suppow_cmp").get<std::string>());
        }
    }
    cert.exact_shortcut = j.at("exact_shortcut").get<bool>();
    cert.witness_found = j.at("witness_found").get<bool>();
    if (cert.witness_found) {
        cert.witness_x = int_vector_from_json(j.at("witness").at("x"));
        cert.witness_y = int_vector_from_json(j.at("witness").at("y"));
    }
    for (const auto& c : j.at("checks"))
        cert.checks.push_back(CheckLine{c.at("name").get<std::string>(),
                                        rational_from_string(c.at("lhs").get<std::string>()),
                                        rational_from_string(c.at("rhs").get<std::string>()),
                                        c.at("ok").get<bool>()});
    cert.all_ok = j.at("all_ok").get<bool>();
    return cert;
}

json exponent_report_json(const ExponentReport& rep) {
    auto num = [](double v) -> json {
        if (std::isinf(v)) return json("inf");
        return json(v);
    };
    return json{{"beta_est", num(rep.beta_est)},     {"mbeta_est", num(rep.mbeta_est)},
                {"t_min", rep.t_min},                {"t_max", rep.t_max},
                {"records_used", rep.records_used},  {"method", rep.method}};
}

std::string iso8601_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot hash missing file: " + path);
    std::uint64_t h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

json manifest_json(const RunManifest& m) {
    json inputs = json::array();
    for (const auto& [path, hash] : m.input_hashes)
        inputs.push_back(json{{"path", path}, {"fnv1a", hash}});
    json j{{"command", m.command},
           {"arguments", m.arguments},
           {"seed", m.seed},
           {"version", m.version},
           {"inputs", inputs}};
    if (!m.started_at.empty()) {
        j["started_at"] = m.started_at;
        j["finished_at"] = m.finished_at;
    }
    return j;
}

ApproxReal parse_approx_real(const std::string& text, int precision_digits) {
    ApproxReal out;
    if (text.find('.') != std::string::npos && precision_digits < 1)
        throw std::invalid_argument("decimal approximants need a declared precision");
    out.value = rational_from_string(text);
    if (precision_digits >= 1) {
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(precision_digits));
        out.eps = Rational(1, den);
        out.eps.canonicalize();
    }
    return out;
}

}  // namespace translab

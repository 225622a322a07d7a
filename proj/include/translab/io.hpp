#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "translab/exponents.hpp"
#include "translab/rational.hpp"
#include "translab/search.hpp"
#include "translab/secdual.hpp"
#include "translab/transfer.hpp"

namespace translab {

using nlohmann::json;

// Matrix file schema: {"m": M, "n": N, "theta": [[entry x M] x N], "label"?}.
// An entry is an integer, an exact rational/decimal string ("3/2", "-7",
// "0.25"), or a decimal with a declared precision (approximating an
// irrational): ["1.4142...", {"precision": 40}] or
// {"value": "1.4142...", "precision": 40}. Plain decimal strings are taken
// exactly; the precision form additionally records an error bound of
// 10^-precision that drives the search module's precision guard.
SystemMatrix parse_matrix_json(const json& j);
SystemMatrix parse_matrix_file(const std::string& path);
json matrix_to_json(const SystemMatrix& theta);

// One rational value with float convenience field.
json rational_json(const Rational& r);

json record_json(const ApproxRecord& r, const std::string& kind);
ApproxRecord record_from_json(const json& j);

json certificate_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

json exponent_report_json(const ExponentReport& rep);

struct RunManifest {
    std::string command;
    std::vector<std::string> arguments;
    std::uint64_t seed = 0;
    std::string version;
    std::string started_at, finished_at;  // empty in stable-output mode
    std::vector<std::pair<std::string, std::string>> input_hashes;  // path, fnv1a hex
};

std::string iso8601_now();
std::uint64_t fnv1a_file(const std::string& path);
json manifest_json(const RunManifest& m);

// Parses "p/q", integer, or decimal; with `precision_digits` >= 0 the value
// is treated as an approximant with eps = 10^-precision.
ApproxReal parse_approx_real(const std::string& text, int precision_digits);

}  // namespace translab

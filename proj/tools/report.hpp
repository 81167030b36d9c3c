#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "modrep/flkisin.hpp"
#include "modrep/hecke.hpp"
#include "modrep/jantzen.hpp"

namespace modrep::report {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& s);
std::string render(const json& j, Format f);

// ---- tables ----
json table_a1();
json table_a2(i64 p);  // derived patterns next to the reference patterns

struct ReferenceTerm {
    bool prime = false;
    std::string a, b;  // linear expressions in x, y, p
    int alcove = 0;
    std::string text;
};
// layers[alcove index][layer] -> terms
std::vector<std::vector<std::vector<ReferenceTerm>>> load_reference_a3(const std::string& path);
i64 eval_linear(const std::string& expr, i64 x, i64 y, i64 p);
Weight reference_key(const ReferenceTerm& t, const Weight& witness, i64 p);

// Computed profiles, labelled in the shorthand, with a per-layer comparison to the reference.
json table_a3(i64 p, const std::string& reference_path);
// Split-torus trace defect of the computed and reference Jordan-Holder sets, and the
// complementarity of layers between lambda and its partner weight.
json a3_evidence(i64 p, const std::string& reference_path);

// ---- oracle ----
struct OracleCase {
    Weight lambda;
    WeylElt w;
};
std::vector<OracleCase> default_oracle_cases(GroupId g, i64 p);
json oracle(GroupId g, i64 p, int N, const std::vector<OracleCase>& cases, std::size_t budget);

// ---- fl ----
json fl_forward(const FLData& fl);
json fl_inverse(const FLDiagonal& d, i64 zeta1, i64 zeta2);

// ---- hecke ----
json hecke_finite_check(GroupId g, i64 p, int N, int stride);
json hecke_affine_check();
json hecke_idempotent_check(GroupId g, i64 p, int N);

// Lists differences between two JSON documents as "path: expected -> actual".
std::vector<std::string> json_diff(const json& expected, const json& actual, const std::string& path = "");

}  // namespace modrep::report

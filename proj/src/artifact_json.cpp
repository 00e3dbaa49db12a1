/*
   Copyright 2026 The mdsdual Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "mdsdual/artifact_json.hpp"

#include <algorithm>

namespace mdsdual {

namespace {

Json encodings(const std::vector<Elem>& xs)
{
    Json out = Json::array();
    for (const Elem x : xs) {
        out.push_back(x.value());
    }
    return out;
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const Json& member(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        malformed(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::uint64_t as_u64(const Json& j, const char* what)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        malformed(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

std::vector<Elem> read_elements(const Field& f, const Json& j, const char* what)
{
    if (!j.is_array()) {
        malformed(std::string(what) + " must be an array");
    }
    std::vector<Elem> out;
    out.reserve(j.size());
    for (const Json& x : j) {
        const std::uint64_t enc = as_u64(x, what);
        if (!f.contains(Elem{enc})) {
            malformed(std::string(what) + " entry " + std::to_string(enc) + " outside F_q");
        }
        out.emplace_back(enc);
    }
    return out;
}

}  // namespace

Json params_to_json(const ConstructionParams& params)
{
    Json j = Json::object();
    switch (params.theorem) {
    case Theorem::T1i:
    case Theorem::T1ii:
    case Theorem::T2:
        j["m"] = params.m;
        j["t"] = params.t;
        break;
    case Theorem::T3i:
    case Theorem::T3ii:
        j["m"] = params.m;
        j["t"] = params.t;
        j["s"] = params.s;
        break;
    case Theorem::T4:
        j["e"] = params.e;
        break;
    case Theorem::T5:
        j["k"] = params.k;
        j["t"] = params.t;
        j["e"] = params.e;
        break;
    }
    return j;
}

Json trace_to_json(const ConstructionTrace& trace)
{
    Json j = Json::object();
    if (trace.coset_indices) {
        j["I"] = *trace.coset_indices;
    }
    if (trace.coset_index_sum) {
        j["A"] = *trace.coset_index_sum;
    }
    if (trace.lambda) {
        j["lambda"] = trace.lambda->value();
    }
    if (trace.u) {
        j["u"] = encodings(*trace.u);
    }
    if (trace.c) {
        j["c"] = trace.c->value();
    }
    if (trace.xi_s) {
        j["xi_s"] = trace.xi_s->value();
    }
    if (trace.beta) {
        j["beta"] = trace.beta->value();
    }
    if (trace.omega) {
        j["omega"] = trace.omega->value();
    }
    if (trace.basis) {
        j["basis"] = encodings(*trace.basis);
    }
    j["locators"] = encodings(trace.locators);
    return j;
}

Json report_to_json(const VerificationReport& report)
{
    Json j = Json::object();
    j["self_dual"] = report.self_dual;
    j["rank_ok"] = report.rank_ok;
    j["distinct_points"] = report.distinct_points;
    j["mds_checked"] = std::string(to_string(report.mds_checked));
    j["mds"] = report.mds ? Json(*report.mds) : Json(nullptr);
    j["min_distance"] = report.min_distance ? Json(*report.min_distance) : Json(nullptr);
    j["ok"] = report.ok();
    return j;
}

Json artifact_to_json(const CodeArtifact& art, const std::optional<Construction>& origin,
                      const std::optional<VerificationReport>& report)
{
    const Field& f = *art.field;
    Json j = Json::object();
    j["q"] = f.size();
    j["p"] = f.characteristic();
    j["d"] = f.degree();
    j["modulus"] = f.modulus();
    j["g"] = f.generator().value();
    j["n"] = art.length();
    j["k"] = art.k;
    j["extended"] = art.extended;
    Json c = Json::object();
    c["label"] = art.label;
    if (origin) {
        c["theorem"] = std::string(to_string(origin->params.theorem));
        c["params"] = params_to_json(origin->params);
        c["trace"] = trace_to_json(origin->trace);
    }
    j["construction"] = std::move(c);
    j["a"] = encodings(art.points);
    j["v"] = encodings(art.weights);
    Json g = Json::array();
    for (std::size_t r = 0; r < art.generator.rows(); ++r) {
        Json row = Json::array();
        for (const Elem x : art.generator.row(r)) {
            row.push_back(x.value());
        }
        g.push_back(std::move(row));
    }
    j["G"] = std::move(g);
    if (report) {
        j["verification"] = report_to_json(*report);
    }
    return j;
}

CodeArtifact artifact_from_json(const Json& j)
{
    if (!j.is_object()) {
        malformed("artifact must be a JSON object");
    }
    const std::uint64_t p = as_u64(member(j, "p"), "p");
    const std::uint64_t d = as_u64(member(j, "d"), "d");
    const std::uint64_t q = as_u64(member(j, "q"), "q");
    if (d == 0 || d > 64) {
        malformed("d out of range");
    }
    FieldPtr f;
    try {
        f = make_field(p, static_cast<unsigned>(d));
    } catch (const Error& err) {
        malformed(std::string("field: ") + err.what());
    }
    if (f->size() != q) {
        malformed("q != p^d");
    }
    const Json& modulus = member(j, "modulus");
    if (!modulus.is_array() || modulus.size() != f->modulus().size()) {
        malformed("modulus has the wrong shape");
    }
    for (std::size_t i = 0; i < modulus.size(); ++i) {
        if (as_u64(modulus[i], "modulus") != f->modulus()[i]) {
            malformed("modulus differs from the canonical one");
        }
    }
    if (j.contains("g") && as_u64(j.at("g"), "g") != f->generator().value()) {
        malformed("generator differs from the canonical one");
    }

    CodeArtifact art;
    art.field = f;
    art.k = as_u64(member(j, "k"), "k");
    const std::uint64_t n = as_u64(member(j, "n"), "n");
    const Json& extended = member(j, "extended");
    if (!extended.is_boolean()) {
        malformed("extended must be a boolean");
    }
    art.extended = extended.get<bool>();
    art.points = read_elements(*f, member(j, "a"), "a");
    art.weights = read_elements(*f, member(j, "v"), "v");
    if (art.points.size() + (art.extended ? 1 : 0) != n || art.weights.size() != art.points.size()) {
        malformed("a / v lengths disagree with n");
    }
    if (j.contains("construction") && j.at("construction").is_object() &&
        j.at("construction").contains("label") && j.at("construction").at("label").is_string()) {
        art.label = j.at("construction").at("label").get<std::string>();
    }

    const Json& g = member(j, "G");
    if (!g.is_array() || g.size() != art.k) {
        malformed("G must have k rows");
    }
    art.generator = Matrix(art.k, n);
    for (std::size_t r = 0; r < art.k; ++r) {
        const std::vector<Elem> row = read_elements(*f, g[r], "G");
        if (row.size() != n) {
            malformed("G row " + std::to_string(r) + " must have n entries");
        }
        std::copy(row.begin(), row.end(), art.generator.row(r).begin());
    }
    return art;
}

CodeArtifact artifact_from_text(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& ex) {
        malformed(std::string("JSON: ") + ex.what());
    }
    try {
        return artifact_from_json(j);
    } catch (const nlohmann::json::exception& ex) {
        malformed(std::string("JSON: ") + ex.what());
    }
}

Json census_to_json(const CensusReport& report, RuleSource rows, bool all_rows)
{
    const auto as_array = [](const std::set<std::uint64_t>& s) {
        Json a = Json::array();
        for (const std::uint64_t n : s) {
            a.push_back(n);
        }
        return a;
    };
    Json j = Json::object();
    j["q"] = report.q;
    const bool want_prior = all_rows || rows == RuleSource::Prior;
    const bool want_new = all_rows || rows == RuleSource::New;
    if (want_prior) {
        j["prior_count"] = report.lengths_prior.size();
        j["prior"] = as_array(report.lengths_prior);
    }
    if (want_new) {
        j["new_count"] = report.lengths_new.size();
        j["new"] = as_array(report.lengths_new);
    }
    if (all_rows) {
        j["new_only_count"] = std::count_if(report.lengths_new.begin(), report.lengths_new.end(),
                                            [&](std::uint64_t n) { return report.lengths_prior.count(n) == 0; });
        j["union_count"] = report.lengths_union.size();
    }
    Json per_rule = Json::object();
    for (const CensusRule& rule : census_rules()) {
        if ((rule.source == RuleSource::Prior && !want_prior) || (rule.source == RuleSource::New && !want_new)) {
            continue;
        }
        const auto it = report.per_rule.find(rule.id);
        per_rule[rule.id] = it == report.per_rule.end() ? Json::array() : as_array(it->second);
    }
    j["per_rule"] = std::move(per_rule);
    if (want_new) {
        Json spots = Json::object();
        for (const auto& [n, witness] : report.spot_checks) {
            spots[std::to_string(n)] = "ok: " + witness;
        }
        j["spot_check_bound"] = report.spot_check_bound;
        j["spot_checks"] = std::move(spots);
    }
    return j;
}

Json error_to_json(const Error& err)
{
    Json j = Json::object();
    Json e = Json::object();
    e["code"] = std::string(to_string(err.code()));
    e["clause"] = err.detail();
    j["error"] = std::move(e);
    return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace mdsdual

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

// mdsdual command-line front end: field-info, construct, verify, census.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mdsdual/artifact_json.hpp"
#include "mdsdual/census.hpp"
#include "mdsdual/constructions.hpp"
#include "mdsdual/field.hpp"
#include "mdsdual/verify.hpp"

namespace {

using namespace mdsdual;

enum ExitCode : int {
    kOk = 0,
    kInvalid = 2,
    kConstructionFailed = 3,
    kVerificationFailed = 4,
};

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParityInfeasible:
    case ErrorCode::TooLargeToMaterialize:
    case ErrorCode::NotEnoughCosets:
    case ErrorCode::SquareConditionViolated:
        return kConstructionFailed;
    case ErrorCode::SpotCheckFailed:
        return kVerificationFailed;
    default:
        return kInvalid;
    }
}

int report_error(const Error& err)
{
    std::cout << dump(error_to_json(err));
    std::cerr << "mdsdual: " << to_string(err.code()) << ": " << err.detail() << '\n';
    return exit_code_for(err.code());
}

struct FieldSpec {
    std::optional<std::uint64_t> q;
    std::optional<std::uint64_t> p;
    std::optional<unsigned> deg;

    PrimePower resolve() const
    {
        if (q) {
            if (p || deg) {
                throw Error(ErrorCode::MalformedInput, "give either --q or --p/--deg, not both");
            }
            if (*q % 2 == 0) {
                throw Error(ErrorCode::EvenCharacteristic, "q = " + std::to_string(*q));
            }
            const auto pp = as_prime_power(*q);
            if (!pp) {
                throw Error(ErrorCode::NotPrimePower, std::to_string(*q) + " is not a prime power");
            }
            return *pp;
        }
        if (!p) {
            throw Error(ErrorCode::MalformedInput, "--q or --p is required");
        }
        return {*p, deg.value_or(1)};
    }
};

void add_field_options(CLI::App* cmd, FieldSpec& spec, bool allow_q)
{
    if (allow_q) {
        cmd->add_option("--q", spec.q, "field order (odd prime power)");
    }
    cmd->add_option("--p", spec.p, "characteristic");
    cmd->add_option("--deg", spec.deg, "extension degree");
}

void emit(const Json& j, const std::string& out)
{
    const std::string text = dump(j);
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::MalformedInput, "cannot write " + out);
    }
    file << text;
}

int cmd_field_info(const FieldSpec& spec)
{
    const PrimePower pp = spec.resolve();
    const FieldPtr f = make_field(pp.p, pp.d);
    Json j = Json::object();
    j["p"] = f->characteristic();
    j["d"] = f->degree();
    j["q"] = f->size();
    j["modulus"] = format_polynomial(f->modulus());
    j["modulus_coeffs"] = f->modulus();
    const auto g_coeffs = f->coeffs(f->generator());
    j["g"] = format_polynomial(g_coeffs);
    j["g_encoding"] = f->generator().value();
    Json factors = Json::array();
    for (const auto& [prime, exponent] : f->group_order_factors()) {
        factors.push_back(Json::array({prime, exponent}));
    }
    j["q_minus_1"] = f->group_order();
    j["q_minus_1_factors"] = std::move(factors);
    if (const auto r = f->sqrt_order()) {
        j["r"] = *r;
    }
    std::cout << dump(j);
    return kOk;
}

struct ConstructArgs {
    FieldSpec field;
    std::string theorem;
    std::uint64_t m = 0;
    std::uint64_t t = 0;
    std::uint64_t s = 0;
    std::uint64_t e = 0;
    std::uint64_t k = 0;
    std::string out;
    bool skip_mds = false;
};

int cmd_construct(const ConstructArgs& args)
{
    const PrimePower pp = args.field.resolve();
    const auto theorem = parse_theorem(args.theorem);
    if (!theorem) {
        throw Error(ErrorCode::MalformedInput, "unknown theorem \"" + args.theorem + "\"");
    }
    ConstructionParams params;
    params.theorem = *theorem;
    params.m = args.m;
    params.t = args.t;
    params.s = args.s;
    params.e = args.e;
    params.k = args.k;

    const Construction c = construct(pp.p, pp.d, params);
    VerifyOptions options;
    options.mds = !args.skip_mds;
    const VerificationReport report = verify(c.artifact, options);
    emit(artifact_to_json(c.artifact, c, report), args.out);
    if (!report.ok()) {
        std::cerr << "mdsdual: constructed code failed verification\n";
        return kVerificationFailed;
    }
    return kOk;
}

int cmd_verify(const std::string& in, bool mds)
{
    std::string text;
    if (in == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream file(in, std::ios::binary);
        if (!file) {
            throw Error(ErrorCode::MalformedInput, "cannot read " + in);
        }
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    const CodeArtifact art = artifact_from_text(text);

    VerificationReport report;
    try {
        VerifyOptions options;
        options.mds = mds;
        report = verify(art, options);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::DimensionMismatch) {
            throw;
        }
        std::cout << dump(error_to_json(err));
        std::cerr << "mdsdual: " << err.detail() << '\n';
        return kVerificationFailed;
    }
    std::cout << dump(report_to_json(report));
    if (!report.ok()) {
        std::cerr << "mdsdual: verification failed\n";
        return kVerificationFailed;
    }
    return kOk;
}

struct CensusArgs {
    std::uint64_t q = 0;
    std::string rows = "all";
    bool list = false;
    std::uint64_t spot_check_bound = 0;
};

int cmd_census(const CensusArgs& args)
{
    const CensusReport report = census_report(args.q, args.spot_check_bound);
    const bool all = args.rows == "all";
    const RuleSource source = args.rows == "new" ? RuleSource::New : RuleSource::Prior;
    Json j = census_to_json(report, source, all);
    if (!args.list) {
        for (const char* key : {"prior", "new"}) {
            j.erase(key);
        }
        for (auto& [id, lengths] : j["per_rule"].items()) {
            lengths = lengths.size();
        }
    }
    std::cout << dump(j);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MDS self-dual GRS code constructions over odd-characteristic finite fields"};
    app.require_subcommand(1);

    FieldSpec info_field;
    auto* info = app.add_subcommand("field-info", "show modulus, generator and factorization of q-1");
    add_field_options(info, info_field, true);

    ConstructArgs cargs;
    auto* cons = app.add_subcommand("construct", "build a self-dual code and emit its JSON artifact");
    add_field_options(cons, cargs.field, true);
    cons->add_option("--theorem", cargs.theorem, "T1i, T1ii, T2, T3i, T3ii, T4 or T5")->required();
    cons->add_option("--m", cargs.m);
    cons->add_option("--t", cargs.t);
    cons->add_option("--s", cargs.s);
    cons->add_option("--e", cargs.e);
    cons->add_option("--k", cargs.k, "subfield exponent for T5");
    cons->add_option("--out", cargs.out, "output file (default stdout)");
    cons->add_flag("--no-mds", cargs.skip_mds, "skip the MDS check");

    std::string verify_in;
    bool verify_mds = false;
    auto* ver = app.add_subcommand("verify", "re-verify an artifact from its generator matrix");
    ver->add_option("--in", verify_in, "artifact JSON file, or - for stdin")->required();
    ver->add_flag("--mds", verify_mds, "also check the MDS property when within budget");

    CensusArgs census_args;
    auto* cen = app.add_subcommand("census", "count achievable even lengths for q");
    cen->add_option("--q", census_args.q, "odd prime power")->required();
    cen->add_option("--rows", census_args.rows)->check(CLI::IsMember({"prior", "new", "all"}));
    cen->add_flag("--list", census_args.list, "print the length sets");
    cen->add_option("--spot-check-bound", census_args.spot_check_bound,
                    "construct and verify a witness for every new length up to this bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int rc = app.exit(ex);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        if (*info) {
            return cmd_field_info(info_field);
        }
        if (*cons) {
            return cmd_construct(cargs);
        }
        if (*ver) {
            return cmd_verify(verify_in, verify_mds);
        }
        return cmd_census(census_args);
    } catch (const Error& err) {
        return report_error(err);
    } catch (const std::exception& ex) {
        std::cerr << "mdsdual: internal error: " << ex.what() << '\n';
        return 1;
    }
}

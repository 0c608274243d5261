#include "srmdp/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include "srmdp/convcode.hpp"
#include "srmdp/serialize.hpp"
#include "srmdp/superregular.hpp"

namespace srmdp {

namespace {

#include "primitive_table.inc"

const char* lookup_primitive_table(std::uint32_t p, std::size_t N) {
    for (const PrimEntry& e : kPrimitiveTable)
        if (e.p == p && e.N == N) return e.coeffs;
    return nullptr;
}

std::uint64_t parse_env_u64(const char* name, const char* value) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != std::string(value).size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string(name) + ": expected an unsigned integer, got '" + value + "'");
    }
}

struct Ctx {
    explicit Ctx(const RunConfig& c) : cfg(c) {}

    const RunConfig& cfg;
    std::vector<std::string> warnings;
    std::string verdict = "computed";
    int exit_code = 0;
    Json payload = Json::object();
    std::optional<Json> params_json, field_json;
    std::optional<Json> error_json;
    std::string csv;  // filled when format == csv is supported
};

CodeParams require_params(const RunConfig& c) {
    if (!c.n || !c.k || !c.delta) throw ParamsInvalid("--n, --k and --delta are required");
    return CodeParams(*c.n, *c.k, *c.delta);
}

FieldPtr resolve_field(const RunConfig& c, std::vector<std::string>& warnings) {
    if (!c.p) throw ParamsInvalid("--p is required");
    FieldPtr f;
    if (c.modulus) {
        f = Field::make(*c.p, coeffs_from_string(*c.modulus), true, c.factor_budget);
    } else if (c.N) {
        if (*c.N == 0) throw ParamsInvalid("--N must be positive");
        if (const char* t = lookup_primitive_table(*c.p, *c.N))
            f = Field::make(*c.p, coeffs_from_string(t), true, c.factor_budget);
        else
            f = Field::make(*c.p, find_primitive_poly(*c.p, *c.N, c.factor_budget), true,
                            c.factor_budget);
    } else {
        throw ParamsInvalid("field spec requires --N or --modulus");
    }
    for (const std::string& w : f->warnings()) warnings.push_back(w);
    return f;
}

std::pair<Matrix, BandPattern> build_target(const CodeParams& P, const FieldPtr& f,
                                            const std::string& target) {
    if (target == "full")
        return {block_toeplitz(build_superregular_blocks(P, f)), pattern_full(P)};
    if (target == "parity")
        return {block_toeplitz(build_parity_seed_blocks(P, f)), pattern_parity(P)};
    throw ParamsInvalid("unknown target '" + target + "' (expected full or parity)");
}

ExponentMatrix target_exponents(const CodeParams& P, const std::string& target) {
    return target == "parity" ? exponents_parity(P) : exponents_full(P);
}

std::string join_pipe(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += '|';
        s += std::to_string(v[i] + 1);
    }
    return s;
}

ConvCode load_or_construct(const RunConfig& cfg, std::vector<std::string>& warnings) {
    if (!cfg.input_path.empty()) {
        std::ifstream in(cfg.input_path);
        if (!in) throw ConfigError("cannot read input file: " + cfg.input_path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const std::exception& e) {
            throw FormatError(std::string("input is not valid JSON: ") + e.what());
        }
        ConvCode code = code_from_json(j, cfg.factor_budget);
        for (const std::string& w : code.field->warnings()) warnings.push_back(w);
        return code;
    }
    const CodeParams P = require_params(cfg);
    const FieldPtr f = resolve_field(cfg, warnings);
    return mdp_construct(P, build_parity_seed_blocks(P, f));
}

Json evidence_to_json(const MdpEvidence& ev, bool include_witness) {
    Json j{{"method", to_string(ev.method)}, {"mdp", ev.mdp}};
    if (ev.distance_at_L) j["distance"] = distance_to_json(*ev.distance_at_L, include_witness);
    if (ev.sr_report) j["superregular"] = sr_report_to_json(*ev.sr_report);
    return j;
}

void cmd_build(Ctx& ctx) {
    const CodeParams P = require_params(ctx.cfg);
    const FieldPtr f = resolve_field(ctx.cfg, ctx.warnings);
    ctx.params_json = params_to_json(P);
    ctx.field_json = field_to_json(*f);
    if (ctx.cfg.target == "blocks") {
        Json arr = Json::array();
        for (const Matrix& b : build_superregular_blocks(P, f)) arr.push_back(matrix_to_json(b));
        ctx.payload = Json{{"blocks", std::move(arr)},
                           {"e_max", exponents_block_row(P).max_exponent()}};
    } else {
        auto [m, pat] = build_target(P, f, ctx.cfg.target);
        ctx.payload = Json{{"matrix", matrix_to_json(m)},
                           {"band", pat.band},
                           {"e_max", target_exponents(P, ctx.cfg.target).max_exponent()}};
    }
    ctx.verdict = "built";
}

void cmd_check_sr(Ctx& ctx) {
    const CodeParams P = require_params(ctx.cfg);
    const FieldPtr f = resolve_field(ctx.cfg, ctx.warnings);
    ctx.params_json = params_to_json(P);
    ctx.field_json = field_to_json(*f);
    auto [m, pat] = build_target(P, f, ctx.cfg.target);
    CheckOptions o;
    o.max_order = ctx.cfg.max_order;
    o.collect_all = ctx.cfg.collect_all;
    o.threads = ctx.cfg.threads;
    const SuperregularReport rep = check_superregular(m, pat, o);
    ctx.payload = sr_report_to_json(rep);
    ctx.payload["target"] = ctx.cfg.target;
    ctx.verdict = to_string(rep.verdict);
    ctx.exit_code = rep.verdict == Verdict::superregular ? 0
                    : rep.verdict == Verdict::not_superregular ? 2
                                                               : 3;
    ctx.csv = "order,rows,cols,det\n";
    for (const MinorWitness& w : rep.witnesses)
        ctx.csv += std::to_string(w.index.order()) + "," + join_pipe(w.index.rows) + "," +
                   join_pipe(w.index.cols) + "," + element_to_string(w.determinant) + "\n";
}

void cmd_bounds(Ctx& ctx) {
    const CodeParams P = require_params(ctx.cfg);
    ctx.params_json = params_to_json(P);
    const EntryBound full = entry_field_bound(exponents_full(P));
    const EntryBound parity = entry_field_bound(exponents_parity(P));
    Json hutch = Json::array(), gl = Json::array();
    for (std::size_t r = 2; r <= 8; ++r) {
        hutch.push_back(Json{{"r", r}, {"B", hutchinson_bound(r).str()}});
        gl.push_back(Json{{"r", r}, {"value", gl_generic_bound(1, r).str()}});
    }
    ctx.payload = Json{
        {"theorem", Json{{"N", theorem_field_bound(P).str()},
                         {"log2", theorem_field_bound_log2(P)}}},
        {"corollary", Json{{"N", corollary_field_bound(P).str()},
                           {"log2", corollary_field_bound_log2(P)}}},
        {"entry_full", Json{{"e_max", full.e_max},
                            {"N_power_of_two", full.n_power_of_two.str()},
                            {"N_exact_ceiling", full.n_exact_ceiling.str()}}},
        {"entry_parity", Json{{"e_max", parity.e_max},
                              {"N_power_of_two", parity.n_power_of_two.str()},
                              {"N_exact_ceiling", parity.n_exact_ceiling.str()}}},
        {"hutchinson", std::move(hutch)},
        {"gl_generic", std::move(gl)}};
    ctx.verdict = "computed";

    ctx.csv = "name,value\n";
    ctx.csv += "theorem_N," + theorem_field_bound(P).str() + "\n";
    ctx.csv += "theorem_log2," + std::to_string(theorem_field_bound_log2(P)) + "\n";
    ctx.csv += "corollary_N," + corollary_field_bound(P).str() + "\n";
    ctx.csv += "corollary_log2," + std::to_string(corollary_field_bound_log2(P)) + "\n";
    ctx.csv += "entry_full_e_max," + std::to_string(full.e_max) + "\n";
    ctx.csv += "entry_full_N," + full.n_power_of_two.str() + "\n";
    ctx.csv += "entry_full_N_exact," + full.n_exact_ceiling.str() + "\n";
    ctx.csv += "entry_parity_e_max," + std::to_string(parity.e_max) + "\n";
    ctx.csv += "entry_parity_N," + parity.n_power_of_two.str() + "\n";
    ctx.csv += "entry_parity_N_exact," + parity.n_exact_ceiling.str() + "\n";
    for (std::size_t r = 2; r <= 8; ++r)
        ctx.csv += "hutchinson_B" + std::to_string(r) + "," + hutchinson_bound(r).str() + "\n";
    for (std::size_t r = 2; r <= 8; ++r)
        ctx.csv += "gl_generic_r" + std::to_string(r) + "," + gl_generic_bound(1, r).str() + "\n";
}

void cmd_search_min_field(Ctx& ctx) {
    const CodeParams P = require_params(ctx.cfg);
    if (!ctx.cfg.p) throw ParamsInvalid("--p is required");
    Target target;
    if (ctx.cfg.target == "full")
        target = Target::full;
    else if (ctx.cfg.target == "parity")
        target = Target::parity;
    else
        throw ParamsInvalid("unknown target '" + ctx.cfg.target + "' (expected full or parity)");
    ctx.params_json = params_to_json(P);
    CheckOptions o;
    o.threads = ctx.cfg.threads;
    const MinFieldResult res = min_field_search(P, *ctx.cfg.p, ctx.cfg.n_max, target, o);
    ctx.payload = min_field_to_json(res);
    ctx.payload["p"] = *ctx.cfg.p;
    ctx.payload["N_max"] = ctx.cfg.n_max;
    ctx.payload["target"] = ctx.cfg.target;
    ctx.verdict = res.found_N ? "found" : "not-found";
    ctx.exit_code = res.found_N ? 0 : 2;
}

void cmd_construct_mdp(Ctx& ctx) {
    const CodeParams P = require_params(ctx.cfg);
    const FieldPtr f = resolve_field(ctx.cfg, ctx.warnings);
    ctx.params_json = params_to_json(P);
    ctx.field_json = field_to_json(*f);
    const std::vector<Matrix> seeds = build_parity_seed_blocks(P, f);
    const ConvCode code = mdp_construct(P, seeds);
    const std::vector<Matrix> back = laurent_expansion(code, P.L);
    if (back != seeds)
        throw InternalCheckFailure("construct-mdp: expansion does not reproduce the seed blocks");
    ctx.payload = Json{{"code", code_to_json(code)}, {"round_trip_verified", true}};
    ctx.verdict = "constructed";
}

void cmd_column_distances(Ctx& ctx) {
    const ConvCode code = load_or_construct(ctx.cfg, ctx.warnings);
    ctx.params_json = params_to_json(code.params);
    ctx.field_json = field_to_json(*code.field);
    const BigInt budget(ctx.cfg.search_budget);
    ctx.csv = "j,distance,bound_met,search_space\n";
    if (ctx.cfg.j) {
        const DistanceResult r =
            column_distance(code, *ctx.cfg.j, budget, ctx.cfg.threads);
        ctx.payload = Json{{"distance", distance_to_json(r, ctx.cfg.include_witness)}};
        ctx.csv += std::to_string(r.j) + "," + std::to_string(r.distance) + "," +
                   (r.bound_met ? "true" : "false") + "," + r.search_space.str() + "\n";
    } else {
        const ColumnDistanceProfile prof = distance_profile(code, budget, ctx.cfg.threads);
        ctx.payload = profile_to_json(prof, ctx.cfg.include_witness);
        for (const DistanceResult& r : prof.per_j)
            ctx.csv += std::to_string(r.j) + "," + std::to_string(r.distance) + "," +
                       (r.bound_met ? "true" : "false") + "," + r.search_space.str() + "\n";
    }
    ctx.verdict = "computed";
}

void cmd_verify_mdp(Ctx& ctx) {
    const ConvCode code = load_or_construct(ctx.cfg, ctx.warnings);
    ctx.params_json = params_to_json(code.params);
    ctx.field_json = field_to_json(*code.field);
    const BigInt budget(ctx.cfg.search_budget);
    bool mdp = false;
    if (ctx.cfg.method == "both") {
        const MdpEvidence by_distance = is_mdp(code, MdpMethod::distance, budget, ctx.cfg.threads);
        const MdpEvidence by_sr = is_mdp(code, MdpMethod::superregular, budget, ctx.cfg.threads);
        if (by_distance.mdp != by_sr.mdp)
            throw InternalCheckFailure("verify-mdp: the two methods disagree");
        mdp = by_sr.mdp;
        ctx.payload = Json{{"distance_method", evidence_to_json(by_distance, ctx.cfg.include_witness)},
                           {"superregular_method", evidence_to_json(by_sr, ctx.cfg.include_witness)},
                           {"agree", true}};
    } else if (ctx.cfg.method == "distance" || ctx.cfg.method == "superregular") {
        const MdpEvidence ev =
            is_mdp(code, ctx.cfg.method == "distance" ? MdpMethod::distance : MdpMethod::superregular,
                   budget, ctx.cfg.threads);
        mdp = ev.mdp;
        ctx.payload = evidence_to_json(ev, ctx.cfg.include_witness);
    } else {
        throw ParamsInvalid("unknown method '" + ctx.cfg.method +
                            "' (expected superregular, distance or both)");
    }
    ctx.verdict = mdp ? "mdp" : "not-mdp";
    ctx.exit_code = mdp ? 0 : 2;
}

void cmd_reproduce_example(Ctx& ctx) {
    std::vector<std::uint32_t> coeffs;
    if (ctx.cfg.modulus) {
        coeffs = coeffs_from_string(*ctx.cfg.modulus);
    } else {
        coeffs.assign(1025, 0);
        coeffs[0] = coeffs[36] = coeffs[37] = coeffs[39] = coeffs[1024] = 1;
    }
    const FieldPtr f = Field::make(2, coeffs, true, ctx.cfg.factor_budget);
    for (const std::string& w : f->warnings()) ctx.warnings.push_back(w);
    const CodeParams P(5, 2, 3);
    ctx.params_json = params_to_json(P);
    ctx.field_json = field_to_json(*f);

    const std::vector<Matrix> seeds = build_parity_seed_blocks(P, f);
    const ConvCode code = mdp_construct(P, seeds);
    const bool equation_ok = mat_mul(code.A.coeff(1), seeds[1]) == mat_neg(seeds[2]);
    const bool round_trip_ok = laurent_expansion(code, P.L) == seeds;
    if (!equation_ok || !round_trip_ok)
        throw InternalCheckFailure("reproduce-example: construction identities failed");
    Json zero_cols = Json::array();
    const Matrix& A1 = code.A.coeff(1);
    for (std::size_t c = 0; c < A1.cols(); ++c) {
        bool all_zero = true;
        for (std::size_t r = 0; r < A1.rows(); ++r) all_zero &= A1.at(r, c).is_zero();
        if (all_zero) zero_cols.push_back(c + 1);
    }

    if (ctx.cfg.method == "distance") {
        const DistanceResult r =
            column_distance(code, P.L, BigInt(ctx.cfg.search_budget), ctx.cfg.threads);
        ctx.payload = Json{{"equation_verified", equation_ok},
                           {"round_trip_verified", round_trip_ok},
                           {"a1_zero_columns", std::move(zero_cols)},
                           {"distance", distance_to_json(r, ctx.cfg.include_witness)}};
        ctx.verdict = r.bound_met ? "mdp" : "not-mdp";
        ctx.exit_code = r.bound_met ? 0 : 2;
    } else if (ctx.cfg.method == "superregular") {
        CheckOptions o;
        o.threads = ctx.cfg.threads;
        const SuperregularReport rep =
            check_superregular(block_toeplitz(seeds), pattern_parity(P), o);
        const bool mdp = rep.verdict == Verdict::superregular;
        ctx.payload = Json{{"equation_verified", equation_ok},
                           {"round_trip_verified", round_trip_ok},
                           {"a1_zero_columns", std::move(zero_cols)},
                           {"superregular", sr_report_to_json(rep)}};
        ctx.verdict = mdp ? "mdp" : "not-mdp";
        ctx.exit_code = mdp ? 0 : 2;
    } else {
        throw ParamsInvalid("unknown method '" + ctx.cfg.method +
                            "' (expected superregular or distance)");
    }
}

std::string render_text(const Ctx& ctx) {
    std::string s = ctx.cfg.subcommand + ": " + ctx.verdict + "\n";
    if (ctx.error_json)
        s += "error: " + ctx.error_json->at("message").get<std::string>() + "\n";
    for (const std::string& w : ctx.warnings) s += "warning: " + w + "\n";
    return s;
}

}  // namespace

void apply_env_overrides(RunConfig& config) {
    if (const char* v = std::getenv("SRMDP_SEARCH_BUDGET"))
        config.search_budget = parse_env_u64("SRMDP_SEARCH_BUDGET", v);
    if (const char* v = std::getenv("SRMDP_FACTOR_BUDGET"))
        config.factor_budget = parse_env_u64("SRMDP_FACTOR_BUDGET", v);
    if (const char* v = std::getenv("SRMDP_THREADS")) {
        const std::uint64_t t = parse_env_u64("SRMDP_THREADS", v);
        if (t == 0 || t > 1024) throw ConfigError("SRMDP_THREADS: expected 1..1024");
        config.threads = static_cast<unsigned>(t);
    }
    if (const char* v = std::getenv("SRMDP_KERNELS")) {
        // availability is checked when a field is created; reject typos up front
        const std::string s(v);
        if (!s.empty() && s != "scalar" && s != "avx2" && s != "neon")
            throw ConfigError("SRMDP_KERNELS must be one of scalar, avx2, neon (got \"" + s + "\")");
    }
}

RunResult run(const RunConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    Ctx ctx(config);
    try {
        if (config.format != "json" && config.format != "csv" && config.format != "text")
            throw ConfigError("unknown format '" + config.format + "'");
        if (config.threads == 0) throw ConfigError("--threads must be positive");

        if (config.subcommand == "build") cmd_build(ctx);
        else if (config.subcommand == "check-sr") cmd_check_sr(ctx);
        else if (config.subcommand == "bounds") cmd_bounds(ctx);
        else if (config.subcommand == "search-min-field") cmd_search_min_field(ctx);
        else if (config.subcommand == "construct-mdp") cmd_construct_mdp(ctx);
        else if (config.subcommand == "column-distances") cmd_column_distances(ctx);
        else if (config.subcommand == "verify-mdp") cmd_verify_mdp(ctx);
        else if (config.subcommand == "reproduce-example") cmd_reproduce_example(ctx);
        else throw ConfigError("unknown subcommand '" + config.subcommand + "'");

        if (config.format == "csv" && ctx.csv.empty())
            throw ConfigError("--format csv is not supported for " + config.subcommand);
    } catch (const BudgetExceeded& e) {
        ctx.exit_code = 3;
        ctx.verdict = "budget-exceeded";
        ctx.error_json = Json{{"type", "budget-exceeded"},
                              {"message", e.what()},
                              {"required", e.required.str()},
                              {"budget", e.budget.str()}};
    } catch (const Inconsistent& e) {
        ctx.exit_code = 2;
        ctx.verdict = "inconsistent";
        ctx.error_json = Json{{"type", "inconsistent"}, {"message", e.what()}};
    } catch (const ConfigError& e) {
        ctx.exit_code = 1;
        ctx.verdict = "config-error";
        ctx.error_json = Json{{"type", "config-error"}, {"message", e.what()}};
    } catch (const Error& e) {
        ctx.exit_code = 1;
        ctx.verdict = "error";
        ctx.error_json = Json{{"type", "error"}, {"message", e.what()}};
    } catch (const std::exception& e) {
        ctx.exit_code = 1;
        ctx.verdict = "error";
        ctx.error_json = Json{{"type", "internal"}, {"message", e.what()}};
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();

    std::string report;
    if (config.format == "csv" && ctx.exit_code != 1 && !ctx.csv.empty()) {
        report = ctx.csv;
    } else if (config.format == "text") {
        report = render_text(ctx);
    } else {
        Json env{{"schema", 1},
                 {"version", kVersion},
                 {"subcommand", config.subcommand},
                 {"seed", config.seed},
                 {"verdict", ctx.verdict},
                 {"warnings", ctx.warnings},
                 {"payload", ctx.payload},
                 {"elapsed_ms", elapsed}};
        if (ctx.params_json) env["params"] = *ctx.params_json;
        if (ctx.field_json) env["field"] = *ctx.field_json;
        if (ctx.error_json) env["error"] = *ctx.error_json;
        report = env.dump(2) + "\n";
    }

    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path);
        if (!out) {
            return {1, "{\"error\":{\"type\":\"config-error\",\"message\":\"cannot write " +
                           config.output_path + "\"}}\n"};
        }
        out << report;
    }
    return {ctx.exit_code, report};
}

}  // namespace srmdp

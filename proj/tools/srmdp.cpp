#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "srmdp/cli.hpp"

int main(int argc, char** argv) {
    srmdp::RunConfig cfg;
    try {
        srmdp::apply_env_overrides(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App app{"Exact construction and verification of superregular matrices and MDP codes"};
    app.require_subcommand(1);
    bool no_witness = false;

    auto add_params = [&](CLI::App* s) {
        s->add_option("--n", cfg.n, "code length n");
        s->add_option("--k", cfg.k, "code dimension k");
        s->add_option("--delta", cfg.delta, "code degree delta ((n-k) must divide it)");
    };
    auto add_field = [&](CLI::App* s) {
        s->add_option("--p", cfg.p, "field characteristic (prime)");
        s->add_option("--N", cfg.N, "extension degree; uses the least primitive modulus");
        s->add_option("--modulus", cfg.modulus,
                      "modulus coefficients, low degree first, comma-separated");
    };
    auto add_common = [&](CLI::App* s) {
        s->add_option("--format", cfg.format, "report format: json, csv or text");
        s->add_option("--output", cfg.output_path, "also write the report to this file");
        s->add_option("--threads", cfg.threads, "worker threads");
        s->add_option("--seed", cfg.seed, "seed recorded in reports");
        s->add_option("--factor-budget", cfg.factor_budget,
                      "trial-division budget for factoring group orders");
    };

    CLI::App* build = app.add_subcommand("build", "construct the block matrices");
    add_params(build);
    add_field(build);
    add_common(build);
    build->add_option("--target", cfg.target, "full, parity or blocks");

    CLI::App* check = app.add_subcommand("check-sr", "verify superregularity by minor enumeration");
    add_params(check);
    add_field(check);
    add_common(check);
    check->add_option("--target", cfg.target, "full or parity");
    check->add_option("--max-order", cfg.max_order, "cap the minor order (0 = full)");
    check->add_flag("--collect-all", cfg.collect_all, "keep enumerating past the first zero minor");

    CLI::App* bounds = app.add_subcommand("bounds", "sufficient field-size bounds");
    add_params(bounds);
    add_common(bounds);

    CLI::App* search = app.add_subcommand("search-min-field", "least extension degree that works");
    add_params(search);
    add_common(search);
    search->add_option("--p", cfg.p, "field characteristic (prime)");
    search->add_option("--n-max", cfg.n_max, "largest extension degree to try");
    search->add_option("--target", cfg.target, "full or parity");

    CLI::App* construct = app.add_subcommand("construct-mdp", "build the MDP code from the blocks");
    add_params(construct);
    add_field(construct);
    add_common(construct);

    CLI::App* dist = app.add_subcommand("column-distances", "exact column distances by search");
    add_params(dist);
    add_field(dist);
    add_common(dist);
    dist->add_option("--input", cfg.input_path, "code JSON to measure (default: construct one)");
    dist->add_option("--j", cfg.j, "single distance index (default: profile 0..L)");
    dist->add_option("--budget", cfg.search_budget, "search-space budget");
    dist->add_flag("--no-witness", no_witness, "omit witness codewords from the report");

    CLI::App* verify = app.add_subcommand("verify-mdp", "decide the MDP property");
    add_params(verify);
    add_field(verify);
    add_common(verify);
    verify->add_option("--input", cfg.input_path, "code JSON to verify (default: construct one)");
    verify->add_option("--method", cfg.method, "superregular, distance or both");
    verify->add_option("--budget", cfg.search_budget, "search-space budget for the distance method");
    verify->add_flag("--no-witness", no_witness, "omit witness codewords from the report");

    CLI::App* repro = app.add_subcommand("reproduce-example",
                                         "the (5,2,3) code over GF(2^1024), verified");
    add_common(repro);
    repro->add_option("--method", cfg.method, "superregular or distance");
    repro->add_option("--modulus", cfg.modulus, "override the example modulus");
    repro->add_option("--budget", cfg.search_budget, "search-space budget for the distance method");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the help or error text
        return code == 0 ? 0 : 1;      // --help is fine; everything else is a usage error
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.include_witness = !no_witness;

    const srmdp::RunResult res = srmdp::run(cfg);
    std::fputs(res.report.c_str(), stdout);
    return res.exit_code;
}

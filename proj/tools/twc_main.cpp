// twc: construct the norm-trace two-weight codes, verify every closed form
// against brute force, and export the artifacts.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twc/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"two-weight trace code verification workbench"};
    app.require_subcommand(1);

    twc::AnalyzeRequest areq;
    twc::EmitPaths paths;
    auto* analyze = app.add_subcommand("analyze", "analyze one (p, e, s, c) parameter set");
    analyze->add_option("--p", areq.p, "characteristic (prime)")->required();
    analyze->add_option("--e", areq.e, "extension degree of F_q over F_p")->required();
    analyze->add_option("--s", areq.s, "half of m; the code lives in F_q^(2s)")->required();
    analyze->add_option("--c", areq.c_index, "canonical F_q index of c")->required();
    analyze->add_option("--size-bound", areq.size_bound, "ambient field size bound");
    analyze->add_option("--json", paths.json, "write the full report as JSON");
    analyze->add_option("--emit-graph", paths.graph, "write the point graph (projective codes)");
    analyze->add_option("--emit-set", paths.defining_set, "write the defining set");
    analyze->add_option("--emit-matrix", paths.matrix, "write the generator matrix");

    twc::SweepConfig sweep_cfg;
    auto* sweep = app.add_subcommand("sweep", "verify every parameter set up to a size bound");
    sweep->add_option("--max-size", sweep_cfg.max_ambient, "largest ambient field size");
    sweep->add_option("--threads", sweep_cfg.threads, "worker threads (0 = auto)");
    sweep->add_flag("--charsums", sweep_cfg.include_charsums,
                    "also run the character-sum checks per tower");
    sweep->add_option("--json", sweep_cfg.json_path, "write the sweep report as JSON");

    std::uint32_t cp = 0, ce = 0, cs = 0;
    auto* charsums = app.add_subcommand("charsums", "character-sum checks for one tower");
    charsums->add_option("--p", cp, "characteristic (prime)")->required();
    charsums->add_option("--e", ce, "extension degree of F_q over F_p")->required();
    charsums->add_option("--s", cs, "half of m")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // bad usage is invalid input
    }

    if (analyze->parsed()) return twc::run_analyze_cli(areq, paths, std::cout, std::cerr);
    if (sweep->parsed()) return twc::run_sweep_cli(sweep_cfg, std::cout, std::cerr);
    return twc::run_charsums_cli(cp, ce, cs, std::cout, std::cerr);
}

// JSON reports, file exports and the three CLI entry points. Reports are
// deterministic: integer-only payloads, fixed key order, case order fixed by
// (p, e, s, c_index), independent of the thread count.

#ifndef TWC_REPORT_HPP
#define TWC_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "twc/checks.hpp"

namespace twc {

nlohmann::ordered_json case_report_json(const CaseAnalysis& a);

struct AnalyzeRequest {
    std::uint32_t p = 0, e = 0, s = 0;
    std::uint32_t c_index = 0;
    std::uint64_t size_bound = kDefaultSizeBound;
    CaseOptions options;
};

struct EmitPaths {
    std::string json;
    std::string graph;
    std::string defining_set;
    std::string matrix;
};

// exit code 0 when every check passes, 1 on a verification mismatch,
// 2 on invalid parameters
int run_analyze_cli(const AnalyzeRequest& req, const EmitPaths& paths, std::ostream& out,
                    std::ostream& err);

struct SweepConfig {
    std::uint64_t max_ambient = 4096;
    unsigned threads = 0;  // 0: hardware concurrency
    bool include_charsums = false;
    std::string json_path;
};

int run_sweep_cli(const SweepConfig& cfg, std::ostream& out, std::ostream& err);

int run_charsums_cli(std::uint32_t p, std::uint32_t e, std::uint32_t s, std::ostream& out,
                     std::ostream& err);

// header "p e s c n", then one decimal encoding per line
void emit_defining_set(std::ostream& os, const TowerParams& tw, const TraceCode& code);
// k rows of n space-separated symbol indices
void emit_generator_matrix(std::ostream& os, const TraceCode& code);
// "N K", then one "u v" line per edge, u < v, ascending
void emit_graph(std::ostream& os, const PointGraph& g);

}  // namespace twc

#endif

#include "twc/report.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace twc {

namespace {

using json = nlohmann::ordered_json;

json json_big(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::uint64_t(1) << 62)) return v.convert_to<std::uint64_t>();
    return v.str();  // out of comfortable integer range: keep it exact as a string
}

json srg_params_json(const SRGParams& p) {
    return {{"N", p.n_vertices}, {"K", p.degree}, {"lambda", p.lambda}, {"mu", p.mu}};
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
    return f;
}

}  // namespace

json case_report_json(const CaseAnalysis& a) {
    json root;
    root["params"] = {{"p", a.p}, {"e", a.e}, {"s", a.s}, {"m", a.m},
                      {"q", a.q}, {"c_index", a.c_index}};

    json length = {{"computed", a.n_computed}, {"closed_form", a.n_closed}};
    if (a.published_n) {
        length["published"] = *a.published_n;
        length["published_match"] = *a.published_n == a.n_computed;
    }
    root["length"] = length;
    root["dimension"] = a.dimension;

    json weights = json::array();
    std::uint64_t maxn = std::max(a.dist_bf.counts.size(), a.dist_closed.counts.size());
    for (std::uint64_t w = 1; w < maxn; ++w) {
        BigInt bf = w < a.dist_bf.counts.size() ? a.dist_bf.counts[w] : BigInt(0);
        BigInt cf = w < a.dist_closed.counts.size() ? a.dist_closed.counts[w] : BigInt(0);
        if (bf == 0 && cf == 0) continue;
        weights.push_back({{"w", w},
                           {"count_bruteforce", json_big(bf)},
                           {"count_closed_form", json_big(cf)}});
    }
    // the degenerate family predicts a class with count 0; surface it
    if (a.c_case == CCase::NonzeroEvenQ && a.s == 1) {
        std::uint64_t w_empty = a.q - 1;
        weights.insert(weights.begin(),
                       json{{"w", w_empty}, {"count_bruteforce", 0}, {"count_closed_form", 0}});
    }
    root["weights"] = weights;
    root["closed_form_match"] = a.dist_match;

    json dual;
    dual["n"] = a.n_computed;
    dual["k"] = a.n_computed - a.m;
    dual["d_observed"] = a.d_dual_observed;
    dual["d_closed_form"] = a.dual_closed ? json(a.dual_closed->d_dual) : json(nullptr);
    dual["a2_closed"] = json_big(a.low_closed.a2);
    dual["a2_transform"] = json_big(a.a2_transform);
    dual["a2_match"] = a.a2_match;
    dual["a3_closed"] = a.low_closed.a3 ? json_big(*a.low_closed.a3) : json(nullptr);
    dual["a3_transform"] = json_big(a.a3_transform);
    dual["a3_match"] = a.a3_match;
    json checks = json::array();
    for (const auto& mc : a.moments)
        checks.push_back({{"name", mc.name}, {"holds", mc.holds}, {"required", mc.required}});
    dual["moment_checks"] = checks;
    root["dual"] = dual;

    root["projective"] = a.projective;
    root["minimal"] = {{"holds", a.minimal.holds},
                       {"ratio", {{"num", a.minimal.w_min}, {"den", a.minimal.w_max}}}};

    if (a.srg) {
        json srg;
        if (a.srg->predicted.n_vertices != 0) srg["predicted"] = srg_params_json(a.srg->predicted);
        if (a.srg->family) srg["family"] = srg_params_json(*a.srg->family);
        if (a.srg->computed && a.srg->skip_reason.empty()) {
            srg["counted"] = srg_params_json(a.srg->counted);
            srg["match"] = a.srg->match;
        } else {
            srg["counted"] = nullptr;
            srg["match"] = a.srg->computed ? json(a.srg->match) : json(nullptr);
            srg["note"] = a.srg->skip_reason;
        }
        root["srg"] = srg;
    }
    root["pass"] = a.pass();
    return root;
}

void emit_defining_set(std::ostream& os, const TowerParams& tw, const TraceCode& code) {
    os << tw.p << ' ' << tw.e << ' ' << tw.s << ' ' << tw.canonical_index(code.dset.c, Level::Q)
       << ' ' << code.n << '\n';
    for (FieldElem d : code.dset.elements) os << d << '\n';
}

void emit_generator_matrix(std::ostream& os, const TraceCode& code) {
    for (const auto& row : code.gen) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
}

void emit_graph(std::ostream& os, const PointGraph& g) {
    os << g.size() << ' ' << g.degree(0) << '\n';
    for (std::uint64_t u = 0; u < g.size(); ++u)
        for (std::uint64_t v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v)) os << u << ' ' << v << '\n';
}

namespace {

void print_case_summary(std::ostream& out, const CaseAnalysis& a) {
    out << "code [" << a.n_computed << "," << a.dimension << ","
        << a.dist_bf.min_weight() << "] over F_" << a.q << " (p=" << a.p << " e=" << a.e
        << " s=" << a.s << " c_index=" << a.c_index << ", " << c_case_name(a.c_case) << ")\n";
    out << "  length: computed " << a.n_computed << ", closed form " << a.n_closed;
    if (a.published_n) {
        out << ", published " << *a.published_n;
        if (*a.published_n != a.n_computed) out << " (MISMATCH, computed value is authoritative)";
    }
    out << '\n';
    out << "  weights:";
    for (std::uint64_t w : a.dist_bf.nonzero_weights())
        out << " " << w << ":" << a.dist_bf.counts[w];
    out << (a.dist_match ? "  (matches closed form)" : "  (CLOSED FORM MISMATCH)") << '\n';
    out << "  dual: [" << a.n_computed << "," << a.n_computed - a.m << "," << a.d_dual_observed
        << "]";
    if (a.dual_closed) out << (a.dual_d_match ? ", matches closed form" : ", d MISMATCH");
    out << "; A2=" << a.a2_transform << (a.a2_match ? " ok" : " MISMATCH");
    if (a.low_closed.a3) out << ", A3=" << a.a3_transform << (a.a3_match ? " ok" : " MISMATCH");
    out << '\n';
    out << "  moments:";
    for (const auto& mc : a.moments)
        if (mc.required) out << " " << mc.name << (mc.holds ? " ok" : " FAIL");
    out << '\n';
    out << "  projective: " << (a.projective ? "yes" : "no") << ", minimal: "
        << (a.minimal.holds ? "yes" : "no") << " (w_min/w_max = " << a.minimal.w_min << "/"
        << a.minimal.w_max << ")\n";
    if (a.srg) {
        out << "  graph: ";
        if (a.srg->computed && a.srg->skip_reason.empty())
            out << "counted (" << a.srg->counted.n_vertices << "," << a.srg->counted.degree << ","
                << a.srg->counted.lambda << "," << a.srg->counted.mu << ")"
                << (a.srg->match ? ", matches prediction" : ", MISMATCH");
        else
            out << "skipped: " << a.srg->skip_reason;
        out << '\n';
    }
    out << (a.pass() ? "PASS" : "FAIL") << '\n';
}

}  // namespace

int run_analyze_cli(const AnalyzeRequest& req, const EmitPaths& paths, std::ostream& out,
                    std::ostream& err) {
    try {
        TowerParams tw = build_tower(req.p, req.e, req.s, req.size_bound);
        if (req.c_index >= tw.q) throw std::invalid_argument("c index out of range for F_q");
        FieldElem c = tw.element_at(req.c_index, Level::Q);
        TowerMaps maps(tw);
        CaseAnalysis analysis = analyze_case(tw, maps, c, req.options);
        out << "ambient F_" << tw.ambient << ", modulus coefficients " << tw.modulus_string()
            << " (low degree first)\n";

        if (!paths.defining_set.empty() || !paths.matrix.empty() || !paths.graph.empty()) {
            TraceCode code = build_trace_code(tw, maps, c);
            if (!paths.defining_set.empty()) {
                auto f = open_out(paths.defining_set);
                emit_defining_set(f, tw, code);
            }
            if (!paths.matrix.empty()) {
                auto f = open_out(paths.matrix);
                emit_generator_matrix(f, code);
            }
            if (!paths.graph.empty()) {
                PointGraph g = build_graph(tw, omega_set(tw, code));
                auto f = open_out(paths.graph);
                emit_graph(f, g);
            }
        }
        if (!paths.json.empty()) {
            auto f = open_out(paths.json);
            f << case_report_json(analysis).dump(2) << '\n';
        }
        print_case_summary(out, analysis);
        return analysis.pass() ? 0 : 1;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::domain_error& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
}

namespace {

struct SweepCase {
    TowerSpec spec;
    std::uint32_t c_index;
};

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

int run_sweep_cli(const SweepConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        auto specs = admissible_towers(cfg.max_ambient);
        struct TowerResult {
            std::vector<CaseAnalysis> cases;
            std::vector<CheckOutcome> charsums;
        };
        std::vector<TowerResult> results(specs.size());

        unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
        threads = std::min<unsigned>(threads, unsigned(specs.size()));

        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::string first_error;
        std::mutex error_mutex;

        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= specs.size() || failed.load()) break;
                try {
                    const TowerSpec& sp = specs[i];
                    TowerParams tw = build_tower(sp.p, sp.e, sp.s, cfg.max_ambient);
                    TowerMaps maps(tw);
                    for (std::uint32_t ci = tw.s > 1 ? 0 : 1; ci < tw.q; ++ci)
                        results[i].cases.push_back(
                            analyze_case(tw, maps, tw.element_at(ci, Level::Q), {}));
                    if (cfg.include_charsums)
                        results[i].charsums = run_charsum_checks(tw, maps);
                } catch (const std::exception& ex) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (first_error.empty()) first_error = ex.what();
                    failed.store(true);
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        if (failed.load()) throw std::runtime_error("sweep aborted: " + first_error);

        out << "  p  e  s    c |    q     n   k     d | len dist dual  mom proj  min  srg | result\n";
        bool all_pass = true;
        json cases_json = json::array();
        for (std::size_t i = 0; i < specs.size(); ++i) {
            for (const auto& a : results[i].cases) {
                bool mom_ok = true;
                for (const auto& mc : a.moments) mom_ok &= !mc.required || mc.holds;
                std::string srg_col = "  --";
                if (a.srg) {
                    if (a.srg->computed && a.srg->skip_reason.empty())
                        srg_col = a.srg->match ? "  ok" : "FAIL";
                    else
                        srg_col = "skip";
                }
                std::string min_col =
                    a.s >= 3 ? (a.minimal.holds ? "  ok" : "FAIL") : (a.minimal.holds ? " yes" : "  no");
                out << std::setw(3) << a.p << std::setw(3) << a.e << std::setw(3) << a.s
                    << std::setw(5) << a.c_index << " |" << std::setw(5) << a.q << std::setw(6)
                    << a.n_computed << std::setw(4) << a.dimension << std::setw(6)
                    << a.dist_bf.min_weight() << " |" << std::setw(4) << mark(a.length_match)
                    << std::setw(5) << mark(a.dist_match) << std::setw(5)
                    << mark(a.dual_d_match && a.a2_match && a.a3_match) << std::setw(5)
                    << mark(mom_ok) << std::setw(5) << mark(a.projective_consistent)
                    << std::setw(5) << min_col << std::setw(5) << srg_col << " | "
                    << (a.pass() ? "PASS" : "FAIL") << '\n';
                all_pass &= a.pass();
                cases_json.push_back(case_report_json(a));
            }
        }
        json charsums_json = json::array();
        if (cfg.include_charsums) {
            out << '\n';
            for (std::size_t i = 0; i < specs.size(); ++i) {
                for (const auto& chk : results[i].charsums) {
                    out << (chk.pass ? "PASS " : "FAIL ") << "charsums p=" << specs[i].p
                        << " e=" << specs[i].e << " s=" << specs[i].s << ": " << chk.name << " ("
                        << chk.cases << " cases)";
                    if (!chk.pass) out << " -- " << chk.detail;
                    out << '\n';
                    all_pass &= chk.pass;
                    charsums_json.push_back({{"p", specs[i].p},
                                             {"e", specs[i].e},
                                             {"s", specs[i].s},
                                             {"name", chk.name},
                                             {"cases", chk.cases},
                                             {"pass", chk.pass},
                                             {"detail", chk.detail}});
                }
            }
        }
        out << (all_pass ? "SWEEP PASS" : "SWEEP FAIL") << '\n';

        if (!cfg.json_path.empty()) {
            json root;
            root["max_ambient"] = cfg.max_ambient;
            root["cases"] = cases_json;
            if (cfg.include_charsums) root["charsums"] = charsums_json;
            root["all_pass"] = all_pass;
            auto f = open_out(cfg.json_path);
            f << root.dump(2) << '\n';
        }
        return all_pass ? 0 : 1;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
}

int run_charsums_cli(std::uint32_t p, std::uint32_t e, std::uint32_t s, std::ostream& out,
                     std::ostream& err) {
    try {
        TowerParams tw = build_tower(p, e, s);
        TowerMaps maps(tw);
        bool all_pass = true;
        for (const auto& chk : run_charsum_checks(tw, maps)) {
            out << (chk.pass ? "PASS " : "FAIL ") << chk.name << " (" << chk.cases << " cases)";
            if (!chk.pass) out << " -- " << chk.detail;
            out << '\n';
            all_pass &= chk.pass;
        }
        return all_pass ? 0 : 1;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
}

}  // namespace twc

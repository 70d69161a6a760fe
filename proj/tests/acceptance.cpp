// Acceptance suite: one line per criterion, every closed form against its
// brute-force oracle at full desk scale. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "twc/checks.hpp"
#include "twc/report.hpp"

using namespace twc;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string case_tag(const CaseAnalysis& a) {
    return "(p=" + std::to_string(a.p) + ",e=" + std::to_string(a.e) + ",s=" + std::to_string(a.s) +
           ",c_index=" + std::to_string(a.c_index) + ")";
}

constexpr std::uint64_t kMaxAmbient = 4096;

}  // namespace

int main() {
    const auto specs = admissible_towers(kMaxAmbient);

    // ---- criterion 1: brute-force weight distributions equal the closed form
    {
        auto start = std::chrono::steady_clock::now();
        std::uint64_t cases = 0;
        std::string bad;
        for (const auto& sp : specs) {
            TowerParams tw = build_tower(sp.p, sp.e, sp.s);
            TowerMaps maps(tw);
            for (std::uint32_t ci = tw.s > 1 ? 0 : 1; ci < tw.q && bad.empty(); ++ci) {
                FieldElem c = tw.element_at(ci, Level::Q);
                TraceCode code = build_trace_code(tw, maps, c);
                WeightDistribution bf = weight_distribution(tw, maps, code);
                WeightDistribution cf = closed_form_distribution(tw.q, tw.s, classify_c_case(tw, c));
                ++cases;
                if (bf.n != cf.n || bf.counts != cf.counts)
                    bad = "(p=" + std::to_string(sp.p) + ",e=" + std::to_string(sp.e) +
                          ",s=" + std::to_string(sp.s) + ",c_index=" + std::to_string(ci) + ")";
            }
            if (!bad.empty()) break;
        }
        char stats[128];
        std::snprintf(stats, sizeof stats, "%llu parameter sets, %.1f s",
                      (unsigned long long)cases, seconds_since(start));
        report(1, "closed-form weight distributions equal brute force exactly", bad.empty(),
               bad.empty() ? std::string(stats) : bad);
    }

    // full analysis of every swept case, shared by the remaining criteria
    std::vector<CaseAnalysis> all;
    for (const auto& sp : specs) {
        TowerParams tw = build_tower(sp.p, sp.e, sp.s);
        TowerMaps maps(tw);
        for (std::uint32_t ci = tw.s > 1 ? 0 : 1; ci < tw.q; ++ci)
            all.push_back(analyze_case(tw, maps, tw.element_at(ci, Level::Q), {}));
    }

    // ---- criterion 2: the published reference rows reproduce
    {
        std::string bad;
        int rows_checked = 0;
        for (const auto& row : reference_table()) {
            const CaseAnalysis* found = nullptr;
            for (const auto& a : all)
                if (a.q == row.q && a.m == row.m && a.c_index == row.c_index) found = &a;
            if (!found) {
                bad = "no swept case for a reference row";
                break;
            }
            ++rows_checked;
            std::uint64_t d = found->dist_bf.min_weight();
            bool length_ok = row.n == 64 ? (found->n_computed == 68 && found->published_n &&
                                            *found->published_n == 64)
                                         : found->n_computed == row.n;
            if (!length_ok || found->dimension != row.k || d != row.d) {
                bad = "row [" + std::to_string(row.n) + "," + std::to_string(row.k) + "," +
                      std::to_string(row.d) + "]: computed [" +
                      std::to_string(found->n_computed) + "," +
                      std::to_string(found->dimension) + "," + std::to_string(d) + "]";
                break;
            }
        }
        report(2, "reference-table rows reproduce (length-64 row computes to 68 and is flagged)",
               bad.empty(), bad.empty() ? std::to_string(rows_checked) + " rows" : bad);
    }

    // ---- criterion 3: dual distances and low dual coefficients
    {
        std::string bad;
        std::uint64_t with_claim = 0;
        for (const auto& a : all) {
            if (a.dual_closed) {
                ++with_claim;
                if (!a.dual_d_match) {
                    bad = "dual distance mismatch at " + case_tag(a);
                    break;
                }
            }
            if (!a.a2_match || !a.a3_match) {
                bad = "low dual coefficient mismatch at " + case_tag(a);
                break;
            }
        }
        report(3, "dual minimum distances and A2/A3 closed forms match the transform",
               bad.empty(),
               bad.empty() ? std::to_string(with_claim) + " cases with a claimed distance" : bad);
    }

    // ---- criterion 4: norm-form and weight sums against their closed forms
    {
        auto start = std::chrono::steady_clock::now();
        std::string bad;
        std::uint64_t cases = 0;
        for (const auto& sp : specs) {
            TowerParams tw = build_tower(sp.p, sp.e, sp.s);
            TowerMaps maps(tw);
            CheckOutcome nf = check_norm_form_sums(tw, maps);
            CheckOutcome ws = check_weight_sums(tw, maps);
            cases += nf.cases + ws.cases;
            if (!nf.pass || !ws.pass) {
                bad = "(p=" + std::to_string(sp.p) + ",e=" + std::to_string(sp.e) +
                      ",s=" + std::to_string(sp.s) + "): " + (nf.pass ? ws.detail : nf.detail);
                break;
            }
        }
        char stats[128];
        std::snprintf(stats, sizeof stats, "%llu sums, %.1f s", (unsigned long long)cases,
                      seconds_since(start));
        report(4, "norm-form and weight character sums equal their closed forms exactly",
               bad.empty(), bad.empty() ? std::string(stats) : bad);
    }

    // ---- criterion 5: Gauss sums and quadratic character sums
    {
        auto start = std::chrono::steady_clock::now();
        std::string bad;
        std::uint64_t cases = 0;
        for (auto [p, e] : prime_powers_upto(343)) {
            if (p == 2) continue;
            TowerParams tw = build_tower(p, e, 1);
            CheckOutcome g = check_gauss_quadratic(tw, Level::Q);
            cases += g.cases;
            if (!g.pass) {
                bad = "q=" + std::to_string(tw.q) + ": " + g.detail;
                break;
            }
        }
        if (bad.empty()) {
            for (auto [p, e] : prime_powers_upto(64)) {
                TowerParams tw = build_tower(p, e, 1);
                CheckOutcome qp = check_quadratic_poly_sums(tw);
                cases += qp.cases;
                if (!qp.pass) {
                    bad = "q=" + std::to_string(tw.q) + ": " + qp.detail;
                    break;
                }
            }
        }
        char stats[128];
        std::snprintf(stats, sizeof stats, "%llu sums, %.1f s", (unsigned long long)cases,
                      seconds_since(start));
        report(5, "quadratic Gauss sums and quadratic character sums match closed forms",
               bad.empty(), bad.empty() ? std::string(stats) : bad);
    }

    // ---- criterion 6: the three named graph instances
    {
        auto start = std::chrono::steady_clock::now();
        struct Want {
            std::uint64_t q;
            std::uint32_t m;
            SRGParams params;
        };
        const std::vector<Want> wanted = {
            {2, 4, {16, 10, 6, 6}},
            {2, 6, {64, 36, 20, 20}},
            {4, 4, {256, 204, 164, 156}},
        };
        std::string bad;
        for (const auto& w : wanted) {
            const CaseAnalysis* found = nullptr;
            for (const auto& a : all)
                if (a.q == w.q && a.m == w.m && a.c_index == 1) found = &a;
            if (!found || !found->srg || !found->srg->computed) {
                bad = "graph not counted for q=" + std::to_string(w.q) +
                      ", m=" + std::to_string(w.m);
                break;
            }
            const SrgAnalysis& s = *found->srg;
            if (!(s.counted == w.params) || !(s.predicted == w.params) ||
                !s.family.has_value() || !(*s.family == w.params) ||
                !srg_feasible(s.counted)) {
                bad = "graph parameters disagree for q=" + std::to_string(w.q) +
                      ", m=" + std::to_string(w.m);
                break;
            }
        }
        char stats[64];
        std::snprintf(stats, sizeof stats, "%.1f s", seconds_since(start));
        report(6,
               "direct counting gives (16,10,6,6), (64,36,20,20), (256,204,164,156), both "
               "closed forms agree, feasibility holds",
               bad.empty(), bad.empty() ? std::string(stats) : bad);
    }

    // ---- criterion 7: power moments, corrected forms required, variants documented
    {
        std::string bad;
        std::uint64_t checks_run = 0;
        for (const auto& a : all) {
            bool saw_variant = false;
            for (const auto& mc : a.moments) {
                if (mc.required) {
                    ++checks_run;
                    if (!mc.holds) {
                        bad = mc.name + " fails at " + case_tag(a);
                        break;
                    }
                } else {
                    saw_variant = true;
                }
            }
            if (!bad.empty()) break;
            if (!saw_variant) {
                bad = "variant comparison missing at " + case_tag(a);
                break;
            }
            auto j = case_report_json(a);
            bool documented = false;
            for (const auto& mc : j["dual"]["moment_checks"])
                if (mc["name"] == "second_moment_minus_variant") documented = true;
            if (!documented) {
                bad = "report does not document the variant comparison at " + case_tag(a);
                break;
            }
        }
        report(7, "corrected power-moment identities hold; sign/cubic variants are documented",
               bad.empty(), bad.empty() ? std::to_string(checks_run) + " identities" : bad);
    }

    // ---- criterion 8: minimality for s >= 3 plus the boundary case
    {
        std::string bad;
        std::uint64_t minimal_cases = 0;
        for (const auto& a : all) {
            if (a.s >= 3) {
                ++minimal_cases;
                if (!a.minimal.holds) {
                    bad = "not minimal at " + case_tag(a);
                    break;
                }
            }
            if (a.p == 2 && a.e == 1 && a.s == 2 && a.c_index == 0) {
                bool boundary = !a.minimal.holds && a.minimal.w_min * 2 == a.minimal.w_max;
                if (!boundary) {
                    bad = "boundary case (q=2,s=2,c=0) should fail with ratio exactly 1/2";
                    break;
                }
            }
        }
        report(8, "minimality holds for every s >= 3 code; the (q=2,s=2,c=0) ratio is exactly 1/2",
               bad.empty(), bad.empty() ? std::to_string(minimal_cases) + " codes with s >= 3" : bad);
    }

    if (failures == 0) std::printf("all acceptance criteria pass\n");
    return failures == 0 ? 0 : 1;
}

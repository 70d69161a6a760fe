// Per-parameter-set analysis (construction, both weight distributions, dual
// transform, moments, minimality, graph parameters) and the character-sum
// equivalence sweeps. Shared by the CLI subcommands and the acceptance suite.

#ifndef TWC_CHECKS_HPP
#define TWC_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twc/charsums.hpp"
#include "twc/code_builder.hpp"
#include "twc/dual_analysis.hpp"
#include "twc/field_tower.hpp"
#include "twc/srg.hpp"
#include "twc/tower_maps.hpp"

namespace twc {

struct CaseOptions {
    bool with_srg = true;
    std::uint64_t srg_max_vertices = std::uint64_t(1) << 15;
};

struct SrgAnalysis {
    bool computed = false;
    std::string skip_reason;  // set when counting was skipped
    SRGParams predicted;      // from the code's length, dimension and weights
    std::optional<SRGParams> family;  // even-q closed family, when applicable
    SRGParams counted;
    bool match = false;
};

// Everything the report needs for one (tower, c) pair. `pass()` is the
// verification verdict: every closed form agrees with its brute-force oracle.
struct CaseAnalysis {
    std::uint32_t p = 0, e = 0, s = 0, m = 0;
    std::uint64_t q = 0;
    FieldElem c = 0;
    std::uint32_t c_index = 0;
    CCase c_case = CCase::Zero;

    std::uint64_t n_computed = 0, n_closed = 0;
    std::optional<std::uint64_t> published_n;  // reference-table row, when one exists
    bool length_match = false;

    std::uint32_t dimension = 0;

    WeightDistribution dist_bf, dist_closed;
    bool dist_match = false;

    WeightDistribution dual_dist;
    std::uint32_t d_dual_observed = 0;
    std::optional<DualParams> dual_closed;  // absent outside the four parameter cases
    bool dual_d_match = true;
    DualLowWeight low_closed;
    BigInt a2_transform, a3_transform;
    bool a2_match = false, a3_match = true;
    std::vector<MomentCheck> moments;

    bool projective = false;
    bool projective_consistent = false;  // projectivity vs observed dual distance >= 3

    MinimalityResult minimal;
    bool minimal_expected_ok = true;  // s >= 3 forces the criterion to hold

    std::optional<SrgAnalysis> srg;  // present iff the code is projective

    bool pass() const;
};

CaseAnalysis analyze_case(const TowerParams& tw, const TowerMaps& maps, FieldElem c,
                          const CaseOptions& opt = {});

// Published [n, k, d] rows shipped as a fixture for cross-checking.
struct ReferenceRow {
    std::uint64_t n;
    std::uint32_t k;
    std::uint64_t d;
    std::uint32_t c_index;
    std::uint32_t m;
    std::uint64_t q;
    const char* optimality;
};
const std::vector<ReferenceRow>& reference_table();
std::optional<ReferenceRow> reference_row_for(std::uint64_t q, std::uint32_t m,
                                              std::uint32_t c_index);

struct CheckOutcome {
    std::string name;
    bool pass = true;
    std::uint64_t cases = 0;
    std::string detail;  // first counterexample: inputs as encodings plus both values
};

// character orthogonality, exact for the additive side, numeric for the
// multiplicative side
CheckOutcome check_additive_orthogonality(const TowerParams& tw);
CheckOutcome check_multiplicative_orthogonality(const TowerParams& tw);

// G*G = eta(-1)*size exactly, |G| = sqrt(size) and the closed complex value
// within 1e-9*sqrt(size)
CheckOutcome check_gauss_quadratic(const TowerParams& tw, Level level);

// brute-force quadratic character sums against their closed forms over every
// coefficient triple with a2 != 0 at level Q; every b when q <= 16, else b = 1
CheckOutcome check_quadratic_poly_sums(const TowerParams& tw);

// norm-form sum vs closed form: every a in F_{q^s}^* when q^m <= 256, else
// a = 1; always every (b, c)
CheckOutcome check_norm_form_sums(const TowerParams& tw, const TowerMaps& maps);

// weight sum vs closed form over every (b, c)
CheckOutcome check_weight_sums(const TowerParams& tw, const TowerMaps& maps);

std::vector<CheckOutcome> run_charsum_checks(const TowerParams& tw, const TowerMaps& maps);

struct TowerSpec {
    std::uint32_t p, e, s;
};

// all (p, e, s) with p^(2es) <= max_ambient, sorted by (p, e, s)
std::vector<TowerSpec> admissible_towers(std::uint64_t max_ambient);

// all prime powers p^e <= limit as (p, e), ascending by value
std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_upto(std::uint32_t limit);

}  // namespace twc

#endif

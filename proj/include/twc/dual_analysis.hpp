// Exact dual weight distributions through the MacWilliams transform
// (Krawtchouk form, arbitrary-precision integers mandatory), the closed-form
// dual parameters for each case of the family, and the power-moment
// identities linking the primal distribution to the low dual coefficients.

#ifndef TWC_DUAL_ANALYSIS_HPP
#define TWC_DUAL_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twc/bigint.hpp"
#include "twc/code_builder.hpp"

namespace twc {

// K_j(i) = sum_t (-1)^t (q-1)^(j-t) C(i,t) C(n-i, j-t)
BigInt krawtchouk(std::uint64_t q, std::uint64_t n, std::uint64_t j, std::uint64_t i);

// A_j-dual = q^(-k) sum_i A_i K_j(i). Divisibility by q^k and nonnegativity
// are asserted; a violation means the input distribution is wrong and throws.
WeightDistribution macwilliams_dual(const WeightDistribution& dist);

struct DualParams {
    std::uint64_t n = 0;
    std::uint64_t k_dual = 0;
    std::uint32_t d_dual = 0;
};

// Closed-form dual parameters: d = 3 for (q = 2, s >= 3, c = 0) and
// (even q, c != 0); d = 2 for (q > 2, s > 1, c = 0) and (odd q, c != 0).
// Throws outside those four cases, e.g. (q = 2, s = 2, c = 0).
DualParams dual_params_closed(std::uint64_t q, std::uint32_t s, CCase c_case);

struct DualLowWeight {
    BigInt a2;
    std::optional<BigInt> a3;  // available for c = 0 with q = 2 and for even q, c != 0
};

// Closed forms for the first dual coefficients above weight 1.
DualLowWeight dual_low_weight_closed(std::uint64_t q, std::uint32_t s, CCase c_case);

struct MomentCheck {
    std::string name;
    bool holds = false;
    bool required = false;  // informational variants are expected to fail
};

// Power-moment identities between the primal distribution and the dual's low
// coefficients. The required entries are
//   second moment:  sum j^2 A_j = q^(k-2) [ (q-1)n(qn-n+1) + 2 A2d ]
//   binary third:   sum j^3 A_j = 2^(k-3) [ n^2 (n+3) - 6 A3d ]        (q = 2, A2d = 0)
//   even-q third:   sum j^3 A_j = q^(k-3) [ (q-1)n(q^2 n^2 - 2q n^2 + 3qn
//                                           - q + n^2 - 3n + 2) - 6 A3d ]  (A2d = 0)
// alongside informational sign/cubic variants evaluated for comparison.
// Requires dual = macwilliams_dual(dist) and A1-dual = 0.
std::vector<MomentCheck> pless_moment_check(const WeightDistribution& dist,
                                            const WeightDistribution& dual);

}  // namespace twc

#endif

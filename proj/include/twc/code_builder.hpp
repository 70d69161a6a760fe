// The defining set D = {x in F_{q^m}^* : Tr_{q^s/q}(x^(q^s+1)) + c = 0} and
// the trace code it generates: generator matrix, brute-force weight
// distribution, the closed-form two-weight distribution, projectivity and the
// minimality criterion.

#ifndef TWC_CODE_BUILDER_HPP
#define TWC_CODE_BUILDER_HPP

#include <cstdint>
#include <vector>

#include "twc/bigint.hpp"
#include "twc/field_tower.hpp"
#include "twc/tower_maps.hpp"

namespace twc {

struct DefiningSet {
    FieldElem c = 0;                  // element of F_q
    std::vector<FieldElem> elements;  // sorted ascending by encoding, never contains 0
};

struct WeightDistribution {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint32_t k = 0;          // q^k codewords
    std::vector<BigInt> counts;   // A_0 .. A_n

    BigInt total() const;
    std::vector<std::uint64_t> nonzero_weights() const;  // i >= 1 with A_i > 0
    std::uint64_t min_weight() const;                    // throws on the zero code
    BigInt power_moment(unsigned r) const;               // sum of j^r * A_j
    void validate() const;  // A_0 = 1 and total = q^k, else throws
};

struct TraceCode {
    DefiningSet dset;
    std::uint32_t n = 0;
    std::uint32_t k = 0;                          // = m
    std::vector<FieldElem> basis;                 // g^0 .. g^(m-1)
    std::vector<std::vector<std::uint32_t>> gen;  // k rows of n canonical symbol indices
};

enum class CCase { Zero, NonzeroEvenQ, NonzeroOddQ };

CCase classify_c_case(const TowerParams& tw, FieldElem c);
const char* c_case_name(CCase c);

// Exhaustive scan of F_{q^m}^*. c must lie in the F_q subfield.
DefiningSet build_defining_set(const TowerParams& tw, const TowerMaps& maps, FieldElem c);

// (q^s+1)(q^(s-1)-1) for c = 0, q^(s-1)(q^s+1) otherwise.
std::uint64_t length_closed(std::uint64_t q, std::uint32_t s, bool c_is_zero);

// Builds the generator matrix entry (i,j) = symbol index of Tr(g^i * d_j) and
// checks rank m. Throws std::invalid_argument when D is empty (c = 0, s = 1).
TraceCode build_trace_code(const TowerParams& tw, const TowerMaps& maps, FieldElem c);

// coordinate j = canonical index of Tr_{q^m/q}(b * d_j)
std::vector<std::uint32_t> codeword(const TowerParams& tw, const TowerMaps& maps,
                                    const TraceCode& code, FieldElem b);

// Exact counts from enumerating all q^m codewords. This is the oracle the
// closed-form distribution is checked against.
WeightDistribution weight_distribution(const TowerParams& tw, const TowerMaps& maps,
                                       const TraceCode& code);

// The closed-form two-weight enumerator for the given case. The degenerate
// family (even q, c != 0, s = 1) comes out as two classes with one count 0.
WeightDistribution closed_form_distribution(std::uint64_t q, std::uint32_t s, CCase c_case);

// no zero generator column and no two columns proportional over F_q
bool is_projective(const TowerParams& tw, const TraceCode& code);

// rank over F_q of a matrix of canonical symbol indices
std::uint32_t matrix_rank(const TowerParams& tw,
                          const std::vector<std::vector<std::uint32_t>>& rows);

struct MinimalityResult {
    bool holds = false;        // w_min/w_max > (q-1)/q, compared exactly
    std::uint64_t w_min = 0;
    std::uint64_t w_max = 0;
};

MinimalityResult minimality_check(const WeightDistribution& dist);

}  // namespace twc

#endif

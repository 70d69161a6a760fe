// Additive/multiplicative characters, quadratic Gauss sums and the two
// exponential sums behind the code family: the norm-form sum (which fixes the
// code length) and the weight sum (which fixes the codeword weights). Each sum
// has a brute-force evaluation in Z[zeta_p] and a closed-form counterpart; the
// check suites compare the two over full parameter ranges.

#ifndef TWC_CHARSUMS_HPP
#define TWC_CHARSUMS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "twc/cycvec.hpp"
#include "twc/field_tower.hpp"
#include "twc/tower_maps.hpp"

namespace twc {

// zeta_p^(Tr_{level/p}(a*x)) as a one-hot vector. a = 0 gives the trivial
// character, identically 1.
CycVec additive_char(const TowerParams& tw, FieldElem a, FieldElem x, Level level);

// +1 on nonzero squares, -1 otherwise. Requires odd level size and x != 0.
int quadratic_char(const TowerParams& tw, FieldElem x, Level level);

// psi_j(alpha^k) = exp(2*pi*i*j*k/(size-1)) with alpha the canonical level
// generator (ambient generator raised to the cofactor). Requires x != 0.
std::complex<double> mult_char_numeric(const TowerParams& tw, std::uint64_t j, FieldElem x,
                                       Level level);

// sum over nonzero x of quadratic_char(x)*zeta^(Tr(x)); exact. Its square is
// the rational integer quadratic_char(-1)*size.
CycVec gauss_sum_quadratic(const TowerParams& tw, Level level);

// Closed form of the quadratic Gauss sum over F_{p^e}, p odd:
// (-1)^(e-1)*sqrt(q) when p = 1 mod 4, (-1)^(e-1)*i^e*sqrt(q) when p = 3 mod 4.
std::complex<double> quadratic_gauss_closed(std::uint32_t p, std::uint32_t e);

// sum over all x in the level of zeta^(Tr(b*(a2 x^2 + a1 x + a0))), exact.
// Requires a2 != 0 and b != 0.
CycVec quadratic_poly_sum(const TowerParams& tw, FieldElem a2, FieldElem a1, FieldElem a0,
                          FieldElem b, Level level);

// Closed form of the same sum: for odd level size,
// zeta^(Tr(b*a0 - (b*a1)^2/(4*b*a2))) * eta(b*a2) * G; for even size, it is
// (+-size) when a2 = b*a1^2 and 0 otherwise.
CycVec quadratic_poly_sum_closed(const TowerParams& tw, FieldElem a2, FieldElem a1, FieldElem a0,
                                 FieldElem b, Level level);

// The norm-form sum: sum over y in F_q^*, x in F_{q^m}^* of
// phi(y*c) * phi(y*(Tr_{q^s/q}(a*x^(q^s+1)) + Tr_{q^m/q}(b*x))), phi the
// canonical additive character of F_q. Requires a in F_{q^s}^*, b in F_{q^m},
// c in F_q. The value is always a rational integer; a failed cancellation
// throws.
std::int64_t norm_form_sum_bruteforce(const TowerParams& tw, const TowerMaps& maps, FieldElem a,
                                      FieldElem b, FieldElem c);

// Case-split closed form of the norm-form sum, keyed on
// t = Tr_{q^s/q}(b^(q^s+1)/a) and c.
std::int64_t norm_form_sum_closed(const TowerParams& tw, FieldElem a, FieldElem b, FieldElem c);

// The weight sum: sum over x in F_{q^m}^*, y, z in F_q^* of
// phi(z*c) * phi(y*Tr_{q^m/q}(b*x) + z*Tr_{q^s/q}(x^(q^s+1))). Requires b in
// F_{q^m}^*, c in F_q. Rational-integer check as above.
std::int64_t weight_sum_bruteforce(const TowerParams& tw, const TowerMaps& maps, FieldElem b,
                                   FieldElem c);

// Closed form of the weight sum, keyed on T = Tr_{q^s/q}(b^(q^s+1)). The odd-q
// c != 0 branch is
//   (q-1) - q^s - q^(s+1) * (-1)^(e*(p-1)/2) * eta(-c*T)   when T != 0,
//   (q^s+1)(q-1)                                           when T = 0.
std::int64_t weight_sum_closed(const TowerParams& tw, FieldElem b, FieldElem c);

// Batched evaluator for the full-range equivalence sweeps. Values are exact
// and identical to the per-call brute forces; the per-element histograms and
// the row sums over F_q^* are just computed once instead of per (input, c)
// pair. Not thread-safe: holds scratch buffers.
class CharSumKernel {
  public:
    CharSumKernel(const TowerParams& tw, const TowerMaps& maps);

    // results indexed by the canonical F_q index of c
    std::vector<std::int64_t> norm_form_all_c(FieldElem a, FieldElem b);
    std::vector<std::int64_t> weight_all_c(FieldElem b);

  private:
    const TowerParams& tw_;
    const TowerMaps& maps_;
    std::uint32_t q_;
    std::vector<std::uint32_t> q_add_;     // q x q: canonical index of elem_i + elem_j
    std::vector<CycVec> unit_row_;         // q: sum over y in F_q^* of zeta^(Tr(y*t))
    std::vector<std::uint32_t> row_class_; // q: index into row_reps_
    std::vector<CycVec> row_reps_;
    std::vector<CycVec> rep_products_;     // nc x nc pairwise products
    std::vector<std::int64_t> hist_;       // scratch, q
    std::vector<std::int64_t> hist2_;      // scratch, q x q
    std::vector<std::int64_t> mass_;       // scratch
};

}  // namespace twc

#endif

// Deterministic construction of the field chain F_p < F_q < F_{q^s} < F_{q^m}
// (m = 2s) realized inside a single ambient field F_{p^(e*m)} with log/antilog
// tables. All arithmetic below code length ~2^24 goes through the tables;
// there is no polynomial arithmetic on the hot path.

#ifndef TWC_FIELD_TOWER_HPP
#define TWC_FIELD_TOWER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twc {

// Element of the ambient field. The encoding's base-p digits are the
// coefficients of the residue polynomial, low degree first. 0 and 1 are the
// additive and multiplicative identities.
using FieldElem = std::uint32_t;

enum class Level { Prime, Q, QS, QM };

const char* level_name(Level l);

struct TowerParams {
    std::uint32_t p = 0;  // characteristic
    std::uint32_t e = 0;  // [F_q : F_p]
    std::uint32_t s = 0;
    std::uint32_t m = 0;  // = 2s
    std::uint64_t q = 0;  // p^e

    std::uint32_t ext_degree = 0;   // e*m, degree of the ambient over F_p
    std::uint64_t ambient = 0;      // p^(e*m) = q^m

    // Monic primitive polynomial over F_p defining the ambient field,
    // length ext_degree+1, low degree first, leading coefficient 1. It is the
    // candidate with the smallest value sum(coeff[i]*p^i), so rebuilding with
    // the same (p,e,s) reproduces identical tables everywhere.
    std::vector<std::uint8_t> modulus;

    FieldElem generator = 0;  // residue class of the indeterminate, a primitive element

    std::vector<std::uint32_t> log_table;     // log_table[x] for x != 0
    std::vector<FieldElem> antilog_table;     // antilog_table[t] = generator^t, t in [0, ambient-1)

    std::uint64_t level_size(Level l) const;
    std::uint32_t level_degree(Level l) const;  // over F_p
    // (ambient-1)/(size-1): nonzero x lies in the level iff cofactor | log(x)
    std::uint64_t level_cofactor(Level l) const;
    bool in_level(FieldElem x, Level l) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;  // throws std::domain_error on 0
    FieldElem pow(FieldElem x, std::uint64_t t) const;

    // sum of x^(size(to)^i) over i in [0, [from:to]); additive, lands in `to`
    FieldElem trace(FieldElem x, Level from, Level to) const;
    // x^((size(from)-1)/(size(to)-1)); multiplicative on units, norm(0) = 0
    FieldElem norm(FieldElem x, Level from, Level to) const;

    // Elements of a level sorted ascending by encoding, and the position of an
    // element in that ordering. Indices label the code's symbols, so they must
    // be identical across rebuilds (they are: the tower is deterministic).
    std::vector<FieldElem> subfield_elements(Level l) const;
    std::uint32_t canonical_index(FieldElem x, Level l) const;
    FieldElem element_at(std::uint32_t index, Level l) const;

    std::string modulus_string() const;  // comma-separated, low degree first

  private:
    friend TowerParams build_tower(std::uint32_t, std::uint32_t, std::uint32_t, std::uint64_t);
    std::vector<FieldElem> prime_elems_, q_elems_, qs_elems_;
    void check_nested(Level from, Level to) const;
    void check_member(FieldElem x, Level l) const;
};

constexpr std::uint64_t kDefaultSizeBound = std::uint64_t(1) << 24;

bool is_prime(std::uint64_t v);

// Builds the tower for q = p^e, m = 2s. Deterministic: the modulus is the
// first primitive candidate in increasing encoded order. Throws
// std::invalid_argument for non-prime p, zero e/s, or ambient above the bound.
TowerParams build_tower(std::uint32_t p, std::uint32_t e, std::uint32_t s,
                        std::uint64_t size_bound = kDefaultSizeBound);

}  // namespace twc

#endif

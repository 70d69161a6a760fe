// Flat lookup tables derived from a tower, shared by the enumeration kernels:
// per-element norm to the half-degree subfield, traces down to F_q, canonical
// F_q indices and F_p exponents. Built once per tower and read concurrently.

#ifndef TWC_TOWER_MAPS_HPP
#define TWC_TOWER_MAPS_HPP

#include <cstdint>
#include <vector>

#include "twc/field_tower.hpp"

namespace twc {

struct TowerMaps {
    explicit TowerMaps(const TowerParams& tower);

    const TowerParams& tw;
    std::vector<FieldElem> norm_qs;      // x^(q^s+1) for every ambient x, 0 -> 0
    std::vector<FieldElem> tr_m_to_q;    // Tr from ambient to F_q, every x
    std::vector<FieldElem> tr_s_to_q;    // Tr from F_{q^s} to F_q, valid on QS elements
    std::vector<std::uint32_t> q_index;  // canonical F_q index, q_absent if off-level
    std::vector<std::uint16_t> zeta_exp; // Tr_{q/p}(x) as an exponent of zeta_p, valid on F_q
    std::vector<FieldElem> q_elems;      // F_q sorted ascending

    static constexpr std::uint32_t q_absent = 0xFFFFFFFFu;
};

}  // namespace twc

#endif

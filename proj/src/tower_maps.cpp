#include "twc/tower_maps.hpp"

namespace twc {

TowerMaps::TowerMaps(const TowerParams& tower) : tw(tower) {
    const std::uint64_t n = tw.ambient;
    norm_qs.assign(n, 0);
    tr_m_to_q.assign(n, 0);
    tr_s_to_q.assign(n, 0);
    q_index.assign(n, q_absent);
    zeta_exp.assign(n, 0);
    q_elems = tw.subfield_elements(Level::Q);

    const std::uint64_t order = n - 1;
    const std::uint64_t norm_exp = (n - 1) / (tw.level_size(Level::QS) - 1);
    for (std::uint64_t x = 1; x < n; ++x) {
        norm_qs[x] = tw.antilog_table[(tw.log_table[x] * norm_exp) % order];
        tr_m_to_q[x] = tw.trace(FieldElem(x), Level::QM, Level::Q);
    }
    for (FieldElem x : tw.subfield_elements(Level::QS))
        if (x != 0) tr_s_to_q[x] = tw.trace(x, Level::QS, Level::Q);
    for (std::uint32_t i = 0; i < q_elems.size(); ++i) {
        q_index[q_elems[i]] = i;
        zeta_exp[q_elems[i]] = std::uint16_t(tw.trace(q_elems[i], Level::Q, Level::Prime));
    }
}

}  // namespace twc

#include "twc/code_builder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace twc {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

BigInt bpow(std::uint64_t b, std::uint64_t e) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

std::vector<std::uint64_t> WeightDistribution::nonzero_weights() const {
    std::vector<std::uint64_t> w;
    for (std::uint64_t i = 1; i < counts.size(); ++i)
        if (counts[i] > 0) w.push_back(i);
    return w;
}

std::uint64_t WeightDistribution::min_weight() const {
    for (std::uint64_t i = 1; i < counts.size(); ++i)
        if (counts[i] > 0) return i;
    throw std::invalid_argument("zero code has no minimum weight");
}

BigInt WeightDistribution::power_moment(unsigned r) const {
    BigInt acc = 0;
    for (std::uint64_t j = 1; j < counts.size(); ++j) {
        if (counts[j] == 0) continue;
        BigInt jr = 1;
        for (unsigned t = 0; t < r; ++t) jr *= j;
        acc += jr * counts[j];
    }
    return acc;
}

void WeightDistribution::validate() const {
    if (counts.size() != n + 1) throw std::invalid_argument("weight distribution length mismatch");
    if (counts[0] != 1) throw std::invalid_argument("weight distribution must have A_0 = 1");
    if (total() != bpow(q, k))
        throw std::invalid_argument("weight distribution does not sum to q^k");
}

CCase classify_c_case(const TowerParams& tw, FieldElem c) {
    if (c == 0) return CCase::Zero;
    return tw.p == 2 ? CCase::NonzeroEvenQ : CCase::NonzeroOddQ;
}

const char* c_case_name(CCase c) {
    switch (c) {
        case CCase::Zero: return "zero";
        case CCase::NonzeroEvenQ: return "nonzero-even-q";
        case CCase::NonzeroOddQ: return "nonzero-odd-q";
    }
    return "?";
}

DefiningSet build_defining_set(const TowerParams& tw, const TowerMaps& maps, FieldElem c) {
    if (!tw.in_level(c, Level::Q))
        throw std::invalid_argument("defining set: c must lie in the F_q subfield");
    DefiningSet d;
    d.c = c;
    for (std::uint64_t x = 1; x < tw.ambient; ++x)
        if (tw.add(maps.tr_s_to_q[maps.norm_qs[x]], c) == 0) d.elements.push_back(FieldElem(x));
    return d;  // scan order is ascending by encoding
}

std::uint64_t length_closed(std::uint64_t q, std::uint32_t s, bool c_is_zero) {
    std::uint64_t qs = 1;
    for (std::uint32_t i = 0; i < s; ++i) qs *= q;
    return c_is_zero ? (qs + 1) * (qs / q - 1) : (qs / q) * (qs + 1);
}

TraceCode build_trace_code(const TowerParams& tw, const TowerMaps& maps, FieldElem c) {
    TraceCode code;
    code.dset = build_defining_set(tw, maps, c);
    if (code.dset.elements.empty())
        throw std::invalid_argument("empty defining set: c = 0 requires s > 1");
    code.n = std::uint32_t(code.dset.elements.size());
    code.k = tw.m;
    code.basis.resize(tw.m);
    for (std::uint32_t i = 0; i < tw.m; ++i) code.basis[i] = tw.antilog_table[i];  // g^i
    code.gen.assign(tw.m, std::vector<std::uint32_t>(code.n));
    for (std::uint32_t i = 0; i < tw.m; ++i)
        for (std::uint32_t j = 0; j < code.n; ++j)
            code.gen[i][j] =
                maps.q_index[maps.tr_m_to_q[tw.mul(code.basis[i], code.dset.elements[j])]];
    if (matrix_rank(tw, code.gen) != tw.m)
        throw std::runtime_error("trace code generator matrix is rank deficient");
    return code;
}

std::vector<std::uint32_t> codeword(const TowerParams& tw, const TowerMaps& maps,
                                    const TraceCode& code, FieldElem b) {
    std::vector<std::uint32_t> word(code.n);
    for (std::uint32_t j = 0; j < code.n; ++j)
        word[j] = maps.q_index[maps.tr_m_to_q[tw.mul(b, code.dset.elements[j])]];
    return word;
}

WeightDistribution weight_distribution(const TowerParams& tw, const TowerMaps& maps,
                                       const TraceCode& code) {
    WeightDistribution dist;
    dist.n = code.n;
    dist.q = tw.q;
    dist.k = code.k;
    dist.counts.assign(code.n + 1, 0);

    const std::uint64_t order = tw.ambient - 1;
    std::vector<std::uint32_t> dlog(code.n);
    for (std::uint32_t j = 0; j < code.n; ++j) dlog[j] = tw.log_table[code.dset.elements[j]];

    dist.counts[0] += 1;  // b = 0
    for (std::uint64_t b = 1; b < tw.ambient; ++b) {
        const std::uint64_t lb = tw.log_table[b];
        std::uint32_t w = 0;
        for (std::uint32_t j = 0; j < code.n; ++j) {
            std::uint64_t t = lb + dlog[j];
            if (t >= order) t -= order;
            w += maps.tr_m_to_q[tw.antilog_table[t]] != 0;
        }
        dist.counts[w] += 1;
    }
    return dist;
}

WeightDistribution closed_form_distribution(std::uint64_t q, std::uint32_t s, CCase c_case) {
    if (c_case == CCase::Zero && s < 2)
        throw std::invalid_argument("closed-form distribution: c = 0 requires s > 1");
    const std::uint64_t qs = ipow(q, s);
    const std::uint64_t qs1 = ipow(q, s - 1);

    WeightDistribution dist;
    dist.q = q;
    dist.k = 2 * s;
    dist.n = length_closed(q, s, c_case == CCase::Zero);
    dist.counts.assign(dist.n + 1, 0);
    dist.counts[0] = 1;

    switch (c_case) {
        case CCase::Zero:
            dist.counts[(qs1 * qs1 - qs1) * (q - 1)] = BigInt(qs + 1) * (qs - qs1);
            dist.counts[qs1 * qs1 * (q - 1)] = BigInt(qs + 1) * (qs1 - 1);
            break;
        case CCase::NonzeroEvenQ:
            dist.counts[qs1 * qs1 * (q - 1)] = BigInt(qs + 1) * (qs1 - 1);
            dist.counts[qs1 * qs1 * (q - 1) + qs1] = BigInt(qs + 1) * (qs - qs1);
            break;
        case CCase::NonzeroOddQ:
            dist.counts[qs1 * qs1 * (q - 1)] = BigInt(qs + 1) * (qs + qs1 - 2) / 2;
            dist.counts[qs1 * qs1 * (q - 1) + 2 * qs1] = BigInt(qs1) * (q - 1) * (qs + 1) / 2;
            break;
    }
    return dist;
}

bool is_projective(const TowerParams& tw, const TraceCode& code) {
    const auto q_elems = tw.subfield_elements(Level::Q);
    std::set<std::vector<FieldElem>> classes;
    for (std::uint32_t j = 0; j < code.n; ++j) {
        std::vector<FieldElem> col(code.k);
        for (std::uint32_t i = 0; i < code.k; ++i) col[i] = q_elems[code.gen[i][j]];
        std::uint32_t lead = 0;
        while (lead < code.k && col[lead] == 0) ++lead;
        if (lead == code.k) return false;  // zero column
        FieldElem scale = tw.inv(col[lead]);
        for (auto& v : col) v = tw.mul(v, scale);
        if (!classes.insert(col).second) return false;  // proportional pair
    }
    return true;
}

std::uint32_t matrix_rank(const TowerParams& tw,
                          const std::vector<std::vector<std::uint32_t>>& rows) {
    if (rows.empty()) return 0;
    const auto q_elems = tw.subfield_elements(Level::Q);
    std::vector<std::vector<FieldElem>> a(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        a[i].resize(rows[i].size());
        for (std::size_t j = 0; j < rows[i].size(); ++j) a[i][j] = q_elems[rows[i][j]];
    }
    const std::size_t ncols = a[0].size();
    std::uint32_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[rank], a[pivot]);
        FieldElem scale = tw.inv(a[rank][col]);
        for (std::size_t j = col; j < ncols; ++j) a[rank][j] = tw.mul(a[rank][j], scale);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            FieldElem f = a[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                a[i][j] = tw.sub(a[i][j], tw.mul(f, a[rank][j]));
        }
        ++rank;
    }
    return rank;
}

MinimalityResult minimality_check(const WeightDistribution& dist) {
    auto weights = dist.nonzero_weights();
    if (weights.empty()) throw std::invalid_argument("minimality check on the zero code");
    MinimalityResult r;
    r.w_min = weights.front();
    r.w_max = weights.back();
    r.holds = r.w_min * dist.q > r.w_max * (dist.q - 1);
    return r;
}

}  // namespace twc

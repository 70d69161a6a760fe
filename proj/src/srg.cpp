#include "twc/srg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace twc {

bool srg_feasible(const SRGParams& p) {
    // guard: lambda <= K-1 and mu <= K in any simple graph
    if (p.lambda < 0 || p.mu < 0) return false;
    __int128 lhs = __int128(p.degree) * (std::int64_t(p.degree) - p.lambda - 1);
    __int128 rhs = __int128(p.n_vertices - p.degree - 1) * p.mu;
    return lhs == rhs;
}

PointGraph::PointGraph(std::uint64_t n_vertices)
    : n_(n_vertices), words_((n_vertices + 63) / 64), bits_(words_ * n_vertices, 0) {
    if (n_vertices == 0) throw std::invalid_argument("empty vertex set");
    if (n_vertices > (std::uint64_t(1) << 15))
        throw std::invalid_argument("adjacency matrix would need more than 128 MiB; refusing");
}

void PointGraph::add_edge(std::uint64_t u, std::uint64_t v) {
    if (u == v) throw std::invalid_argument("self loop");
    bits_[u * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t(1) << (u % 64);
}

bool PointGraph::adjacent(std::uint64_t u, std::uint64_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
}

std::uint64_t PointGraph::degree(std::uint64_t u) const {
    std::uint64_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[u * words_ + w]);
    return d;
}

std::uint64_t PointGraph::common_neighbors(std::uint64_t u, std::uint64_t v) const {
    const std::uint64_t* ru = &bits_[u * words_];
    const std::uint64_t* rv = &bits_[v * words_];
    std::uint64_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
    return c;
}

bool PointGraph::connected() const {
    std::vector<std::uint8_t> seen(n_, 0);
    std::vector<std::uint64_t> stack{0};
    seen[0] = 1;
    std::uint64_t visited = 1;
    while (!stack.empty()) {
        std::uint64_t u = stack.back();
        stack.pop_back();
        const std::uint64_t* row = &bits_[u * words_];
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bitsw = row[w];
            while (bitsw) {
                std::uint64_t v = w * 64 + std::countr_zero(bitsw);
                bitsw &= bitsw - 1;
                if (!seen[v]) {
                    seen[v] = 1;
                    ++visited;
                    stack.push_back(v);
                }
            }
        }
    }
    return visited == n_;
}

std::vector<FieldElem> omega_set(const TowerParams& tw, const TraceCode& code) {
    if (!is_projective(tw, code))
        throw std::invalid_argument("omega set requires a projective code");
    std::vector<FieldElem> omega;
    omega.reserve(code.dset.elements.size() * (tw.q - 1));
    for (FieldElem lambda : tw.subfield_elements(Level::Q)) {
        if (lambda == 0) continue;
        for (FieldElem d : code.dset.elements) omega.push_back(tw.mul(lambda, d));
    }
    std::sort(omega.begin(), omega.end());
    if (std::adjacent_find(omega.begin(), omega.end()) != omega.end())
        throw std::runtime_error("omega classes collide despite projectivity");
    return omega;
}

PointGraph build_graph(const TowerParams& tw, const std::vector<FieldElem>& omega) {
    if (omega.empty()) throw std::invalid_argument("empty omega set");
    for (FieldElem w : omega) {
        if (w == 0) throw std::invalid_argument("omega must not contain 0");
        if (!std::binary_search(omega.begin(), omega.end(), tw.neg(w)))
            throw std::invalid_argument("omega is not closed under negation");
    }
    PointGraph g(tw.ambient);
    for (std::uint64_t u = 0; u < tw.ambient; ++u)
        for (FieldElem w : omega) {
            std::uint64_t v = tw.sub(FieldElem(u), w);  // u - v = w
            if (v > u) g.add_edge(u, v);
        }
    return g;
}

SrgCountResult srg_count(const PointGraph& g) {
    SrgCountResult r;
    const std::uint64_t n = g.size();
    const std::uint64_t k = g.degree(0);
    if (k == 0 || k >= n - 1) {
        r.reason = k == 0 ? "empty graph" : "complete graph";
        return r;
    }
    for (std::uint64_t u = 1; u < n; ++u)
        if (g.degree(u) != k) {
            r.reason = "not regular";
            r.witness_u = 0;
            r.witness_v = u;
            return r;
        }
    if (!g.connected()) {
        r.reason = "not connected";
        return r;
    }
    std::int64_t lambda = -1, mu = -1;
    for (std::uint64_t u = 0; u < n; ++u)
        for (std::uint64_t v = u + 1; v < n; ++v) {
            std::int64_t c = std::int64_t(g.common_neighbors(u, v));
            std::int64_t& slot = g.adjacent(u, v) ? lambda : mu;
            if (slot < 0) slot = c;
            if (slot != c) {
                r.reason = "common-neighbor count is not constant on a class";
                r.witness_u = u;
                r.witness_v = v;
                return r;
            }
        }
    r.is_srg = true;
    r.params = {n, k, lambda, mu};
    return r;
}

SRGParams srg_predicted_generic(std::uint64_t n, std::uint64_t q, std::uint32_t k,
                                std::uint64_t w1, std::uint64_t w2) {
    SRGParams p;
    p.n_vertices = 1;
    for (std::uint32_t i = 0; i < k; ++i) p.n_vertices *= q;
    p.degree = n * (q - 1);
    const std::int64_t bigk = std::int64_t(p.degree);
    const std::int64_t ws = std::int64_t(q) * std::int64_t(w1 + w2);
    const std::int64_t wp = std::int64_t(q) * std::int64_t(q) * std::int64_t(w1) * std::int64_t(w2);
    p.lambda = bigk * bigk + 3 * bigk - ws - bigk * ws + wp;
    p.mu = bigk * bigk + bigk - bigk * ws + wp;
    if (p.lambda < 0 || p.mu < 0)
        throw std::invalid_argument("predicted graph parameters are negative");
    if (!srg_feasible(p))
        throw std::invalid_argument("predicted graph parameters violate the feasibility identity");
    return p;
}

SRGParams srg_even_family_params(std::uint64_t q, std::uint32_t s) {
    if (q % 2 != 0) throw std::invalid_argument("the graph family needs even q");
    std::uint64_t qs = 1;
    for (std::uint32_t i = 0; i < s; ++i) qs *= q;
    const std::uint64_t qs1 = qs / q;
    SRGParams p;
    p.n_vertices = qs * qs;
    p.degree = qs1 * (qs + 1) * (q - 1);
    p.lambda = std::int64_t(qs1) * std::int64_t(2 * q - 3 + qs1 * (q - 1) * (q - 1));
    p.mu = std::int64_t((q - 1) * qs1) * std::int64_t(qs - qs1 + 1);
    if (!srg_feasible(p))
        throw std::invalid_argument("family graph parameters violate the feasibility identity");
    return p;
}

}  // namespace twc

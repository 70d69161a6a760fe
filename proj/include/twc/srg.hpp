// The point graph on F_{q^m} whose edges are the differences lying in
// Omega = F_q^* . D, counted common-neighbor parameters, and the two closed
// parameter forms they are checked against.

#ifndef TWC_SRG_HPP
#define TWC_SRG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "twc/code_builder.hpp"
#include "twc/field_tower.hpp"

namespace twc {

struct SRGParams {
    std::uint64_t n_vertices = 0;  // N
    std::uint64_t degree = 0;      // K
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    bool operator==(const SRGParams&) const = default;
};

// K(K - lambda - 1) = (N - K - 1) mu
bool srg_feasible(const SRGParams& p);

// Adjacency as packed bit rows; vertices are ambient field encodings.
class PointGraph {
  public:
    explicit PointGraph(std::uint64_t n_vertices);

    std::uint64_t size() const { return n_; }
    void add_edge(std::uint64_t u, std::uint64_t v);
    bool adjacent(std::uint64_t u, std::uint64_t v) const;
    std::uint64_t degree(std::uint64_t u) const;
    std::uint64_t common_neighbors(std::uint64_t u, std::uint64_t v) const;
    bool connected() const;

  private:
    std::uint64_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Omega = { l * d : d in D, l in F_q^* }, sorted. Requires a projective code;
// throws otherwise (a non-projective code cannot give a strongly regular
// graph, and the scaled classes would collide).
std::vector<FieldElem> omega_set(const TowerParams& tw, const TraceCode& code);

// u ~ v iff u - v lies in omega. Requires 0 not in omega and omega = -omega.
PointGraph build_graph(const TowerParams& tw, const std::vector<FieldElem>& omega);

struct SrgCountResult {
    bool is_srg = false;
    SRGParams params;
    std::string reason;               // set when not strongly regular
    std::uint64_t witness_u = 0, witness_v = 0;
};

// Exhaustive common-neighbor counting over all vertex pairs. Complete and
// empty graphs are rejected up front, disconnected graphs are reported.
SrgCountResult srg_count(const PointGraph& g);

// Parameters implied by a projective two-weight [n, k] code with nonzero
// weights w1, w2. Throws if lambda or mu comes out negative or infeasible.
SRGParams srg_predicted_generic(std::uint64_t n, std::uint64_t q, std::uint32_t k,
                                std::uint64_t w1, std::uint64_t w2);

// The even-q family: N = q^2s, K = q^(s-1)(q^s+1)(q-1),
// lambda = q^(s-1)(2q - 3 + q^(s-1)(q-1)^2), mu = (q-1)q^(s-1)(q^s - q^(s-1) + 1).
SRGParams srg_even_family_params(std::uint64_t q, std::uint32_t s);

}  // namespace twc

#endif

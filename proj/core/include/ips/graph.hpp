#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ips/bitrows.hpp"
#include "ips/plane.hpp"

namespace ips {

// Graph on all of F_q^2; two distinct points are adjacent iff they are at
// integral distance. A Cayley graph of (F_q^2, +), so vertex transitive.
class IntegralGraph {
public:
    static constexpr std::uint32_t kMaxQ = 128;

    static IntegralGraph build(const FieldCtx& F);

    const FieldCtx& field() const { return *field_; }
    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t degree(PointCode v) const { return adj_.row_popcount(v); }
    bool adjacent(PointCode u, PointCode v) const { return adj_.test(u, v); }
    const BitRows& rows() const { return adj_; }

private:
    const FieldCtx* field_ = nullptr;
    BitRows adj_;
};

struct SrgParams {
    std::uint64_t v = 0, k = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct NotStronglyRegular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters verified by exhaustive common-neighbour counting over every
// vertex pair; throws NotStronglyRegular when any pair breaks regularity.
SrgParams srg_params(const IntegralGraph& g);

// Closed forms:
//   q = 3 mod 4: (q^2, (q^2-1)/2, (q^2-1)/4 - 1, (q^2-1)/4)
//   q = 1 mod 4: (q^2, (q-1)(q+3)/2, (q+1)(q+3)/4 - 3, (q+1)(q+3)/4)
SrgParams srg_expected(const FieldCtx& F);

// Complement graph parameters, counted; q = 1 mod 4 only.
// Closed form (q^2, (q-1)^2/2, (q-1)(q-3)/4 + 1, (q-1)(q-3)/4).
SrgParams complement_params(const IntegralGraph& g);
SrgParams complement_expected(const FieldCtx& F);

// For q = 3 mod 4 the graph coincides with Paley(q^2) under the identity
// map F_q^2 = F_q[i]: checks x^2 + y^2 square in F_q iff x + yi square in
// F_q[i], pointwise over all q^2 points.
bool verify_paley_iso(const FieldCtx& F);

// Induced subgraph on the integral neighbourhood of the origin. Maximal
// cliques here, each with the origin added back, are exactly the
// inclusion-maximal integral point sets containing (0,0).
struct LocalGraph {
    std::vector<PointCode> vertices; // sorted plane codes
    BitRows adj;                     // indexed by position in `vertices`
    std::size_t size() const { return vertices.size(); }
};

LocalGraph local_graph(const IntegralGraph& g);

} // namespace ips

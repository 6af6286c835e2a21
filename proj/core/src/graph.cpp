#include "ips/graph.hpp"

#include <string>

namespace ips {

IntegralGraph IntegralGraph::build(const FieldCtx& F) {
    if (F.q() > kMaxQ) throw std::invalid_argument("q too large for an explicit graph");
    std::uint32_t q = F.q();
    std::size_t n = std::size_t{q} * q;

    // Difference table: is dx^2 + dy^2 a square?
    std::vector<std::uint8_t> ok(n);
    for (Fe dx = 0; dx < q; ++dx)
        for (Fe dy = 0; dy < q; ++dy)
            ok[dx * q + dy] = F.is_square(F.add(F.sq(dx), F.sq(dy)));

    IntegralGraph g;
    g.field_ = &F;
    g.adj_ = BitRows(n);
    for (Fe x1 = 0; x1 < q; ++x1)
        for (Fe y1 = 0; y1 < q; ++y1) {
            PointCode u = x1 * q + y1;
            for (Fe x2 = 0; x2 < q; ++x2) {
                Fe dx = F.sub(x1, x2);
                for (Fe y2 = 0; y2 < q; ++y2) {
                    PointCode v = x2 * q + y2;
                    if (u != v && ok[dx * q + F.sub(y1, y2)]) g.adj_.set(u, v);
                }
            }
        }
    return g;
}

namespace {

SrgParams count_params(const BitRows& adj) {
    std::size_t n = adj.size();
    if (n < 2) throw NotStronglyRegular("graph too small");
    std::size_t k = adj.row_popcount(0);
    for (std::size_t v = 1; v < n; ++v)
        if (adj.row_popcount(v) != k)
            throw NotStronglyRegular("graph is not regular");
    if (k == n - 1) throw NotStronglyRegular("complete graph: mu undefined");
    if (k == 0) throw NotStronglyRegular("empty graph: lambda undefined");

    std::int64_t lambda = -1, mu = -1;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            std::size_t c = adj.and_popcount(u, v);
            if (adj.test(u, v)) {
                if (lambda < 0) lambda = static_cast<std::int64_t>(c);
                else if (lambda != static_cast<std::int64_t>(c))
                    throw NotStronglyRegular("lambda not constant: pair (" +
                                             std::to_string(u) + "," + std::to_string(v) + ")");
            } else {
                if (mu < 0) mu = static_cast<std::int64_t>(c);
                else if (mu != static_cast<std::int64_t>(c))
                    throw NotStronglyRegular("mu not constant: pair (" +
                                             std::to_string(u) + "," + std::to_string(v) + ")");
            }
        }
    }
    SrgParams out{n, k, std::uint64_t(lambda), std::uint64_t(mu)};
    if (out.k * (out.k - out.lambda - 1) != (out.v - out.k - 1) * out.mu)
        throw NotStronglyRegular("parameter identity violated");
    return out;
}

} // namespace

SrgParams srg_params(const IntegralGraph& g) { return count_params(g.rows()); }

SrgParams srg_expected(const FieldCtx& F) {
    std::uint64_t q = F.q();
    if (F.q_mod4() == 3)
        return {q * q, (q * q - 1) / 2, (q * q - 1) / 4 - 1, (q * q - 1) / 4};
    if (F.q_mod4() == 1)
        return {q * q, (q - 1) * (q + 3) / 2, (q + 1) * (q + 3) / 4 - 3, (q + 1) * (q + 3) / 4};
    throw std::invalid_argument("no closed form for even q");
}

SrgParams complement_params(const IntegralGraph& g) {
    const FieldCtx& F = g.field();
    if (F.q_mod4() != 1) throw std::invalid_argument("complement parameters need q = 1 mod 4");
    std::size_t n = g.vertex_count();
    BitRows comp(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && !g.adjacent(u, v)) comp.set(u, v);
    return count_params(comp);
}

SrgParams complement_expected(const FieldCtx& F) {
    std::uint64_t q = F.q();
    if (F.q_mod4() != 1) throw std::invalid_argument("complement parameters need q = 1 mod 4");
    return {q * q, (q - 1) * (q - 1) / 2, (q - 1) * (q - 3) / 4 + 1, (q - 1) * (q - 3) / 4};
}

bool verify_paley_iso(const FieldCtx& F) {
    if (F.q_mod4() != 3) throw std::invalid_argument("Paley comparison needs q = 3 mod 4");
    std::uint32_t q = F.q();
    std::size_t n = std::size_t{q} * q;

    // Squares of F_q[i] = F_{q^2}, by enumeration.
    std::vector<std::uint8_t> sq(n, 0);
    for (Fe x = 0; x < q; ++x)
        for (Fe y = 0; y < q; ++y) {
            Gauss z{x, y};
            sq[gauss_code(F, gmul(F, z, z))] = 1;
        }
    std::size_t total = 0;
    for (auto b : sq) total += b;
    if (total != (n + 1) / 2) throw std::logic_error("square count of F_{q^2} is off");

    for (Fe x = 0; x < q; ++x)
        for (Fe y = 0; y < q; ++y) {
            bool m = F.is_square(F.add(F.sq(x), F.sq(y)));
            if (m != static_cast<bool>(sq[x * q + y])) return false;
        }
    return true;
}

LocalGraph local_graph(const IntegralGraph& g) {
    LocalGraph lg;
    std::size_t n = g.vertex_count();
    for (std::size_t v = 1; v < n; ++v)
        if (g.adjacent(0, v)) lg.vertices.push_back(static_cast<PointCode>(v));
    lg.adj = BitRows(lg.vertices.size());
    for (std::size_t i = 0; i < lg.vertices.size(); ++i)
        for (std::size_t j = 0; j < lg.vertices.size(); ++j)
            if (i != j && g.adjacent(lg.vertices[i], lg.vertices[j])) lg.adj.set(i, j);
    return lg;
}

} // namespace ips

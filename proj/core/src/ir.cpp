#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "ips/symmetry.hpp"

namespace ips {
namespace {

// Ordered partition of the vertex set. Cells keep their discovery order;
// refinement splits in place, ordered by neighbour count, so two sides of
// an isomorphism search stay structurally aligned.
struct Partition {
    std::vector<std::vector<std::uint32_t>> cells;

    bool discrete() const {
        for (const auto& c : cells)
            if (c.size() > 1) return false;
        return true;
    }
};

class IrEngine {
public:
    explicit IrEngine(const BitRows& adj) : adj_(adj), n_(adj.size()) {}

    GraphAutomorphisms run() {
        Partition base;
        base.cells.push_back(std::vector<std::uint32_t>(n_));
        std::iota(base.cells[0].begin(), base.cells[0].end(), 0);
        refine(base);
        GraphAutomorphisms out;
        out.order = order_of(base, out.generators);
        return out;
    }

private:
    std::size_t neighbours_in(std::uint32_t v, const std::vector<std::uint32_t>& cell) const {
        std::size_t c = 0;
        for (std::uint32_t u : cell) c += adj_.test(v, u);
        return c;
    }

    // 1-WL refinement to an equitable partition. Returns false when run in
    // lockstep mode and the two partitions split differently.
    bool refine(Partition& p, Partition* q = nullptr) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < p.cells.size(); ++s) {
                for (std::size_t d = 0; d < p.cells.size(); ++d) {
                    if (p.cells[d].size() <= 1) continue;
                    auto split_one = [&](Partition& part) {
                        std::vector<std::pair<std::size_t, std::uint32_t>> keyed;
                        keyed.reserve(part.cells[d].size());
                        for (std::uint32_t v : part.cells[d])
                            keyed.emplace_back(neighbours_in(v, part.cells[s]), v);
                        std::stable_sort(keyed.begin(), keyed.end(),
                                         [](const auto& a, const auto& b) { return a.first < b.first; });
                        return keyed;
                    };
                    auto ka = split_one(p);
                    std::vector<std::pair<std::size_t, std::uint32_t>> kb;
                    if (q) {
                        if (q->cells[d].size() != p.cells[d].size()) return false;
                        kb = split_one(*q);
                        for (std::size_t i = 0; i < ka.size(); ++i)
                            if (ka[i].first != kb[i].first) return false;
                    }
                    bool splits = false;
                    for (std::size_t i = 1; i < ka.size(); ++i)
                        if (ka[i].first != ka[0].first) splits = true;
                    if (!splits) continue;

                    auto replace = [&](Partition& part, const auto& keyed, std::size_t at) {
                        std::vector<std::vector<std::uint32_t>> frags;
                        for (std::size_t i = 0; i < keyed.size(); ++i) {
                            if (i == 0 || keyed[i].first != keyed[i - 1].first)
                                frags.emplace_back();
                            frags.back().push_back(keyed[i].second);
                        }
                        part.cells.erase(part.cells.begin() + at);
                        part.cells.insert(part.cells.begin() + at,
                                          std::make_move_iterator(frags.begin()),
                                          std::make_move_iterator(frags.end()));
                    };
                    replace(p, ka, d);
                    if (q) replace(*q, kb, d);
                    changed = true;
                }
                if (changed) break; // cell indices shifted; restart pass
            }
        }
        return true;
    }

    static std::size_t target_cell(const Partition& p) {
        std::size_t best = p.cells.size();
        std::size_t best_size = 1;
        for (std::size_t i = 0; i < p.cells.size(); ++i)
            if (p.cells[i].size() > best_size) {
                best_size = p.cells[i].size();
                best = i;
            }
        return best;
    }

    static Partition individualized(const Partition& p, std::size_t cell, std::uint32_t v) {
        Partition out = p;
        auto& c = out.cells[cell];
        c.erase(std::find(c.begin(), c.end(), v));
        out.cells.insert(out.cells.begin() + cell, {v});
        return out;
    }

    // Does any automorphism respect pi and map the source individualization
    // onto the target one? Both partitions refine in lockstep.
    std::optional<std::vector<std::uint32_t>> iso_search(Partition a, Partition b) {
        if (!refine(a, &b)) return std::nullopt;
        if (a.discrete()) {
            std::vector<std::uint32_t> perm(n_);
            for (std::size_t i = 0; i < a.cells.size(); ++i)
                perm[a.cells[i][0]] = b.cells[i][0];
            for (std::uint32_t u = 0; u < n_; ++u)
                for (std::uint32_t w = u + 1; w < n_; ++w)
                    if (adj_.test(u, w) != adj_.test(perm[u], perm[w])) return std::nullopt;
            return perm;
        }
        std::size_t cell = target_cell(a);
        std::uint32_t v = a.cells[cell][0];
        for (std::uint32_t u : b.cells[cell]) {
            auto res = iso_search(individualized(a, cell, v), individualized(b, cell, u));
            if (res) return res;
        }
        return std::nullopt;
    }

    struct Dsu {
        std::vector<std::uint32_t> parent;
        explicit Dsu(std::size_t n) : parent(n) {
            std::iota(parent.begin(), parent.end(), 0);
        }
        std::uint32_t find(std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        }
        void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
    };

    std::uint64_t order_of(Partition p, std::vector<std::vector<std::uint32_t>>& gens) {
        refine(p);
        if (p.discrete()) return 1;
        std::size_t cell = target_cell(p);
        std::uint32_t v = p.cells[cell][0];

        // Orbit of v inside its cell. Only automorphisms discovered at this
        // level respect the current individualization prefix, so the union
        // find starts empty and grows with the witnesses found here.
        std::uint64_t orbit = 1;
        Dsu dsu(n_);
        for (std::uint32_t u : p.cells[cell]) {
            if (u == v) continue;
            if (dsu.find(u) == dsu.find(v)) {
                ++orbit;
                continue;
            }
            auto g = iso_search(individualized(p, cell, v), individualized(p, cell, u));
            if (g) {
                ++orbit;
                for (std::uint32_t x = 0; x < n_; ++x) dsu.unite(x, (*g)[x]);
                gens.push_back(std::move(*g));
            }
        }
        std::uint64_t stab = order_of(individualized(p, cell, v), gens);
        return orbit * stab;
    }

    const BitRows& adj_;
    std::size_t n_;
};

} // namespace

GraphAutomorphisms graph_automorphisms(const BitRows& adj) {
    return IrEngine(adj).run();
}

} // namespace ips

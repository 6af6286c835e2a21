#include "ips/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace ips {

std::vector<PointCode> extension_candidates(const IntegralGraph& g, const PointSet& P) {
    if (!integral_set(P)) throw std::invalid_argument("point set is not integral");
    std::size_t n = g.vertex_count();
    BitVec cand(n);
    cand.set_all();
    for (PointCode c : P.codes()) cand.and_with(g.rows().row(c));
    std::vector<PointCode> out;
    cand.for_each([&](std::size_t v) { out.push_back(static_cast<PointCode>(v)); });
    if (P.empty()) {
        out.resize(n);
        for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<PointCode>(v);
    }
    return out;
}

bool is_maximal(const IntegralGraph& g, const PointSet& P) {
    if (P.empty()) return false;
    return extension_candidates(g, P).empty();
}

namespace {

void bron_kerbosch(const LocalGraph& lg, BitVec& R, BitVec P, BitVec X,
                   std::size_t r_count, std::size_t floor,
                   const std::function<void(const std::vector<std::uint32_t>&)>& sink) {
    if (P.empty() && X.empty()) {
        if (r_count >= floor) {
            std::vector<std::uint32_t> clique;
            clique.reserve(r_count);
            R.for_each([&](std::size_t v) { clique.push_back(static_cast<std::uint32_t>(v)); });
            sink(clique);
        }
        return;
    }
    if (r_count + P.count() < floor) return;

    // pivot: vertex of P u X with most neighbours in P
    std::size_t pivot = 0, best = 0;
    bool have = false;
    auto consider = [&](std::size_t v) {
        BitVec t = P;
        t.and_with(lg.adj.row(v));
        std::size_t c = t.count();
        if (!have || c > best) {
            have = true;
            best = c;
            pivot = v;
        }
    };
    P.for_each(consider);
    X.for_each(consider);

    BitVec branch = P;
    if (have) {
        BitVec masked = P;
        std::vector<std::uint64_t> pm(lg.adj.row(pivot).begin(), lg.adj.row(pivot).end());
        for (auto& w : pm) w = ~w;
        masked.and_with(std::span<const std::uint64_t>(pm));
        branch = masked;
    }
    std::vector<std::uint32_t> verts;
    branch.for_each([&](std::size_t v) { verts.push_back(static_cast<std::uint32_t>(v)); });
    for (std::uint32_t v : verts) {
        BitVec P2 = P, X2 = X;
        P2.and_with(lg.adj.row(v));
        X2.and_with(lg.adj.row(v));
        R.set(v);
        bron_kerbosch(lg, R, std::move(P2), std::move(X2), r_count + 1, floor, sink);
        R.clear(v);
        P.clear(v);
        X.set(v);
    }
}

} // namespace

void enum_maximal_cliques(const LocalGraph& lg, std::size_t size_floor,
                          const std::function<void(const std::vector<std::uint32_t>&)>& sink) {
    std::size_t n = lg.size();
    BitVec R(n), P(n), X(n);
    for (std::size_t v = 0; v < n; ++v) P.set(v);
    bron_kerbosch(lg, R, std::move(P), std::move(X), 0, size_floor, sink);
}

// ---------------------------------------------------------------------------
// isomorph-free classification

namespace {

struct SearchCtx {
    const IntegralGraph& g;
    const PermGroup& G;
    std::size_t n;
    std::chrono::steady_clock::time_point deadline;
    std::atomic<bool> expired{false};

    void check_budget() {
        if (expired.load(std::memory_order_relaxed)) throw BudgetExceeded("classification budget exhausted");
        if (std::chrono::steady_clock::now() > deadline) {
            expired.store(true, std::memory_order_relaxed);
            throw BudgetExceeded("classification budget exhausted");
        }
    }
};

struct Node {
    std::vector<std::uint32_t> codes; // sorted, begins with 0
    BitVec cand;                      // common integral extensions
};

// Children of a node: extend by candidates above the current maximum and
// keep exactly the canonical representatives.
template <class Fn>
void expand(SearchCtx& sc, const Node& node, Fn&& visit) {
    std::uint32_t maxc = node.codes.back();
    std::vector<std::uint32_t> next;
    node.cand.for_each([&](std::size_t v) {
        if (v > maxc) next.push_back(static_cast<std::uint32_t>(v));
    });
    for (std::uint32_t x : next) {
        Node child;
        child.codes = node.codes;
        child.codes.push_back(x);
        if (!is_canonical_rep(sc.G, child.codes)) continue;
        child.cand = node.cand;
        child.cand.and_with(sc.g.rows().row(x));
        visit(std::move(child));
    }
}

void record_leaf(const PermGroup& G, const std::vector<std::uint32_t>& codes,
                 std::vector<ClassRecord>& out) {
    PointSet rep(G.field(), codes);
    std::uint64_t stab = aut_order_of_set(G, rep);
    if (G.order() % stab) throw std::logic_error("stabiliser order does not divide group order");
    out.push_back({codes, stab, G.order() / stab});
}

void dfs(SearchCtx& sc, Node node, std::vector<ClassRecord>& out) {
    sc.check_budget();
    if (node.cand.empty()) {
        record_leaf(sc.G, node.codes, out);
        return;
    }
    expand(sc, node, [&](Node child) { dfs(sc, std::move(child), out); });
}

} // namespace

ClassifyResult classify(const FieldCtx& F, const IntegralGraph& g, const PermGroup& G,
                        const ClassifyOptions& opt) {
    if (F.even()) throw std::invalid_argument("classify handles odd q; use classify_even");
    if (F.q() > opt.max_q) throw std::invalid_argument("q exceeds the classification bound");

    SearchCtx sc{g, G, g.vertex_count(),
                 std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(opt.budget_seconds))};

    Node root;
    root.codes = {0};
    root.cand = BitVec(sc.n);
    root.cand.set_all();
    root.cand.clear(0);
    root.cand.and_with(g.rows().row(0));

    // Serial expansion to a small frontier, then one task per subtree.
    std::vector<Node> frontier;
    std::vector<ClassRecord> found;
    std::vector<Node> level{std::move(root)};
    const std::size_t kFrontierDepth = 3;
    for (std::size_t depth = 1; depth < kFrontierDepth; ++depth) {
        std::vector<Node> next;
        for (Node& nd : level) {
            if (nd.cand.empty()) {
                record_leaf(G, nd.codes, found);
                continue;
            }
            expand(sc, nd, [&](Node child) { next.push_back(std::move(child)); });
        }
        level = std::move(next);
    }
    frontier = std::move(level);

    unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<std::size_t>(threads, std::max<std::size_t>(frontier.size(), 1));

    std::vector<std::vector<ClassRecord>> results(frontier.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= frontier.size() || failed.load()) return;
                try {
                    dfs(sc, std::move(frontier[i]), results[i]);
                } catch (const BudgetExceeded&) {
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failed.load() || sc.expired.load()) throw BudgetExceeded("classification budget exhausted");

    for (auto& part : results)
        for (auto& r : part) found.push_back(std::move(r));

    std::sort(found.begin(), found.end(), [](const ClassRecord& a, const ClassRecord& b) {
        if (a.rep.size() != b.rep.size()) return a.rep.size() < b.rep.size();
        return a.rep < b.rep;
    });

    ClassifyResult out;
    out.row.q = F.q();
    for (const auto& r : found) ++out.row.counts[r.rep.size()];
    out.classes = std::move(found);
    return out;
}

ClassifyResult classify(const FieldCtx& F, const ClassifyOptions& opt) {
    IntegralGraph g = IntegralGraph::build(F);
    PermGroup G = classification_group(F, g);
    return classify(F, g, G, opt);
}

SpectrumRow classify_even(const FieldCtx& F) {
    if (!F.even()) throw std::invalid_argument("classify_even needs even q");
    SpectrumRow row;
    row.q = F.q();
    row.counts[std::size_t{F.q()} * F.q()] = 1;
    return row;
}

SecondLargest second_largest_size(const FieldCtx& F, const IntegralGraph& g,
                                  double budget_seconds) {
    if (F.even()) throw std::invalid_argument("second largest size needs odd q");
    LocalGraph lg = local_graph(g);
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget_seconds));
    SecondLargest out;
    out.upper = F.q() - 1;
    // Point-set size s corresponds to cliques of size s-1 in the local graph.
    for (std::size_t floor = (F.q() + 3) / 2; floor >= 2; --floor) {
        std::size_t best = 0;
        try {
            enum_maximal_cliques(lg, floor - 1, [&](const std::vector<std::uint32_t>& c) {
                if (std::chrono::steady_clock::now() > deadline)
                    throw BudgetExceeded("clique search budget exhausted");
                std::size_t s = c.size() + 1;
                if (s < F.q() && s > best) best = s;
            });
        } catch (const BudgetExceeded&) {
            out.lower = std::max(out.lower, best);
            return out;
        }
        if (best) {
            out.size = best;
            out.exact = true;
            out.lower = best;
            out.upper = best;
            return out;
        }
        out.upper = floor - 1; // nothing maximal of size >= floor below q
    }
    return out;
}

} // namespace ips

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "ips/graph.hpp"
#include "ips/symmetry.hpp"

namespace ips {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All points at integral distance to every point of P, excluding P itself.
// Computed by intersecting adjacency bit rows.
std::vector<PointCode> extension_candidates(const IntegralGraph& g, const PointSet& P);

// True iff nothing extends P.
bool is_maximal(const IntegralGraph& g, const PointSet& P);

// Pivoting Bron-Kerbosch over the local graph. Reports each maximal clique
// as sorted vertex indices into lg.vertices. size_floor prunes branches
// that cannot reach the floor (and suppresses smaller maximal cliques).
void enum_maximal_cliques(const LocalGraph& lg, std::size_t size_floor,
                          const std::function<void(const std::vector<std::uint32_t>&)>& sink);

// Spectrum of a single q: size -> number of isomorphism classes of
// inclusion-maximal integral point sets.
struct SpectrumRow {
    std::uint32_t q = 0;
    std::map<std::size_t, std::uint64_t> counts;
    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto& [k, v] : counts) s += v;
        return s;
    }
    std::size_t min_size() const { return counts.empty() ? 0 : counts.begin()->first; }
    std::size_t max_size() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

struct ClassRecord {
    std::vector<PointCode> rep; // canonical representative, sorted codes
    std::uint64_t stab_order = 0;
    std::uint64_t orbit_len = 0;
};

struct ClassifyOptions {
    unsigned threads = 0;           // 0: hardware concurrency
    double budget_seconds = 900.0;  // defaults cover q <= 19 comfortably
    std::uint32_t max_q = 47;
};

struct ClassifyResult {
    SpectrumRow row;
    std::vector<ClassRecord> classes; // sorted by (size, representative)
};

// Isomorph-free generation of all inclusion-maximal integral point sets up
// to graph automorphisms: grows sets anchored at the origin and keeps a
// partial set only when it is the canonical representative of its orbit,
// so subtree rejection happens at every augmentation level. Output order
// and content are independent of the thread count.
ClassifyResult classify(const FieldCtx& F, const IntegralGraph& g, const PermGroup& G,
                        const ClassifyOptions& opt = {});
ClassifyResult classify(const FieldCtx& F, const ClassifyOptions& opt = {});

// Even q: the whole plane is the unique maximal integral point set.
SpectrumRow classify_even(const FieldCtx& F);

// Largest size below q attained by an inclusion-maximal set, found by a
// floor-bounded clique search descending from (q+3)/2. When the budget runs
// out the result carries the bounds established so far instead of a guess.
struct SecondLargest {
    std::size_t size = 0; // meaningful when exact
    bool exact = false;
    std::size_t lower = 0;
    std::size_t upper = 0;
};

SecondLargest second_largest_size(const FieldCtx& F, const IntegralGraph& g,
                                  double budget_seconds = 900.0);

} // namespace ips

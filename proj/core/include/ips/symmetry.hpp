#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ips/graph.hpp"
#include "ips/plane.hpp"

namespace ips {

// Affine-semilinear map x -> A * x^(p^k) + b on F_q^2 (Frobenius applied
// coordinatewise before the linear part).
struct AffMap {
    std::uint32_t frob = 0;          // k in [0, r)
    std::array<Fe, 4> a{1, 0, 0, 1}; // row major 2x2
    std::array<Fe, 2> b{0, 0};
    friend bool operator==(const AffMap&, const AffMap&) = default;
};

Point aff_apply(const FieldCtx& F, const AffMap& m, Point p);
AffMap aff_compose(const FieldCtx& F, const AffMap& f, const AffMap& g); // f after g
AffMap aff_inverse(const FieldCtx& F, const AffMap& m);
AffMap aff_translation(Point shift);

// Generators of the line-preserving automorphism group H of the integral
// distance relation: translations by a basis of F_q^2, the coordinate swap,
// the matrices ((a,b),(b,-a)) with a^2+b^2 a nonzero square, and Frobenius.
// For q in {5, 9} those do not generate all of H; the missing
// origin-fixing elements are found by direct search over GammaL(2,q) and
// appended, so closing the returned list always yields H itself.
std::vector<AffMap> h_generators(const FieldCtx& F);

struct GroupCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Permutation group on point codes containing every translation. Stored as
// the origin stabiliser (explicit permutations) plus the implicit
// translation factor: order = q^2 * stab0_count().
class PermGroup {
public:
    PermGroup(const FieldCtx& F, std::vector<std::uint32_t> stab0_flat);

    const FieldCtx& field() const { return *field_; }
    std::uint64_t order() const;
    std::size_t stab0_count() const { return count_; }
    std::span<const std::uint32_t> stab0(std::size_t i) const {
        return {flat_.data() + i * n_, n_};
    }
    std::uint32_t code_count() const { return n_; }

    // code of point(c1) - point(c2)
    std::uint32_t code_sub(std::uint32_t c1, std::uint32_t c2) const {
        return fsub_[xof_[c1] * q_ + xof_[c2]] * q_ + fsub_[yof_[c1] * q_ + yof_[c2]];
    }

private:
    const FieldCtx* field_;
    std::uint32_t q_, n_;
    std::size_t count_;
    std::vector<std::uint32_t> flat_;
    std::vector<Fe> xof_, yof_, fsub_;
};

// Breadth-first closure of affine-semilinear generators. Every generator
// must be a pure translation or fix the origin (the shape h_generators
// emits); the translation part must close to all of F_q^2. The linear
// parts close into an explicit list, giving the exact order.
PermGroup close_group(const FieldCtx& F, std::span<const AffMap> gens,
                      std::uint64_t cap = 1ull << 32);

// Same closure, reported without materialising code permutations.
std::uint64_t closed_group_order(const FieldCtx& F, std::span<const AffMap> gens,
                                 std::uint64_t cap = 1ull << 32);

// Closure from explicit vertex permutations (need not be affine). The
// generated group must contain all translations; the origin stabiliser is
// extracted with Schreier generators.
PermGroup close_group_perms(const FieldCtx& F,
                            std::span<const std::vector<std::uint32_t>> gens,
                            std::uint64_t cap = 1ull << 22);

// Lexicographically least image of the sorted code sequence over the group
// orbit. Translations are handled by anchoring: candidates are
// sorted(h(S) - u) over stabiliser elements h and anchors u in h(S).
struct CanonicalForm {
    std::vector<std::uint32_t> codes;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const PermGroup& G, const PointSet& P);

// True iff sorted codes of P are already the canonical form. Cheaper than
// computing the form: bails at the first smaller candidate.
bool is_canonical_rep(const PermGroup& G, std::span<const std::uint32_t> codes);

// Order of the setwise stabiliser of P in G.
std::uint64_t aut_order_of_set(const PermGroup& G, const PointSet& P);

// Map carrying p1 to (0,0) and p2 to (1,0), or to (1, omega) for a
// vanishing pair (q = 1 mod 4 only). Exists for every integral pair.
AffMap normalize_pair(const FieldCtx& F, Point p1, Point p2);

// ---------------------------------------------------------------------------
// Independent individualisation-refinement engine (verification path).

struct IrOptions {
    std::size_t max_vertices = 169; // q <= 13 by default
};

struct GraphAutomorphisms {
    std::uint64_t order = 0;
    std::vector<std::vector<std::uint32_t>> generators;
};

GraphAutomorphisms graph_automorphisms(const BitRows& adj);
std::uint64_t graph_aut_order(const IntegralGraph& g, IrOptions opt = {});

// The group the classification runs under: the full automorphism group of
// the integral-distance graph. Realised as H for prime q, H extended by the
// one-sided coordinate Frobenius for proper prime powers with q = 1 mod 4,
// and the IR-engine group for the exceptional q in {5, 9}.
PermGroup classification_group(const FieldCtx& F, const IntegralGraph& g);

// Published/derived order of that group.
std::uint64_t expected_aut_order(const FieldCtx& F);

} // namespace ips

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ips/constructions.hpp"
#include "ips/graph.hpp"
#include "ips/reference_tables.hpp"
#include "ips/symmetry.hpp"

using namespace ips;

namespace {

FieldCtx make_q(std::uint32_t q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        std::uint64_t v = p;
        for (std::uint32_t r = 1; v <= q; ++r, v *= p)
            if (v == q) {
                bool prime = p >= 2;
                for (std::uint32_t d = 2; d * d <= p; ++d)
                    if (p % d == 0) prime = false;
                if (prime) return FieldCtx(p, r);
            }
    }
    throw std::invalid_argument("not a prime power");
}

// random group element as (random stabiliser element, random translation)
std::vector<std::uint32_t> random_element(const PermGroup& G, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> hsel(0, G.stab0_count() - 1);
    std::uniform_int_distribution<std::uint32_t> tsel(0, G.code_count() - 1);
    auto h = G.stab0(hsel(rng));
    const FieldCtx& F = G.field();
    Point sh = point_at(F, tsel(rng));
    std::vector<std::uint32_t> out(G.code_count());
    for (std::uint32_t c = 0; c < G.code_count(); ++c) {
        Point p = point_at(F, h[c]);
        out[c] = point_code(F, {F.add(p.x, sh.x), F.add(p.y, sh.y)});
    }
    return out;
}

} // namespace

TEST_CASE("affine map algebra") {
    FieldCtx F(3, 2);
    AffMap m{1, {2, 3, 1, 7}, {4, 5}};
    AffMap inv = aff_inverse(F, m);
    for (std::uint32_t c = 0; c < 81; ++c) {
        Point p = point_at(F, c);
        CHECK(aff_apply(F, inv, aff_apply(F, m, p)) == p);
        CHECK(aff_apply(F, m, aff_apply(F, inv, p)) == p);
    }
    AffMap n{1, {1, 1, 0, 2}, {7, 0}};
    AffMap comp = aff_compose(F, m, n);
    for (std::uint32_t c = 0; c < 81; ++c) {
        Point p = point_at(F, c);
        CHECK(aff_apply(F, comp, p) == aff_apply(F, m, aff_apply(F, n, p)));
    }
}

TEST_CASE("generators preserve adjacency") {
    for (std::uint32_t q : {5u, 7u, 9u, 11u}) {
        FieldCtx F = make_q(q);
        IntegralGraph g = IntegralGraph::build(F);
        auto gens = h_generators(F);
        std::uint32_t n = q * q;
        for (const AffMap& m : gens) {
            for (PointCode u = 0; u < n; ++u) {
                PointCode mu = point_code(F, aff_apply(F, m, point_at(F, u)));
                for (PointCode v = u + 1; v < n; ++v) {
                    PointCode mv = point_code(F, aff_apply(F, m, point_at(F, v)));
                    if (g.adjacent(u, v) != g.adjacent(mu, mv))
                        REQUIRE(g.adjacent(u, v) == g.adjacent(mu, mv));
                }
            }
        }
        // identity fixes every point
        AffMap id;
        for (PointCode u = 0; u < n; ++u)
            CHECK(aff_apply(F, id, point_at(F, u)) == point_at(F, u));
    }
}

TEST_CASE("closure reproduces the published group orders") {
    auto order_of = [](std::uint32_t q) {
        FieldCtx F = make_q(q);
        auto gens = h_generators(F);
        return closed_group_order(F, gens);
    };
    CHECK(order_of(3) == 72);
    CHECK(order_of(5) == 800);
    CHECK(order_of(7) == 2352);
    CHECK(order_of(9) == 31104);
    CHECK(order_of(11) == 14520);
    CHECK(order_of(13) == 24336);
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u}) {
        FieldCtx F = make_q(q);
        CHECK(order_of(q) == reference_h_order(F));
    }
}

TEST_CASE("IR engine on known small graphs") {
    // 5-cycle: dihedral group of order 10
    BitRows c5(5);
    for (int i = 0; i < 5; ++i) {
        c5.set(i, (i + 1) % 5);
        c5.set((i + 1) % 5, i);
    }
    CHECK(graph_automorphisms(c5).order == 10);

    // complete graph K4: S4
    BitRows k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) k4.set(i, j);
    CHECK(graph_automorphisms(k4).order == 24);

    // Petersen graph: order 120
    BitRows pet(10);
    auto edge = [&](int a, int b) {
        pet.set(a, b);
        pet.set(b, a);
    };
    for (int i = 0; i < 5; ++i) edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) edge(5 + i, 5 + (i + 2) % 5);
    for (int i = 0; i < 5; ++i) edge(i, 5 + i);
    CHECK(graph_automorphisms(pet).order == 120);

    // path of 3: single reflection
    BitRows p3(3);
    p3.set(0, 1);
    p3.set(1, 0);
    p3.set(1, 2);
    p3.set(2, 1);
    CHECK(graph_automorphisms(p3).order == 2);
}

TEST_CASE("IR engine matches the published graph group orders") {
    auto g_order = [](std::uint32_t q) {
        FieldCtx F = make_q(q);
        return graph_aut_order(IntegralGraph::build(F));
    };
    CHECK(g_order(3) == 72);
    CHECK(g_order(5) == 28800);
    CHECK(g_order(7) == 2352);
    CHECK(g_order(9) == 186624);
    CHECK(g_order(11) == 14520);
}

TEST_CASE("classification group orders") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
        FieldCtx F = make_q(q);
        IntegralGraph g = IntegralGraph::build(F);
        PermGroup G = classification_group(F, g);
        CHECK(G.order() == expected_aut_order(F));
        CHECK(G.order() == graph_aut_order(IntegralGraph::build(F)));
        // every stabiliser element preserves adjacency
        for (std::size_t i = 0; i < G.stab0_count(); ++i) {
            auto h = G.stab0(i);
            for (PointCode u = 0; u < g.vertex_count(); ++u)
                for (PointCode v = u + 1; v < g.vertex_count(); ++v)
                    if (g.adjacent(u, v) != g.adjacent(h[u], h[v]))
                        REQUIRE(g.adjacent(u, v) == g.adjacent(h[u], h[v]));
        }
    }
}

TEST_CASE("canonical form is an orbit invariant") {
    for (std::uint32_t q : {7u, 13u}) {
        FieldCtx F = make_q(q);
        IntegralGraph g = IntegralGraph::build(F);
        PermGroup G = classification_group(F, g);
        NamedConstruction pw = circle_set(F);
        CanonicalForm base = canonical_form(G, pw.points);
        std::mt19937 rng(11);
        for (int it = 0; it < 100; ++it) {
            auto elem = random_element(G, rng);
            std::vector<PointCode> moved;
            for (PointCode c : pw.points.codes()) moved.push_back(elem[c]);
            CHECK(canonical_form(G, PointSet(F, moved)) == base);
        }
    }
}

TEST_CASE("axis line and its images share one form") {
    FieldCtx F(7, 1);
    IntegralGraph g = IntegralGraph::build(F);
    PermGroup G = classification_group(F, g);
    std::vector<Point> axis;
    for (Fe t = 0; t < 7; ++t) axis.push_back({t, 0});
    PointSet line(F, axis);
    CanonicalForm base = canonical_form(G, line);

    std::mt19937 rng(3);
    for (int it = 0; it < 50; ++it) {
        auto elem = random_element(G, rng);
        std::vector<PointCode> moved;
        for (PointCode c : line.codes()) moved.push_back(elem[c]);
        CHECK(canonical_form(G, PointSet(F, moved)) == base);
    }
}

TEST_CASE("distinct sporadic classes have distinct forms") {
    FieldCtx F(19, 1);
    IntegralGraph g = IntegralGraph::build(F);
    PermGroup G = classification_group(F, g);
    CanonicalForm p3 = canonical_form(G, sporadic(F, 3).points);
    CanonicalForm p4 = canonical_form(G, sporadic(F, 4).points);
    CHECK(p3 != p4);
}

TEST_CASE("setwise stabiliser orders") {
    FieldCtx F19(19, 1);
    IntegralGraph g19 = IntegralGraph::build(F19);
    PermGroup G19 = classification_group(F19, g19);
    CHECK(aut_order_of_set(G19, circle_set(F19).points) == 20);

    FieldCtx F13(13, 1);
    IntegralGraph g13 = IntegralGraph::build(F13);
    PermGroup G13 = classification_group(F13, g13);
    CHECK(aut_order_of_set(G13, circle_set(F13).points) == 12);

    // the whole plane is stabilised by everything
    std::vector<PointCode> all;
    for (PointCode c = 0; c < 169; ++c) all.push_back(c);
    CHECK(aut_order_of_set(G13, PointSet(F13, all)) == G13.order());
}

TEST_CASE("pair normalisation") {
    FieldCtx F13(13, 1);
    AffMap id = normalize_pair(F13, {0, 0}, {1, 0});
    CHECK(aff_apply(F13, id, {0, 0}) == Point{0, 0});
    CHECK(aff_apply(F13, id, {1, 0}) == Point{1, 0});

    // vanishing pair goes to (0,0), (1, omega)
    AffMap v = normalize_pair(F13, {0, 0}, {1, 5});
    CHECK(aff_apply(F13, v, {0, 0}) == Point{0, 0});
    CHECK(aff_apply(F13, v, {1, 5}) == Point{1, 5});

    FieldCtx F11(11, 1);
    for (std::uint32_t i = 0; i < 121; ++i)
        for (std::uint32_t j = 0; j < 121; ++j) {
            if (i == j) continue;
            Point a = point_at(F11, i), b = point_at(F11, j);
            if (!integral_pair(F11, a, b)) continue;
            AffMap m = normalize_pair(F11, a, b);
            CHECK(aff_apply(F11, m, a) == Point{0, 0});
            CHECK(aff_apply(F11, m, b) == Point{1, 0});
        }

    CHECK_THROWS_AS(normalize_pair(F13, {1, 1}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_pair(FieldCtx(7, 1), {0, 0}, {1, 2}), std::invalid_argument);
}

TEST_CASE("line/point transitivity within each line class") {
    // For each of: integral, non-integral, vanishing lines, the pairs
    // (line, point off the line) form one orbit.
    for (std::uint32_t q : {5u, 7u, 11u}) {
        FieldCtx F = make_q(q);
        // line-preserving group: for q = 5 the full graph group moves lines
        // off lines, so the pair action lives in H
        auto hg = h_generators(F);
        PermGroup G = close_group(F, hg);

        // enumerate lines as sorted code sets keyed by (slope, anchor)
        std::vector<std::vector<PointCode>> lines;
        std::vector<DirectionClass> cls;
        for (Fe d = 0; d < F.q(); ++d)
            for (Fe b = 0; b < F.q(); ++b) {
                std::vector<PointCode> line;
                for (Fe x = 0; x < F.q(); ++x)
                    line.push_back(point_code(F, {x, F.add(F.mul(d, x), b)}));
                std::sort(line.begin(), line.end());
                lines.push_back(line);
                cls.push_back(classify_direction(F, {d}));
            }
        for (Fe c = 0; c < F.q(); ++c) {
            std::vector<PointCode> line;
            for (Fe y = 0; y < F.q(); ++y) line.push_back(point_code(F, {c, y}));
            lines.push_back(line);
            cls.push_back(DirectionClass::Integral); // infinite slope
        }

        for (DirectionClass target :
             {DirectionClass::Integral, DirectionClass::NonIntegral, DirectionClass::Vanishing}) {
            if (target == DirectionClass::Vanishing && F.q_mod4() != 1) continue;

            // all (line, off-line point) pairs in this class
            std::set<std::pair<std::vector<PointCode>, PointCode>> pairs;
            for (std::size_t li = 0; li < lines.size(); ++li) {
                if (cls[li] != target) continue;
                std::set<PointCode> on(lines[li].begin(), lines[li].end());
                for (PointCode p = 0; p < F.q() * F.q(); ++p)
                    if (!on.contains(p)) pairs.insert({lines[li], p});
            }
            REQUIRE(!pairs.empty());

            // orbit of one pair under the full group
            std::set<std::pair<std::vector<PointCode>, PointCode>> orbit;
            std::vector<std::pair<std::vector<PointCode>, PointCode>> queue{*pairs.begin()};
            orbit.insert(*pairs.begin());
            auto apply_perm = [&](const std::vector<std::uint32_t>& perm,
                                  const std::pair<std::vector<PointCode>, PointCode>& pr) {
                std::vector<PointCode> l;
                for (PointCode c : pr.first) l.push_back(perm[c]);
                std::sort(l.begin(), l.end());
                return std::make_pair(l, perm[pr.second]);
            };
            // generators: stabiliser elements and one basis translation each way
            std::vector<std::vector<std::uint32_t>> gens;
            for (std::size_t i = 0; i < G.stab0_count(); ++i) {
                auto h = G.stab0(i);
                gens.emplace_back(h.begin(), h.end());
            }
            for (PointCode t : {PointCode{1}, PointCode{F.q()}}) {
                std::vector<std::uint32_t> tau(F.q() * F.q());
                Point sh = point_at(F, t);
                for (PointCode c = 0; c < tau.size(); ++c) {
                    Point p = point_at(F, c);
                    tau[c] = point_code(F, {F.add(p.x, sh.x), F.add(p.y, sh.y)});
                }
                gens.push_back(std::move(tau));
            }
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                for (const auto& perm : gens) {
                    auto img = apply_perm(perm, queue[qi]);
                    if (orbit.insert(img).second) queue.push_back(img);
                }
            }
            // transitive on the class: every pair is reachable from the
            // first. (At q = 5 the orbit is strictly larger: H fuses the
            // integral and vanishing pencils there.)
            bool covered = true;
            for (const auto& pr : pairs)
                if (!orbit.contains(pr)) covered = false;
            CHECK(covered);
        }
    }
}

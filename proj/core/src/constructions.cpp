#include "ips/constructions.hpp"

#include <stdexcept>

namespace ips {

NamedConstruction circle_set(const FieldCtx& F) {
    if (F.even()) throw std::invalid_argument("circle construction needs odd q");
    UnitCircle circle = unit_circle(F);
    std::vector<Point> pts{{0, 0}};
    for (std::size_t i = 0; i < circle.order(); i += 2) {
        Gauss z = circle.elements[i];
        pts.push_back({z.re, z.im});
    }
    std::size_t expected = F.q_mod4() == 1 ? (F.q() + 1) / 2 : (F.q() + 3) / 2;
    return {"circle", PointSet(F, pts), expected};
}

NamedConstruction line_set(const FieldCtx& F) {
    if (F.even()) throw std::invalid_argument("line construction needs odd q");
    std::vector<Point> pts;
    for (Fe u = 0; u < F.q(); ++u)
        if (F.is_square(F.add(F.sq(u), 1))) pts.push_back({u, 0});
    pts.push_back({0, 1});
    pts.push_back({0, F.neg(1)});
    std::size_t expected = F.q_mod4() == 1 ? (F.q() + 5) / 2 : (F.q() + 3) / 2;
    return {"line", PointSet(F, pts), expected};
}

std::vector<Point> sporadic_fixture(const FieldCtx& F, int index) {
    auto pts = [&](std::initializer_list<std::pair<Fe, Fe>> raw) {
        std::vector<Point> out;
        for (auto [x, y] : raw) out.push_back({x, y});
        return out;
    };
    if (F.q() == 23 && index == 1)
        return pts({{0, 0}, {0, 22}, {22, 0}, {0, 1}, {1, 0}, {4, 19}, {19, 19},
                    {19, 4}, {4, 4}, {0, 14}, {14, 0}, {0, 9}, {9, 0}});
    if (F.q() == 23 && index == 2)
        return pts({{0, 0}, {11, 15}, {11, 8}, {1, 0}, {1, 7}, {21, 0}, {1, 16},
                    {3, 21}, {17, 0}, {3, 2}, {19, 5}, {19, 18}, {8, 0}});
    if (F.q() == 19 && index == 3)
        return pts({{0, 0}, {7, 3}, {2, 4}, {2, 15}, {7, 16}, {1, 0}, {2, 9},
                    {6, 12}, {6, 7}, {2, 10}, {3, 0}});
    if (F.q() == 19 && index == 4)
        return pts({{0, 0}, {0, 1}, {0, 18}, {4, 0}, {4, 2}, {4, 17}, {5, 0},
                    {14, 0}, {15, 0}, {15, 2}, {15, 17}});
    if (F.q() == 11 && index == 5)
        return pts({{0, 0}, {0, 1}, {0, 10}, {2, 0}, {3, 5}, {3, 6}, {6, 0}});
    throw std::invalid_argument("no sporadic set with this (q, index)");
}

namespace {

// Union of scaled cosets s * z^off * <z^step> of the unit circle, plus the
// origin. All three coset formulas below are generator independent: the
// subgroup <z^step> is the unique subgroup of its order, and the offsets
// land in the same coset for every generator choice.
std::vector<Point> coset_construction(const FieldCtx& F,
                                      std::initializer_list<std::pair<Fe, std::size_t>> parts,
                                      std::size_t step) {
    UnitCircle circle = unit_circle(F);
    std::vector<Point> pts{{0, 0}};
    for (auto [scale, offset] : parts)
        for (std::size_t e = offset; e < circle.order() + offset; e += step) {
            Gauss z = gscale(F, scale, circle.elements[e % circle.order()]);
            pts.push_back({z.re, z.im});
        }
    return pts;
}

} // namespace

NamedConstruction sporadic(const FieldCtx& F, int index) {
    std::size_t expected = (F.q() + 3) / 2;
    std::string name = "sporadic-" + std::to_string(index);
    if (F.q() == 23 && index == 1) {
        // {0} u <z^6> u 3 z^3 <z^6> u 9 <z^6>; the middle coset twist makes
        // the set integral (the untwisted middle coset is not).
        return {name, PointSet(F, coset_construction(F, {{1, 0}, {3, 3}, {9, 0}}, 6)), expected};
    }
    if (F.q() == 23 && index == 2) {
        // {0} u <z^8> u 2 z^4 <z^8> u 6 z^4 <z^8> u 8 <z^8>
        return {name, PointSet(F, coset_construction(F, {{1, 0}, {2, 4}, {6, 4}, {8, 0}}, 8)),
                expected};
    }
    if (F.q() == 19 && index == 3) {
        // {0} u <z^4> u 3 <z^4>
        return {name, PointSet(F, coset_construction(F, {{1, 0}, {3, 0}}, 4)), expected};
    }
    if ((F.q() == 19 && index == 4) || (F.q() == 11 && index == 5))
        return {name, PointSet(F, sporadic_fixture(F, index)), expected};
    throw std::invalid_argument("no sporadic set with this (q, index)");
}

std::uint64_t count_second_largest_classes(const ClassifyResult& res) {
    std::size_t target = (res.row.q + 3) / 2;
    auto it = res.row.counts.find(target);
    return it == res.row.counts.end() ? 0 : it->second;
}

} // namespace ips

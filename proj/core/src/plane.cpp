#include "ips/plane.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ips {

PointSet::PointSet(const FieldCtx& F, std::vector<PointCode> codes)
    : field_(&F), codes_(std::move(codes)) {
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
    for (PointCode c : codes_)
        if (c >= F.q() * F.q()) throw std::invalid_argument("point code out of range");
}

PointSet::PointSet(const FieldCtx& F, std::span<const Point> pts) : field_(&F) {
    codes_.reserve(pts.size());
    for (Point p : pts) codes_.push_back(point_code(F, p));
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

bool PointSet::contains(PointCode c) const {
    return std::binary_search(codes_.begin(), codes_.end(), c);
}

std::vector<Point> PointSet::points() const {
    std::vector<Point> out;
    out.reserve(codes_.size());
    for (PointCode c : codes_) out.push_back(point_at(*field_, c));
    return out;
}

bool integral_set(const PointSet& P) {
    const FieldCtx& F = P.field();
    auto pts = P.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!integral_pair(F, pts[i], pts[j])) return false;
    return true;
}

Direction direction(const FieldCtx& F, Point u, Point v) {
    if (u == v) throw std::invalid_argument("direction of a point with itself");
    Fe dx = F.sub(u.x, v.x);
    if (dx == 0) return {Direction::kInf};
    return {F.div(F.sub(u.y, v.y), dx)};
}

DirectionClass classify_direction(const FieldCtx& F, Direction d) {
    if (d.infinite()) return DirectionClass::Integral;
    Fe s = F.add(1, F.sq(d.slope));
    if (s == 0) return DirectionClass::Vanishing;
    return F.is_square(s) ? DirectionClass::Integral : DirectionClass::NonIntegral;
}

std::vector<Direction> directions_of(const PointSet& P) {
    const FieldCtx& F = P.field();
    auto pts = P.points();
    std::vector<Direction> dirs;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            dirs.push_back(direction(F, pts[i], pts[j]));
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    return dirs;
}

std::vector<PythTriple> pyth_triples(const FieldCtx& F, Fe c) {
    if (F.even()) throw std::invalid_argument("Pythagorean triples require odd q");
    std::vector<PythTriple> out;
    if (c == 0) {
        if (F.q_mod4() == 1) {
            // (t, +-t*omega, 0) over all t; the two signs coincide at t = 0.
            Fe w = *F.omega();
            for (Fe t = 0; t < F.q(); ++t) {
                Fe tw = F.mul(t, w);
                out.push_back({t, tw, 0});
                if (t != 0) out.push_back({t, F.neg(tw), 0});
            }
        } else {
            out.push_back({0, 0, 0});
        }
    } else {
        out.push_back({c, 0, c});
        out.push_back({F.neg(c), 0, c});
        for (Fe t = 1; t < F.q(); ++t) {
            Fe t2 = F.sq(t);
            Fe den = F.add(t2, 1);
            if (den == 0) continue; // t = +-omega
            Fe a = F.mul(F.div(F.sub(t2, 1), den), c);
            Fe b = F.mul(F.div(F.add(t, t), den), c);
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t max_collinear(const PointSet& P) {
    if (P.size() <= 2) return P.size();
    const FieldCtx& F = P.field();
    auto pts = P.points();
    std::size_t best = 2;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        // Count coincident directions out of pts[i]; collinearity through a
        // fixed anchor is direction equality.
        std::map<Direction, std::size_t> seen;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            best = std::max(best, ++seen[direction(F, pts[i], pts[j])] + 1);
        }
    }
    return best;
}

} // namespace ips

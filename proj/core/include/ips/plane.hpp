#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ips/field.hpp"

namespace ips {

// Point of F_q^2, identified with re + im*i of F_q[i] where convenient.
struct Point {
    Fe x = 0, y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

// Canonical point code: code(x) * q + code(y). Bijective with F_q^2.
using PointCode = std::uint32_t;

inline PointCode point_code(const FieldCtx& F, Point p) { return p.x * F.q() + p.y; }
inline Point point_at(const FieldCtx& F, PointCode c) {
    return {c / F.q(), c % F.q()};
}

// Finite subset of F_q^2 as a strictly increasing code sequence.
class PointSet {
public:
    PointSet() = default;
    PointSet(const FieldCtx& F, std::vector<PointCode> codes);
    PointSet(const FieldCtx& F, std::span<const Point> pts);

    const FieldCtx& field() const { return *field_; }
    const std::vector<PointCode>& codes() const { return codes_; }
    std::size_t size() const { return codes_.size(); }
    bool empty() const { return codes_.empty(); }
    bool contains(PointCode c) const;
    Point point(std::size_t i) const { return point_at(*field_, codes_[i]); }
    std::vector<Point> points() const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.codes_ == b.codes_;
    }

private:
    const FieldCtx* field_ = nullptr;
    std::vector<PointCode> codes_;
};

// Squared distance (u1-v1)^2 + (u2-v2)^2; symmetric, translation invariant.
inline Fe sqdist(const FieldCtx& F, Point u, Point v) {
    return F.add(F.sq(F.sub(u.x, v.x)), F.sq(F.sub(u.y, v.y)));
}

// True iff the squared distance is a square, i.e. the pair has a distance
// in F_q. Note sqdist 0 counts: vanishing pairs are at integral distance.
inline bool integral_pair(const FieldCtx& F, Point u, Point v) {
    return F.is_square(sqdist(F, u, v));
}

bool integral_set(const PointSet& P);

// Slope (y1-y2)/(x1-x2), or the infinite direction for vertical pairs.
struct Direction {
    static constexpr Fe kInf = ~Fe{0};
    Fe slope = 0; // kInf encodes the vertical direction
    bool infinite() const { return slope == kInf; }
    friend bool operator==(const Direction&, const Direction&) = default;
    friend auto operator<=>(const Direction&, const Direction&) = default;
};

Direction direction(const FieldCtx& F, Point u, Point v);

enum class DirectionClass { Vanishing, Integral, NonIntegral };

// Finite d: vanishing iff 1 + d^2 = 0, integral iff 1 + d^2 is a nonzero
// square. The infinite direction is integral.
DirectionClass classify_direction(const FieldCtx& F, Direction d);

// All pairwise directions of P, sorted, duplicate free.
std::vector<Direction> directions_of(const PointSet& P);

// Largest number of bound points determined by an integral set:
// (q+3)/2 when -1 is a square, (q+1)/2 otherwise.
inline std::size_t direction_bound(const FieldCtx& F) {
    return F.q_mod4() == 1 ? (F.q() + 3) / 2 : (F.q() + 1) / 2;
}

struct PythTriple {
    Fe a = 0, b = 0, c = 0;
    friend bool operator==(const PythTriple&, const PythTriple&) = default;
    friend auto operator<=>(const PythTriple&, const PythTriple&) = default;
};

// All (a, b, c) with a^2 + b^2 = c^2 for the given c, by the parametric
// form. |P_0| = 2q-1 or 1, |P_c| = q-1 or q+1 (split on q mod 4); the
// counts over all c sum to q^2.
std::vector<PythTriple> pyth_triples(const FieldCtx& F, Fe c);

// Maximum number of points of P on one affine line.
std::size_t max_collinear(const PointSet& P);

} // namespace ips

#pragma once

#include <string>
#include <vector>

#include "ips/plane.hpp"
#include "ips/search.hpp"

namespace ips {

struct NamedConstruction {
    std::string name;
    PointSet points;
    std::size_t expected_size = 0;
};

// Circle construction: even powers of the canonical unit-circle generator
// plus the origin. Size (q+1)/2 for q = 1 mod 4, (q+3)/2 for q = 3 mod 4;
// maximal for every odd q outside {5, 9}.
NamedConstruction circle_set(const FieldCtx& F);

// Line construction: the integral trace of the x-axis together with the
// mirror pair (0, +-1). Size (q+3)/2 for q = 3 mod 4, (q+5)/2 for
// q = 1 mod 4.
NamedConstruction line_set(const FieldCtx& F);

// The five sporadic maximal sets of size (q+3)/2: indices 1,2 at q = 23,
// 3,4 at q = 19, 5 at q = 11. Indices 1-3 are built from unit-circle coset
// formulas, 4 and 5 ship as coordinate fixtures.
NamedConstruction sporadic(const FieldCtx& F, int index);

// Published coordinate list for a sporadic set, as plotted. Equal to the
// built set only up to isomorphism in general.
std::vector<Point> sporadic_fixture(const FieldCtx& F, int index);

// Number of classes of size (q+3)/2 in a classification result.
std::uint64_t count_second_largest_classes(const ClassifyResult& res);

} // namespace ips

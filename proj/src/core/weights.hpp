#ifndef HCENSUS_WEIGHTS_HPP
#define HCENSUS_WEIGHTS_HPP

#include "heights.hpp"

#include <vector>

namespace hc {

// Constraint a*t1 + b*t2 >= c on the plane t1 + t2 + t3 = 0, written in
// (t1, t2) coordinates.
struct HalfPlane {
    double a;
    double b;
    double c;
};

// Convex region, counter-clockwise vertex list, possibly empty.
struct Polygon {
    std::vector<std::pair<double, double>> vertices;
    double area() const;
};

// The six covolume constraints (one per nonempty proper subset of {1,2,3})
// cut out by the triple at threshold eta in (0, 1].
std::vector<HalfPlane> omega_constraints(const TriangleTriple& t, double eta);

// Intersection polygon of the half-planes, clipped to a centered square of
// side 10^6.  With no constraints the full square comes back (sentinel).
Polygon clip_polygon(const std::vector<HalfPlane>& planes);
double polygon_area(const std::vector<HalfPlane>& planes);

// min{ area^-1, 1 }; an empty region means weight 1 (limit convention).
double weight(const TriangleTriple& t, double eta);

} // namespace hc

#endif

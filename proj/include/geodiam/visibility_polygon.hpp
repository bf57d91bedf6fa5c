#pragma once

#include <vector>

#include "geodiam/domain.hpp"
#include "geodiam/parallel.hpp"

namespace geodiam {

// Region seen from corner c, as a CCW vertex list starting at c.
std::vector<Point> corner_visibility_polygon(const PolygonalDomain& dom, int c, double tol);
std::vector<std::vector<Point>> all_visibility_polygons(const PolygonalDomain& dom, double tol,
                                                        Exec exec = Exec::Parallel);

// Largest distance from c to a point it sees.
double polygon_reach(const std::vector<Point>& vp, Point c);
std::vector<double> corner_reach(const PolygonalDomain& dom, double tol, Exec exec = Exec::Parallel);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Parameter ranges of edge e visible from p, merged and sorted.
std::vector<Interval> visible_intervals(const PolygonalDomain& dom, Point p, int e, double tol);

}  // namespace geodiam

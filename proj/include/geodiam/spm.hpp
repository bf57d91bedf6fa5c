#pragma once

#include <array>
#include <vector>

#include "geodiam/geodesic.hpp"

namespace geodiam {

// Points x with w1 + |x-u1| = w2 + |x-u2| = w3 + |x-u3|.
// Throws DegenerateConfiguration when the solution set is not finite.
std::vector<Point> solve_spm_vertex(Point u1, double w1, Point u2, double w2, Point u3, double w3,
                                    double tol_residual = 1e-12);

// Points x on the closed edge with w1 + |x-u1| = w2 + |x-u2|.
std::vector<Point> solve_spm_edge_boundary(Point u1, double w1, Point u2, double w2, const Segment& edge,
                                           double tol_residual = 1e-12);

struct SpmCandidate {
  enum class Kind { SpmVertex, EdgeCrossing, Corner };
  Point location;
  Kind kind = Kind::Corner;
  std::array<int, 3> sites{-1, -1, -1};  // corner ids; the source itself is id n
  int edge = -1;
  double value = 0.0;
};

const char* to_string(SpmCandidate::Kind k);

struct FarthestResult {
  Point point;
  double distance = 0.0;
  SpmCandidate::Kind kind = SpmCandidate::Kind::Corner;
  SpmCandidate best;
  std::vector<SpmCandidate> validated;  // filled when keep_all is set
  std::size_t generated = 0;
};

struct FarthestOptions {
  bool prune = true;      // skip site groups whose reach cannot beat the incumbent
  bool keep_all = false;  // validate every candidate, not just down to the winner
  Exec exec = Exec::Parallel;
  const std::vector<double>* reach = nullptr;  // per-corner visibility reach, if known
};

FarthestResult farthest_point(const FreeSpace& space, const DistanceTable& table, Point source,
                              const FarthestOptions& opt = {});
FarthestResult farthest_point(const PolygonalDomain& dom, const DistanceTable& table, Point source,
                              const ToleranceConfig& tol = {}, FarthestOptions opt = {});

}  // namespace geodiam

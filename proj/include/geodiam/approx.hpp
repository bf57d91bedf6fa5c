#pragma once

#include <cstddef>
#include <vector>

#include "geodiam/geodesic.hpp"

namespace geodiam {

struct ApproxResult {
  enum class Guarantee { Factor2Lower, OnePlusEps };
  double value = 0.0;
  Point s, t;
  Guarantee guarantee = Guarantee::Factor2Lower;
  double eps = 0.0;
  double cell_size = 0.0;  // grid mode
  std::size_t candidates = 0;
};

const char* to_string(ApproxResult::Guarantee g);

// value <= diam <= 2 value
ApproxResult two_approx(const PolygonalDomain& dom, const DistanceTable& table, Point seed,
                        const ToleranceConfig& tol = {});

// Max pairwise distance over grid points, corners and boundary samples at
// spacing eps * D0 / 4, D0 being the two_approx value from the first corner.
ApproxResult grid_approx(const PolygonalDomain& dom, const DistanceTable& table, double eps,
                         const ToleranceConfig& tol = {}, Exec exec = Exec::Parallel);

struct OracleValue {
  double value = 0.0;
  double error_bound = 0.0;
  Point s, t;
};

// Brute-force reference for tests. Nodes are free cell centers, corners and
// boundary samples; it has its own predicates and its own shortest path
// code, so agreement with the engine is evidence rather than repetition.
class GridOracle {
 public:
  GridOracle(const PolygonalDomain& dom, int resolution, Exec exec = Exec::Parallel);

  int resolution() const { return res_; }
  double cell() const { return cell_; }
  double error_bound() const;
  std::size_t node_count() const { return nodes_.size(); }
  // some corner or boundary sample has no cell center within one diagonal
  bool thin_corridor() const { return thin_; }

  OracleValue distance(Point s, Point t) const;
  OracleValue diameter() const;

 private:
  bool inside(Point p) const;
  bool clear(Point a, Point b) const;
  std::vector<int> seen_corners(Point p) const;
  // exact distances from p to every corner
  std::vector<double> corner_field(Point p, const std::vector<int>& seen) const;
  double to_node(const std::vector<double>& field, Point src, int y) const;

  std::vector<Point> corners_;
  std::vector<std::pair<Point, Point>> edges_;
  std::vector<std::vector<Point>> chains_;  // outer first
  std::vector<double> cc_;                  // corner all-pairs, n*n
  std::vector<Point> nodes_;
  std::vector<std::vector<int>> node_seen_;
  int res_;
  double cell_ = 0.0, tol_ = 0.0;
  bool thin_ = false;
  Exec exec_;
};

OracleValue oracle_distance(const GridOracle& oracle, Point s, Point t);
OracleValue oracle_diameter(const GridOracle& oracle);

}  // namespace geodiam

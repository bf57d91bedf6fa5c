#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "geodiam/domain.hpp"
#include "geodiam/parallel.hpp"
#include "geodiam/space.hpp"

namespace geodiam {

struct VisibilityGraph {
  int n = 0;
  std::vector<Point> pts;
  std::vector<std::vector<std::pair<int, double>>> adj;  // sorted by neighbour id

  bool has_edge(int u, int v) const;
  size_t edge_count() const;
};

VisibilityGraph build_visibility_graph(const PolygonalDomain& dom, const ToleranceConfig& tol = {},
                                       Exec exec = Exec::Parallel);

struct DistanceTable {
  enum class Provenance { Computed, Injected };

  int n = 0;
  std::vector<double> d;  // row-major n*n
  // Irreducible hops: pairs joined by a segment (or injected link) with no
  // corner in between. Shortest corner paths are chains of links.
  std::vector<std::vector<std::pair<int, double>>> links;
  std::vector<std::vector<int>> pred;  // pred[u*n+v]: every tight last hop into v
  Provenance provenance = Provenance::Computed;
  bool ties = false;  // some corner pair has more than one shortest path

  double at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
  const std::vector<int>& predecessors(int u, int v) const { return pred[static_cast<size_t>(u) * n + v]; }
  std::vector<int> corner_path(int u, int v) const;  // u ... v, lowest-id predecessor at each step

  // Injection bypasses geometry; links are the pairs no third corner splits.
  static DistanceTable injected(const std::vector<double>& matrix, int n, const ToleranceConfig& tol = {});
  std::string to_text() const;
  static DistanceTable from_text(const std::string& text, const ToleranceConfig& tol = {});
};

DistanceTable corner_distances(const VisibilityGraph& g, const ToleranceConfig& tol = {},
                               Exec exec = Exec::Parallel);

struct GeodesicResult {
  double distance = 0.0;
  std::vector<int> path;  // corner ids; empty iff s sees t
  Point s, t;
};

GeodesicResult point_distance(const FreeSpace& space, const DistanceTable& table, Point s, Point t);
GeodesicResult point_distance(const PolygonalDomain& dom, const DistanceTable& table, Point s, Point t,
                              const ToleranceConfig& tol = {});

struct PathSet {
  double distance = 0.0;
  std::vector<std::vector<int>> paths;  // corner sequences; a single empty path when s sees t
  std::uint64_t count = 0;
  std::vector<int> first;  // V_s
  std::vector<int> last;   // V_t
  bool hole_bound_ok = true;  // count <= h + 1
};

inline constexpr std::uint64_t kDefaultPathCap = 1000000;

PathSet enumerate_shortest_paths(const FreeSpace& space, const DistanceTable& table, Point s, Point t,
                                 double tol, std::uint64_t cap = kDefaultPathCap);
PathSet enumerate_shortest_paths(const PolygonalDomain& dom, const DistanceTable& table, Point s, Point t,
                                 const ToleranceConfig& tol = {}, std::uint64_t cap = kDefaultPathCap);

// Geodesic distances from a fixed source to every corner.
std::vector<double> source_weights(const FreeSpace& space, const DistanceTable& table, Point s,
                                   const Sighting& from_s);

}  // namespace geodiam

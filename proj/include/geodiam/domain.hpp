#pragma once

#include <string>
#include <vector>

#include "geodiam/geometry.hpp"

namespace geodiam {

struct PolygonChain {
  std::vector<Point> vertices;
};

// Unvalidated chain data as read from a file or produced by a generator.
struct RawDomain {
  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;
};

struct CornerRef {
  int chain = 0;  // 0 = outer, k = hole k-1
  int index = 0;
};

struct Edge {
  int a = 0;  // corner ids; the domain interior lies to the left of a->b
  int b = 0;
  int chain = 0;
};

struct Location {
  enum class Kind { Interior, Edge, Corner, Exterior };
  Kind kind = Kind::Exterior;
  int id = -1;         // edge id or corner id
  double param = 0.0;  // position along the edge, in (0,1)

  bool in_domain() const { return kind != Kind::Exterior; }
};

const char* to_string(Location::Kind k);

// Outer chain CCW, holes CW, so the interior is always on the left.
// Built only by validate_domain; treat as immutable afterwards.
struct PolygonalDomain {
  PolygonChain outer;
  std::vector<PolygonChain> holes;
  std::vector<Point> corners;
  std::vector<CornerRef> refs;
  std::vector<Edge> edges;
  std::vector<int> prev;  // neighbouring corners along the chain
  std::vector<int> next;
  std::vector<bool> reflex;  // interior angle > pi
  Point lo, hi;              // bounding box

  int n() const { return static_cast<int>(corners.size()); }
  int h() const { return static_cast<int>(holes.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  Segment segment(int e) const { return {corners[edges[e].a], corners[edges[e].b]}; }
  double diag() const { return dist(lo, hi); }
  RawDomain raw() const;
};

PolygonalDomain validate_domain(const RawDomain& raw, const ToleranceConfig& tol = {});

Location locate_point(const PolygonalDomain& dom, Point p, const ToleranceConfig& tol = {});

// Closed point membership (boundary counts as inside).
bool in_domain(const PolygonalDomain& dom, Point p, double tol);

// Checked: both endpoints must lie in the domain.
bool segment_visible(const PolygonalDomain& dom, Point a, Point b, const ToleranceConfig& tol = {});
// Unchecked variant for callers that already know a, b are in the domain.
bool segment_clear(const PolygonalDomain& dom, Point a, Point b, double tol);

// Scaled copy (used by scaling properties and the fixture builder).
RawDomain scaled(const RawDomain& raw, double k);

RawDomain parse_domain_json(const std::string& text);
std::string domain_to_json(const RawDomain& raw);
RawDomain load_domain_file(const std::string& path);
void save_domain_file(const RawDomain& raw, const std::string& path);

}  // namespace geodiam

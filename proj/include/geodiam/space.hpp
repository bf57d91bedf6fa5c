#pragma once

#include <vector>

#include "geodiam/domain.hpp"

namespace geodiam {

// What the distance machinery needs to know about free space. A real domain
// answers from its geometry; RoomSpace lets algebraic instances run without
// building corridors.
class FreeSpace {
 public:
  virtual ~FreeSpace() = default;
  virtual int corner_count() const = 0;
  virtual Point corner(int i) const = 0;
  virtual int edge_count() const = 0;
  virtual Segment edge(int e) const = 0;
  virtual int hole_count() const = 0;
  virtual Location locate(Point p) const = 0;
  // a and b are assumed to lie in free space
  virtual bool visible(Point a, Point b) const = 0;
  virtual const ToleranceConfig& tolerances() const = 0;
};

class DomainSpace final : public FreeSpace {
 public:
  explicit DomainSpace(const PolygonalDomain& dom, ToleranceConfig tol = {}) : dom_(dom), tol_(tol) {}
  int corner_count() const override { return dom_.n(); }
  Point corner(int i) const override { return dom_.corners[i]; }
  int edge_count() const override { return dom_.edge_count(); }
  Segment edge(int e) const override { return dom_.segment(e); }
  int hole_count() const override { return dom_.h(); }
  Location locate(Point p) const override { return locate_point(dom_, p, tol_); }
  bool visible(Point a, Point b) const override { return segment_clear(dom_, a, b, tol_.tol_geom); }
  const ToleranceConfig& tolerances() const override { return tol_; }
  const PolygonalDomain& domain() const { return dom_; }

 private:
  const PolygonalDomain& dom_;
  ToleranceConfig tol_;
};

// Disjoint convex rooms; a point sees exactly what shares a room with it.
// Rooms are given as CCW corner-id cycles. Holes are declared, not modelled.
class RoomSpace final : public FreeSpace {
 public:
  RoomSpace(std::vector<Point> corners, std::vector<std::vector<int>> rooms, int declared_holes,
            ToleranceConfig tol = {});
  int corner_count() const override { return static_cast<int>(corners_.size()); }
  Point corner(int i) const override { return corners_[i]; }
  int edge_count() const override { return static_cast<int>(edges_.size()); }
  Segment edge(int e) const override { return edges_[e]; }
  int hole_count() const override { return holes_; }
  Location locate(Point p) const override;
  bool visible(Point a, Point b) const override;
  const ToleranceConfig& tolerances() const override { return tol_; }

 private:
  int room_of(Point p) const;
  bool in_room(int r, Point p) const;

  std::vector<Point> corners_;
  std::vector<std::vector<int>> rooms_;
  std::vector<Segment> edges_;
  int holes_;
  ToleranceConfig tol_;
};

// Corners visible from p with their Euclidean distances.
struct Sighting {
  std::vector<int> ids;
  std::vector<double> len;
};
Sighting sight(const FreeSpace& space, Point p);

}  // namespace geodiam

#include "geodiam/space.hpp"

#include <cstdlib>
#include <limits>

#include <omp.h>

#include "geodiam/parallel.hpp"

namespace geodiam {

void configure_threads_from_env() {
  const char* v = std::getenv("GEODIAM_THREADS");
  if (!v) return;
  int k = std::atoi(v);
  if (k > 0) omp_set_num_threads(k);
}

int max_threads() { return omp_get_max_threads(); }

RoomSpace::RoomSpace(std::vector<Point> corners, std::vector<std::vector<int>> rooms, int declared_holes,
                     ToleranceConfig tol)
    : corners_(std::move(corners)), rooms_(std::move(rooms)), holes_(declared_holes), tol_(tol) {
  for (const auto& r : rooms_)
    for (size_t i = 0; i < r.size(); ++i) edges_.push_back({corners_[r[i]], corners_[r[(i + 1) % r.size()]]});
}

bool RoomSpace::in_room(int r, Point p) const {
  const auto& ids = rooms_[r];
  for (size_t i = 0; i < ids.size(); ++i) {
    Point a = corners_[ids[i]], b = corners_[ids[(i + 1) % ids.size()]];
    if (orient(a, b, p) / dist(a, b) < -tol_.tol_geom) return false;
  }
  return true;
}

int RoomSpace::room_of(Point p) const {
  for (int r = 0; r < static_cast<int>(rooms_.size()); ++r)
    if (in_room(r, p)) return r;
  return -1;
}

Location RoomSpace::locate(Point p) const {
  Location loc;
  for (int i = 0; i < corner_count(); ++i)
    if (dist(p, corners_[i]) <= tol_.tol_geom) {
      loc.kind = Location::Kind::Corner;
      loc.id = i;
      return loc;
    }
  for (int e = 0; e < edge_count(); ++e)
    if (point_segment_distance(p, edges_[e]) <= tol_.tol_geom) {
      loc.kind = Location::Kind::Edge;
      loc.id = e;
      loc.param = project_param(edges_[e], p);
      return loc;
    }
  loc.kind = room_of(p) >= 0 ? Location::Kind::Interior : Location::Kind::Exterior;
  return loc;
}

bool RoomSpace::visible(Point a, Point b) const {
  for (int r = 0; r < static_cast<int>(rooms_.size()); ++r)
    if (in_room(r, a) && in_room(r, b)) return true;
  return false;
}

Sighting sight(const FreeSpace& space, Point p) {
  Sighting s;
  for (int i = 0; i < space.corner_count(); ++i) {
    Point c = space.corner(i);
    if (space.visible(p, c)) {
      s.ids.push_back(i);
      s.len.push_back(dist(p, c));
    }
  }
  return s;
}

}  // namespace geodiam

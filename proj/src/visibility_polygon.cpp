#include "geodiam/visibility_polygon.hpp"

#include <algorithm>
#include <limits>

namespace geodiam {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kAngTol = 1e-10;

// CCW angle from direction a to direction b, in [0, 2pi)
double ccw_angle(Point a, Point b) {
  double t = std::atan2(cross(a, b), dot(a, b));
  return t < 0 ? t + kTwoPi : t;
}

bool in_free_sector(const PolygonalDomain& dom, int z, Point d) {
  Point z0 = dom.corners[z];
  Point a0 = dom.corners[dom.next[z]] - z0;
  Point a1 = dom.corners[dom.prev[z]] - z0;
  double sector = ccw_angle(a0, a1);
  double rel = ccw_angle(a0, d);
  return rel <= sector + kAngTol || rel >= kTwoPi - kAngTol;
}

struct RayHit {
  double far;  // where the ray itself stops
  double cw;   // where a ray rotated slightly clockwise stops
  double ccw;
};

RayHit cast(const PolygonalDomain& dom, int c, Point d, double tol) {
  const Point o = dom.corners[c];
  const double reach = 4.0 * dom.diag() + 1.0;
  const Segment ray{o, o + reach * d};
  RayHit h{reach, reach, reach};
  for (int e = 0; e < dom.edge_count(); ++e) {
    Segment s = dom.segment(e);
    if (!segments_cross_properly(ray, s, tol)) continue;
    Point r = s.b - s.a;
    double t = cross(s.a - o, r) / cross(d, r);
    h.far = std::min(h.far, t);
  }
  struct OnRay {
    double t;
    int z;
  };
  std::vector<OnRay> on;
  for (int z = 0; z < dom.n(); ++z) {
    if (z == c) continue;
    Point v = dom.corners[z] - o;
    double t = dot(v, d);
    if (t > tol && t < h.far + tol && std::fabs(cross(d, v)) <= tol) on.push_back({t, z});
  }
  std::sort(on.begin(), on.end(), [](const OnRay& a, const OnRay& b) { return a.t < b.t; });
  for (const auto& [t, z] : on) {
    Point z0 = dom.corners[z];
    Point en = dom.corners[dom.next[z]] - z0;
    Point ep = dom.corners[dom.prev[z]] - z0;
    auto side = [&](Point e) { return cross(d, e) / norm(e); };
    double sn = side(en), sp = side(ep);
    bool right = sn < -kAngTol || sp < -kAngTol;
    bool left = sn > kAngTol || sp > kAngTol;
    // an edge running forward along the ray has the obstacle on one side
    if (std::fabs(sn) <= kAngTol && dot(en, d) > 0) right = true;
    if (std::fabs(sp) <= kAngTol && dot(ep, d) > 0) left = true;
    if (right) h.cw = std::min(h.cw, t);
    if (left) h.ccw = std::min(h.ccw, t);
    if (!in_free_sector(dom, z, d)) h.far = std::min(h.far, t);
  }
  h.cw = std::min(h.cw, h.far);
  h.ccw = std::min(h.ccw, h.far);
  return h;
}

}  // namespace

std::vector<Point> corner_visibility_polygon(const PolygonalDomain& dom, int c, double tol) {
  const Point o = dom.corners[c];
  const Point a0 = unit(dom.corners[dom.next[c]] - o);
  const double sector = ccw_angle(a0, dom.corners[dom.prev[c]] - o);

  struct Event {
    double a;
    Point d;
  };
  std::vector<Event> angles{{0.0, a0}, {sector, unit(dom.corners[dom.prev[c]] - o)}};
  for (int z = 0; z < dom.n(); ++z) {
    if (z == c) continue;
    Point v = dom.corners[z] - o;
    if (norm(v) <= tol) continue;
    double a = ccw_angle(a0, v);
    if (a > kAngTol && a < sector - kAngTol && a < kTwoPi - kAngTol) angles.push_back({a, unit(v)});
  }
  std::stable_sort(angles.begin(), angles.end(), [](const Event& x, const Event& y) { return x.a < y.a; });
  std::vector<Event> ev;
  for (const Event& e : angles)
    if (ev.empty() || e.a - ev.back().a > kAngTol) ev.push_back(e);

  std::vector<Point> out{o};
  auto emit = [&](Point p) {
    if (dist(p, out.back()) > tol) out.push_back(p);
  };
  for (size_t k = 0; k < ev.size(); ++k) {
    const Point d = ev[k].d;
    RayHit h = cast(dom, c, d, tol);
    if (k > 0) emit(o + h.cw * d);
    if (k + 1 < ev.size()) emit(o + h.ccw * d);
  }
  if (out.size() > 1 && dist(out.back(), o) <= tol) out.pop_back();
  return out;
}

std::vector<std::vector<Point>> all_visibility_polygons(const PolygonalDomain& dom, double tol, Exec exec) {
  std::vector<std::vector<Point>> vps(dom.n());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int c = 0; c < dom.n(); ++c) vps[c] = corner_visibility_polygon(dom, c, tol);
  return vps;
}

double polygon_reach(const std::vector<Point>& vp, Point c) {
  double r = 0;
  for (Point p : vp) r = std::max(r, dist(p, c));
  return r;
}

std::vector<double> corner_reach(const PolygonalDomain& dom, double tol, Exec exec) {
  std::vector<double> r(dom.n());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int c = 0; c < dom.n(); ++c) r[c] = polygon_reach(corner_visibility_polygon(dom, c, tol), dom.corners[c]);
  return r;
}

std::vector<Interval> visible_intervals(const PolygonalDomain& dom, Point p, int e, double tol) {
  const Segment s = dom.segment(e);
  const Point r = s.b - s.a;
  std::vector<double> cuts{0.0, 1.0};
  for (int z = 0; z < dom.n(); ++z) {
    Point v = dom.corners[z] - p;
    double den = cross(r, v);
    if (std::fabs(den) <= 1e-15) continue;
    // line p + k v meets a + tau r
    double tau = cross(p - s.a, v) / den;
    if (tau > 0 && tau < 1) cuts.push_back(tau);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> out;
  const double len = s.length();
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    double lo = cuts[k], hi = cuts[k + 1];
    if ((hi - lo) * len <= tol) continue;
    if (!segment_clear(dom, p, s.at(0.5 * (lo + hi)), tol)) continue;
    if (!out.empty() && (lo - out.back().hi) * len <= tol)
      out.back().hi = hi;
    else
      out.push_back({lo, hi});
  }
  return out;
}

}  // namespace geodiam

#include <algorithm>
#include <cmath>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "geodiam/fixtures.hpp"
#include "geodiam/geodesic.hpp"

namespace geodiam {

namespace bg = boost::geometry;

namespace {

using BPoint = bg::model::d2::point_xy<double>;
using BPoly = bg::model::polygon<BPoint, false, true>;
using BMulti = bg::model::multi_polygon<BPoly>;

// Corridor width, mouth geometry and finger pitch. The layout numbers below
// were fitted by hand for corridor lengths around 10.
constexpr double kWidth = 0.05;
constexpr double kLip = 0.06;    // mouth opening along the triangle side
constexpr double kTrunk = 0.2;   // straight run out of each triangle corner
constexpr double kPitch = 0.3;   // one finger period
constexpr double kSep = 3.4;     // distance between the triangle centers
constexpr double kMinFinger = 0.1;

Point dir(double deg) {
  const double a = deg * M_PI / 180.0;
  return {std::cos(a), std::sin(a)};
}

BPoly to_poly(const std::vector<Point>& ring) {
  BPoly p;
  for (Point q : ring) p.outer().push_back({q.x, q.y});
  p.outer().push_back({ring[0].x, ring[0].y});
  bg::correct(p);
  return p;
}

struct Mouth {
  Point corner, port, d;
};

// Each triangle corner opens into a trunk that leaves at 50 degrees off the
// outward bisector, so anything in the triangle reaches the trunk by bending
// at the corner itself. sgn picks the handedness.
Mouth make_mouth(Point c, double phi, int sgn, std::vector<BPoly>& shapes) {
  const Point P = c + dir(phi);
  const Point d = dir(phi - 50 * sgn), n = dir(phi + 40 * sgn);
  const Point q = P + kLip * dir(phi + 150 * sgn);
  const Point r = q + (kWidth + kLip * std::sin(M_PI / 9)) * n;
  Point m = 0.5 * (q + P);
  m = m + 0.2 * (c - m);  // dips into the triangle so the union overlaps it
  shapes.push_back(to_poly({q, m, P, P + kTrunk * d, r + (kTrunk + kLip * std::cos(M_PI / 9)) * d, r}));
  // routes start a little inside the trunk for the same reason
  return {P, P + (kTrunk - 0.02) * d + 0.5 * kWidth * n, d};
}

using Path = std::vector<Point>;

// nper rectangular fingers of height h on the side of segment a->b, the
// first one starting at arc length `start` from a.
Path fingers(Point a, Point b, double h, int nper, int side, double start) {
  const Point t = unit(b - a), nn = side * perp(t);
  Path out;
  for (int i = 0; i < nper; ++i) {
    const double x = start + kPitch * i;
    out.push_back(a + x * t);
    out.push_back(a + x * t + h * nn);
    out.push_back(a + (x + 0.5 * kPitch) * t + h * nn);
    out.push_back(a + (x + 0.5 * kPitch) * t);
  }
  return out;
}

Path cat(std::initializer_list<Path> parts) {
  Path out;
  for (const Path& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

struct Layout {
  Point cu, cv;
  std::array<Mouth, 3> u, v;
  std::vector<BPoly> fixed;  // triangles and mouths
  double y_top = 2.75;       // outermost top run, raised for long corridors

  Point stub(const Mouth& m) const { return m.port + 0.1 * m.d; }
};

constexpr std::array<std::array<int, 2>, 6> kCorridors{{{0, 1}, {0, 2}, {2, 2}, {2, 0}, {1, 0}, {1, 1}}};
constexpr std::array<int, 6> kFingerCount{1, 2, 2, 2, 2, 1};

Path route(const Layout& L, int k, double h) {
  const double Y1 = L.y_top, Y2 = 1.8, Y3 = -1.8, Y4 = -1.5, Y5 = -0.9;
  const double X3 = kSep + 1.1, xa = 1.4, xb = 1.2, ch = 0.6;
  const Mouth &u0 = L.u[0], &u1 = L.u[1], &u2 = L.u[2], &v0 = L.v[0], &v1 = L.v[1], &v2 = L.v[2];
  const Point s1 = L.stub(v1);
  switch (k) {
    case 0:  // u0-v1 over the top
      return cat({{u0.port, {u0.port.x, Y1}},
                  fingers({u0.port.x, Y1}, {s1.x, Y1}, h, 1, 1, 1.5),
                  {{s1.x, Y1}, s1, v1.port}});
    case 1:  // u0-v2 under it, down the far side of the gap
      return cat({{u0.port, {u0.port.x, Y2}},
                  fingers({u0.port.x, Y2}, {v2.port.x, Y2}, h, 2, 1, 0.6),
                  {{v2.port.x, Y2}, v2.port}});
    case 2:  // u2-v2 loops through the gap, fingers reach back over U
      return cat({{u2.port, {xa, u2.port.y}},
                  fingers({xa, u2.port.y}, {xa, Y2 - 0.3}, h, 2, 1, 0.3),
                  {{xa, Y2 - 0.3}, {v2.port.x - 0.2, Y2 - 0.3}, {v2.port.x - 0.2, v2.port.y + 0.07}, v2.port}});
    case 3:  // u2-v0 under V, fingers up into the gap
      return cat({{u2.port, {xb, u2.port.y}, {xb, Y5}},
                  fingers({xb, Y5}, {v0.port.x, Y5}, h, 2, 1, 0.3),
                  {{v0.port.x, Y5}, v0.port}});
    case 4:  // u1-v0 below that, fingers up along U
      return cat({{u1.port, {u1.port.x, Y4}},
                  fingers({u1.port.x, Y4}, {v0.port.x, Y4}, h, 2, 1, 0.45),
                  {{v0.port.x, Y4}, v0.port}});
    default:  // u1-v1 around V
      return cat({{u1.port, {u1.port.x, Y3}},
                  fingers({u1.port.x, Y3}, {X3 - ch, Y3}, h, 1, -1, 1.5),
                  {{X3 - 0.5 * ch, Y3},
                   {X3, Y3 + 0.5 * ch},
                   {X3, v1.port.y + 0.3 - ch},
                   {X3 - ch, v1.port.y + 0.3},
                   {s1.x + 0.1, v1.port.y + 0.3},
                   s1,
                   v1.port}});
  }
}

double centerline(const Path& p) {
  double s = 2 * kTrunk;
  for (size_t i = 1; i < p.size(); ++i) s += dist(p[i - 1], p[i]);
  return s;
}

Layout make_layout() {
  Layout L;
  L.cu = {0, 0};
  L.cv = {kSep, 0};
  const std::array<double, 3> pu{150, 270, 30}, pv{330, 90, 210};
  const std::array<int, 3> su{1, -1, 1}, sv{1, -1, 1};
  std::vector<Point> tu, tv;
  for (int k = 0; k < 3; ++k) {
    tu.push_back(L.cu + dir(pu[k]));
    tv.push_back(L.cv + dir(pv[k]));
  }
  L.fixed.push_back(to_poly(tu));
  L.fixed.push_back(to_poly(tv));
  for (int k = 0; k < 3; ++k) {
    L.u[k] = make_mouth(L.cu, pu[k], su[k], L.fixed);
    L.v[k] = make_mouth(L.cv, pv[k], sv[k], L.fixed);
  }
  return L;
}

// Offsets the centerline by half the width on both sides with mitred joins.
// Done by hand because the library buffer rounds corners off by ~1e-7.
BPoly corridor(const Path& raw) {
  Path p;
  for (Point q : raw)
    if (p.empty() || dist(p.back(), q) > 1e-12) p.push_back(q);
  const size_t m = p.size();
  const double r = 0.5 * kWidth;
  auto side = [&](double sgn) {
    Path out{p[0] + sgn * r * perp(unit(p[1] - p[0]))};
    for (size_t i = 1; i + 1 < m; ++i) {
      const Point t0 = unit(p[i] - p[i - 1]), t1 = unit(p[i + 1] - p[i]);
      const Point a = p[i] + sgn * r * perp(t0), b = p[i] + sgn * r * perp(t1);
      const double den = cross(t0, t1);
      if (std::fabs(den) < 1e-12) {
        out.push_back(a);
        continue;
      }
      out.push_back(a + (cross(b - a, t1) / den) * t0);
    }
    out.push_back(p[m - 1] + sgn * r * perp(unit(p[m - 1] - p[m - 2])));
    return out;
  };
  Path ring = side(1.0), right = side(-1.0);
  ring.insert(ring.end(), right.rbegin(), right.rend());
  return to_poly(ring);
}

std::vector<Point> clean_ring(const std::vector<BPoint>& ring) {
  std::vector<Point> pts;
  for (size_t i = 0; i + 1 < ring.size(); ++i) {
    Point p{bg::get<0>(ring[i]), bg::get<1>(ring[i])};
    if (pts.empty() || dist(pts.back(), p) > 1e-10) pts.push_back(p);
  }
  while (pts.size() > 1 && dist(pts.front(), pts.back()) <= 1e-10) pts.pop_back();
  // drop collinear vertices
  bool changed = true;
  while (changed && pts.size() > 3) {
    changed = false;
    for (size_t i = 0; i < pts.size() && pts.size() > 3; ++i) {
      Point a = pts[(i + pts.size() - 1) % pts.size()], b = pts[i], c = pts[(i + 1) % pts.size()];
      if (std::fabs(cross(b - a, c - b)) <= 1e-12 * dist(a, b) * dist(b, c) + 1e-14) {
        pts.erase(pts.begin() + static_cast<long>(i));
        changed = true;
        --i;
      }
    }
  }
  return pts;
}

// The overlay rounds its output on an internal grid, so put every vertex
// back onto the input vertex or input edge crossing it came from.
struct Snapper {
  std::vector<Point> verts;
  std::vector<Segment> edges;

  void take(const BPoly& p) {
    const auto& r = p.outer();
    for (size_t i = 0; i + 1 < r.size(); ++i) {
      verts.push_back({r[i].x(), r[i].y()});
      edges.push_back({{r[i].x(), r[i].y()}, {r[i + 1].x(), r[i + 1].y()}});
    }
  }

  void fix(BPoint& q) const {
    constexpr double kReach = 1e-5;
    const Point p{q.x(), q.y()};
    for (Point v : verts)
      if (dist(v, p) <= kReach) {
        q = {v.x, v.y};
        return;
      }
    std::vector<const Segment*> near;
    for (const Segment& e : edges)
      if (point_segment_distance(p, e) <= kReach) near.push_back(&e);
    for (size_t i = 0; i < near.size(); ++i)
      for (size_t j = i + 1; j < near.size(); ++j) {
        const Point a = near[i]->b - near[i]->a, b = near[j]->b - near[j]->a;
        const double den = cross(a, b);
        if (std::fabs(den) <= 1e-9 * norm(a) * norm(b)) continue;
        const double t = cross(near[j]->a - near[i]->a, b) / den;
        const Point x = near[i]->a + t * a;
        if (dist(x, p) <= kReach) {
          q = {x.x, x.y};
          return;
        }
      }
  }
};

RawDomain assemble(const Layout& L, const std::array<double, 6>& h) {
  BMulti acc;
  Snapper snap;
  auto add = [&](const BPoly& p) {
    snap.take(p);
    BMulti next;
    bg::union_(acc, p, next);
    acc = std::move(next);
  };
  for (const BPoly& p : L.fixed) add(p);
  for (int k = 0; k < 6; ++k) add(corridor(route(L, k, h[k])));
  if (acc.size() != 1 || acc[0].inners().size() != 5)
    throw Error(ErrorCode::InfeasibleParams, "jigsaw layout does not close into five holes");
  for (auto& pt : acc[0].outer()) snap.fix(pt);
  for (auto& in : acc[0].inners())
    for (auto& pt : in) snap.fix(pt);
  RawDomain raw;
  raw.outer = clean_ring(acc[0].outer());
  for (const auto& in : acc[0].inners()) raw.holes.push_back(clean_ring(in));
  return raw;
}

int find_corner(const PolygonalDomain& dom, Point p) {
  for (int i = 0; i < dom.n(); ++i)
    if (dist(dom.corners[i], p) <= 1e-9) return i;
  throw Error(ErrorCode::InfeasibleParams, "triangle corner lost in the union");
}

}  // namespace

Jigsaw build_jigsaw(double corridor_len) {
  if (!std::isfinite(corridor_len)) throw Error(ErrorCode::InfeasibleParams, "corridor length must be finite");
  Layout L = make_layout();

  // Finger heights from the centerlines first; the geodesic length is
  // nearly affine in each height, so a few secant steps on the real
  // corner distances finish the job.
  std::array<double, 6> h{}, slope{};
  for (int k = 0; k < 6; ++k) {
    double c0 = centerline(route(L, k, 0.0));
    slope[k] = 2.0 * kFingerCount[k];
    h[k] = (corridor_len - c0) / slope[k];
  }
  L.y_top = std::max(2.75, 1.8 + h[1] + 0.25);
  h[0] = (corridor_len - centerline(route(L, 0, 0.0))) / slope[0];

  Jigsaw out;
  ToleranceConfig tol;
  std::array<double, 6> got{}, prev_h{}, prev_got{};
  for (int it = 0; it < 12; ++it) {
    for (int k = 0; k < 6; ++k)
      if (!(h[k] >= kMinFinger))
        throw Error(ErrorCode::InfeasibleParams,
                    "corridor length " + std::to_string(corridor_len) + " is below what the layout can realize");
    out.raw = assemble(L, h);
    PolygonalDomain dom = validate_domain(out.raw, tol);
    DistanceTable table = corner_distances(build_visibility_graph(dom, tol, Exec::Serial), tol, Exec::Serial);
    double err = 0;
    for (int k = 0; k < 6; ++k) {
      int a = find_corner(dom, L.u[kCorridors[k][0]].corner);
      int b = find_corner(dom, L.v[kCorridors[k][1]].corner);
      got[k] = table.at(a, b);
      err = std::max(err, std::fabs(got[k] - corridor_len));
    }
    if (err <= 1e-12 * std::max(1.0, corridor_len)) break;
    for (int k = 0; k < 6; ++k) {
      if (it > 0 && std::fabs(h[k] - prev_h[k]) > 1e-15) {
        double s = (got[k] - prev_got[k]) / (h[k] - prev_h[k]);
        if (s > 0.5) slope[k] = s;
      }
      prev_h[k] = h[k];
      prev_got[k] = got[k];
      h[k] += (corridor_len - got[k]) / slope[k];
    }
  }
  double lo = *std::min_element(got.begin(), got.end()), hi = *std::max_element(got.begin(), got.end());
  if (hi - lo > tol.tol_dist) throw Error(ErrorCode::InfeasibleParams, "corridor lengths did not equalize");
  out.corridor_len = 0.5 * (lo + hi);
  out.cu = L.cu;
  out.cv = L.cv;
  for (int k = 0; k < 3; ++k) {
    out.u[k] = L.u[k].corner;
    out.v[k] = L.v[k].corner;
  }
  out.corridors = kCorridors;
  return out;
}

}  // namespace geodiam

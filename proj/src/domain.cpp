#include "geodiam/domain.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace geodiam {

using json = nlohmann::json;

const char* to_string(Location::Kind k) {
  switch (k) {
    case Location::Kind::Interior: return "interior";
    case Location::Kind::Edge: return "edge";
    case Location::Kind::Corner: return "corner";
    case Location::Kind::Exterior: return "exterior";
  }
  return "?";
}

namespace {

double signed_area(const std::vector<Point>& v) {
  double a = 0;
  for (size_t i = 0, n = v.size(); i < n; ++i) a += cross(v[i], v[(i + 1) % n]);
  return 0.5 * a;
}

// crossing-number test, ignores boundary (callers handle it first)
bool inside_ring(const std::vector<Point>& v, Point p) {
  bool in = false;
  for (size_t i = 0, n = v.size(), j = n - 1; i < n; j = i++) {
    const Point& a = v[i];
    const Point& b = v[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      double x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x) in = !in;
    }
  }
  return in;
}

void check_chain(const std::vector<Point>& v, double tol, const char* what) {
  const size_t n = v.size();
  if (n < 3) throw Error(ErrorCode::DegenerateChain, std::string(what) + " has fewer than 3 vertices");
  for (const Point& p : v)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw Error(ErrorCode::DegenerateChain, std::string(what) + " has a non-finite coordinate");
  for (size_t i = 0; i < n; ++i)
    if (dist(v[i], v[(i + 1) % n]) <= tol)
      throw Error(ErrorCode::DegenerateChain, std::string(what) + " repeats a vertex");
  if (std::fabs(signed_area(v)) <= tol)
    throw Error(ErrorCode::DegenerateChain, std::string(what) + " has zero area");
  for (size_t i = 0; i < n; ++i) {
    Segment s{v[i], v[(i + 1) % n]};
    // adjacent edge folding back over this one
    Point nx = v[(i + 2) % n];
    if (point_segment_distance(nx, s) <= tol)
      throw Error(ErrorCode::SelfIntersectingChain, std::string(what) + " folds back on itself");
    for (size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      Segment t{v[j], v[(j + 1) % n]};
      if (segments_touch(s, t, tol))
        throw Error(ErrorCode::SelfIntersectingChain, std::string(what) + " is not simple");
    }
  }
}

bool rings_touch(const std::vector<Point>& a, const std::vector<Point>& b, double tol) {
  for (size_t i = 0; i < a.size(); ++i) {
    Segment s{a[i], a[(i + 1) % a.size()]};
    for (size_t j = 0; j < b.size(); ++j)
      if (segments_touch(s, {b[j], b[(j + 1) % b.size()]}, tol)) return true;
  }
  return false;
}

}  // namespace

RawDomain PolygonalDomain::raw() const {
  RawDomain r;
  r.outer = outer.vertices;
  for (const auto& h : holes) r.holes.push_back(h.vertices);
  return r;
}

PolygonalDomain validate_domain(const RawDomain& raw, const ToleranceConfig& tol) {
  const double eps = tol.tol_geom;
  check_chain(raw.outer, eps, "outer chain");
  for (size_t k = 0; k < raw.holes.size(); ++k)
    check_chain(raw.holes[k], eps, ("hole " + std::to_string(k)).c_str());

  PolygonalDomain d;
  d.outer.vertices = raw.outer;
  if (signed_area(d.outer.vertices) < 0) std::reverse(d.outer.vertices.begin(), d.outer.vertices.end());
  for (const auto& h : raw.holes) {
    PolygonChain c{h};
    if (signed_area(c.vertices) > 0) std::reverse(c.vertices.begin(), c.vertices.end());
    d.holes.push_back(std::move(c));
  }

  for (size_t k = 0; k < d.holes.size(); ++k) {
    const auto& hv = d.holes[k].vertices;
    if (rings_touch(hv, d.outer.vertices, eps))
      throw Error(ErrorCode::HoleOutsideOuter, "hole " + std::to_string(k) + " meets the outer chain");
    for (const Point& p : hv)
      if (!inside_ring(d.outer.vertices, p))
        throw Error(ErrorCode::HoleOutsideOuter, "hole " + std::to_string(k) + " lies outside");
  }
  for (size_t a = 0; a < d.holes.size(); ++a)
    for (size_t b = a + 1; b < d.holes.size(); ++b) {
      const auto& ha = d.holes[a].vertices;
      const auto& hb = d.holes[b].vertices;
      if (rings_touch(ha, hb, eps) || inside_ring(ha, hb[0]) || inside_ring(hb, ha[0]))
        throw Error(ErrorCode::HolesOverlap,
                    "holes " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
    }

  auto add_chain = [&](const std::vector<Point>& v, int chain) {
    const int base = d.n();
    const int m = static_cast<int>(v.size());
    for (int i = 0; i < m; ++i) {
      d.corners.push_back(v[i]);
      d.refs.push_back({chain, i});
      d.prev.push_back(base + (i + m - 1) % m);
      d.next.push_back(base + (i + 1) % m);
      d.edges.push_back({base + i, base + (i + 1) % m, chain});
    }
  };
  add_chain(d.outer.vertices, 0);
  for (size_t k = 0; k < d.holes.size(); ++k) add_chain(d.holes[k].vertices, static_cast<int>(k) + 1);

  d.reflex.resize(d.n());
  d.lo = d.hi = d.corners[0];
  for (int i = 0; i < d.n(); ++i) {
    Point p = d.corners[d.prev[i]], c = d.corners[i], q = d.corners[d.next[i]];
    d.reflex[i] = cross(c - p, q - c) < 0;
    d.lo = {std::min(d.lo.x, c.x), std::min(d.lo.y, c.y)};
    d.hi = {std::max(d.hi.x, c.x), std::max(d.hi.y, c.y)};
  }
  return d;
}

Location locate_point(const PolygonalDomain& dom, Point p, const ToleranceConfig& tol) {
  const double eps = tol.tol_geom;
  Location loc;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dom.n(); ++i) {
    double dd = dist(p, dom.corners[i]);
    if (dd <= eps && dd < best) {
      best = dd;
      loc.kind = Location::Kind::Corner;
      loc.id = i;
    }
  }
  if (loc.kind == Location::Kind::Corner) return loc;
  for (int e = 0; e < dom.edge_count(); ++e) {
    Segment s = dom.segment(e);
    double dd = point_segment_distance(p, s);
    if (dd <= eps && dd < best) {
      best = dd;
      loc.kind = Location::Kind::Edge;
      loc.id = e;
      loc.param = std::clamp(project_param(s, p), 0.0, 1.0);
    }
  }
  if (loc.kind == Location::Kind::Edge) return loc;
  bool in = inside_ring(dom.outer.vertices, p);
  for (size_t k = 0; in && k < dom.holes.size(); ++k)
    if (inside_ring(dom.holes[k].vertices, p)) in = false;
  loc.kind = in ? Location::Kind::Interior : Location::Kind::Exterior;
  return loc;
}

bool in_domain(const PolygonalDomain& dom, Point p, double tol) {
  // parity over all chains: inside outer and outside every hole
  bool in = false;
  for (int e = 0; e < dom.edge_count(); ++e) {
    const Point& a = dom.corners[dom.edges[e].a];
    const Point& b = dom.corners[dom.edges[e].b];
    if (point_segment_distance(p, {a, b}) <= tol) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      double x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x) in = !in;
    }
  }
  return in;
}

bool segment_clear(const PolygonalDomain& dom, Point a, Point b, double tol) {
  const Segment ab{a, b};
  const double len = ab.length();
  if (len <= tol) return true;
  for (int e = 0; e < dom.edge_count(); ++e)
    if (segments_cross_properly(ab, dom.segment(e), tol)) return false;
  // split at corners lying on ab; each piece is then wholly inside or outside
  std::vector<double> cuts;
  for (int i = 0; i < dom.n(); ++i) {
    const Point& c = dom.corners[i];
    if (point_segment_distance(c, ab) > tol) continue;
    double t = project_param(ab, c);
    if (t * len <= tol || (1 - t) * len <= tol) continue;
    cuts.push_back(t);
  }
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    if ((cuts[k + 1] - cuts[k]) * len <= tol) continue;
    if (!in_domain(dom, ab.at(0.5 * (cuts[k] + cuts[k + 1])), tol)) return false;
  }
  return true;
}

bool segment_visible(const PolygonalDomain& dom, Point a, Point b, const ToleranceConfig& tol) {
  if (!in_domain(dom, a, tol.tol_geom) || !in_domain(dom, b, tol.tol_geom))
    throw Error(ErrorCode::PointOutsideDomain, "segment endpoint outside the domain");
  return segment_clear(dom, a, b, tol.tol_geom);
}

RawDomain scaled(const RawDomain& raw, double k) {
  RawDomain r = raw;
  for (auto& p : r.outer) p = k * p;
  for (auto& h : r.holes)
    for (auto& p : h) p = k * p;
  return r;
}

namespace {

std::vector<Point> read_ring(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::IoError, "chain must be an array of [x,y] pairs");
  std::vector<Point> v;
  for (const auto& q : j) {
    if (!q.is_array() || q.size() != 2 || !q[0].is_number() || !q[1].is_number())
      throw Error(ErrorCode::IoError, "vertex must be a [x,y] pair");
    v.push_back({q[0].get<double>(), q[1].get<double>()});
  }
  return v;
}

json write_ring(const std::vector<Point>& v) {
  json a = json::array();
  for (const Point& p : v) a.push_back({p.x, p.y});
  return a;
}

}  // namespace

RawDomain parse_domain_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::IoError, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("outer")) throw Error(ErrorCode::IoError, "missing \"outer\"");
  RawDomain r;
  r.outer = read_ring(j["outer"]);
  if (j.contains("holes")) {
    if (!j["holes"].is_array()) throw Error(ErrorCode::IoError, "\"holes\" must be an array");
    for (const auto& h : j["holes"]) r.holes.push_back(read_ring(h));
  }
  return r;
}

std::string domain_to_json(const RawDomain& raw) {
  json j;
  j["outer"] = write_ring(raw.outer);
  j["holes"] = json::array();
  for (const auto& h : raw.holes) j["holes"].push_back(write_ring(h));
  return j.dump();
}

RawDomain load_domain_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_domain_json(ss.str());
}

void save_domain_file(const RawDomain& raw, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << domain_to_json(raw) << "\n";
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace geodiam

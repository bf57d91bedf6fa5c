#include "geodiam/geodesic.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

namespace geodiam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool corner_between(const std::vector<Point>& pts, Point a, Point b, int skip_a, int skip_b, double tol) {
  const Segment ab{a, b};
  const double len = ab.length();
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (i == skip_a || i == skip_b) continue;
    if (point_segment_distance(pts[i], ab) > tol) continue;
    double t = project_param(ab, pts[i]);
    if (t * len > tol && (1 - t) * len > tol) return true;
  }
  return false;
}

void fill_predecessors(DistanceTable& T, double tol, Exec exec) {
  const int n = T.n;
  T.pred.assign(static_cast<size_t>(n) * n, {});
  int ties = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : ties) if (exec == Exec::Parallel)
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      auto& p = T.pred[static_cast<size_t>(u) * n + v];
      for (auto [w, len] : T.links[v])
        if (T.at(u, w) + len <= T.at(u, v) + tol) p.push_back(w);
      std::sort(p.begin(), p.end());
      if (p.size() > 1) ++ties;
    }
  T.ties = ties > 0;
}

std::vector<double> dijkstra(const std::vector<std::vector<std::pair<int, double>>>& adj, int src) {
  std::vector<double> d(adj.size(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  d[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du > d[u]) continue;
    for (auto [v, w] : adj[u])
      if (du + w < d[v]) {
        d[v] = du + w;
        pq.push({d[v], v});
      }
  }
  return d;
}

}  // namespace

bool VisibilityGraph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, -kInf));
  return it != a.end() && it->first == v;
}

size_t VisibilityGraph::edge_count() const {
  size_t m = 0;
  for (const auto& a : adj) m += a.size();
  return m / 2;
}

VisibilityGraph build_visibility_graph(const PolygonalDomain& dom, const ToleranceConfig& tol, Exec exec) {
  VisibilityGraph g;
  g.n = dom.n();
  g.pts = dom.corners;
  g.adj.assign(g.n, {});
  std::vector<std::vector<int>> hits(g.n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (segment_clear(dom, dom.corners[u], dom.corners[v], tol.tol_geom)) hits[u].push_back(v);
  for (int u = 0; u < g.n; ++u)
    for (int v : hits[u]) {
      double w = dist(dom.corners[u], dom.corners[v]);
      g.adj[u].push_back({v, w});
      g.adj[v].push_back({u, w});
    }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

DistanceTable corner_distances(const VisibilityGraph& g, const ToleranceConfig& tol, Exec exec) {
  DistanceTable T;
  T.n = g.n;
  T.provenance = DistanceTable::Provenance::Computed;
  T.d.assign(static_cast<size_t>(g.n) * g.n, kInf);
  T.links.assign(g.n, {});
  for (int u = 0; u < g.n; ++u)
    for (auto [v, w] : g.adj[u])
      if (!corner_between(g.pts, g.pts[u], g.pts[v], u, v, tol.tol_geom)) T.links[u].push_back({v, w});
  int unreachable = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : unreachable) if (exec == Exec::Parallel)
  for (int u = 0; u < g.n; ++u) {
    auto row = dijkstra(T.links, u);
    for (int v = 0; v < g.n; ++v) {
      T.d[static_cast<size_t>(u) * g.n + v] = row[v];
      if (row[v] == kInf) ++unreachable;
    }
  }
  if (unreachable) throw Error(ErrorCode::DisconnectedDomain, "some corner is unreachable");
  // Dijkstra sums in path order; make the matrix exactly symmetric
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      double m = std::min(T.d[static_cast<size_t>(u) * g.n + v], T.d[static_cast<size_t>(v) * g.n + u]);
      T.d[static_cast<size_t>(u) * g.n + v] = T.d[static_cast<size_t>(v) * g.n + u] = m;
    }
  fill_predecessors(T, tol.tol_dist, exec);
  return T;
}

DistanceTable DistanceTable::injected(const std::vector<double>& matrix, int n, const ToleranceConfig& tol) {
  if (static_cast<int>(matrix.size()) != n * n)
    throw Error(ErrorCode::InvalidArgument, "distance matrix has the wrong size");
  DistanceTable T;
  T.n = n;
  T.d = matrix;
  T.provenance = Provenance::Injected;
  T.links.assign(n, {});
  for (int a = 0; a < n; ++a) {
    if (T.at(a, a) != 0) throw Error(ErrorCode::InvalidArgument, "distance matrix diagonal must be zero");
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (std::fabs(T.at(a, b) - T.at(b, a)) > tol.tol_dist)
        throw Error(ErrorCode::InvalidArgument, "distance matrix is not symmetric");
      bool split = false;
      for (int w = 0; w < n && !split; ++w)
        if (w != a && w != b && T.at(a, w) + T.at(w, b) <= T.at(a, b) + tol.tol_geom) split = true;
      if (!split) T.links[a].push_back({b, T.at(a, b)});
    }
  }
  fill_predecessors(T, tol.tol_dist, Exec::Serial);
  return T;
}

std::vector<int> DistanceTable::corner_path(int u, int v) const {
  std::vector<int> rev{v};
  int cur = v;
  while (cur != u) {
    const auto& p = predecessors(u, cur);
    if (p.empty()) break;
    cur = p.front();
    rev.push_back(cur);
    if (static_cast<int>(rev.size()) > n) break;
  }
  return {rev.rbegin(), rev.rend()};
}

std::string DistanceTable::to_text() const {
  std::ostringstream os;
  os << n << "\n";
  char buf[40];
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      std::snprintf(buf, sizeof buf, "%.17g", at(u, v));
      os << (v ? " " : "") << buf;
    }
    os << "\n";
  }
  return os.str();
}

DistanceTable DistanceTable::from_text(const std::string& text, const ToleranceConfig& tol) {
  std::istringstream is(text);
  int n = 0;
  if (!(is >> n) || n <= 0) throw Error(ErrorCode::IoError, "distance matrix: bad size line");
  std::vector<double> m(static_cast<size_t>(n) * n);
  for (auto& x : m)
    if (!(is >> x)) throw Error(ErrorCode::IoError, "distance matrix: truncated");
  return injected(m, n, tol);
}

GeodesicResult point_distance(const FreeSpace& space, const DistanceTable& table, Point s, Point t) {
  if (!space.locate(s).in_domain() || !space.locate(t).in_domain())
    throw Error(ErrorCode::PointOutsideDomain, "query point outside the domain");
  GeodesicResult r;
  r.s = s;
  r.t = t;
  if (space.visible(s, t)) {
    r.distance = dist(s, t);
    return r;
  }
  Sighting a = sight(space, s), b = sight(space, t);
  double best = kInf;
  int bu = -1, bv = -1;
  for (size_t i = 0; i < a.ids.size(); ++i)
    for (size_t j = 0; j < b.ids.size(); ++j) {
      double val = (a.len[i] + b.len[j]) + table.at(a.ids[i], b.ids[j]);  // order-free sum keeps d(s,t) = d(t,s)
      if (val < best) {
        best = val;
        bu = a.ids[i];
        bv = b.ids[j];
      }
    }
  if (bu < 0) throw Error(ErrorCode::DisconnectedDomain, "no corner connects the query points");
  r.distance = best;
  r.path = table.corner_path(bu, bv);
  return r;
}

GeodesicResult point_distance(const PolygonalDomain& dom, const DistanceTable& table, Point s, Point t,
                              const ToleranceConfig& tol) {
  return point_distance(DomainSpace(dom, tol), table, s, t);
}

std::vector<double> source_weights(const FreeSpace& space, const DistanceTable& table, Point s,
                                   const Sighting& from_s) {
  (void)s;
  std::vector<double> w(space.corner_count(), kInf);
  for (int c = 0; c < space.corner_count(); ++c)
    for (size_t i = 0; i < from_s.ids.size(); ++i)
      w[c] = std::min(w[c], from_s.len[i] + table.at(from_s.ids[i], c));
  return w;
}

PathSet enumerate_shortest_paths(const FreeSpace& space, const DistanceTable& table, Point s, Point t, double tol,
                                 std::uint64_t cap) {
  if (!space.locate(s).in_domain() || !space.locate(t).in_domain())
    throw Error(ErrorCode::PointOutsideDomain, "query point outside the domain");
  PathSet ps;
  if (space.visible(s, t)) {
    ps.distance = dist(s, t);
    ps.paths.push_back({});
    ps.count = 1;
    return ps;
  }
  const int n = space.corner_count();
  const double g = space.tolerances().tol_geom;
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = space.corner(i);

  Sighting a = sight(space, s), b = sight(space, t);
  std::vector<double> ds = source_weights(space, table, s, a);
  double D = kInf;
  for (size_t j = 0; j < b.ids.size(); ++j) D = std::min(D, ds[b.ids[j]] + b.len[j]);
  if (D == kInf) throw Error(ErrorCode::DisconnectedDomain, "no corner connects the query points");
  ps.distance = D;

  std::vector<char> start(n, 0), finish(n, 0);
  for (size_t i = 0; i < a.ids.size(); ++i) {
    int u = a.ids[i];
    // a corner sitting on s is s itself, not a first hop
    if (a.len[i] > g && a.len[i] <= ds[u] + tol && !corner_between(pts, s, pts[u], -1, u, g)) start[u] = 1;
  }
  for (size_t j = 0; j < b.ids.size(); ++j) {
    int v = b.ids[j];
    if (b.len[j] > g && ds[v] + b.len[j] <= D + tol && !corner_between(pts, pts[v], t, v, -1, g)) finish[v] = 1;
  }
  // tight hops, kept only between strictly increasing source distances
  auto tight = [&](int u, int w, double len) { return ds[u] < ds[w] && ds[u] + len <= ds[w] + tol; };

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return ds[x] < ds[y] || (ds[x] == ds[y] && x < y); });

  // reach[u]: u lies on some tight route to t
  std::vector<char> reach(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    if (finish[u]) reach[u] = 1;
    for (auto [w, len] : table.links[u])
      if (reach[w] && tight(u, w, len)) reach[u] = 1;
  }
  // number of tight routes from u to t (saturating)
  std::vector<double> ways(n, 0.0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    if (!reach[u]) continue;
    double c = finish[u] ? 1.0 : 0.0;
    for (auto [w, len] : table.links[u])
      if (reach[w] && tight(u, w, len)) c += ways[w];
    ways[u] = c;
  }
  double total = 0;
  for (int u = 0; u < n; ++u)
    if (start[u] && reach[u]) total += ways[u];
  if (total > static_cast<double>(cap))
    throw Error(ErrorCode::PathExplosion, "more than " + std::to_string(cap) + " shortest paths");
  ps.count = static_cast<std::uint64_t>(total + 0.5);

  std::vector<int> cur;
  std::function<void(int)> walk = [&](int u) {
    cur.push_back(u);
    if (finish[u]) ps.paths.push_back(cur);
    for (auto [w, len] : table.links[u])
      if (reach[w] && tight(u, w, len)) walk(w);
    cur.pop_back();
  };
  for (int u = 0; u < n; ++u)
    if (start[u] && reach[u]) walk(u);

  for (const auto& p : ps.paths) {
    ps.first.push_back(p.front());
    ps.last.push_back(p.back());
  }
  for (auto* v : {&ps.first, &ps.last}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  ps.hole_bound_ok = ps.count <= static_cast<std::uint64_t>(space.hole_count()) + 1;
  return ps;
}

PathSet enumerate_shortest_paths(const PolygonalDomain& dom, const DistanceTable& table, Point s, Point t,
                                 const ToleranceConfig& tol, std::uint64_t cap) {
  return enumerate_shortest_paths(DomainSpace(dom, tol), table, s, t, tol.tol_dist, cap);
}

}  // namespace geodiam

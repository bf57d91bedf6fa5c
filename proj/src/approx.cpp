#include "geodiam/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "geodiam/space.hpp"
#include "geodiam/spm.hpp"

namespace geodiam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// boundary points at spacing h along every edge, corners excluded
std::vector<Point> edge_samples(const std::vector<std::pair<Point, Point>>& edges, double h) {
  std::vector<Point> out;
  for (const auto& [a, b] : edges) {
    const int k = static_cast<int>(std::ceil(dist(a, b) / h));
    for (int i = 1; i < k; ++i) out.push_back(a + (static_cast<double>(i) / k) * (b - a));
  }
  return out;
}

std::vector<std::pair<Point, Point>> domain_edges(const PolygonalDomain& dom) {
  std::vector<std::pair<Point, Point>> out;
  for (int e = 0; e < dom.edge_count(); ++e) out.push_back({dom.corners[dom.edges[e].a], dom.corners[dom.edges[e].b]});
  return out;
}

}  // namespace

const char* to_string(ApproxResult::Guarantee g) {
  return g == ApproxResult::Guarantee::Factor2Lower ? "factor2_lower" : "one_plus_eps";
}

ApproxResult two_approx(const PolygonalDomain& dom, const DistanceTable& table, Point seed,
                        const ToleranceConfig& tol) {
  if (!in_domain(dom, seed, tol.tol_geom)) throw Error(ErrorCode::PointOutsideDomain, "seed outside the domain");
  FarthestResult f = farthest_point(dom, table, seed, tol);
  ApproxResult r;
  r.value = f.distance;
  r.s = seed;
  r.t = f.point;
  r.guarantee = ApproxResult::Guarantee::Factor2Lower;
  r.candidates = f.generated;
  return r;
}

ApproxResult grid_approx(const PolygonalDomain& dom, const DistanceTable& table, double eps,
                         const ToleranceConfig& tol, Exec exec) {
  if (!(eps > 0 && eps < 1)) throw Error(ErrorCode::InvalidEps, "eps must lie in (0, 1)");
  const double d0 = two_approx(dom, table, dom.corners[0], tol).value;
  const double cell = eps * d0 / 4;

  std::vector<Point> pts = dom.corners;
  for (Point p : edge_samples(domain_edges(dom), cell)) pts.push_back(p);
  const int nx = static_cast<int>(std::floor((dom.hi.x - dom.lo.x) / cell));
  const int ny = static_cast<int>(std::floor((dom.hi.y - dom.lo.y) / cell));
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j) {
      Point p{dom.lo.x + i * cell, dom.lo.y + j * cell};
      if (in_domain(dom, p, tol.tol_geom)) pts.push_back(p);
    }

  DomainSpace space(dom, tol);
  const int m = static_cast<int>(pts.size());
  std::vector<Sighting> seen(m);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int i = 0; i < m; ++i) seen[i] = sight(space, pts[i]);

  std::vector<double> best(m, -1.0);
  std::vector<int> arg(m, -1);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int i = 0; i < m; ++i) {
    const std::vector<double> w = source_weights(space, table, pts[i], seen[i]);
    for (int j = i + 1; j < m; ++j) {
      double d = kInf;
      for (size_t k = 0; k < seen[j].ids.size(); ++k) d = std::min(d, w[seen[j].ids[k]] + seen[j].len[k]);
      const double e = dist(pts[i], pts[j]);
      if (e < d && space.visible(pts[i], pts[j])) d = e;
      if (d > best[i]) {
        best[i] = d;
        arg[i] = j;
      }
    }
  }
  ApproxResult r;
  r.guarantee = ApproxResult::Guarantee::OnePlusEps;
  r.eps = eps;
  r.cell_size = cell;
  r.candidates = pts.size();
  r.value = 0;
  r.s = r.t = pts[0];
  for (int i = 0; i < m; ++i)
    if (arg[i] >= 0 && best[i] > r.value) {
      r.value = best[i];
      r.s = pts[i];
      r.t = pts[arg[i]];
    }
  return r;
}

// ---- oracle; nothing below calls into the geodesic engine ----

GridOracle::GridOracle(const PolygonalDomain& dom, int resolution, Exec exec) : res_(resolution), exec_(exec) {
  if (resolution < 1) throw Error(ErrorCode::InvalidArgument, "grid resolution must be positive");
  corners_ = dom.corners;
  edges_ = domain_edges(dom);
  chains_.push_back(dom.outer.vertices);
  for (const auto& h : dom.holes) chains_.push_back(h.vertices);
  const double w = dom.hi.x - dom.lo.x, h = dom.hi.y - dom.lo.y;
  cell_ = std::max(w, h) / resolution;
  tol_ = 1e-9 * std::max(1.0, std::max(w, h));

  // corner all-pairs by Dijkstra over mutual visibility
  const int n = static_cast<int>(corners_.size());
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (clear(corners_[a], corners_[b])) {
        const double d = dist(corners_[a], corners_[b]);
        adj[a].push_back({b, d});
        adj[b].push_back({a, d});
      }
  cc_.assign(static_cast<size_t>(n) * n, kInf);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int src = 0; src < n; ++src) {
    double* row = &cc_[static_cast<size_t>(src) * n];
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> q;
    row[src] = 0;
    q.push({0, src});
    while (!q.empty()) {
      auto [d, u] = q.top();
      q.pop();
      if (d > row[u]) continue;
      for (auto [v, l] : adj[u])
        if (d + l < row[v]) {
          row[v] = d + l;
          q.push({row[v], v});
        }
    }
  }

  // nodes: corners, boundary samples, free cell centers
  nodes_ = corners_;
  std::vector<Point> samples = edge_samples(edges_, cell_);
  nodes_.insert(nodes_.end(), samples.begin(), samples.end());
  std::map<std::pair<int, int>, bool> centers;
  const int nx = static_cast<int>(std::ceil(w / cell_)), ny = static_cast<int>(std::ceil(h / cell_));
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      Point p{dom.lo.x + (i + 0.5) * cell_, dom.lo.y + (j + 0.5) * cell_};
      if (inside(p)) {
        nodes_.push_back(p);
        centers[{i, j}] = true;
      }
    }
  const double diag = std::sqrt(2.0) * cell_;
  for (size_t k = 0; k < corners_.size() + samples.size() && !thin_; ++k) {
    const Point p = nodes_[k];
    const int ci = static_cast<int>(std::floor((p.x - dom.lo.x) / cell_));
    const int cj = static_cast<int>(std::floor((p.y - dom.lo.y) / cell_));
    bool near = false;
    for (int di = -2; di <= 2 && !near; ++di)
      for (int dj = -2; dj <= 2 && !near; ++dj) {
        if (!centers.count({ci + di, cj + dj})) continue;
        Point c{dom.lo.x + (ci + di + 0.5) * cell_, dom.lo.y + (cj + dj + 0.5) * cell_};
        near = dist(c, p) <= diag && clear(c, p);
      }
    thin_ = !near;
  }

  node_seen_.resize(nodes_.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int y = 0; y < static_cast<int>(nodes_.size()); ++y) node_seen_[y] = seen_corners(nodes_[y]);
}

double GridOracle::error_bound() const { return std::sqrt(2.0) * cell_; }

bool GridOracle::inside(Point p) const {
  for (const auto& [a, b] : edges_) {
    const Point ab = b - a;
    double t = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
    if (dist(p, a + t * ab) <= tol_) return true;
  }
  // even-odd over all chains: inside the outer chain and outside every hole
  bool in = false;
  for (const auto& ch : chains_)
    for (size_t i = 0, j = ch.size() - 1; i < ch.size(); j = i++) {
      const Point a = ch[i], b = ch[j];
      if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
    }
  return in;
}

bool GridOracle::clear(Point a, Point b) const {
  const double len = dist(a, b);
  if (len <= tol_) return true;
  auto side = [](Point p, Point q, Point r) { return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)) / dist(p, q); };
  for (const auto& [c, d] : edges_) {
    const double o1 = side(c, d, a), o2 = side(c, d, b), o3 = side(a, b, c), o4 = side(a, b, d);
    if (((o1 > tol_ && o2 < -tol_) || (o1 < -tol_ && o2 > tol_)) &&
        ((o3 > tol_ && o4 < -tol_) || (o3 < -tol_ && o4 > tol_)))
      return false;
  }
  // split at every corner on the segment; each piece must stay inside
  std::vector<double> cuts{0.0, 1.0};
  const Point ab = b - a;
  for (Point c : corners_) {
    const double t = dot(c - a, ab) / (len * len);
    if (t > 0 && t < 1 && dist(c, a + t * ab) <= tol_) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    if ((cuts[i + 1] - cuts[i]) * len > tol_ && !inside(a + (0.5 * (cuts[i] + cuts[i + 1])) * ab)) return false;
  return true;
}

std::vector<int> GridOracle::seen_corners(Point p) const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(corners_.size()); ++c)
    if (clear(p, corners_[c])) out.push_back(c);
  return out;
}

std::vector<double> GridOracle::corner_field(Point p, const std::vector<int>& seen) const {
  const int n = static_cast<int>(corners_.size());
  std::vector<double> f(n, kInf);
  for (int c : seen) {
    const double r = dist(p, corners_[c]);
    const double* row = &cc_[static_cast<size_t>(c) * n];
    for (int x = 0; x < n; ++x) f[x] = std::min(f[x], r + row[x]);
  }
  return f;
}

double GridOracle::to_node(const std::vector<double>& field, Point src, int y) const {
  double d = kInf;
  for (int c : node_seen_[y]) d = std::min(d, field[c] + dist(corners_[c], nodes_[y]));
  const double e = dist(src, nodes_[y]);
  if (e < d && clear(src, nodes_[y])) d = e;
  return d;
}

OracleValue GridOracle::distance(Point s, Point t) const {
  if (!inside(s) || !inside(t)) throw Error(ErrorCode::PointOutsideDomain, "oracle query outside the domain");
  OracleValue v;
  v.s = s;
  v.t = t;
  v.error_bound = error_bound();
  v.value = dist(s, t);
  if (clear(s, t)) return v;
  const std::vector<double> f = corner_field(s, seen_corners(s));
  double d = kInf;
  for (int c : seen_corners(t)) d = std::min(d, f[c] + dist(corners_[c], t));
  if (d == kInf) throw Error(ErrorCode::GridDisconnected, "no grid route between the query points");
  v.value = d;
  return v;
}

// Bounding-diameters sweep: exact eccentricities for a few sources bound
// every other node's eccentricity through the triangle inequality.
OracleValue GridOracle::diameter() const {
  const int m = static_cast<int>(nodes_.size());
  std::vector<double> lower(m, 0.0), upper(m, kInf), row(m);
  std::vector<char> live(m, 1);
  OracleValue best;
  best.value = -1;
  best.error_bound = error_bound();
  int remaining = m;
  bool pick_high = true;
  int z = 0;
  while (remaining > 0) {
    const std::vector<double> f = corner_field(nodes_[z], node_seen_[z]);
#pragma omp parallel for schedule(static) if (exec_ == Exec::Parallel)
    for (int y = 0; y < m; ++y) row[y] = y == z ? 0.0 : to_node(f, nodes_[z], y);
    double ecc = 0;
    int far = z;
    for (int y = 0; y < m; ++y) {
      if (row[y] == kInf) throw Error(ErrorCode::GridDisconnected, "grid node unreachable");
      if (row[y] > ecc) {
        ecc = row[y];
        far = y;
      }
    }
    if (ecc > best.value) {
      best.value = ecc;
      best.s = nodes_[z];
      best.t = nodes_[far];
    }
    live[z] = 0;
    --remaining;
    for (int y = 0; y < m; ++y) {
      if (!live[y]) continue;
      lower[y] = std::max({lower[y], ecc - row[y], row[y]});
      upper[y] = std::min(upper[y], ecc + row[y]);
      if (upper[y] <= best.value) {
        live[y] = 0;
        --remaining;
      }
    }
    if (remaining == 0) break;
    // alternate between the most promising and the most central live node
    int next = -1;
    for (int y = 0; y < m; ++y) {
      if (!live[y]) continue;
      if (next < 0 || (pick_high ? upper[y] > upper[next] : lower[y] < lower[next])) next = y;
    }
    pick_high = !pick_high;
    z = next;
  }
  return best;
}

OracleValue oracle_distance(const GridOracle& oracle, Point s, Point t) { return oracle.distance(s, t); }
OracleValue oracle_diameter(const GridOracle& oracle) { return oracle.diameter(); }

}  // namespace geodiam

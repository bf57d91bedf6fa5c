#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "geodiam/fixtures.hpp"
#include "geodiam/geodesic.hpp"

using namespace geodiam;

namespace {

struct Built {
  PolygonalDomain dom;
  VisibilityGraph graph;
  DistanceTable table;
};

Built build(const std::string& name, const FixtureParams& p = {}) {
  Built b{make_fixture(name, p), {}, {}};
  b.graph = build_visibility_graph(b.dom);
  b.table = corner_distances(b.graph);
  return b;
}

int corner_at(const PolygonalDomain& d, Point p) {
  for (int i = 0; i < d.n(); ++i)
    if (dist(d.corners[i], p) < 1e-12) return i;
  return -1;
}

// All-pairs by repeated relaxation over the visibility graph (no heap, no links).
std::vector<double> relaxation_all_pairs(const VisibilityGraph& g) {
  const int n = g.n;
  std::vector<double> d(n * n, std::numeric_limits<double>::infinity());
  for (int u = 0; u < n; ++u) {
    d[u * n + u] = 0;
    for (auto [v, w] : g.adj[u]) d[u * n + v] = w;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  return d;
}

}  // namespace

TEST_CASE("visibility graph examples") {
  auto sq = build("square");
  CHECK(sq.graph.edge_count() == 6);
  auto h = build("square_with_hole");
  CHECK_FALSE(h.graph.has_edge(corner_at(h.dom, {0, 0}), corner_at(h.dom, {4, 4})));
  CHECK(h.graph.has_edge(corner_at(h.dom, {0, 0}), corner_at(h.dom, {2.5, 1.5})));
  auto l = build("l_shape");
  CHECK(l.graph.n == 6);
  CHECK(l.graph.has_edge(corner_at(l.dom, {2, 0}), corner_at(l.dom, {0, 2})));
}

TEST_CASE("serial and parallel builds agree") {
  auto d = make_fixture("random", {{"seed", 3}, {"n", 24}, {"h", 3}});
  auto gs = build_visibility_graph(d, {}, Exec::Serial);
  auto gp = build_visibility_graph(d, {}, Exec::Parallel);
  CHECK(gs.adj == gp.adj);
  auto ts = corner_distances(gs, {}, Exec::Serial);
  auto tp = corner_distances(gp, {}, Exec::Parallel);
  CHECK(ts.d == tp.d);
  CHECK(ts.pred == tp.pred);
}

TEST_CASE("corner distance examples") {
  auto sq = build("square");
  CHECK(sq.table.at(0, 2) == doctest::Approx(std::sqrt(2.0)));
  auto h = build("square_with_hole");
  CHECK(h.table.at(corner_at(h.dom, {0, 0}), corner_at(h.dom, {4, 4})) == doctest::Approx(2 * std::sqrt(8.5)));
  CHECK(h.table.ties);
  auto l = build("l_shape");
  CHECK(l.table.at(corner_at(l.dom, {2, 0}), corner_at(l.dom, {0, 2})) == doctest::Approx(2 * std::sqrt(2.0)));
}

TEST_CASE("corner distances match repeated relaxation and satisfy the table invariants") {
  for (int seed = 0; seed < 10; ++seed) {
    auto b = build("random", {{"seed", double(seed)}, {"n", 18}, {"h", 2}});
    auto ref = relaxation_all_pairs(b.graph);
    const int n = b.table.n;
    for (int u = 0; u < n; ++u) {
      CHECK(b.table.at(u, u) == 0);
      for (int v = 0; v < n; ++v) {
        CHECK(b.table.at(u, v) == doctest::Approx(ref[u * n + v]).epsilon(1e-12));
        CHECK(b.table.at(u, v) == b.table.at(v, u));
        CHECK(b.table.at(u, v) >= dist(b.dom.corners[u], b.dom.corners[v]) - 1e-12);
        for (int w = 0; w < n; ++w) CHECK(b.table.at(u, w) <= b.table.at(u, v) + b.table.at(v, w) + 1e-7);
      }
    }
  }
}

TEST_CASE("corner paths reconstruct their lengths") {
  auto b = build("random", {{"seed", 4}, {"n", 20}, {"h", 3}});
  for (int u = 0; u < b.table.n; ++u)
    for (int v = 0; v < b.table.n; ++v) {
      auto p = b.table.corner_path(u, v);
      REQUIRE(p.front() == u);
      REQUIRE(p.back() == v);
      double len = 0;
      for (size_t k = 0; k + 1 < p.size(); ++k) {
        CHECK(segment_clear(b.dom, b.dom.corners[p[k]], b.dom.corners[p[k + 1]], 1e-9));
        len += dist(b.dom.corners[p[k]], b.dom.corners[p[k + 1]]);
      }
      CHECK(len == doctest::Approx(b.table.at(u, v)).epsilon(1e-12));
    }
}

TEST_CASE("text round trip and injection") {
  auto b = build("l_shape");
  auto t = DistanceTable::from_text(b.table.to_text());
  CHECK(t.provenance == DistanceTable::Provenance::Injected);
  CHECK(t.d == b.table.d);
  CHECK_THROWS_AS(DistanceTable::from_text("3\n0 1\n"), Error);
  CHECK_THROWS_AS(DistanceTable::injected({0, 1, 2, 0}, 2), Error);
}

TEST_CASE("point distance examples") {
  auto sq = build("square");
  auto r = point_distance(sq.dom, sq.table, {0.2, 0.2}, {0.9, 0.9});
  CHECK(r.distance == doctest::Approx(0.7 * std::sqrt(2.0)));
  CHECK(r.path.empty());

  auto l = build("l_shape");
  auto rl = point_distance(l.dom, l.table, {2, 0.5}, {0.5, 2});
  CHECK(rl.distance == doctest::Approx(2 * std::sqrt(1.25)));
  REQUIRE(rl.path.size() == 1);
  CHECK(l.dom.corners[rl.path[0]] == Point{1, 1});

  auto h = build("square_with_hole");
  auto rh = point_distance(h.dom, h.table, {0, 2}, {4, 2});
  CHECK(rh.distance == doctest::Approx(1 + 2 * std::sqrt(2.5)));
  CHECK_THROWS_AS(point_distance(h.dom, h.table, {2, 2}, {0, 0}), Error);
}

TEST_CASE("shortest path enumeration examples") {
  auto sq = build("square");
  auto ps = enumerate_shortest_paths(sq.dom, sq.table, {0, 0}, {1, 1});
  CHECK(ps.count == 1);
  CHECK(ps.paths.size() == 1);
  CHECK(ps.paths[0].empty());

  auto h = build("square_with_hole");
  auto ph = enumerate_shortest_paths(h.dom, h.table, {0, 2}, {4, 2});
  CHECK(ph.count == 2);
  CHECK(ph.distance == doctest::Approx(1 + 2 * std::sqrt(2.5)));
  std::vector<int> vs{corner_at(h.dom, {1.5, 1.5}), corner_at(h.dom, {1.5, 2.5})};
  std::sort(vs.begin(), vs.end());
  CHECK(ph.first == vs);
  CHECK(ph.hole_bound_ok);

  // corner pair with two geodesics around the hole
  auto pc = enumerate_shortest_paths(h.dom, h.table, {0, 0}, {4, 4});
  CHECK(pc.count == 2);
}

TEST_CASE("metric properties and path structure on random pairs") {
  std::mt19937_64 rng(99);
  for (auto name : {"l_shape", "square_with_hole"}) {
    auto b = build(name);
    for (int k = 0; k < 200; ++k) {
      Point s = random_point_in(b.dom, rng), t = random_point_in(b.dom, rng), w = random_point_in(b.dom, rng);
      double st = point_distance(b.dom, b.table, s, t).distance;
      CHECK(st == point_distance(b.dom, b.table, t, s).distance);
      CHECK(st >= dist(s, t) - 1e-12);
      CHECK(st <= point_distance(b.dom, b.table, s, w).distance + point_distance(b.dom, b.table, w, t).distance +
                      2e-7);
      bool vis = segment_visible(b.dom, s, t);
      CHECK(vis == (std::fabs(st - dist(s, t)) <= 1e-9));
      auto ps = enumerate_shortest_paths(b.dom, b.table, s, t);
      CHECK(ps.count >= 1);
      CHECK(ps.count <= std::uint64_t(b.dom.h() + 1));
      if (b.dom.h() == 0) CHECK(ps.count == 1);
      for (const auto& p : ps.paths) {
        if (p.empty()) continue;
        double len = dist(s, b.dom.corners[p.front()]) + dist(b.dom.corners[p.back()], t);
        for (size_t i = 0; i + 1 < p.size(); ++i) len += dist(b.dom.corners[p[i]], b.dom.corners[p[i + 1]]);
        CHECK(len == doctest::Approx(ps.distance).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("path cap raises PathExplosion") {
  auto h = build("square_with_hole");
  CHECK_THROWS_AS(enumerate_shortest_paths(h.dom, h.table, {0, 2}, {4, 2}, {}, 1), Error);
}

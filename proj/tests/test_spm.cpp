#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "geodiam/fixtures.hpp"
#include "geodiam/spm.hpp"

using namespace geodiam;

namespace {

struct Built {
  PolygonalDomain dom;
  DistanceTable table;
};

Built build(const std::string& name, const FixtureParams& p = {}) {
  auto d = make_fixture(name, p);
  auto t = corner_distances(build_visibility_graph(d));
  return {std::move(d), std::move(t)};
}

double lhs(Point x, Point u, double w) { return w + dist(x, u); }

}  // namespace

TEST_CASE("spm vertex examples") {
  auto a = solve_spm_vertex({0, 0}, 0, {2, 0}, 0, {1, 2}, 0);
  REQUIRE(a.size() == 1);
  CHECK(a[0].x == doctest::Approx(1.0));
  CHECK(a[0].y == doctest::Approx(0.75));
  CHECK(dist(a[0], {0, 0}) == doctest::Approx(1.25));

  auto b = solve_spm_vertex({0, 0}, 1, {2, 0}, 1, {1, 2}, 1);
  REQUIRE(b.size() == 1);
  CHECK(dist(b[0], a[0]) < 1e-12);

  auto c = solve_spm_vertex({0, 0}, 1, {4, 0}, 1, {2, 3}, 0);
  REQUIRE(c.size() == 1);
  CHECK(c[0].x == doctest::Approx(2.0));
  CHECK(c[0].y == doctest::Approx(0.0).epsilon(1e-12));
  // residual of the unsquared equations
  CHECK(std::fabs(lhs(c[0], {0, 0}, 1) - 3) < 1e-12);
  CHECK(std::fabs(lhs(c[0], {2, 3}, 0) - 3) < 1e-12);

  CHECK_THROWS_AS(solve_spm_vertex({0, 0}, 0, {1, 0}, 0, {2, 0}, 0), Error);
}

TEST_CASE("spm vertex solutions satisfy the unsquared system") {
  std::mt19937_64 rng(3);
  int total = 0;
  for (int k = 0; k < 2000; ++k) {
    Point u[3];
    double w[3];
    for (int i = 0; i < 3; ++i) {
      u[i] = {4 * unit_draw(rng), 4 * unit_draw(rng)};
      w[i] = 2 * unit_draw(rng);
    }
    std::vector<Point> xs;
    try {
      xs = solve_spm_vertex(u[0], w[0], u[1], w[1], u[2], w[2]);
    } catch (const Error&) {
      continue;
    }
    for (Point x : xs) {
      ++total;
      double r0 = lhs(x, u[0], w[0]);
      CHECK(std::fabs(r0 - lhs(x, u[1], w[1])) < 1e-9);
      CHECK(std::fabs(r0 - lhs(x, u[2], w[2])) < 1e-9);
    }
  }
  CHECK(total > 500);
}

TEST_CASE("spm edge crossing examples") {
  auto a = solve_spm_edge_boundary({0, 0}, 0, {2, 0}, 0, {{0, 1}, {2, 1}});
  REQUIRE(a.size() == 1);
  CHECK(a[0].x == doctest::Approx(1.0));
  CHECK(a[0].y == doctest::Approx(1.0));
  auto b = solve_spm_edge_boundary({0, 0}, 0, {2, 0}, 1, {{0, 0}, {2, 0}});
  REQUIRE(b.size() == 1);
  CHECK(b[0].x == doctest::Approx(1.5));
  CHECK(0 + 1.5 == doctest::Approx(1 + dist(b[0], {2, 0})));
  CHECK(solve_spm_edge_boundary({0, 0}, 0, {2, 0}, 0, {{0, -1}, {0.4, -1}}).empty());
}

TEST_CASE("farthest point examples") {
  auto sq = build("square");
  auto r = farthest_point(sq.dom, sq.table, {0, 0});
  CHECK(r.point == Point{1, 1});
  CHECK(r.distance == doctest::Approx(std::sqrt(2.0)));

  auto l = build("l_shape");
  auto rl = farthest_point(l.dom, l.table, {2, 0});
  CHECK(dist(rl.point, {0, 2}) < 1e-9);
  CHECK(rl.distance == doctest::Approx(2 * std::sqrt(2.0)));

  auto h = build("square_with_hole");
  auto rh = farthest_point(h.dom, h.table, {0, 0});
  CHECK(dist(rh.point, {4, 4}) < 1e-9);
  CHECK(rh.distance == doctest::Approx(2 * std::sqrt(8.5)));
  CHECK_THROWS_AS(farthest_point(h.dom, h.table, {2, 2}), Error);
}

TEST_CASE("farthest point dominates sampled points and matches the unpruned sweep") {
  std::mt19937_64 rng(17);
  for (int seed = 0; seed < 6; ++seed) {
    auto b = build("random", {{"seed", double(seed)}, {"n", 14}, {"h", 2}});
    for (int q = 0; q < 3; ++q) {
      Point s = random_point_in(b.dom, rng);
      auto fast = farthest_point(b.dom, b.table, s);
      FarthestOptions ref;
      ref.prune = false;
      ref.keep_all = true;
      ref.exec = Exec::Serial;
      auto slow = farthest_point(b.dom, b.table, s, {}, ref);
      CHECK(fast.distance == doctest::Approx(slow.distance).epsilon(1e-12));
      CHECK(point_distance(b.dom, b.table, s, fast.point).distance == doctest::Approx(fast.distance).epsilon(1e-9));
      for (int k = 0; k < 300; ++k) {
        Point x = random_point_in(b.dom, rng);
        CHECK(point_distance(b.dom, b.table, s, x).distance <= fast.distance + 1e-7);
      }
      for (const auto& c : slow.validated) {
        CHECK(c.value <= fast.distance + 1e-7);
        if (c.kind != SpmCandidate::Kind::SpmVertex) continue;
        // three defining sites never all lie on one line through the vertex
        int on_line = 0;
        for (int i = 0; i < 3; ++i) {
          Point u = c.sites[i] == b.dom.n() ? s : b.dom.corners[c.sites[i]];
          Point v = c.sites[(i + 1) % 3] == b.dom.n() ? s : b.dom.corners[c.sites[(i + 1) % 3]];
          if (std::fabs(orient(c.location, u, v)) < 1e-9) ++on_line;
        }
        CHECK(on_line < 3);
      }
    }
  }
}

TEST_CASE("farthest point in convex holeless domains is a corner") {
  std::mt19937_64 rng(4);
  RawDomain hex;
  for (int i = 0; i < 6; ++i) hex.outer.push_back({std::cos(i * M_PI / 3 + 0.1), 0.7 * std::sin(i * M_PI / 3 + 0.1)});
  auto d = validate_domain(hex);
  auto t = corner_distances(build_visibility_graph(d));
  for (int k = 0; k < 50; ++k) {
    auto r = farthest_point(d, t, random_point_in(d, rng));
    CHECK(r.kind == SpmCandidate::Kind::Corner);
  }
}

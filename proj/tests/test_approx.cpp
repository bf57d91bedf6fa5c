#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "geodiam/approx.hpp"
#include "geodiam/diameter.hpp"
#include "geodiam/fixtures.hpp"

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

const double kHoleDiam = 2 * std::sqrt(8.5);

}  // namespace

TEST_CASE("two_approx examples") {
  auto sq = build("square");
  auto a = two_approx(sq.dom, sq.table, {0, 0});
  CHECK(a.value == doctest::Approx(std::sqrt(2.0)));
  CHECK(a.guarantee == ApproxResult::Guarantee::Factor2Lower);

  auto h = build("square_with_hole");
  auto b = two_approx(h.dom, h.table, {0, 0});
  CHECK(std::fabs(b.value - compute_diameter(h.dom).diameter) < 1e-9);
  CHECK_THROWS_AS(two_approx(h.dom, h.table, {2, 2}), Error);
}

TEST_CASE("two_approx brackets the diameter and scales") {
  for (const std::string name : {"square", "l_shape", "square_with_hole"}) {
    auto b = build(name);
    const double diam = compute_diameter(b.dom).diameter;
    std::mt19937_64 rng(4);
    for (int k = 0; k < 10; ++k) {
      Point s = random_point_in(b.dom, rng);
      auto a = two_approx(b.dom, b.table, s);
      CHECK(a.value <= diam + 1e-7);
      CHECK(diam <= 2 * a.value + 1e-7);
    }
  }
  auto raw = make_fixture_raw("l_shape");
  auto d1 = validate_domain(raw), d3 = validate_domain(scaled(raw, 3));
  auto t1 = corner_distances(build_visibility_graph(d1)), t3 = corner_distances(build_visibility_graph(d3));
  auto a1 = two_approx(d1, t1, {0.25, 0.25}), a3 = two_approx(d3, t3, {0.75, 0.75});
  CHECK(a3.value == doctest::Approx(3 * a1.value).epsilon(1e-9));
}

TEST_CASE("grid_approx brackets") {
  auto sq = build("square");
  auto g = grid_approx(sq.dom, sq.table, 0.1);
  CHECK(g.value <= std::sqrt(2.0) + 1e-9);
  CHECK(g.value >= std::sqrt(2.0) / 1.1);
  CHECK(g.cell_size == doctest::Approx(0.1 * std::sqrt(2.0) / 4));
  CHECK_THROWS_AS(grid_approx(sq.dom, sq.table, 1.0), Error);
  CHECK_THROWS_AS(grid_approx(sq.dom, sq.table, 0.0), Error);

  auto h = build("square_with_hole");
  auto gh = grid_approx(h.dom, h.table, 0.25);
  CHECK(gh.value <= kHoleDiam + 1e-7);
  CHECK(gh.value >= kHoleDiam / 1.25);

  auto s = grid_approx(h.dom, h.table, 0.25, {}, Exec::Serial);
  CHECK(s.value == gh.value);
}

TEST_CASE("oracle distance examples") {
  auto sq = make_fixture("square");
  GridOracle o(sq, 64);
  auto d = oracle_distance(o, {0, 0}, {1, 1});
  CHECK(std::fabs(d.value - std::sqrt(2.0)) <= d.error_bound);
  CHECK(o.error_bound() == doctest::Approx(std::sqrt(2.0) / 64));

  auto h = make_fixture("square_with_hole");
  GridOracle oh(h, 256);
  auto e = oracle_distance(oh, {0, 2}, {4, 2});
  CHECK(std::fabs(e.value - 4.162278) <= e.error_bound);
  auto table = corner_distances(build_visibility_graph(h));
  CHECK(std::fabs(e.value - point_distance(h, table, {0, 2}, {4, 2}).distance) <= e.error_bound);
  CHECK_THROWS_AS(oracle_distance(oh, {2, 2}, {0, 0}), Error);

  auto l = make_fixture("l_shape");
  GridOracle ol(l, 128);
  auto f = oracle_distance(ol, {2, 0.5}, {0.5, 2});
  CHECK(std::fabs(f.value - std::sqrt(5.0)) <= f.error_bound);
}

TEST_CASE("oracle agrees with the engine on random pairs") {
  for (const std::string name : {"l_shape", "square_with_hole"}) {
    auto b = build(name);
    GridOracle o(b.dom, 32);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
      Point s = random_point_in(b.dom, rng), t = random_point_in(b.dom, rng);
      auto v = oracle_distance(o, s, t);
      double d = point_distance(b.dom, b.table, s, t).distance;
      CHECK(std::fabs(v.value - d) <= v.error_bound);
      CHECK(v.value >= dist(s, t) - v.error_bound);
      CHECK(std::fabs(oracle_distance(o, t, s).value - v.value) < 1e-12);
    }
  }
}

TEST_CASE("oracle diameter examples") {
  auto sq = make_fixture("square");
  auto a = oracle_diameter(GridOracle(sq, 64));
  CHECK(std::fabs(a.value - std::sqrt(2.0)) <= a.error_bound);

  auto h = make_fixture("square_with_hole");
  auto b = oracle_diameter(GridOracle(h, 128));
  CHECK(std::fabs(b.value - 5.830952) <= b.error_bound);

  auto l = make_fixture("l_shape");
  auto c = oracle_diameter(GridOracle(l, 128));
  CHECK(std::fabs(c.value - 2.828427) <= c.error_bound);

  auto s = oracle_diameter(GridOracle(l, 32, Exec::Serial));
  auto p = oracle_diameter(GridOracle(l, 32, Exec::Parallel));
  CHECK(s.value == p.value);
}

TEST_CASE("thin corridors are flagged") {
  CHECK_FALSE(GridOracle(make_fixture("square"), 16).thin_corridor());
  CHECK(GridOracle(validate_domain(build_jigsaw(10.0).raw), 32).thin_corridor());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geodiam/fixtures.hpp"
#include "geodiam/visibility_polygon.hpp"

using namespace geodiam;

namespace {

PolygonalDomain square() { return make_fixture("square"); }
PolygonalDomain lshape() { return make_fixture("l_shape"); }
PolygonalDomain holed() { return make_fixture("square_with_hole"); }

ErrorCode code_of(const RawDomain& raw) {
  try {
    validate_domain(raw);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("validate_domain on the fixtures") {
  auto sq = square();
  CHECK(sq.n() == 4);
  CHECK(sq.h() == 0);
  auto hd = holed();
  CHECK(hd.n() == 8);
  CHECK(hd.h() == 1);
}

TEST_CASE("validate_domain rejects malformed chains") {
  CHECK(code_of({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}}}}) ==
        ErrorCode::HoleOutsideOuter);
  CHECK(code_of({{{0, 0}, {1, 0}}, {}}) == ErrorCode::DegenerateChain);
  CHECK(code_of({{{0, 0}, {1, 0}, {2, 0}}, {}}) == ErrorCode::DegenerateChain);
  CHECK(code_of({{{0, 0}, {2, 2}, {2, 0}, {0, 1}}, {}}) == ErrorCode::SelfIntersectingChain);
  CHECK(code_of({{{0, 0}, {4, 0}, {4, 4}, {0, 4}},
                 {{{1, 1}, {2, 1}, {2, 2}, {1, 2}}, {{1.5, 1.5}, {3, 1.5}, {3, 3}, {1.5, 3}}}}) ==
        ErrorCode::HolesOverlap);
  CHECK(code_of({{{0, 0}, {4, 0}, {4, 4}, {0, 4}},
                 {{{1, 1}, {3, 1}, {3, 3}, {1, 3}}, {{1.5, 1.5}, {2, 1.5}, {2, 2}}}}) == ErrorCode::HolesOverlap);
}

TEST_CASE("orientation is normalized") {
  auto d = validate_domain({{{0, 1}, {1, 1}, {1, 0}, {0, 0}}, {}});
  // CCW: the interior is left of every edge
  for (int e = 0; e < d.edge_count(); ++e) CHECK(orient(d.segment(e).a, d.segment(e).b, {0.5, 0.5}) > 0);
  auto h = holed();
  for (int e = 0; e < h.edge_count(); ++e) {
    Segment s = h.segment(e);
    Point mid = s.at(0.5);
    Point inward = mid + 0.01 * perp(unit(s.b - s.a));
    CHECK(locate_point(h, inward).kind == Location::Kind::Interior);
  }
}

TEST_CASE("serialize round trip is idempotent") {
  for (auto name : {"square", "l_shape", "square_with_hole"}) {
    auto d1 = make_fixture(name);
    auto d2 = validate_domain(parse_domain_json(domain_to_json(d1.raw())));
    auto d3 = validate_domain(parse_domain_json(domain_to_json(d2.raw())));
    REQUIRE(d2.n() == d1.n());
    for (int i = 0; i < d1.n(); ++i) {
      CHECK(d2.corners[i] == d1.corners[i]);
      CHECK(d3.corners[i] == d2.corners[i]);
    }
  }
  CHECK_THROWS_AS(parse_domain_json("{\"outer\": 3}"), Error);
  CHECK_THROWS_AS(parse_domain_json("not json"), Error);
}

TEST_CASE("locate_point") {
  auto sq = square();
  CHECK(locate_point(sq, {0.5, 0.5}).kind == Location::Kind::Interior);
  auto e = locate_point(sq, {0.5, 0});
  CHECK(e.kind == Location::Kind::Edge);
  CHECK(sq.segment(e.id).a.y == 0);
  CHECK(sq.segment(e.id).b.y == 0);
  CHECK(e.param == doctest::Approx(0.5));
  CHECK(locate_point(holed(), {2, 2}).kind == Location::Kind::Exterior);
  CHECK(locate_point(sq, {2, 2}).kind == Location::Kind::Exterior);
  // corner beats edge within tolerance
  CHECK(locate_point(sq, {1e-10, 0}).kind == Location::Kind::Corner);
  for (auto name : {"square", "l_shape", "square_with_hole"}) {
    auto d = make_fixture(name);
    for (int i = 0; i < d.n(); ++i) {
      auto loc = locate_point(d, d.corners[i]);
      CHECK(loc.kind == Location::Kind::Corner);
      CHECK(loc.id == i);
    }
  }
}

TEST_CASE("segment_visible") {
  CHECK(segment_visible(square(), {0, 0}, {1, 1}));
  CHECK_FALSE(segment_visible(holed(), {0, 0}, {4, 4}));
  CHECK(segment_visible(holed(), {0, 0}, {2.5, 1.5}));
  CHECK(segment_visible(lshape(), {2, 0}, {0, 2}));
  CHECK_FALSE(segment_visible(lshape(), {2, 0.5}, {0.5, 2}));
  // runs along an edge and then through the interior
  CHECK(segment_visible(lshape(), {2, 1}, {0, 1}));
  CHECK_FALSE(segment_visible(lshape(), {2, 1}, {1, 2}));
  CHECK(segment_visible(lshape(), {1, 1}, {1, 2}));
  CHECK_THROWS_AS(segment_visible(holed(), {2, 2}, {0, 0}), Error);
}

TEST_CASE("segment_visible is symmetric on random pairs") {
  std::mt19937_64 rng(11);
  for (auto name : {"l_shape", "square_with_hole"}) {
    auto d = make_fixture(name);
    for (int k = 0; k < 300; ++k) {
      Point a = random_point_in(d, rng), b = random_point_in(d, rng);
      CHECK(segment_visible(d, a, b) == segment_visible(d, b, a));
    }
  }
  auto sq = square();
  for (int k = 0; k < 300; ++k) CHECK(segment_visible(sq, random_point_in(sq, rng), random_point_in(sq, rng)));
}

TEST_CASE("random fixtures are valid and deterministic") {
  auto a = make_fixture("random", {{"seed", 7}, {"n", 20}, {"h", 2}});
  auto b = make_fixture("random", {{"seed", 7}, {"n", 20}, {"h", 2}});
  CHECK(a.n() == 20);
  CHECK(a.h() == 2);
  for (int i = 0; i < a.n(); ++i) CHECK(a.corners[i] == b.corners[i]);
  for (int s = 0; s < 30; ++s) CHECK_NOTHROW(make_fixture("random", {{"seed", double(s)}, {"n", 16}, {"h", 3}}));
  CHECK_THROWS_AS(make_fixture("nope"), Error);
  CHECK_THROWS_AS(make_fixture("random", {{"n", 5}, {"h", 2}}), Error);
}

namespace {

// Monte Carlo area of the region seen from c, estimated without the polygon.
double seen_fraction(const PolygonalDomain& d, int c, std::mt19937_64& rng, int samples) {
  int hit = 0;
  for (int k = 0; k < samples; ++k)
    if (segment_clear(d, d.corners[c], random_point_in(d, rng), 1e-9)) ++hit;
  return double(hit) / samples;
}

double ring_area(const std::vector<Point>& v) {
  double a = 0;
  for (size_t i = 0; i < v.size(); ++i) a += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * a;
}

double domain_area(const PolygonalDomain& d) {
  double a = ring_area(d.outer.vertices);
  for (const auto& h : d.holes) a += ring_area(h.vertices);
  return a;
}

}  // namespace

TEST_CASE("visibility polygons") {
  auto sq = square();
  auto vp = corner_visibility_polygon(sq, 0, 1e-9);
  CHECK(vp.size() == 4);
  CHECK(ring_area(vp) == doctest::Approx(1.0));

  auto l = lshape();
  // the reflex corner (1,1) sees everything
  int reflex = 3;
  CHECK(l.reflex[reflex]);
  CHECK(ring_area(corner_visibility_polygon(l, reflex, 1e-9)) == doctest::Approx(3.0));
  // (2,0) sees the bottom arm plus the triangle up to the diagonal through (1,1)
  CHECK(ring_area(corner_visibility_polygon(l, 1, 1e-9)) == doctest::Approx(2.5));

  auto h = holed();
  auto v0 = corner_visibility_polygon(h, 0, 1e-9);
  CHECK(polygon_reach(v0, h.corners[0]) == doctest::Approx(std::hypot(4.0, 4.0 * 1.5 / 2.5)));
}

TEST_CASE("visibility polygon areas match sampling") {
  std::mt19937_64 rng(5);
  for (int seed = 0; seed < 6; ++seed) {
    auto d = make_fixture("random", {{"seed", double(seed)}, {"n", 14}, {"h", 2}});
    double total = domain_area(d);
    for (int c = 0; c < d.n(); c += 3) {
      double a = ring_area(corner_visibility_polygon(d, c, 1e-9));
      CHECK(a > 0);
      CHECK(a / total == doctest::Approx(seen_fraction(d, c, rng, 4000)).epsilon(0.05));
    }
  }
}

TEST_CASE("visible intervals") {
  auto h = holed();
  // from the top-right corner the hole shades the bottom edge up to x = 1.6
  int bottom = 0;
  auto iv = visible_intervals(h, {4, 4}, bottom, 1e-9);
  REQUIRE(iv.size() == 1);
  CHECK(iv[0].lo == doctest::Approx(0.4));
  CHECK(iv[0].hi == doctest::Approx(1.0));
  auto all = visible_intervals(h, {4, 0}, bottom, 1e-9);
  REQUIRE(all.size() == 1);
  CHECK(all[0].lo == doctest::Approx(0.0));
}

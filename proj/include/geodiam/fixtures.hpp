#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "geodiam/domain.hpp"

namespace geodiam {

using FixtureParams = std::map<std::string, double>;

// square, l_shape, square_with_hole, jigsaw(corridor_len), random(seed, n, h)
RawDomain make_fixture_raw(const std::string& name, const FixtureParams& params = {});
PolygonalDomain make_fixture(const std::string& name, const FixtureParams& params = {},
                             const ToleranceConfig& tol = {});
std::vector<std::string> fixture_names();

// Star-shaped outer chain with small triangular holes; n counts every corner.
RawDomain random_domain(std::uint64_t seed, int n, int h);

// Uniform in [0,1); spelled out so sequences do not depend on the standard library.
double unit_draw(std::mt19937_64& rng);
Point random_point_in(const PolygonalDomain& dom, std::mt19937_64& rng, double tol = 1e-9);

struct Jigsaw {
  RawDomain raw;
  double corridor_len = 0.0;  // realized d(u_i, v_j) of the six corridors
  Point cu, cv;               // triangle centers
  std::array<Point, 3> u, v;  // triangle corners
  std::array<std::array<int, 2>, 6> corridors;  // (u index, v index)
};

Jigsaw build_jigsaw(double corridor_len);

}  // namespace geodiam

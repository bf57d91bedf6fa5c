#include "geodiam/instance.hpp"

#include <cmath>

namespace geodiam {

namespace {

constexpr double deg(double a) { return a * M_PI / 180.0; }

}  // namespace

FivePathInstance five_path_instance(double L, bool mirrored, const ToleranceConfig& tol) {
  if (!(L > 4.0)) throw Error(ErrorCode::InvalidArgument, "corridor length must exceed 4");
  const Point cu{0, 0}, cv{L, 0};
  // unit circumcircles; apex angles 18 and 112 degrees, horizontal bases
  const double us = std::sin(deg(18)), uc = std::cos(deg(18));
  const double vc = std::cos(deg(22)), vs = std::sin(deg(22));
  std::vector<Point> pts{
      cu + Point{0, 1}, cu + Point{-us, -uc}, cu + Point{us, -uc},  // ua, ub_left, ub_right
      cv + Point{0, 1}, cv + Point{-vc, vs},  cv + Point{vc, vs},   // va, vb_left, vb_right
  };
  const int ua = 0, ul = 1, ur = 2, va = 3, vl = 4, vr = 5;
  // CCW rooms
  std::vector<std::vector<int>> rooms{{ua, ul, ur}, {va, vl, vr}};

  // crossed pairing: the left u base goes with the right v base
  int u4 = mirrored ? ur : ul, u5 = mirrored ? ul : ur;
  std::vector<std::array<int, 2>> pairs{{ua, vl}, {ua, va}, {ua, vr}, {u4, vr}, {u5, vl}};
  std::vector<double> lens{L, L + 0.5, L, L + 0.2, L + 0.2};

  const int n = 6;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> m(n * n, inf);
  for (int i = 0; i < n; ++i) m[i * n + i] = 0;
  for (const auto& r : rooms)
    for (int a : r)
      for (int b : r) m[a * n + b] = dist(pts[a], pts[b]);
  for (size_t k = 0; k < pairs.size(); ++k) {
    auto [a, b] = pairs[k];
    m[a * n + b] = m[b * n + a] = lens[k];
  }
  // metric closure over the injected links
  for (int w = 0; w < n; ++w)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m[a * n + b] = std::min(m[a * n + b], m[a * n + w] + m[w * n + b]);

  FivePathInstance out{RoomSpace(pts, rooms, 4, tol), DistanceTable::injected(m, n, tol), {}, cu, cv, L,
                       {ua, ul, ur}, {va, vl, vr}};
  out.system.label = CaseLabel::II;
  for (const auto& [a, b] : pairs) out.system.terms.push_back({pts[a], pts[b], m[a * n + b], a, b});
  return out;
}

}  // namespace geodiam

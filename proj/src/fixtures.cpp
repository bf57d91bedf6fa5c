#include "geodiam/fixtures.hpp"

#include <algorithm>
#include <cmath>

namespace geodiam {

namespace {

double param(const FixtureParams& p, const char* key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

}  // namespace

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Point random_point_in(const PolygonalDomain& dom, std::mt19937_64& rng, double tol) {
  for (int tries = 0; tries < 100000; ++tries) {
    Point p{dom.lo.x + unit_draw(rng) * (dom.hi.x - dom.lo.x), dom.lo.y + unit_draw(rng) * (dom.hi.y - dom.lo.y)};
    if (in_domain(dom, p, tol)) return p;
  }
  throw Error(ErrorCode::InfeasibleParams, "could not sample a point inside the domain");
}

RawDomain random_domain(std::uint64_t seed, int n, int h) {
  if (h < 0 || n - 3 * h < 3)
    throw Error(ErrorCode::InfeasibleParams, "random fixture needs n >= 3h + 3");
  std::mt19937_64 rng(seed);
  const double R = 4.0;
  for (int attempt = 0; attempt < 200; ++attempt) {
    RawDomain raw;
    const int m = n - 3 * h;
    for (int i = 0; i < m; ++i) {
      double a = 2 * M_PI * (i + 0.1 + 0.8 * unit_draw(rng)) / m;
      double r = R * (0.45 + 0.55 * unit_draw(rng));
      raw.outer.push_back({r * std::cos(a), r * std::sin(a)});
    }
    PolygonalDomain outer_only;
    try {
      outer_only = validate_domain({raw.outer, {}});
    } catch (const Error&) {
      continue;
    }
    bool ok = true;
    for (int k = 0; k < h && ok; ++k) {
      ok = false;
      for (int tries = 0; tries < 500 && !ok; ++tries) {
        Point c{(2 * unit_draw(rng) - 1) * R, (2 * unit_draw(rng) - 1) * R};
        double s = 0.25 + 0.35 * unit_draw(rng);
        double a0 = 2 * M_PI * unit_draw(rng);
        std::vector<Point> tri;
        for (int j = 0; j < 3; ++j) {
          double a = a0 + 2 * M_PI * j / 3 + 0.5 * (unit_draw(rng) - 0.5);
          tri.push_back(c + s * Point{std::cos(a), std::sin(a)});
        }
        RawDomain trial = raw;
        trial.holes.push_back(tri);
        try {
          PolygonalDomain d = validate_domain(trial);
          // keep a margin so holes never pinch the free space shut
          bool clear = true;
          for (int e = 0; e < d.edge_count() && clear; ++e)
            for (int i = 0; i < d.n() && clear; ++i)
              if ((d.edges[e].chain == d.h()) != (d.refs[i].chain == d.h()) &&
                  point_segment_distance(d.corners[i], d.segment(e)) < 0.15)
                clear = false;
          if (!clear) continue;
          raw = trial;
          ok = true;
        } catch (const Error&) {
        }
      }
    }
    if (ok) return raw;
  }
  throw Error(ErrorCode::InfeasibleParams, "random fixture: no layout found");
}

std::vector<std::string> fixture_names() { return {"square", "l_shape", "square_with_hole", "jigsaw", "random"}; }

RawDomain make_fixture_raw(const std::string& name, const FixtureParams& params) {
  if (name == "square") return {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {}};
  if (name == "l_shape") return {{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, {}};
  if (name == "square_with_hole")
    return {{{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {{{1.5, 1.5}, {2.5, 1.5}, {2.5, 2.5}, {1.5, 2.5}}}};
  if (name == "jigsaw") return build_jigsaw(param(params, "corridor_len", 10.0)).raw;
  if (name == "random") {
    double seed = param(params, "seed", 1), n = param(params, "n", 20), h = param(params, "h", 2);
    if (seed < 0 || n < 3 || h < 0) throw Error(ErrorCode::InfeasibleParams, "random fixture: bad parameters");
    return random_domain(static_cast<std::uint64_t>(seed), static_cast<int>(n), static_cast<int>(h));
  }
  throw Error(ErrorCode::UnknownFixture, "no fixture named '" + name + "'");
}

PolygonalDomain make_fixture(const std::string& name, const FixtureParams& params, const ToleranceConfig& tol) {
  return validate_domain(make_fixture_raw(name, params), tol);
}

}  // namespace geodiam

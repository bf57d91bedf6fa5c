#include "geodiam/spm.hpp"

#include <algorithm>
#include <limits>

#include "geodiam/visibility_polygon.hpp"

namespace geodiam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point polish_vertex(Point p, const std::array<Point, 3>& u, const std::array<double, 3>& w, double tol,
                    double& residual) {
  for (int it = 0; it < 30; ++it) {
    double l0 = dist(p, u[0]) + w[0];
    double f1 = l0 - dist(p, u[1]) - w[1];
    double f2 = l0 - dist(p, u[2]) - w[2];
    residual = std::max(std::fabs(f1), std::fabs(f2));
    if (residual < tol) break;
    Point g0 = unit(p - u[0]);
    Point r1 = g0 - unit(p - u[1]);
    Point r2 = g0 - unit(p - u[2]);
    double det = cross(r1, r2);
    if (std::fabs(det) < 1e-14) break;
    // solve [r1; r2] dp = -f
    Point dp{(-f1 * r2.y + f2 * r1.y) / det, (-r1.x * f2 + r2.x * f1) / det};
    p = p + dp;
  }
  return p;
}

}  // namespace

const char* to_string(SpmCandidate::Kind k) {
  switch (k) {
    case SpmCandidate::Kind::SpmVertex: return "spm_vertex";
    case SpmCandidate::Kind::EdgeCrossing: return "edge_crossing";
    case SpmCandidate::Kind::Corner: return "corner";
  }
  return "?";
}

std::vector<Point> solve_spm_vertex(Point u1, double w1, Point u2, double w2, Point u3, double w3,
                                    double tol_residual) {
  const std::array<Point, 3> u{u1, u2, u3};
  const std::array<double, 3> w{w1, w2, w3};
  // Squared equations minus the first one are linear in (x, y, r).
  double A[2][3], b[2];
  for (int i = 1; i < 3; ++i) {
    A[i - 1][0] = 2 * (u[i].x - u[0].x);
    A[i - 1][1] = 2 * (u[i].y - u[0].y);
    A[i - 1][2] = -2 * (w[i] - w[0]);
    b[i - 1] = dot(u[i], u[i]) - dot(u[0], u[0]) - (w[i] * w[i] - w[0] * w[0]);
  }
  double n[3] = {A[0][1] * A[1][2] - A[0][2] * A[1][1], A[0][2] * A[1][0] - A[0][0] * A[1][2],
                 A[0][0] * A[1][1] - A[0][1] * A[1][0]};
  double na = std::sqrt(A[0][0] * A[0][0] + A[0][1] * A[0][1] + A[0][2] * A[0][2]);
  double nb = std::sqrt(A[1][0] * A[1][0] + A[1][1] * A[1][1] + A[1][2] * A[1][2]);
  double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (na == 0 || nb == 0 || nn <= 1e-12 * na * nb)
    throw Error(ErrorCode::DegenerateConfiguration, "weighted bisectors do not meet in isolated points");
  // least-norm particular solution X0 = A^T (A A^T)^{-1} b
  double g00 = A[0][0] * A[0][0] + A[0][1] * A[0][1] + A[0][2] * A[0][2];
  double g01 = A[0][0] * A[1][0] + A[0][1] * A[1][1] + A[0][2] * A[1][2];
  double g11 = A[1][0] * A[1][0] + A[1][1] * A[1][1] + A[1][2] * A[1][2];
  double det = g00 * g11 - g01 * g01;
  double y0 = (g11 * b[0] - g01 * b[1]) / det, y1 = (g00 * b[1] - g01 * b[0]) / det;
  double X0[3];
  for (int k = 0; k < 3; ++k) X0[k] = A[0][k] * y0 + A[1][k] * y1;

  // |p - u1|^2 = (r - w1)^2 along X0 + lambda n
  Point P0{X0[0] - u1.x, X0[1] - u1.y}, np{n[0], n[1]};
  double R0 = X0[2] - w1, nr = n[2];
  double qa = dot(np, np) - nr * nr;
  double qb = 2 * (dot(P0, np) - R0 * nr);
  double qc = dot(P0, P0) - R0 * R0;
  double scale = std::max({std::fabs(qa), std::fabs(qb), std::fabs(qc), 1e-300});
  std::vector<double> lam;
  if (std::fabs(qa) <= 1e-12 * scale) {
    if (std::fabs(qb) <= 1e-12 * scale) {
      if (std::fabs(qc) <= 1e-12 * (dot(P0, P0) + R0 * R0 + 1))
        throw Error(ErrorCode::DegenerateConfiguration, "weighted bisectors coincide");
      return {};
    }
    lam.push_back(-qc / qb);
  } else {
    double disc = qb * qb - 4 * qa * qc;
    if (disc < -1e-12 * qb * qb) return {};
    disc = std::sqrt(std::max(disc, 0.0));
    // numerically stable pair
    double q = -0.5 * (qb + (qb >= 0 ? disc : -disc));
    if (q != 0) {
      lam.push_back(q / qa);
      lam.push_back(qc / q);
    } else {
      lam.push_back(0.0);
    }
  }
  std::vector<Point> out;
  for (double l : lam) {
    Point p{X0[0] + l * n[0], X0[1] + l * n[1]};
    double r = X0[2] + l * n[2];
    double slack = 1e-9 * (1 + std::fabs(r));
    if (r < w1 - slack || r < w2 - slack || r < w3 - slack) continue;
    double res = kInf;
    p = polish_vertex(p, u, w, tol_residual, res);
    if (res > 1e-8) continue;
    bool dup = false;
    for (Point q : out) dup = dup || dist(p, q) < 1e-9;
    if (!dup) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Point> solve_spm_edge_boundary(Point u1, double w1, Point u2, double w2, const Segment& edge,
                                           double tol_residual) {
  const Point a = edge.a, r = edge.b - edge.a;
  const double delta = w2 - w1;
  auto f = [&](double t) {
    Point x = a + t * r;
    return dist(x, u1) + w1 - dist(x, u2) - w2;
  };
  double alpha = 2 * dot(u2 - u1, a) + dot(u1, u1) - dot(u2, u2) - delta * delta;
  double beta = 2 * dot(u2 - u1, r);
  std::vector<double> roots;
  if (std::fabs(delta) <= 1e-15) {
    if (std::fabs(beta) > 1e-15) roots.push_back(-alpha / beta);
  } else {
    double c0 = dot(a - u2, a - u2), c1 = dot(a - u2, r), c2 = dot(r, r);
    double qa = beta * beta - 4 * delta * delta * c2;
    double qb = 2 * alpha * beta - 8 * delta * delta * c1;
    double qc = alpha * alpha - 4 * delta * delta * c0;
    double scale = std::max({std::fabs(qa), std::fabs(qb), std::fabs(qc), 1e-300});
    if (std::fabs(qa) <= 1e-13 * scale) {
      if (std::fabs(qb) > 1e-13 * scale) roots.push_back(-qc / qb);
    } else {
      double disc = qb * qb - 4 * qa * qc;
      if (disc >= -1e-12 * qb * qb) {
        disc = std::sqrt(std::max(disc, 0.0));
        double q = -0.5 * (qb + (qb >= 0 ? disc : -disc));
        if (q != 0) {
          roots.push_back(q / qa);
          roots.push_back(qc / q);
        } else {
          roots.push_back(0.0);
        }
      }
    }
  }
  const double len = std::max(norm(r), 1e-300);
  std::vector<Point> out;
  for (double t : roots) {
    if (!(t > -1e-9 / len && t < 1 + 1e-9 / len)) continue;
    t = std::clamp(t, 0.0, 1.0);
    for (int it = 0; it < 30 && std::fabs(f(t)) >= tol_residual; ++it) {
      Point x = a + t * r;
      double df = dot(unit(x - u1) - unit(x - u2), r);
      if (std::fabs(df) < 1e-14) break;
      t = std::clamp(t - f(t) / df, 0.0, 1.0);
    }
    // squaring twice can introduce roots of the wrong branch
    if (std::fabs(f(t)) > 1e-8) continue;
    Point x = a + t * r;
    bool dup = false;
    for (Point q : out) dup = dup || dist(x, q) < 1e-9;
    if (!dup) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

namespace {

struct Site {
  Point p;
  double w;
  double bound;  // upper bound on any value this site can define
  int id;
};

bool better(const SpmCandidate& a, const SpmCandidate& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.kind != b.kind) return a.kind == SpmCandidate::Kind::Corner;
  return lex_less(a.location, b.location);
}

}  // namespace

FarthestResult farthest_point(const FreeSpace& space, const DistanceTable& table, Point source,
                              const FarthestOptions& opt) {
  const ToleranceConfig& tol = space.tolerances();
  if (!space.locate(source).in_domain())
    throw Error(ErrorCode::PointOutsideDomain, "farthest_point source outside the domain");
  const int n = space.corner_count();
  Sighting from = sight(space, source);
  std::vector<double> w = source_weights(space, table, source, from);
  for (size_t i = 0; i < from.ids.size(); ++i) w[from.ids[i]] = std::min(w[from.ids[i]], from.len[i]);

  // fallback reach: every point of the domain lies in the hull of the corners
  auto hull_reach = [&](Point p) {
    double r = 0;
    for (int c = 0; c < n; ++c) r = std::max(r, dist(p, space.corner(c)));
    return r;
  };
  std::vector<Site> sites;
  for (int c = 0; c < n; ++c) {
    if (w[c] == kInf) continue;
    double R = opt.reach ? (*opt.reach)[c] : hull_reach(space.corner(c));
    sites.push_back({space.corner(c), w[c], w[c] + R, c});
  }
  sites.push_back({source, 0.0, hull_reach(source), n});
  std::stable_sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) { return a.bound > b.bound; });

  FarthestResult res;
  SpmCandidate best;
  best.value = -1;
  for (int c = 0; c < n; ++c) {
    if (w[c] == kInf || dist(space.corner(c), source) <= tol.tol_geom) continue;
    SpmCandidate cand{space.corner(c), SpmCandidate::Kind::Corner, {c, -1, -1}, -1, w[c]};
    if (best.value < 0 || better(cand, best)) best = cand;
  }
  if (best.value < 0) {
    best = {source, SpmCandidate::Kind::Corner, {-1, -1, -1}, -1, 0.0};
  }
  const double floor = opt.prune ? best.value : -kInf;

  auto site_visible = [&](Point x, const Site& s) { return dist(x, s.p) <= tol.tol_geom || space.visible(x, s.p); };
  const int m = static_cast<int>(sites.size());
  const int E = space.edge_count();
  std::vector<std::vector<SpmCandidate>> found(m);

#pragma omp parallel for schedule(dynamic) if (opt.exec == Exec::Parallel)
  for (int i = 0; i < m; ++i) {
    const Site& a = sites[i];
    if (a.bound < floor) continue;
    for (int j = i + 1; j < m; ++j) {
      const Site& b = sites[j];
      if (b.bound < floor) break;
      if (dist(a.p, b.p) <= tol.tol_geom) continue;
      for (int e = 0; e < E; ++e) {
        for (Point x : solve_spm_edge_boundary(a.p, a.w, b.p, b.w, space.edge(e), tol.tol_residual)) {
          double val = a.w + dist(x, a.p);
          if (val <= floor) continue;
          Location loc = space.locate(x);
          // a crossing sitting on a corner is that corner's candidate
          if (!loc.in_domain() || loc.kind == Location::Kind::Corner) continue;
          if (!site_visible(x, a) || !site_visible(x, b)) continue;
          found[i].push_back({x, SpmCandidate::Kind::EdgeCrossing, {a.id, b.id, -1}, e, val});
        }
      }
      for (int k = j + 1; k < m; ++k) {
        const Site& c = sites[k];
        if (c.bound < floor) break;
        if (dist(a.p, c.p) <= tol.tol_geom || dist(b.p, c.p) <= tol.tol_geom) continue;
        std::vector<Point> xs;
        try {
          xs = solve_spm_vertex(a.p, a.w, b.p, b.w, c.p, c.w, tol.tol_residual);
        } catch (const Error&) {
          continue;  // a one-dimensional locus; its local maxima are ends found elsewhere
        }
        for (Point x : xs) {
          double val = a.w + dist(x, a.p);
          if (val <= floor) continue;
          Location loc = space.locate(x);
          if (!loc.in_domain() || loc.kind == Location::Kind::Corner) continue;
          if (!site_visible(x, a) || !site_visible(x, b) || !site_visible(x, c)) continue;
          found[i].push_back({x, SpmCandidate::Kind::SpmVertex, {a.id, b.id, c.id}, -1, val});
        }
      }
    }
  }
  std::vector<SpmCandidate> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  res.generated = all.size();
  std::sort(all.begin(), all.end(), better);

  // x is genuine iff no corner seen from x (nor the source) offers a shorter route
  auto true_distance = [&](Point x) {
    double d = space.visible(source, x) ? dist(source, x) : kInf;
    for (int c = 0; c < n; ++c)
      if (w[c] + dist(x, space.corner(c)) < d && space.visible(x, space.corner(c))) d = w[c] + dist(x, space.corner(c));
    return d;
  };
  std::vector<char> ok(all.size(), 0);
  if (opt.keep_all) {
#pragma omp parallel for schedule(dynamic) if (opt.exec == Exec::Parallel)
    for (int k = 0; k < static_cast<int>(all.size()); ++k)
      ok[k] = std::fabs(true_distance(all[k].location) - all[k].value) <= tol.tol_dist;
    for (size_t k = 0; k < all.size(); ++k)
      if (ok[k]) res.validated.push_back(all[k]);
  }
  for (size_t k = 0; k < all.size(); ++k) {
    if (!better(all[k], best)) break;
    bool valid = opt.keep_all ? ok[k] : std::fabs(true_distance(all[k].location) - all[k].value) <= tol.tol_dist;
    if (valid) {
      best = all[k];
      break;
    }
  }
  res.best = best;
  res.point = best.location;
  res.distance = best.value;
  res.kind = best.kind;
  return res;
}

FarthestResult farthest_point(const PolygonalDomain& dom, const DistanceTable& table, Point source,
                              const ToleranceConfig& tol, FarthestOptions opt) {
  std::vector<double> reach;
  if (opt.prune && !opt.reach) {
    reach = corner_reach(dom, tol.tol_geom, opt.exec);
    opt.reach = &reach;
  }
  return farthest_point(DomainSpace(dom, tol), table, source, opt);
}

}  // namespace geodiam

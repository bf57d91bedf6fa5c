#include <algorithm>
#include <random>

#include <Eigen/Dense>

#include "geodiam/diameter.hpp"
#include "geodiam/fixtures.hpp"

namespace geodiam {

int EquationSystem::variable_count() const {
  switch (label) {
    case CaseLabel::II: return 4;
    case CaseLabel::BI: return 3;
    case CaseLabel::BB: return 2;
    default: return 0;
  }
}

namespace {

struct Evaluator {
  const EquationSystem& sys;
  Point ds, dt;  // unit directions of es, et

  explicit Evaluator(const EquationSystem& s) : sys(s), ds(unit(s.es.b - s.es.a)), dt(unit(s.et.b - s.et.a)) {}

  void points(const Eigen::VectorXd& x, Point& s, Point& t) const {
    switch (sys.label) {
      case CaseLabel::II:
        s = {x[0], x[1]};
        t = {x[2], x[3]};
        break;
      case CaseLabel::BI:
        s = sys.es.a + x[0] * ds;
        t = {x[1], x[2]};
        break;
      default:
        s = sys.es.a + x[0] * ds;
        t = sys.et.a + x[1] * dt;
    }
  }

  double len(const PathTerm& p, Point s, Point t) const { return dist(s, p.u) + p.d + dist(p.v, t); }

  Eigen::VectorXd residual(const Eigen::VectorXd& x) const {
    Point s, t;
    points(x, s, t);
    const int m = sys.equation_count();
    Eigen::VectorXd f(m);
    double l0 = len(sys.terms[0], s, t);
    for (int i = 0; i < m; ++i) f[i] = l0 - len(sys.terms[i + 1], s, t);
    return f;
  }

  // row i of d len / d x
  Eigen::RowVectorXd grad(const PathTerm& p, Point s, Point t) const {
    Point gs = unit(s - p.u), gt = unit(t - p.v);
    Eigen::RowVectorXd g(sys.variable_count());
    switch (sys.label) {
      case CaseLabel::II: g << gs.x, gs.y, gt.x, gt.y; break;
      case CaseLabel::BI: g << dot(gs, ds), gt.x, gt.y; break;
      default: g << dot(gs, ds), dot(gt, dt);
    }
    return g;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    Point s, t;
    points(x, s, t);
    const int m = sys.equation_count();
    Eigen::MatrixXd J(m, sys.variable_count());
    Eigen::RowVectorXd g0 = grad(sys.terms[0], s, t);
    for (int i = 0; i < m; ++i) J.row(i) = g0 - grad(sys.terms[i + 1], s, t);
    return J;
  }
};

Point centroid(const std::vector<Point>& pts) {
  Point c;
  for (Point p : pts) c = c + p;
  return (1.0 / pts.size()) * c;
}

double spread(const std::vector<Point>& pts, Point c) {
  double r = 0;
  for (Point p : pts) r += dist(p, c);
  return pts.empty() ? 0.0 : r / pts.size();
}

std::vector<Point> distinct(std::vector<Point> pts) {
  std::vector<Point> out;
  for (Point p : pts)
    if (std::none_of(out.begin(), out.end(), [&](Point q) { return q == p; })) out.push_back(p);
  return out;
}

double arc_param(const Segment& e, Point p) {
  return std::clamp(project_param(e, p), 0.0, 1.0) * e.length();
}

}  // namespace

std::vector<SystemSolution> newton_solve_system(const EquationSystem& sys, const ToleranceConfig& tol,
                                                std::uint64_t seed) {
  if (!sys.well_formed()) throw Error(ErrorCode::InvalidArgument, "equation count must equal variable count");
  Evaluator ev(sys);
  const int dim = sys.variable_count();

  std::vector<Point> us, vs;
  for (const auto& p : sys.terms) {
    us.push_back(p.u);
    vs.push_back(p.v);
  }
  us = distinct(us);
  vs = distinct(vs);
  const Point cs = centroid(us), ct = centroid(vs);
  const double rs = 0.25 * spread(us, cs) + 1e-3, rt = 0.25 * spread(vs, ct) + 1e-3;

  std::mt19937_64 rng(seed);
  auto jitter = [&]() { return 2 * unit_draw(rng) - 1; };

  std::vector<SystemSolution> out;
  for (int k = 0; k < tol.multistart_count; ++k) {
    const double j = k == 0 ? 0.0 : 1.0;
    Eigen::VectorXd x(dim);
    switch (sys.label) {
      case CaseLabel::II: x << cs.x + j * rs * jitter(), cs.y + j * rs * jitter(), ct.x + j * rt * jitter(),
                              ct.y + j * rt * jitter();
        break;
      case CaseLabel::BI:
        x << arc_param(sys.es, cs) + j * 0.25 * sys.es.length() * jitter(), ct.x + j * rt * jitter(),
            ct.y + j * rt * jitter();
        break;
      default:
        x << arc_param(sys.es, cs) + j * 0.25 * sys.es.length() * jitter(),
            arc_param(sys.et, ct) + j * 0.25 * sys.et.length() * jitter();
    }
    Eigen::VectorXd f = ev.residual(x);
    bool converged = f.lpNorm<Eigen::Infinity>() < tol.tol_residual;
    for (int it = 0; it < tol.newton_max_iter && !converged; ++it) {
      Eigen::MatrixXd J = ev.jacobian(x);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
      lu.setThreshold(1e-12);
      if (lu.rank() < dim) break;  // singular at this start; give up on it
      Eigen::VectorXd step = -lu.solve(f);
      double lam = 1.0, f0 = f.norm();
      Eigen::VectorXd xn = x + step, fn = ev.residual(xn);
      while (fn.norm() >= f0 && lam > 1e-6) {
        lam *= 0.5;
        xn = x + lam * step;
        fn = ev.residual(xn);
      }
      if (fn.norm() >= f0) break;
      x = xn;
      f = fn;
      converged = f.lpNorm<Eigen::Infinity>() < tol.tol_residual;
    }
    if (!converged) continue;
    SystemSolution sol;
    ev.points(x, sol.s, sol.t);
    sol.len = ev.len(sys.terms[0], sol.s, sol.t);
    sol.residual = f.lpNorm<Eigen::Infinity>();
    sol.x.assign(x.data(), x.data() + dim);
    bool dup = false;
    for (const auto& o : out) dup = dup || (dist(o.s, sol.s) <= tol.tol_geom && dist(o.t, sol.t) <= tol.tol_geom);
    if (!dup) out.push_back(sol);
  }
  std::sort(out.begin(), out.end(), [](const SystemSolution& a, const SystemSolution& b) {
    if (!(a.s == b.s)) return lex_less(a.s, b.s);
    return lex_less(a.t, b.t);
  });
  return out;
}

}  // namespace geodiam

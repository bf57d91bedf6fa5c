#include "geodiam/diameter.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <random>

#include <Eigen/Dense>

#include "geodiam/fixtures.hpp"

namespace geodiam {

const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::VV: return "VV";
    case CaseLabel::VB: return "VB";
    case CaseLabel::VI: return "VI";
    case CaseLabel::BB: return "BB";
    case CaseLabel::BI: return "BI";
    case CaseLabel::II: return "II";
  }
  return "?";
}

CaseLabel parse_case(const std::string& s) {
  std::string u;
  for (char ch : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  for (CaseLabel c : all_cases())
    if (u == to_string(c)) return c;
  throw Error(ErrorCode::InvalidArgument, "unknown case label '" + s + "'");
}

std::vector<CaseLabel> all_cases() {
  return {CaseLabel::VV, CaseLabel::VB, CaseLabel::VI, CaseLabel::BB, CaseLabel::BI, CaseLabel::II};
}

int min_path_count(CaseLabel c) {
  switch (c) {
    case CaseLabel::VV: return 1;
    case CaseLabel::VB: return 2;
    case CaseLabel::VI: return 3;
    case CaseLabel::BB: return 3;
    case CaseLabel::BI: return 4;
    case CaseLabel::II: return 5;
  }
  return 1;
}

int min_vs(CaseLabel c) {
  switch (c) {
    case CaseLabel::BB:
    case CaseLabel::BI: return 2;
    case CaseLabel::II: return 3;
    default: return 1;
  }
}

int min_vt(CaseLabel c) {
  switch (c) {
    case CaseLabel::VV: return 1;
    case CaseLabel::VB:
    case CaseLabel::BB: return 2;
    default: return 3;
  }
}

std::set<CaseLabel> prune_cases(int h) {
  std::set<CaseLabel> out;
  for (CaseLabel c : all_cases())
    if (h >= min_path_count(c) - 1) out.insert(c);
  return out;
}

const char* to_string(CandidatePair::Status s) {
  switch (s) {
    case CandidatePair::Status::Solved: return "solved";
    case CandidatePair::Status::Validated: return "validated";
    case CandidatePair::Status::CertifiedMaximal: return "certified_maximal";
    case CandidatePair::Status::Rejected: return "rejected";
  }
  return "?";
}

namespace {

using Kind = Location::Kind;

// endpoint kinds expected for a case, s first
std::pair<Kind, Kind> kinds_of(CaseLabel c) {
  switch (c) {
    case CaseLabel::VV: return {Kind::Corner, Kind::Corner};
    case CaseLabel::VB: return {Kind::Corner, Kind::Edge};
    case CaseLabel::VI: return {Kind::Corner, Kind::Interior};
    case CaseLabel::BB: return {Kind::Edge, Kind::Edge};
    case CaseLabel::BI: return {Kind::Edge, Kind::Interior};
    case CaseLabel::II: return {Kind::Interior, Kind::Interior};
  }
  return {Kind::Exterior, Kind::Exterior};
}

CandidatePair reject(CandidatePair c, const std::string& why) {
  c.status = CandidatePair::Status::Rejected;
  c.reason = why;
  return c;
}

bool strictly_inside_hull(Point p, std::vector<Point> pts, double tol) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return false;
  std::vector<Point> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) return false;
  for (size_t i = 0; i < h.size(); ++i) {
    Point a = h[i], b = h[(i + 1) % h.size()];
    if (orient(a, b, p) / dist(a, b) <= tol) return false;
  }
  return true;
}

// Lemma-style structure at one endpoint: interior points sit strictly inside
// the hull of their first corners, edge points see a corner off the edge line.
bool anchor_ok(const FreeSpace& space, const Location& loc, Point p, const std::vector<int>& ids, double tol) {
  std::vector<Point> pts;
  for (int i : ids) pts.push_back(space.corner(i));
  if (loc.kind == Kind::Interior) return strictly_inside_hull(p, pts, tol);
  if (loc.kind == Kind::Edge) {
    Segment e = space.edge(loc.id);
    for (Point q : pts)
      if (point_line_distance(q, e.a, e.b) > tol) return true;
    return false;
  }
  return true;
}

struct Structure {
  std::uint64_t count = 0;
  std::vector<std::pair<int, int>> ends;  // (first, last) corner per path
  std::vector<int> vs, vt;
  bool hole_bound_ok = true;
};

Structure path_structure(const FreeSpace& space, const DistanceTable& table, Point s, Point t, std::uint64_t cap) {
  const ToleranceConfig& tol = space.tolerances();
  PathSet ps = enumerate_shortest_paths(space, table, s, t, tol.tol_dist, cap);
  Location ls = space.locate(s), lt = space.locate(t);
  Structure st;
  st.count = ps.count;
  st.hole_bound_ok = ps.hole_bound_ok;
  for (const auto& p : ps.paths) {
    // a corner endpoint is itself the first or last corner of the path
    std::vector<int> q;
    if (ls.kind == Kind::Corner) q.push_back(ls.id);
    q.insert(q.end(), p.begin(), p.end());
    if (lt.kind == Kind::Corner) q.push_back(lt.id);
    if (q.empty()) continue;
    st.ends.push_back({q.front(), q.back()});
    st.vs.push_back(q.front());
    st.vt.push_back(q.back());
  }
  for (auto* v : {&st.vs, &st.vt}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return st;
}

}  // namespace

CandidatePair validate_candidate(const FreeSpace& space, const DistanceTable& table, CandidatePair cand,
                                 std::uint64_t path_cap) {
  const ToleranceConfig& tol = space.tolerances();
  Location ls = space.locate(cand.s), lt = space.locate(cand.t);
  if (!ls.in_domain() || !lt.in_domain()) return reject(cand, "OutsideDomain");
  auto [ks, kt] = kinds_of(cand.label);
  bool swapped = false;
  if (ls.kind != ks || lt.kind != kt) {
    if (ls.kind == kt && lt.kind == ks) {
      std::swap(cand.s, cand.t);
      std::swap(ls, lt);
      for (auto& p : cand.tuple) std::swap(p.first, p.second);
      swapped = true;
    } else {
      return reject(cand, "LocationMismatch");
    }
  }
  (void)swapped;
  double d = point_distance(space, table, cand.s, cand.t).distance;
  if (std::fabs(d - cand.solved_len) > tol.tol_dist) return reject(cand, "NotShortest");
  Structure st;
  try {
    st = path_structure(space, table, cand.s, cand.t, path_cap);
  } catch (const Error& e) {
    return reject(cand, e.code() == ErrorCode::PathExplosion ? "PathExplosion" : "PathError");
  }
  cand.path_count = st.count;
  cand.vs = st.vs;
  cand.vt = st.vt;
  if (st.count < static_cast<std::uint64_t>(min_path_count(cand.label))) return reject(cand, "PathCount");
  if (!st.hole_bound_ok) return reject(cand, "HoleBound");
  if (static_cast<int>(st.vs.size()) < min_vs(cand.label) || static_cast<int>(st.vt.size()) < min_vt(cand.label))
    return reject(cand, "AnchorCount");
  if (!anchor_ok(space, ls, cand.s, st.vs, tol.tol_geom) || !anchor_ok(space, lt, cand.t, st.vt, tol.tol_geom))
    return reject(cand, "AnchorStructure");
  cand.status = CandidatePair::Status::Validated;
  return cand;
}

namespace {

enum class GradientVerdict { Maximal, NotMaximal, Degenerate };

GradientVerdict gradient_certificate(const FreeSpace& space, const Structure& st, Point s, Point t) {
  if (st.ends.size() != 5) return GradientVerdict::Degenerate;
  Eigen::Matrix<double, 4, 5> G;
  for (int i = 0; i < 5; ++i) {
    Point gs = unit(s - space.corner(st.ends[i].first));
    Point gt = unit(t - space.corner(st.ends[i].second));
    G.col(i) << gs.x, gs.y, gt.x, gt.y;
  }
  Eigen::FullPivLU<Eigen::Matrix<double, 4, 5>> lu(G);
  lu.setThreshold(1e-9);
  if (lu.rank() != 4) return GradientVerdict::Degenerate;
  Eigen::VectorXd lam = lu.kernel().col(0);
  lam /= lam.cwiseAbs().maxCoeff();
  const double eps = 1e-9;
  int pos = 0, neg = 0;
  for (int i = 0; i < 5; ++i) {
    if (lam[i] > eps)
      ++pos;
    else if (lam[i] < -eps)
      ++neg;
  }
  // one gradient is a negative combination of the other four iff the kernel vector has one sign
  if (pos == 5 || neg == 5) return GradientVerdict::Maximal;
  if (pos + neg == 5) return GradientVerdict::NotMaximal;
  return GradientVerdict::Degenerate;
}

std::vector<Point> free_axes(const FreeSpace& space, const Location& loc) {
  if (loc.kind == Kind::Edge) return {unit(space.edge(loc.id).b - space.edge(loc.id).a)};
  return {{1, 0}, {0, 1}};
}

}  // namespace

CandidatePair certify_maximal(const FreeSpace& space, const DistanceTable& table, CandidatePair cand) {
  if (cand.status != CandidatePair::Status::Validated) return cand;
  const ToleranceConfig& tol = space.tolerances();
  if (cand.label == CaseLabel::II && cand.path_count == 5) {
    Structure st = path_structure(space, table, cand.s, cand.t, kDefaultPathCap);
    switch (gradient_certificate(space, st, cand.s, cand.t)) {
      case GradientVerdict::Maximal:
        cand.status = CandidatePair::Status::CertifiedMaximal;
        cand.certificate = "gradient";
        return cand;
      case GradientVerdict::NotMaximal: return reject(cand, "NotMaximal");
      case GradientVerdict::Degenerate: break;
    }
  }
  // probe a ring of feasible perturbations
  const Location ls = space.locate(cand.s), lt = space.locate(cand.t);
  const auto as = free_axes(space, ls), at = free_axes(space, lt);
  const int dim = static_cast<int>(as.size() + at.size());
  std::vector<std::vector<double>> dirs;
  for (int k = 0; k < dim; ++k)
    for (double sg : {1.0, -1.0}) {
      std::vector<double> v(dim, 0.0);
      v[k] = sg;
      dirs.push_back(v);
    }
  std::mt19937_64 rng(0x5eed);
  while (dirs.size() < 32) {
    std::vector<double> v(dim);
    double nn = 0;
    for (auto& x : v) {
      double u1 = std::max(unit_draw(rng), 1e-300), u2 = unit_draw(rng);
      x = std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * u2);
      nn += x * x;
    }
    nn = std::sqrt(nn);
    for (auto& x : v) x /= nn;
    dirs.push_back(v);
  }
  const double d0 = point_distance(space, table, cand.s, cand.t).distance;
  // the residual scale, not tol_dist: at these radii any real ascent is far below tol_dist
  const double thr = 10 * tol.tol_residual * std::max(1.0, d0);
  for (double r : {10 * tol.tol_geom, 100 * tol.tol_geom})
    for (const auto& v : dirs) {
      Point s = cand.s, t = cand.t;
      for (size_t k = 0; k < as.size(); ++k) s = s + r * v[k] * as[k];
      for (size_t k = 0; k < at.size(); ++k) t = t + r * v[as.size() + k] * at[k];
      if (!space.locate(s).in_domain() || !space.locate(t).in_domain()) continue;
      double d;
      try {
        d = point_distance(space, table, s, t).distance;
      } catch (const Error&) {
        continue;
      }
      if (d > d0 + thr) return reject(cand, "NotMaximal");
    }
  cand.status = CandidatePair::Status::CertifiedMaximal;
  cand.certificate = "probe";
  return cand;
}

namespace {

void settle(const FreeSpace& space, const DistanceTable& table, std::vector<CandidatePair>& cands, CaseStats& st,
            const SolverConfig& cfg) {
#pragma omp parallel for schedule(dynamic) if (cfg.exec == Exec::Parallel)
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    cands[i] = validate_candidate(space, table, cands[i], cfg.path_cap);
    cands[i] = certify_maximal(space, table, cands[i]);
  }
  for (const auto& c : cands) {
    if (c.status == CandidatePair::Status::Rejected) {
      ++st.rejected;
      if (c.reason == "NotMaximal") ++st.validated;
    } else {
      ++st.validated;
      if (c.status == CandidatePair::Status::CertifiedMaximal) ++st.certified;
    }
  }
}

bool pair_less(const CandidatePair& a, const CandidatePair& b) {
  if (a.s.x != b.s.x) return a.s.x < b.s.x;
  if (a.s.y != b.s.y) return a.s.y < b.s.y;
  if (a.t.x != b.t.x) return a.t.x < b.t.x;
  return a.t.y < b.t.y;
}

}  // namespace

std::set<CaseLabel> enabled_cases(const SolverConfig& cfg, int h) {
  if (cfg.cases) return *cfg.cases;
  std::set<CaseLabel> out = prune_cases(h);
  out.insert(cfg.force.begin(), cfg.force.end());
  return out;
}

DiameterResult compute_diameter(const PolygonalDomain& dom, const SolverConfig& cfg, bool allow_partial) {
  cfg.tol.check();
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  auto since = [](clock::time_point a) { return std::chrono::duration<double>(clock::now() - a).count(); };

  const std::set<CaseLabel> cases = enabled_cases(cfg, dom.h());
  SolverContext ctx = make_context(dom, cfg);
  DomainSpace space(dom, cfg.tol);
  DiameterResult res;
  res.corner_max = ctx.corner_max;
  for (CaseLabel c : all_cases()) res.stats[c].enabled = cases.count(c) > 0;

  std::vector<CandidatePair> all;
  {
    auto tc = clock::now();
    auto corner = solve_case_corner(ctx, cfg);
    std::vector<CandidatePair> live;
    for (auto& c : corner) {
      ++res.stats[c.label].generated;
      if (cases.count(c.label))
        live.push_back(c);
      else
        all.push_back(reject(c, "PrunedCase"));
    }
    CaseStats st;
    settle(space, ctx.table, live, st, cfg);
    for (const auto& c : live) {
      auto& s = res.stats[c.label];
      if (c.status == CandidatePair::Status::Rejected) {
        ++s.rejected;
      } else {
        ++s.validated;
        if (c.status == CandidatePair::Status::CertifiedMaximal) ++s.certified;
        ctx.incumbent = std::max(ctx.incumbent, c.solved_len);
      }
    }
    all.insert(all.end(), live.begin(), live.end());
    double dt = since(tc);
    for (CaseLabel c : {CaseLabel::VV, CaseLabel::VB, CaseLabel::VI}) res.stats[c].seconds = dt / 3;
  }

  for (CaseLabel c : {CaseLabel::BB, CaseLabel::BI, CaseLabel::II}) {
    if (!cases.count(c)) continue;
    auto tc = clock::now();
    GenerationResult g = generate_candidates(c, ctx, cfg, allow_partial);
    CaseStats& st = res.stats[c];
    st.tuples = g.tuples;
    st.generated = g.candidates.size();
    st.complete = g.complete;
    res.complete = res.complete && g.complete;
    settle(space, ctx.table, g.candidates, st, cfg);
    for (const auto& x : g.candidates)
      if (x.status != CandidatePair::Status::Rejected) ctx.incumbent = std::max(ctx.incumbent, x.solved_len);
    all.insert(all.end(), g.candidates.begin(), g.candidates.end());
    st.seconds = since(tc);
  }

  double best_cert = -1, best_valid = -1;
  for (const auto& c : all) {
    if (c.status == CandidatePair::Status::CertifiedMaximal) best_cert = std::max(best_cert, c.solved_len);
    if (c.status == CandidatePair::Status::Validated) best_valid = std::max(best_valid, c.solved_len);
  }
  auto wanted = CandidatePair::Status::CertifiedMaximal;
  res.diameter = best_cert;
  if (best_valid > best_cert + cfg.tol.tol_dist) {
    res.diameter = best_valid;
    res.used_uncertified = true;
    wanted = CandidatePair::Status::Validated;
  }
  for (const auto& c : all)
    if (c.status == wanted && c.solved_len >= res.diameter - cfg.tol.tol_dist) res.pairs.push_back(c);
  std::sort(res.pairs.begin(), res.pairs.end(), pair_less);
  if (!res.pairs.empty()) {
    // report the case of the best pair; ties prefer the most constrained case
    const CandidatePair* top = &res.pairs[0];
    for (const auto& p : res.pairs)
      if (p.solved_len > top->solved_len + cfg.tol.tol_dist ||
          (std::fabs(p.solved_len - top->solved_len) <= cfg.tol.tol_dist && p.label > top->label))
        top = &p;
    res.label = top->label;
    res.path_count = top->path_count;
  }
  if (cfg.keep_candidates) res.candidates = std::move(all);
  res.seconds = since(t0);
  return res;
}

}  // namespace geodiam

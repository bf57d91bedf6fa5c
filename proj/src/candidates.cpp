#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <optional>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

#include "geodiam/diameter.hpp"
#include "geodiam/visibility_polygon.hpp"

namespace geodiam {

namespace bg = boost::geometry;

namespace {

using BPoint = bg::model::d2::point_xy<double>;
using BPoly = bg::model::polygon<BPoint, false, true>;
using BMulti = bg::model::multi_polygon<BPoly>;

constexpr double kInf = std::numeric_limits<double>::infinity();

BMulti to_multi(const std::vector<Point>& ring) {
  BPoly p;
  for (Point q : ring) p.outer().push_back({q.x, q.y});
  if (!ring.empty()) p.outer().push_back({ring[0].x, ring[0].y});
  bg::correct(p);
  BMulti m;
  m.push_back(std::move(p));
  return m;
}

// Clipping failures keep the larger set, which only weakens pruning.
BMulti meet(const BMulti& a, const BMulti& b) {
  BMulti out;
  try {
    bg::intersection(a, b, out);
  } catch (const std::exception&) {
    return a;
  }
  return out;
}

double area(const BMulti& m) { return std::fabs(bg::area(m)); }

double min_dist(Point p, const BMulti& m) {
  if (m.empty()) return kInf;
  BPoint q{p.x, p.y};
  if (bg::covered_by(q, m)) return 0.0;
  return bg::distance(q, m);
}

double max_dist(Point p, const BMulti& m) {
  double r = 0;
  for (const auto& poly : m)
    for (const auto& q : poly.outer()) r = std::max(r, dist(p, {q.x(), q.y()}));
  return r;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
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
  return h;
}

using Intervals = std::vector<Interval>;

Intervals meet(const Intervals& a, const Intervals& b) {
  Intervals out;
  for (const auto& x : a)
    for (const auto& y : b) {
      double lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
      if (hi > lo) out.push_back({lo, hi});
    }
  return out;
}

// Part of each interval of edge e inside a convex CCW polygon.
Intervals clip(const Intervals& iv, const Segment& e, const std::vector<Point>& poly) {
  Intervals out;
  for (const auto& x : iv) {
    double lo = x.lo, hi = x.hi;
    for (size_t i = 0; i < poly.size() && lo < hi; ++i) {
      Point a = poly[i], b = poly[(i + 1) % poly.size()];
      // inside iff orient(a, b, p) >= 0; orient is affine along the edge
      double f0 = orient(a, b, e.at(0)), f1 = orient(a, b, e.at(1));
      double df = f1 - f0;
      if (std::fabs(df) < 1e-300) {
        if (f0 < 0) hi = lo;
        continue;
      }
      double root = -f0 / df;
      if (df > 0)
        lo = std::max(lo, root);
      else
        hi = std::min(hi, root);
    }
    if (hi > lo) out.push_back({lo, hi});
  }
  return out;
}

double min_dist(Point p, const Intervals& iv, const Segment& e) {
  double r = kInf;
  for (const auto& x : iv) r = std::min(r, point_segment_distance(p, {e.at(x.lo), e.at(x.hi)}));
  return r;
}

double max_dist(Point p, const Intervals& iv, const Segment& e) {
  double r = 0;
  for (const auto& x : iv) r = std::max({r, dist(p, e.at(x.lo)), dist(p, e.at(x.hi))});
  return r;
}

double total_len(const Intervals& iv, const Segment& e) {
  double r = 0;
  for (const auto& x : iv) r += (x.hi - x.lo) * e.length();
  return r;
}

double ccw_angle(Point a, Point b) {
  double t = std::atan2(cross(a, b), dot(a, b));
  return t < 0 ? t + 2 * M_PI : t;
}

// Where an endpoint may sit for the path endpoint -> a -> n to be taut at a.
// Empty optional: no restriction known. Empty polygon: impossible.
std::optional<std::vector<Point>> taut_cone(const PolygonalDomain& dom, int a, Point n, double radius) {
  const Point o = dom.corners[a];
  const Point dp = dom.corners[dom.prev[a]] - o, dq = dom.corners[dom.next[a]] - o;
  const double sigma = ccw_angle(dp, dq);  // obstacle wedge, CCW from prev to next
  const Point dn = n - o;
  if (norm(dn) <= 0) return std::nullopt;
  const double alpha1 = std::atan2(dp.y, dp.x), beta = std::atan2(dn.y, dn.x);
  const double g1 = ccw_angle(dn, dp), g2 = ccw_angle(dq, dn);
  const double pad = 1e-9;
  double lo, hi;
  if (g1 + sigma <= M_PI + pad) {
    lo = alpha1 + sigma;
    hi = beta + M_PI;
    while (hi < lo) hi += 2 * M_PI;
  } else if (g2 + sigma <= M_PI + pad) {
    lo = beta - M_PI;
    hi = alpha1;
    while (hi < lo) hi += 2 * M_PI;
  } else {
    return std::vector<Point>{};
  }
  lo -= pad;
  hi += pad;
  const double delta = hi - lo;
  const double rho = radius / std::cos(delta / 6) + 1e-9;
  std::vector<Point> cone{o};
  for (int k = 0; k <= 3; ++k) {
    double t = lo + delta * k / 3;
    cone.push_back(o + rho * Point{std::cos(t), std::sin(t)});
  }
  return cone;
}

// A side's region cut down to where the path bends tautly at a toward a hop.
struct Cut {
  bool ok = false;
  BMulti reg;
  Intervals iv;
  double lo = 0, hi = 0;  // distance range from a
};

// Admissible region of one endpoint for a corner group.
struct Side {
  std::vector<int> group;
  int edge = -1;  // -1: interior endpoint
  BMulti region;
  Intervals ivals;
  std::map<std::pair<int, int>, Cut> cuts;  // (a, hop or -1)
  std::vector<double> spread;                // per group corner, farthest admissible endpoint
};

struct PairInfo {
  int a, b;
  double d;
  double lo, hi;  // range of len over the cut regions
  const Cut *cs, *ct;
};

struct CaseShape {
  int pairs;
  int s_min, s_max, t_min, t_max;
  bool s_edge, t_edge;
};

CaseShape shape_of(CaseLabel c) {
  switch (c) {
    case CaseLabel::II: return {5, 3, 5, 3, 5, false, false};
    case CaseLabel::BI: return {4, 2, 4, 3, 4, true, false};
    case CaseLabel::BB: return {3, 2, 3, 2, 3, true, true};
    default: throw Error(ErrorCode::InvalidArgument, "generate_candidates handles BB, BI and II only");
  }
}

struct Generator {
  const SolverContext& ctx;
  const SolverConfig& cfg;
  const PolygonalDomain& dom;
  CaseLabel label;
  CaseShape shape;
  double floor;
  double thr_area;
  std::vector<int> reflex;
  std::vector<char> far;  // n*n
  std::vector<int> hop;   // n*n, next_hop for far pairs
  std::vector<BMulti> vp;
  std::vector<std::vector<Intervals>> seen;  // [corner][edge], reflex corners only

  Generator(CaseLabel c, const SolverContext& x, const SolverConfig& k)
      : ctx(x), cfg(k), dom(*x.dom), label(c), shape(shape_of(c)) {
    floor = ctx.incumbent - cfg.tol.tol_dist;
    thr_area = 1e-13 * std::max(1.0, dom.diag() * dom.diag());
    const int n = dom.n();
    for (int i = 0; i < n; ++i)
      if (dom.reflex[i]) reflex.push_back(i);
    far.assign(static_cast<size_t>(n) * n, 0);
    for (int a : reflex)
      for (int b : reflex)
        far[static_cast<size_t>(a) * n + b] = ctx.table.at(a, b) + ctx.reach[a] + ctx.reach[b] >= floor;
    vp.resize(n);
    for (int a : reflex) vp[a] = to_multi(ctx.vps[a]);
    hop.assign(static_cast<size_t>(n) * n, -1);
    for (int a : reflex)
      for (int b : reflex)
        if (far[static_cast<size_t>(a) * n + b]) hop[static_cast<size_t>(a) * n + b] = next_hop(a, b);
    if (shape.s_edge || shape.t_edge) {
      seen.assign(n, {});
      for (int a : reflex) {
        seen[a].resize(dom.edge_count());
        for (int e = 0; e < dom.edge_count(); ++e) seen[a][e] = visible_intervals(dom, dom.corners[a], e, cfg.tol.tol_geom);
      }
    }
  }

  bool has_far_partner(int a) const {
    for (int b : reflex)
      if (far[static_cast<size_t>(a) * dom.n() + b]) return true;
    return false;
  }

  std::vector<Side> interior_sides(int kmin, int kmax) const {
    std::vector<int> cand;
    for (int a : reflex)
      if (has_far_partner(a)) cand.push_back(a);
    std::vector<Side> out;
    std::vector<int> group;
    auto rec = [&](auto&& self, size_t start, const BMulti& region) -> void {
      if (static_cast<int>(group.size()) >= kmin) {
        std::vector<Point> pts;
        for (int a : group) pts.push_back(dom.corners[a]);
        auto hull = convex_hull(pts);
        if (hull.size() >= 3) {
          BMulti r = meet(region, to_multi(hull));
          if (area(r) > thr_area) out.push_back({group, -1, std::move(r), {}, {}, {}});
        }
      }
      if (static_cast<int>(group.size()) == kmax) return;
      for (size_t i = start; i < cand.size(); ++i) {
        BMulti r = group.empty() ? vp[cand[i]] : meet(region, vp[cand[i]]);
        if (area(r) <= thr_area) continue;
        group.push_back(cand[i]);
        self(self, i + 1, r);
        group.pop_back();
      }
    };
    rec(rec, 0, {});
    return out;
  }

  std::vector<Side> edge_sides(int kmin, int kmax) const {
    std::vector<Side> out;
    for (int e = 0; e < dom.edge_count(); ++e) {
      const Segment seg = dom.segment(e);
      std::vector<int> cand;
      for (int a : reflex)
        if (has_far_partner(a) && !seen[a][e].empty()) cand.push_back(a);
      std::vector<int> group;
      auto rec = [&](auto&& self, size_t start, const Intervals& iv) -> void {
        if (static_cast<int>(group.size()) >= kmin) {
          // some corner of the group must be off the edge's line
          bool off = false;
          for (int a : group) off = off || point_line_distance(dom.corners[a], seg.a, seg.b) > cfg.tol.tol_geom;
          if (off) out.push_back({group, e, {}, iv, {}, {}});
        }
        if (static_cast<int>(group.size()) == kmax) return;
        for (size_t i = start; i < cand.size(); ++i) {
          Intervals r = group.empty() ? seen[cand[i]][e] : meet(iv, seen[cand[i]][e]);
          if (total_len(r, seg) <= cfg.tol.tol_geom) continue;
          group.push_back(cand[i]);
          self(self, i + 1, r);
          group.pop_back();
        }
      };
      rec(rec, 0, {});
    }
    return out;
  }

  // next corner after a on the path a -> b, -1 unless unique
  int next_hop(int a, int b) const {
    if (a == b) return -1;
    auto path = ctx.table.corner_path(a, b);
    if (path.size() < 2) return -1;
    for (size_t k = 1; k < path.size(); ++k)
      if (ctx.table.predecessors(a, path[k]).size() != 1) return -1;
    return path[1];
  }

  Cut make_cut(const Side& side, int a, int n) const {
    Cut c;
    c.reg = side.region;
    c.iv = side.ivals;
    if (n >= 0) {
      auto cone = taut_cone(dom, a, dom.corners[n], ctx.reach[a]);
      if (cone && cone->empty()) return c;
      if (cone) {
        if (side.edge < 0)
          c.reg = meet(c.reg, to_multi(*cone));
        else
          c.iv = clip(c.iv, dom.segment(side.edge), *cone);
      }
    }
    const Point p = dom.corners[a];
    if (side.edge < 0) {
      if (area(c.reg) <= thr_area) return c;
      c.lo = min_dist(p, c.reg);
      c.hi = max_dist(p, c.reg);
    } else {
      const Segment e = dom.segment(side.edge);
      if (total_len(c.iv, e) <= cfg.tol.tol_geom) return c;
      c.lo = min_dist(p, c.iv, e);
      c.hi = max_dist(p, c.iv, e);
    }
    c.ok = true;
    return c;
  }

  // every cut a pair job may ask for
  void prepare(Side& side) const {
    const int n = dom.n();
    for (int a : side.group)
      side.spread.push_back(side.edge < 0 ? max_dist(dom.corners[a], side.region)
                                          : max_dist(dom.corners[a], side.ivals, dom.segment(side.edge)));
    for (int a : side.group)
      for (int b : reflex)
        if (far[static_cast<size_t>(a) * n + b]) {
          int h = hop[static_cast<size_t>(a) * n + b];
          auto key = std::make_pair(a, h);
          if (!side.cuts.count(key)) side.cuts.emplace(key, make_cut(side, a, h));
        }
  }

  std::vector<PairInfo> pair_infos(const Side& S, const Side& T) const {
    std::vector<PairInfo> out;
    const int n = dom.n();
    for (int a : S.group)
      for (int b : T.group) {
        if (!far[static_cast<size_t>(a) * n + b]) continue;
        const Cut& cs = S.cuts.at({a, hop[static_cast<size_t>(a) * n + b]});
        const Cut& ct = T.cuts.at({b, hop[static_cast<size_t>(b) * n + a]});
        if (!cs.ok || !ct.ok) continue;
        const double d = ctx.table.at(a, b);
        PairInfo p{a, b, d, d + cs.lo + ct.lo, d + cs.hi + ct.hi, &cs, &ct};
        if (p.hi < floor) continue;
        out.push_back(p);
      }
    return out;
  }

  // running intersection of the cut regions of one endpoint
  struct Joint {
    BMulti reg;
    Intervals iv;
    bool any = false;
  };

  // the solution must land in the cut regions it was derived from
  bool inside(Point p, const Side& side, const Joint& j) const {
    const double slack = 1e-6 * std::max(1.0, dom.diag());
    if (side.edge < 0) return min_dist(p, j.any ? j.reg : side.region) <= slack;
    return min_dist(p, j.any ? j.iv : side.ivals, dom.segment(side.edge)) <= slack;
  }

  void solve(const Side& S, const Side& T, const std::vector<const PairInfo*>& sel, const Joint& js,
             const Joint& jt, std::uint64_t seed, double floor_now, std::vector<CandidatePair>& out) const {
    EquationSystem sys;
    sys.label = label;
    for (const PairInfo* p : sel) sys.terms.push_back({dom.corners[p->a], dom.corners[p->b], p->d, p->a, p->b});
    if (S.edge >= 0) {
      sys.es = dom.segment(S.edge);
      sys.es_id = S.edge;
    }
    if (T.edge >= 0) {
      sys.et = dom.segment(T.edge);
      sys.et_id = T.edge;
    }
    const double g = cfg.tol.tol_geom;
    for (const auto& sol : newton_solve_system(sys, cfg.tol, seed)) {
      if (S.edge >= 0 && !(sol.x[0] > g && sol.x[0] < sys.es.length() - g)) continue;
      if (T.edge >= 0 && !(sol.x[1] > g && sol.x[1] < sys.et.length() - g)) continue;
      if (sol.len < floor_now || !inside(sol.s, S, js) || !inside(sol.t, T, jt)) continue;
      CandidatePair c;
      c.s = sol.s;
      c.t = sol.t;
      c.label = label;
      c.solved_len = sol.len;
      for (const PairInfo* p : sel) c.tuple.push_back({p->a, p->b});
      out.push_back(std::move(c));
    }
  }

  bool extend(const Joint& j, const Cut& c, int edge, Joint& out) const {
    if (edge < 0) {
      out.reg = j.any ? meet(j.reg, c.reg) : c.reg;
      out.any = true;
      return area(out.reg) > thr_area;
    }
    out.iv = j.any ? meet(j.iv, c.iv) : c.iv;
    out.any = true;
    return total_len(out.iv, dom.segment(edge)) > cfg.tol.tol_geom;
  }

  // d(s,t) <= |s-a| + d(a,b) + |b-t| for any corners a, b that s and t see
  double upper(const Side& A, const std::vector<double>& sa, const Side& B, const std::vector<double>& tb) const {
    double ub = kInf;
    for (size_t i = 0; i < A.group.size(); ++i)
      for (size_t j = 0; j < B.group.size(); ++j)
        ub = std::min(ub, sa[i] + ctx.table.at(A.group[i], B.group[j]) + tb[j]);
    return ub;
  }

  std::vector<double> spread_in(const Side& side, const Joint& j) const {
    if (!j.any) return side.spread;
    std::vector<double> out;
    for (int a : side.group)
      out.push_back(side.edge < 0 ? max_dist(dom.corners[a], j.reg)
                                  : max_dist(dom.corners[a], j.iv, dom.segment(side.edge)));
    return out;
  }

  GenerationResult run(bool allow_partial) const {
    std::vector<Side> S = shape.s_edge ? edge_sides(shape.s_min, shape.s_max) : interior_sides(shape.s_min, shape.s_max);
    std::vector<Side> T;
    const bool same = shape.s_edge == shape.t_edge && shape.s_min == shape.t_min && shape.s_max == shape.t_max;
    if (!same) T = shape.t_edge ? edge_sides(shape.t_min, shape.t_max) : interior_sides(shape.t_min, shape.t_max);
#pragma omp parallel for schedule(dynamic) if (cfg.exec == Exec::Parallel)
    for (int i = 0; i < static_cast<int>(S.size()); ++i) prepare(S[i]);
#pragma omp parallel for schedule(dynamic) if (cfg.exec == Exec::Parallel)
    for (int i = 0; i < static_cast<int>(T.size()); ++i) prepare(T[i]);
    const std::vector<Side>& Tref = same ? S : T;

    // Most promising side pairs first, so a good validated value raises the
    // floor early.
    struct Job {
      int i, j;
      double ub;
    };
    std::vector<Job> jobs;
    for (int i = 0; i < static_cast<int>(S.size()); ++i)
      for (int j = same ? i : 0; j < static_cast<int>(Tref.size()); ++j) {
        if (S[i].edge >= 0 && S[i].edge == Tref[j].edge) continue;  // both on one edge see each other
        const double ub = upper(S[i], S[i].spread, Tref[j], Tref[j].spread);
        if (ub >= floor) jobs.push_back({i, j, ub});
      }
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.ub > b.ub; });
    DomainSpace space(dom, cfg.tol);
    // Jobs run in fixed batches. Each batch prunes against the validated
    // values of earlier batches only, so the work done does not depend on
    // thread timing.
    constexpr int kBatch = 64;
    double best = floor;  // validated lengths found so far, less tol_dist
    std::atomic<std::uint64_t> tuples{0};
    std::atomic<bool> exhausted{false};
    std::vector<std::vector<CandidatePair>> found(jobs.size());
    std::vector<double> reached(jobs.size(), floor);
    const int njobs = static_cast<int>(jobs.size());
    for (int first = 0; first < njobs && !exhausted.load(); first += kBatch) {
      const int last = std::min(njobs, first + kBatch);
#pragma omp parallel for schedule(dynamic) if (cfg.exec == Exec::Parallel)
      for (int job = first; job < last; ++job) {
        double bar = best;
        if (exhausted.load() || jobs[job].ub < bar) continue;
        const Side& A = S[jobs[job].i];
        const Side& B = Tref[jobs[job].j];
        if (static_cast<int>(A.group.size()) > shape.pairs || static_cast<int>(B.group.size()) > shape.pairs) continue;
        std::vector<PairInfo> P = pair_infos(A, B);
        if (static_cast<int>(P.size()) < shape.pairs) continue;
        std::vector<const PairInfo*> sel;
        auto missing = [&](const std::vector<int>& grp, bool first_end) {
          int miss = 0;
          for (int x : grp) {
            bool hit = false;
            for (const PairInfo* p : sel) hit = hit || (first_end ? p->a : p->b) == x;
            if (!hit) ++miss;
          }
          return miss;
        };
        auto rec = [&](auto&& self, size_t start, double lo, double hi, const Joint& js, const Joint& jt) -> void {
          if (exhausted.load()) return;
          const int left = shape.pairs - static_cast<int>(sel.size());
          if (missing(A.group, true) > left || missing(B.group, false) > left) return;
          if (left == 0) {
            if (++tuples > cfg.budget) {
              exhausted = true;
              return;
            }
            std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
            for (const PairInfo* p : sel) seed = seed * 1000003ULL + static_cast<std::uint64_t>(p->a * 7919 + p->b);
            const size_t before = found[job].size();
            solve(A, B, sel, js, jt, seed, bar, found[job]);
            for (size_t k = before; k < found[job].size(); ++k) {
              CandidatePair v = validate_candidate(space, ctx.table, found[job][k], cfg.path_cap);
              if (v.status != CandidatePair::Status::Rejected) bar = std::max(bar, v.solved_len - cfg.tol.tol_dist);
            }
            return;
          }
          if (!sel.empty() && upper(A, spread_in(A, js), B, spread_in(B, jt)) < bar) return;
          for (size_t i = start; i + left <= P.size(); ++i) {
            const PairInfo& p = P[i];
            const double nlo = std::max({lo, p.lo, bar}), nhi = std::min(hi, p.hi);
            if (nlo > nhi + cfg.tol.tol_dist) continue;
            Joint ns, nt;
            if (!extend(js, *p.cs, A.edge, ns) || !extend(jt, *p.ct, B.edge, nt)) continue;
            sel.push_back(&p);
            self(self, i + 1, nlo, nhi, ns, nt);
            sel.pop_back();
          }
        };
        rec(rec, 0, floor, kInf, Joint{}, Joint{});
        reached[job] = bar;
      }
      for (int job = first; job < last; ++job) best = std::max(best, reached[job]);
    }

    GenerationResult res;
    res.tuples = std::min<std::uint64_t>(tuples.load(), cfg.budget);
    res.complete = !exhausted.load();
    if (!res.complete && !allow_partial)
      throw Error(ErrorCode::BudgetExceeded, std::string(to_string(label)) + " tuple budget of " +
                                                 std::to_string(cfg.budget) + " exhausted");
    // Merge repeats of one pair, in either order. Different tuples can land
    // on the same points with different lengths, and those stay apart.
    std::vector<CandidatePair> flat;
    for (auto& f : found)
      for (auto& c : f) flat.push_back(std::move(c));
    auto key = [](const CandidatePair& c) { return lex_less(c.t, c.s) ? std::pair{c.t, c.s} : std::pair{c.s, c.t}; };
    std::vector<size_t> idx(flat.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return key(flat[a]).first.x < key(flat[b]).first.x; });
    const double g = cfg.tol.tol_geom;
    std::vector<char> drop(flat.size(), 0);
    for (size_t i = 0; i < idx.size(); ++i) {
      if (drop[idx[i]]) continue;
      const auto ki = key(flat[idx[i]]);
      for (size_t j = i + 1; j < idx.size(); ++j) {
        const auto kj = key(flat[idx[j]]);
        if (kj.first.x - ki.first.x > g) break;
        if (dist(ki.first, kj.first) <= g && dist(ki.second, kj.second) <= g &&
            std::fabs(flat[idx[i]].solved_len - flat[idx[j]].solved_len) <= cfg.tol.tol_dist)
          drop[idx[j]] = 1;
      }
    }
    for (size_t i = 0; i < flat.size(); ++i)
      if (!drop[i]) res.candidates.push_back(std::move(flat[i]));
    return res;
  }
};

}  // namespace

SolverContext make_context(const PolygonalDomain& dom, const SolverConfig& cfg) {
  SolverContext ctx;
  ctx.dom = &dom;
  ctx.graph = build_visibility_graph(dom, cfg.tol, cfg.exec);
  ctx.table = corner_distances(ctx.graph, cfg.tol, cfg.exec);
  ctx.vps = all_visibility_polygons(dom, cfg.tol.tol_geom, cfg.exec);
  ctx.reach.resize(dom.n());
  for (int c = 0; c < dom.n(); ++c) ctx.reach[c] = polygon_reach(ctx.vps[c], dom.corners[c]);
  for (double x : ctx.table.d) ctx.corner_max = std::max(ctx.corner_max, x);
  ctx.incumbent = ctx.corner_max;
  return ctx;
}

std::vector<CandidatePair> solve_case_corner(const SolverContext& ctx, const SolverConfig& cfg) {
  const PolygonalDomain& dom = *ctx.dom;
  DomainSpace space(dom, cfg.tol);
  std::vector<CandidatePair> out(dom.n());
  FarthestOptions opt;
  opt.reach = &ctx.reach;
  opt.exec = Exec::Serial;
#pragma omp parallel for schedule(dynamic) if (cfg.exec == Exec::Parallel)
  for (int v = 0; v < dom.n(); ++v) {
    FarthestResult r = farthest_point(space, ctx.table, dom.corners[v], opt);
    CandidatePair& c = out[v];
    c.s = dom.corners[v];
    c.t = r.point;
    c.solved_len = r.distance;
    switch (space.locate(r.point).kind) {
      case Location::Kind::Corner: c.label = CaseLabel::VV; break;
      case Location::Kind::Edge: c.label = CaseLabel::VB; break;
      default: c.label = CaseLabel::VI;
    }
    for (int site : r.best.sites)
      if (site >= 0 && site < dom.n()) c.tuple.push_back({v, site});
  }
  return out;
}

GenerationResult generate_candidates(CaseLabel c, const SolverContext& ctx, const SolverConfig& cfg,
                                     bool allow_partial) {
  Generator gen(c, ctx, cfg);
  return gen.run(allow_partial);
}

}  // namespace geodiam

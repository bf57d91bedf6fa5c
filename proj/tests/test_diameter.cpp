#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "geodiam/diameter.hpp"
#include "geodiam/fixtures.hpp"
#include "geodiam/instance.hpp"

using namespace geodiam;

namespace {

using C = CaseLabel;

double corner_pair_max(const PolygonalDomain& dom) {
  auto t = corner_distances(build_visibility_graph(dom));
  double m = 0;
  for (int a = 0; a < dom.n(); ++a)
    for (int b = 0; b < dom.n(); ++b) m = std::max(m, t.at(a, b));
  return m;
}

PolygonalDomain rectangle(double w, double h) {
  RawDomain raw;
  raw.outer = {{0, 0}, {w, 0}, {w, h}, {0, h}};
  return validate_domain(raw);
}

// an endpoint sitting on a shared corner counts itself as its anchor
void check_case_table(const CandidatePair& p) {
  CHECK(p.path_count >= static_cast<std::uint64_t>(min_path_count(p.label)));
  CHECK(static_cast<int>(p.vs.size()) >= min_vs(p.label));
  CHECK(static_cast<int>(p.vt.size()) >= min_vt(p.label));
}

}  // namespace

TEST_CASE("case table and pruning") {
  CHECK(prune_cases(0) == std::set<C>{C::VV});
  CHECK(prune_cases(1) == std::set<C>{C::VV, C::VB});
  CHECK(prune_cases(2) == std::set<C>{C::VV, C::VB, C::VI, C::BB});
  CHECK(prune_cases(3) == std::set<C>{C::VV, C::VB, C::VI, C::BB, C::BI});
  CHECK(prune_cases(4).size() == 6);
  CHECK(prune_cases(9).size() == 6);
  for (C c : all_cases()) {
    CHECK(parse_case(to_string(c)) == c);
    CHECK(min_vs(c) <= min_vt(c));
  }
  CHECK(parse_case("ii") == C::II);
  CHECK(parse_case("Bi") == C::BI);
  CHECK_THROWS_AS(parse_case("IV"), Error);
  CHECK(min_path_count(C::II) == 5);
  CHECK(min_path_count(C::BB) == 3);

  SolverConfig cfg;
  cfg.force = {C::II};
  CHECK(enabled_cases(cfg, 0) == std::set<C>{C::VV, C::II});
  cfg.cases = std::set<C>{C::BB};
  CHECK(enabled_cases(cfg, 5) == std::set<C>{C::BB});
}

TEST_CASE("diameter of the small fixtures") {
  auto sq = compute_diameter(make_fixture("square"));
  CHECK(sq.diameter == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sq.label == C::VV);
  CHECK(sq.complete);

  auto hole = compute_diameter(make_fixture("square_with_hole"));
  CHECK(hole.diameter == doctest::Approx(2 * std::sqrt(8.5)).epsilon(1e-12));
  CHECK(hole.label == C::VV);
  CHECK(hole.path_count == 2);
  REQUIRE(!hole.pairs.empty());
  CHECK(hole.pairs[0].certificate == "probe");

  auto l = make_fixture("l_shape");
  auto lr = compute_diameter(l);
  CHECK(lr.diameter == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(lr.label == C::VV);
  CHECK(std::fabs(lr.diameter - corner_pair_max(l)) < 1e-12);
}

TEST_CASE("corner sweep on the unit square") {
  auto dom = make_fixture("square");
  SolverConfig cfg;
  auto ctx = make_context(dom, cfg);
  auto c = solve_case_corner(ctx, cfg);
  double best = 0;
  for (const auto& p : c) best = std::max(best, p.solved_len);
  CHECK(best == doctest::Approx(std::sqrt(2.0)));
  CHECK(ctx.corner_max == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("forced II on the unit square yields nothing") {
  auto dom = make_fixture("square");
  SolverConfig cfg;
  auto ctx = make_context(dom, cfg);
  auto g = generate_candidates(C::II, ctx, cfg);
  CHECK(g.candidates.empty());
  CHECK(g.complete);
  CHECK_THROWS_AS(generate_candidates(C::VB, ctx, cfg), Error);
}

TEST_CASE("five-path instance solves, validates and certifies") {
  auto inst = five_path_instance(10.0);
  auto sols = newton_solve_system(inst.system);
  REQUIRE(sols.size() == 1);
  const auto& x = sols[0];
  CHECK(std::fabs(x.len - 12.047433734) < 1e-6);
  CHECK(std::fabs(x.s.x - inst.cu.x) < 1e-4);
  CHECK(std::fabs(x.s.y - inst.cu.y + 0.102795) < 1e-4);
  CHECK(std::fabs(x.t.x - inst.cv.x) < 1e-4);
  CHECK(std::fabs(x.t.y - inst.cv.y - 0.555361) < 1e-4);

  CandidatePair c;
  c.s = x.s;
  c.t = x.t;
  c.label = C::II;
  c.solved_len = x.len;
  for (const auto& p : inst.system.terms) c.tuple.push_back({p.ui, p.vi});
  c = validate_candidate(inst.space, inst.table, c);
  REQUIRE(c.status == CandidatePair::Status::Validated);
  CHECK(c.path_count == 5);
  check_case_table(c);
  c = certify_maximal(inst.space, inst.table, c);
  CHECK(c.status == CandidatePair::Status::CertifiedMaximal);
  CHECK(c.certificate == "gradient");

  // the base-corner sign choice mirrors the rooms and must not change the value
  auto m = five_path_instance(10.0, true);
  auto ms = newton_solve_system(m.system);
  REQUIRE(ms.size() == 1);
  CHECK(std::fabs(ms[0].len - x.len) < 1e-9);
}

TEST_CASE("contradictory systems have no solution") {
  EquationSystem sys;
  sys.label = C::II;
  for (int i = 0; i < 5; ++i) sys.terms.push_back({{0, 0}, {1, 0}, static_cast<double>(i)});
  CHECK(newton_solve_system(sys).empty());

  EquationSystem bad;
  bad.label = C::II;
  bad.terms.resize(3);
  CHECK_THROWS_AS(newton_solve_system(bad), Error);
}

TEST_CASE("validation rejects lengths that are not shortest") {
  auto dom = make_fixture("square_with_hole");
  auto table = corner_distances(build_visibility_graph(dom));
  DomainSpace space(dom);
  CandidatePair c;
  c.s = {0, 0};
  c.t = {4, 4};
  c.label = C::VV;
  c.solved_len = 6.0;
  CHECK(validate_candidate(space, table, c).reason == "NotShortest");
  c.solved_len = 2 * std::sqrt(8.5);
  auto v = validate_candidate(space, table, c);
  CHECK(v.status == CandidatePair::Status::Validated);
  CHECK(v.path_count == 2);
  c.label = C::II;
  CHECK(validate_candidate(space, table, c).reason == "LocationMismatch");
}

TEST_CASE("probe certificate rejects a perturbed rectangle pair") {
  auto dom = rectangle(4, 1);
  auto table = corner_distances(build_visibility_graph(dom));
  DomainSpace space(dom);
  CandidatePair c;
  c.s = {2, 0};
  c.t = {2.3, 1};
  c.label = C::BB;
  c.solved_len = dist(c.s, c.t);
  c.status = CandidatePair::Status::Validated;
  auto r = certify_maximal(space, table, c);
  CHECK(r.status == CandidatePair::Status::Rejected);
  CHECK(r.reason == "NotMaximal");
  // sliding the two points apart along their edges is an ascent
  double moved = point_distance(space, table, {1.99, 0}, {2.31, 1}).distance;
  CHECK(moved > c.solved_len);

  c.s = {0, 0};
  c.t = {4, 1};
  c.label = C::VV;
  c.solved_len = dist(c.s, c.t);
  CHECK(certify_maximal(space, table, c).status == CandidatePair::Status::CertifiedMaximal);
}

TEST_CASE("diameter scales with the domain") {
  auto raw = make_fixture_raw("square_with_hole");
  auto base = compute_diameter(validate_domain(raw));
  for (double k : {0.25, 3.0}) {
    auto r = compute_diameter(validate_domain(scaled(raw, k)));
    CHECK(std::fabs(r.diameter - k * base.diameter) < 1e-7 * std::max(1.0, k));
    REQUIRE(r.pairs.size() == base.pairs.size());
    for (size_t i = 0; i < r.pairs.size(); ++i) {
      CHECK(dist(r.pairs[i].s, k * base.pairs[i].s) < 1e-7 * k);
      CHECK(dist(r.pairs[i].t, k * base.pairs[i].t) < 1e-7 * k);
    }
  }
}

TEST_CASE("holeless domains attain the diameter at corners") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto dom = validate_domain(random_domain(seed, 8 + static_cast<int>(seed % 10), 0));
    auto r = compute_diameter(dom);
    CHECK(std::fabs(r.diameter - corner_pair_max(dom)) < 1e-9);
  }
}

TEST_CASE("force-enabling pruned cases never changes the diameter") {
  std::vector<PolygonalDomain> doms = {make_fixture("square"), make_fixture("l_shape"),
                                       make_fixture("square_with_hole")};
  for (std::uint64_t seed = 1; seed <= 4; ++seed)
    doms.push_back(validate_domain(random_domain(seed, 12, static_cast<int>(seed % 3))));
  for (const auto& dom : doms) {
    SolverConfig pruned, all;
    const auto every = all_cases();
    all.cases = std::set<C>(every.begin(), every.end());
    all.keep_candidates = true;
    auto a = compute_diameter(dom, pruned);
    auto b = compute_diameter(dom, all);
    CHECK(std::fabs(a.diameter - b.diameter) < 1e-9);
    CHECK(b.diameter >= b.corner_max - 1e-12);
    for (const auto& c : b.candidates)
      if (c.status != CandidatePair::Status::Rejected) CHECK(c.solved_len <= b.diameter + 1e-7);

    SolverConfig narrow;
    narrow.cases = std::set<C>{C::VV};
    narrow.keep_candidates = true;
    auto n = compute_diameter(dom, narrow);
    for (const auto& c : n.candidates)
      if (c.label != C::VV) CHECK(c.reason == "PrunedCase");
  }
}

TEST_CASE("certified pairs respect the case table") {
  std::vector<PolygonalDomain> doms = {make_fixture("square"), make_fixture("l_shape"),
                                       make_fixture("square_with_hole")};
  for (std::uint64_t seed = 11; seed <= 16; ++seed)
    doms.push_back(validate_domain(random_domain(seed, 14, static_cast<int>(seed % 4))));
  for (const auto& dom : doms) {
    SolverConfig cfg;
    cfg.keep_candidates = true;
    auto r = compute_diameter(dom, cfg);
    for (const auto& c : r.candidates)
      if (c.status == CandidatePair::Status::CertifiedMaximal) check_case_table(c);
  }
}

TEST_CASE("serial and parallel runs agree") {
  auto dom = validate_domain(random_domain(5, 16, 2));
  SolverConfig s, p;
  s.exec = Exec::Serial;
  p.exec = Exec::Parallel;
  auto a = compute_diameter(dom, s), b = compute_diameter(dom, p);
  CHECK(a.diameter == b.diameter);
  REQUIRE(a.pairs.size() == b.pairs.size());
  for (size_t i = 0; i < a.pairs.size(); ++i) CHECK(a.pairs[i].s == b.pairs[i].s);
}

TEST_CASE("budget exhaustion") {
  auto dom = validate_domain(random_domain(7, 16, 3));
  SolverConfig cfg;
  cfg.cases = std::set<C>{C::VV, C::BB};
  cfg.budget = 0;
  auto part = compute_diameter(dom, cfg, true);
  if (part.stats[C::BB].tuples > 0 || !part.complete) {
    CHECK_FALSE(part.complete);
    CHECK_THROWS_AS(compute_diameter(dom, cfg, false), Error);
  }
}

TEST_CASE("jigsaw corridors have equal length") {
  auto j = build_jigsaw(10.0);
  auto dom = validate_domain(j.raw);
  CHECK(dom.h() == 5);
  auto t = corner_distances(build_visibility_graph(dom));
  auto id = [&](Point p) {
    for (int i = 0; i < dom.n(); ++i)
      if (dist(dom.corners[i], p) < 1e-9) return i;
    return -1;
  };
  for (const auto& c : j.corridors) {
    int a = id(j.u[c[0]]), b = id(j.v[c[1]]);
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    CHECK(std::fabs(t.at(a, b) - j.corridor_len) < 1e-9);
  }
  CHECK(std::fabs(j.corridor_len - 10.0) < 1e-9);
  DomainSpace space(dom);
  auto ps = enumerate_shortest_paths(space, t, j.cu, j.cv, 1e-7);
  CHECK(ps.count == 6);
  CHECK(std::fabs(ps.distance - (j.corridor_len + 2)) < 1e-9);
  CHECK_THROWS_AS(build_jigsaw(1.0), Error);
}

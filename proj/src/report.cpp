#include "geodiam/report.hpp"

namespace geodiam {

using nlohmann::json;

json to_json(Point p) { return json::array({p.x, p.y}); }

json to_json(const ToleranceConfig& tol) {
  return {{"tol_geom", tol.tol_geom},
          {"tol_dist", tol.tol_dist},
          {"tol_residual", tol.tol_residual},
          {"newton_max_iter", tol.newton_max_iter},
          {"multistart_count", tol.multistart_count}};
}

json to_json(const CandidatePair& c) {
  json tuple = json::array();
  for (auto [u, v] : c.tuple) tuple.push_back({u, v});
  json j = {{"s", to_json(c.s)},
            {"t", to_json(c.t)},
            {"case", to_string(c.label)},
            {"value", c.solved_len},
            {"status", to_string(c.status)},
            {"path_count", c.path_count},
            {"defining_corners", tuple},
            {"vs", c.vs},
            {"vt", c.vt}};
  if (!c.certificate.empty()) j["certificate"] = c.certificate;
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

json to_json(const ApproxResult& a) {
  json j = {{"value", a.value},
            {"pair", {to_json(a.s), to_json(a.t)}},
            {"guarantee", to_string(a.guarantee)},
            {"candidates", a.candidates}};
  if (a.guarantee == ApproxResult::Guarantee::OnePlusEps) {
    j["eps"] = a.eps;
    j["cell_size"] = a.cell_size;
  }
  return j;
}

json to_json(const OracleValue& v) {
  return {{"value", v.value}, {"error_bound", v.error_bound}, {"pair", {to_json(v.s), to_json(v.t)}}};
}

// Wall times are left out so identical runs give identical reports.
json diameter_report(const PolygonalDomain& dom, const DiameterResult& r, const SolverConfig& cfg) {
  json pairs = json::array();
  for (const auto& p : r.pairs) pairs.push_back(to_json(p));
  json stats = json::object();
  for (const auto& [c, s] : r.stats)
    stats[to_string(c)] = {{"enabled", s.enabled},   {"tuples", s.tuples},       {"generated", s.generated},
                           {"validated", s.validated}, {"certified", s.certified}, {"rejected", s.rejected},
                           {"complete", s.complete}};
  json cases = json::array();
  for (CaseLabel c : enabled_cases(cfg, dom.h())) cases.push_back(to_string(c));
  return {{"schema", kSchema},
          {"command", "diameter"},
          {"domain", {{"corners", dom.n()}, {"holes", dom.h()}}},
          {"diameter", r.diameter},
          {"case", to_string(r.label)},
          {"path_count", r.path_count},
          {"corner_max", r.corner_max},
          {"complete", r.complete},
          {"used_uncertified", r.used_uncertified},
          {"pairs", pairs},
          {"cases_enabled", cases},
          {"stats", stats},
          {"budget", cfg.budget},
          {"tolerances", to_json(cfg.tol)}};
}

json distance_report(const GeodesicResult& g, const PathSet* paths, const DomainSpace& space) {
  json corners = json::array();
  for (int c : g.path) corners.push_back(to_json(space.corner(c)));
  json j = {{"schema", kSchema},
            {"command", "distance"},
            {"s", to_json(g.s)},
            {"t", to_json(g.t)},
            {"distance", g.distance},
            {"path", corners}};
  if (paths) {
    json all = json::array();
    for (const auto& p : paths->paths) {
      json one = json::array();
      for (int c : p) one.push_back(to_json(space.corner(c)));
      all.push_back(one);
    }
    j["path_count"] = paths->count;
    j["paths"] = all;
  }
  return j;
}

json farthest_report(const FarthestResult& f, Point source) {
  json j = {{"schema", kSchema},
            {"command", "farthest"},
            {"source", to_json(source)},
            {"point", to_json(f.point)},
            {"distance", f.distance},
            {"kind", to_string(f.kind)},
            {"generated", f.generated}};
  json sites = json::array();
  for (int s : f.best.sites)
    if (s >= 0) sites.push_back(s);
  j["sites"] = sites;
  return j;
}

}  // namespace geodiam

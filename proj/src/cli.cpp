#include "geodiam/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "geodiam/fixtures.hpp"
#include "geodiam/report.hpp"

namespace geodiam {

namespace {

using nlohmann::json;

Point parse_point(const std::string& s) {
  std::istringstream in(s);
  Point p;
  char comma = 0;
  if (!(in >> p.x >> comma >> p.y) || comma != ',' || !(in >> std::ws).eof())
    throw Error(ErrorCode::InvalidArgument, "expected a point as x,y but got '" + s + "'");
  return p;
}

std::set<CaseLabel> parse_case_list(const std::string& s) {
  std::set<CaseLabel> out;
  if (s == "all") {
    for (CaseLabel c : all_cases()) out.insert(c);
    return out;
  }
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.insert(parse_case(tok));
  return out;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::PathExplosion:
    case ErrorCode::DegenerateConfiguration:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::NoConvergence:
    case ErrorCode::SingularJacobian:
    case ErrorCode::DegenerateGradients:
    case ErrorCode::GridDisconnected: return 2;
    default: return 1;
  }
}

struct Common {
  std::string file;
  std::string json_path;
};

void emit(const json& j, const Common& c, std::ostream& out) {
  if (c.json_path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(c.json_path);
  if (!f) throw Error(ErrorCode::IoError, "cannot write '" + c.json_path + "'");
  f << j.dump(2) << '\n';
}

struct Loaded {
  PolygonalDomain dom;
  DistanceTable table;
};

Loaded load(const std::string& file) {
  Loaded l{validate_domain(load_domain_file(file)), {}};
  l.table = corner_distances(build_visibility_graph(l.dom));
  return l;
}

std::vector<std::vector<Point>> path_points(const DomainSpace& space, const PathSet& ps, Point s, Point t) {
  std::vector<std::vector<Point>> out;
  for (const auto& p : ps.paths) {
    std::vector<Point> line{s};
    for (int c : p) line.push_back(space.corner(c));
    line.push_back(t);
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_threads_from_env();
  CLI::App app{"Exact geodesic diameter of polygonal domains with holes", "geodiam"};
  app.require_subcommand(1);

  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", c.file, "domain file (JSON)")->required();
    sub->add_option("--json", c.json_path, "write the report here instead of standard output");
  };

  auto* validate = app.add_subcommand("validate", "check a domain file");
  add_common(validate);

  std::string s_arg, t_arg, from_arg, svg_path, cases_arg = "auto", mode = "grid";
  bool want_paths = false, allow_partial = false;
  std::uint64_t budget = SolverConfig{}.budget;
  int verify_res = 0;
  double eps = 0.1;

  auto* distance = app.add_subcommand("distance", "geodesic distance between two points");
  add_common(distance);
  distance->add_option("--s", s_arg, "x,y")->required();
  distance->add_option("--t", t_arg, "x,y")->required();
  distance->add_flag("--paths", want_paths, "list every shortest path");
  distance->add_option("--svg", svg_path, "render the paths");

  auto* farthest = app.add_subcommand("farthest", "farthest point from a source");
  add_common(farthest);
  farthest->add_option("--from", from_arg, "x,y")->required();

  auto* diameter = app.add_subcommand("diameter", "exact geodesic diameter");
  add_common(diameter);
  diameter->add_option("--cases", cases_arg, "auto, all, or a list such as ii,bi enabled on top of pruning");
  diameter->add_option("--budget", budget, "tuple systems per case");
  diameter->add_option("--verify-grid", verify_res, "append a grid oracle comparison at this resolution");
  diameter->add_option("--svg", svg_path, "render the domain and the diametral pair");
  diameter->add_flag("--allow-partial", allow_partial, "report partial results when the budget runs out");

  auto* approx = app.add_subcommand("approx", "approximate diameter");
  add_common(approx);
  approx->add_option("--eps", eps, "grid parameter in (0,1)");
  approx->add_option("--mode", mode, "two or grid")->check(CLI::IsMember({"two", "grid"}));
  approx->add_option("--from", from_arg, "seed for two mode (default: first corner)");

  std::string fixture_name, out_path;
  std::vector<std::string> params;
  auto* fixture = app.add_subcommand("fixture", "write a built-in domain");
  fixture->add_option("name", fixture_name, "square, l_shape, square_with_hole, jigsaw, random")->required();
  fixture->add_option("params", params, "key=value, e.g. corridor_len=10 or seed=3 n=12 h=1");
  fixture->add_option("--out", out_path, "output file")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  try {
    if (*fixture) {
      FixtureParams p;
      for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "fixture parameter '" + kv + "' is not key=value");
        p[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      }
      RawDomain raw = make_fixture_raw(fixture_name, p);
      PolygonalDomain dom = validate_domain(raw);
      save_domain_file(raw, out_path);
      json j = {{"schema", kSchema}, {"command", "fixture"}, {"name", fixture_name},
                {"corners", dom.n()}, {"holes", dom.h()}, {"out", out_path}};
      if (fixture_name == "jigsaw") j["corridor_len"] = build_jigsaw(p.count("corridor_len") ? p["corridor_len"] : 10.0).corridor_len;
      out << j.dump(2) << '\n';
      return 0;
    }

    if (*validate) {
      PolygonalDomain dom = validate_domain(load_domain_file(c.file));
      emit({{"schema", kSchema}, {"command", "validate"}, {"valid", true}, {"corners", dom.n()},
            {"holes", dom.h()}, {"edges", dom.edge_count()}},
           c, out);
      err << "valid: " << dom.n() << " corners, " << dom.h() << " holes\n";
      return 0;
    }

    Loaded l = load(c.file);
    DomainSpace space(l.dom);

    if (*distance) {
      const Point s = parse_point(s_arg), t = parse_point(t_arg);
      GeodesicResult g = point_distance(space, l.table, s, t);
      PathSet ps;
      if (want_paths || !svg_path.empty()) ps = enumerate_shortest_paths(space, l.table, s, t, space.tolerances().tol_dist);
      emit(distance_report(g, want_paths ? &ps : nullptr, space), c, out);
      if (!svg_path.empty()) {
        RenderSpec r;
        r.layers = {Layer::Domain, Layer::Holes, Layer::Paths, Layer::DiametralPair};
        r.paths = path_points(space, ps, s, t);
        r.pair = {{s, t}};
        r.output = svg_path;
        write_svg(l.dom, r);
      }
      err << "distance " << std::setprecision(9) << g.distance << '\n';
      return 0;
    }

    if (*farthest) {
      const Point s = parse_point(from_arg);
      FarthestResult f = farthest_point(space, l.table, s);
      emit(farthest_report(f, s), c, out);
      err << "farthest " << std::setprecision(9) << f.distance << '\n';
      return 0;
    }

    if (*approx) {
      ApproxResult a;
      if (mode == "two")
        a = two_approx(l.dom, l.table, from_arg.empty() ? l.dom.corners[0] : parse_point(from_arg));
      else
        a = grid_approx(l.dom, l.table, eps);
      json j = to_json(a);
      j["schema"] = kSchema;
      j["command"] = "approx";
      j["mode"] = mode;
      emit(j, c, out);
      err << mode << " approximation " << std::setprecision(9) << a.value << '\n';
      return 0;
    }

    if (*diameter) {
      SolverConfig cfg;
      cfg.budget = budget;
      if (cases_arg != "auto") cfg.force = parse_case_list(cases_arg);
      DiameterResult r = compute_diameter(l.dom, cfg, allow_partial);
      json j = diameter_report(l.dom, r, cfg);
      if (verify_res > 0) {
        GridOracle oracle(l.dom, verify_res);
        OracleValue v = oracle_diameter(oracle);
        j["verify_grid"] = {{"resolution", verify_res},
                            {"oracle", to_json(v)},
                            {"thin_corridor", oracle.thin_corridor()},
                            {"nodes", oracle.node_count()},
                            {"agrees", std::fabs(v.value - r.diameter) <= v.error_bound}};
      }
      emit(j, c, out);
      if (!svg_path.empty()) {
        RenderSpec rs;
        rs.layers = {Layer::Domain, Layer::Holes, Layer::Paths, Layer::DiametralPair};
        if (!r.pairs.empty()) {
          const auto& p = r.pairs.front();
          rs.pair = {{p.s, p.t}};
          rs.paths = path_points(space, enumerate_shortest_paths(space, l.table, p.s, p.t, space.tolerances().tol_dist),
                                 p.s, p.t);
        }
        rs.output = svg_path;
        write_svg(l.dom, rs);
      }
      err << "diameter " << std::setprecision(9) << r.diameter << " case " << to_string(r.label) << ", "
          << r.path_count << " paths, " << std::setprecision(3) << r.seconds << " s";
      if (!r.complete) err << " (partial)";
      err << '\n';
      for (const auto& [label, s] : r.stats)
        if (s.enabled)
          err << "  " << to_string(label) << ": " << s.tuples << " tuples, " << s.generated << " generated, "
              << s.validated << " validated, " << s.certified << " certified, " << s.seconds << " s\n";
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace geodiam

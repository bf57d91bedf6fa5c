#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "geodiam/approx.hpp"
#include "geodiam/diameter.hpp"
#include "geodiam/spm.hpp"

namespace geodiam {

inline constexpr const char* kSchema = "geodiam/1";

nlohmann::json to_json(Point p);
nlohmann::json to_json(const ToleranceConfig& tol);
nlohmann::json to_json(const CandidatePair& c);
nlohmann::json to_json(const ApproxResult& a);
nlohmann::json to_json(const OracleValue& v);

nlohmann::json diameter_report(const PolygonalDomain& dom, const DiameterResult& r, const SolverConfig& cfg);
nlohmann::json distance_report(const GeodesicResult& g, const PathSet* paths, const DomainSpace& space);
nlohmann::json farthest_report(const FarthestResult& f, Point source);

// SVG output.
enum class Layer { Domain, Holes, VisibilityGraph, Paths, Candidates, DiametralPair };

const char* to_string(Layer l);
Layer parse_layer(const std::string& s);

struct RenderSpec {
  std::set<Layer> layers{Layer::Domain, Layer::Holes};
  double width = 800;   // viewport width in px; height follows the aspect ratio
  double margin = 20;
  double stroke = 1.5;
  std::string output;  // file path; empty = caller keeps the text

  // overlay data, drawn when the matching layer is on
  const VisibilityGraph* graph = nullptr;
  std::vector<std::vector<Point>> paths;
  std::vector<Point> candidates;
  std::optional<std::pair<Point, Point>> pair;
};

std::string render_svg(const PolygonalDomain& dom, const RenderSpec& spec);
// Renders and writes spec.output; throws IoError.
void write_svg(const PolygonalDomain& dom, const RenderSpec& spec);

}  // namespace geodiam

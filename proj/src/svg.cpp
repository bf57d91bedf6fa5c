#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "geodiam/report.hpp"

namespace geodiam {

const char* to_string(Layer l) {
  switch (l) {
    case Layer::Domain: return "domain";
    case Layer::Holes: return "holes";
    case Layer::VisibilityGraph: return "graph";
    case Layer::Paths: return "paths";
    case Layer::Candidates: return "candidates";
    case Layer::DiametralPair: return "pair";
  }
  return "?";
}

Layer parse_layer(const std::string& s) {
  std::string k = s;
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Layer l : {Layer::Domain, Layer::Holes, Layer::VisibilityGraph, Layer::Paths, Layer::Candidates,
                  Layer::DiametralPair})
    if (k == to_string(l)) return l;
  throw Error(ErrorCode::InvalidArgument, "unknown layer '" + s + "'");
}

namespace {

// fixed notation keeps the output byte-stable
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct View {
  double k, ox, oy, h;  // y is flipped: SVG grows downwards
  Point map(Point p) const { return {ox + k * p.x, h - (oy + k * p.y)}; }
};

std::string points(const View& v, const std::vector<Point>& pts) {
  std::string out;
  for (size_t i = 0; i < pts.size(); ++i) {
    Point q = v.map(pts[i]);
    if (i) out += ' ';
    out += num(q.x) + ',' + num(q.y);
  }
  return out;
}

}  // namespace

std::string render_svg(const PolygonalDomain& dom, const RenderSpec& spec) {
  const double w = std::max(dom.hi.x - dom.lo.x, 1e-12), h = std::max(dom.hi.y - dom.lo.y, 1e-12);
  const double inner = spec.width - 2 * spec.margin;
  const double k = inner / std::max(w, h);
  const double width = 2 * spec.margin + k * w, height = 2 * spec.margin + k * h;
  const View v{k, spec.margin - k * dom.lo.x, spec.margin - k * dom.lo.y, height};
  auto on = [&](Layer l) { return spec.layers.count(l) > 0; };
  const std::string sw = num(spec.stroke);

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
    << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  if (on(Layer::Domain))
    o << "  <polygon class=\"domain\" points=\"" << points(v, dom.outer.vertices)
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << sw << "\"/>\n";
  if (on(Layer::Holes))
    for (const auto& hole : dom.holes)
      o << "  <polygon class=\"hole\" points=\"" << points(v, hole.vertices)
        << "\" fill=\"#bbbbbb\" stroke=\"black\" stroke-width=\"" << sw << "\"/>\n";
  if (on(Layer::VisibilityGraph) && spec.graph)
    for (int a = 0; a < spec.graph->n; ++a)
      for (auto [b, len] : spec.graph->adj[a]) {
        (void)len;
        if (b <= a) continue;
        o << "  <polyline class=\"graph\" points=\"" << points(v, {spec.graph->pts[a], spec.graph->pts[b]})
          << "\" fill=\"none\" stroke=\"#9ecae1\" stroke-width=\"" << num(0.5 * spec.stroke) << "\"/>\n";
      }
  if (on(Layer::Paths))
    for (const auto& p : spec.paths)
      o << "  <polyline class=\"path\" points=\"" << points(v, p) << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\""
        << sw << "\"/>\n";
  if (on(Layer::Candidates))
    for (Point c : spec.candidates) {
      Point q = v.map(c);
      o << "  <circle class=\"candidate\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\""
        << num(1.5 * spec.stroke) << "\" fill=\"#ff7f0e\"/>\n";
    }
  if (on(Layer::DiametralPair) && spec.pair)
    for (Point c : {spec.pair->first, spec.pair->second}) {
      Point q = v.map(c);
      o << "  <circle class=\"pair\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\""
        << num(3 * spec.stroke) << "\" fill=\"#1f77b4\"/>\n";
    }
  o << "</svg>\n";
  return o.str();
}

void write_svg(const PolygonalDomain& dom, const RenderSpec& spec) {
  std::ofstream f(spec.output);
  if (!f) throw Error(ErrorCode::IoError, "cannot write '" + spec.output + "'");
  f << render_svg(dom, spec);
  if (!f) throw Error(ErrorCode::IoError, "write failed for '" + spec.output + "'");
}

}  // namespace geodiam

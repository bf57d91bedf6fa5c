#include "geodiam/geometry.hpp"

#include <algorithm>

namespace geodiam {

double project_param(const Segment& s, Point p) {
  Point d = s.b - s.a;
  double dd = dot(d, d);
  if (dd == 0) return 0;
  return dot(p - s.a, d) / dd;
}

double point_segment_distance(Point p, const Segment& s) {
  double t = std::clamp(project_param(s, p), 0.0, 1.0);
  return dist(p, s.at(t));
}

double point_line_distance(Point p, Point a, Point b) {
  double l = dist(a, b);
  if (l == 0) return dist(p, a);
  return std::fabs(orient(a, b, p)) / l;
}

bool segments_cross_properly(const Segment& s, const Segment& t, double tol) {
  double ls = s.length(), lt = t.length();
  if (ls == 0 || lt == 0) return false;
  double d1 = orient(s.a, s.b, t.a) / ls;
  double d2 = orient(s.a, s.b, t.b) / ls;
  if (!((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol))) return false;
  double d3 = orient(t.a, t.b, s.a) / lt;
  double d4 = orient(t.a, t.b, s.b) / lt;
  return (d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol);
}

bool segments_touch(const Segment& s, const Segment& t, double tol) {
  if (segments_cross_properly(s, t, 0.0)) return true;
  return point_segment_distance(s.a, t) <= tol || point_segment_distance(s.b, t) <= tol ||
         point_segment_distance(t.a, s) <= tol || point_segment_distance(t.b, s) <= tol;
}

void ToleranceConfig::check() const {
  if (!(tol_geom > 0 && tol_dist > 0 && tol_residual > 0 && newton_max_iter > 0 &&
        multistart_count > 0))
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  if (!(tol_residual < tol_dist))
    throw Error(ErrorCode::InvalidArgument, "tol_residual must be below tol_dist");
}

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::SelfIntersectingChain: return "SelfIntersectingChain";
    case ErrorCode::HoleOutsideOuter: return "HoleOutsideOuter";
    case ErrorCode::HolesOverlap: return "HolesOverlap";
    case ErrorCode::DegenerateChain: return "DegenerateChain";
    case ErrorCode::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorCode::DisconnectedDomain: return "DisconnectedDomain";
    case ErrorCode::PathExplosion: return "PathExplosion";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::DegenerateGradients: return "DegenerateGradients";
    case ErrorCode::InvalidEps: return "InvalidEps";
    case ErrorCode::GridDisconnected: return "GridDisconnected";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace geodiam

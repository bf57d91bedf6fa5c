#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace geodiam {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
inline Point operator*(Point a, double k) { return {k * a.x, k * a.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }

inline Point unit(Point a) {
  double n = norm(a);
  return n > 0 ? Point{a.x / n, a.y / n} : Point{0, 0};
}

// twice the signed area of abc
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

inline bool lex_less(Point a, Point b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct Segment {
  Point a;
  Point b;
  double length() const { return dist(a, b); }
  Point at(double t) const { return a + t * (b - a); }
};

// parameter of the orthogonal projection of p onto the line of s (0 at a, 1 at b)
double project_param(const Segment& s, Point p);
double point_segment_distance(Point p, const Segment& s);
double point_line_distance(Point p, Point a, Point b);

// Proper crossing: interiors intersect in a single point and each segment has
// its endpoints strictly (beyond tol) on opposite sides of the other.
bool segments_cross_properly(const Segment& s, const Segment& t, double tol);
// Closed segments intersect or come within tol of each other.
bool segments_touch(const Segment& s, const Segment& t, double tol);

struct ToleranceConfig {
  double tol_geom = 1e-9;
  double tol_dist = 1e-7;
  double tol_residual = 1e-12;
  int newton_max_iter = 50;
  int multistart_count = 16;

  void check() const;
};

enum class ErrorCode {
  SelfIntersectingChain,
  HoleOutsideOuter,
  HolesOverlap,
  DegenerateChain,
  PointOutsideDomain,
  DisconnectedDomain,
  PathExplosion,
  DegenerateConfiguration,
  BudgetExceeded,
  NoConvergence,
  SingularJacobian,
  DegenerateGradients,
  InvalidEps,
  GridDisconnected,
  IoError,
  UnknownFixture,
  InfeasibleParams,
  InvalidArgument,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace geodiam

#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace capgeo {

using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTau = 2.0 * kPi;

/// Wrap an angle to [0, 2*pi).
double mod_tau(double a);

/// Rotate a vector by +90 degrees (counterclockwise).
inline Vec2 rot90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

inline double cross2(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Numeric knobs shared across the library. One knob per predicate family:
/// point coincidence (eps_geom), set equality by area (eps_area), root
/// finding (eps_root), and boundary sampling density (n_samples).
struct Tolerance {
  double eps_geom = 1e-7;
  double eps_area = 1e-8;
  double eps_root = 1e-9;
  int n_samples = 4096;

  void check() const;  // throws std::invalid_argument on bad values
};

/// One boundary piece. Lines are straight segments to `end`; arcs run along
/// the circle around `center` from the previous endpoint to `end`, traversed
/// counterclockwise when `ccw` is set.
struct Segment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  Vec2 end{0.0, 0.0};
  Vec2 center{0.0, 0.0};  // arcs only
  bool ccw = true;        // arcs only
};

/// A simple closed boundary curve, counterclockwise, made of lines and
/// circular arcs. The last segment closes back to `start`.
struct Domain {
  Vec2 start{0.0, 0.0};
  std::vector<Segment> segments;
};

/// Expanded boundary piece with explicit endpoints and cached arc data.
/// `sweep` is the signed traversal angle (positive = ccw); zero for lines.
struct Edge {
  Segment::Kind kind = Segment::Kind::Line;
  Vec2 a{0.0, 0.0};
  Vec2 b{0.0, 0.0};
  Vec2 c{0.0, 0.0};
  double r = 0.0;
  double ang_a = 0.0;
  double sweep = 0.0;

  bool is_arc() const { return kind == Segment::Kind::Arc; }
  double length() const;
  Vec2 point(double t) const;    // t in [0,1] along traversal
  Vec2 tangent(double t) const;  // unit tangent in traversal direction
  Vec2 midpoint() const { return point(0.5); }
  /// Inward normal for an edge of a ccw loop (interior on the left).
  Vec2 normal_in(double t) const { return rot90(tangent(t)); }
};

std::vector<Edge> edges_of(const Domain& d);

/// Rebuild a Domain from a closed chain of edges; snaps the final endpoint
/// onto the first start.
Domain domain_of(const std::vector<Edge>& loop);

struct Diagnostics {
  bool pass = true;
  std::string violation;  // empty when pass
  Vec2 where{0.0, 0.0};
};

/// Checks closure, per-segment sanity, simplicity, and ccw orientation.
/// Never throws; reports the first violated invariant.
Diagnostics validate(const Domain& d, const Tolerance& tol);

/// Throws std::invalid_argument when validate() fails.
void require_valid(const Domain& d, const Tolerance& tol);

// Measures. These assume a structurally sound domain (see validate).
double area(const Domain& d);
double perimeter(const Domain& d);
double quotient(const Domain& d);  // perimeter / area

double area(const std::vector<Edge>& loop);
double perimeter(const std::vector<Edge>& loop);

/// Negative inside, positive outside, ~0 on the boundary. The eroded set at
/// distance r is exactly {signed_distance <= -r}.
double signed_distance(const Domain& d, const Vec2& p);

/// Crossing-parity point-in-loop test; robust to rays through vertices by
/// deterministic retry with a nudged ray.
bool contains(const std::vector<Edge>& loop, const Vec2& p);

/// Distance from p to the closest point of any edge.
double boundary_distance(const std::vector<Edge>& edges, const Vec2& p);

Vec2 closest_point(const Edge& e, const Vec2& q);
double distance(const Edge& e, const Vec2& q);

/// Intersection points of two edges (0..2 points; tangencies give one).
/// Collinear overlapping segments and identical circles report nothing.
std::vector<Vec2> intersect(const Edge& e, const Edge& f);

/// Curve parameter of a point assumed on (or near) the edge, in [0,1].
double param_of(const Edge& e, const Vec2& p);

/// Split an edge at interior parameters; points are snapped exactly to the
/// provided coordinates so matching pieces of two curves share endpoints.
std::vector<Edge> split_edge(const Edge& e, std::vector<std::pair<double, Vec2>> cuts);

struct Box {
  Vec2 lo{0.0, 0.0};
  Vec2 hi{0.0, 0.0};
  void grow(const Vec2& p);
  void grow(const Box& o);
  bool overlaps(const Box& o, double slack) const;
  Vec2 size() const { return hi - lo; }
};

Box bounding_box(const Edge& e);
Box bounding_box(const Domain& d);

// Rigid motions and scaling (exact on the representation).
Domain translated(const Domain& d, const Vec2& t);
Domain rotated(const Domain& d, double angle);
Domain scaled(const Domain& d, double factor);

/// Evenly spaced points along the whole boundary (by arclength).
std::vector<Vec2> sample_boundary(const std::vector<Edge>& edges, int n);

}  // namespace capgeo

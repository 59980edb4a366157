#pragma once

// Test-only oracles, independent of the implementation paths they check:
// raster comparisons, scalar bisection on closed-form balance equations,
// adaptive quadrature, and a deterministic random-domain corpus.

#include "capgeo/gallery.hpp"
#include "capgeo/geometry.hpp"
#include "capgeo/morphology.hpp"
#include "capgeo/raster.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracles {

using namespace capgeo;

/// Bisection on a monotone decreasing scalar function with g(lo) > 0 > g(hi).
inline double bisect_root(const std::function<double(double)>& g, double lo,
                          double hi, double eps) {
  for (int it = 0; it < 200 && hi - lo > eps; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Adaptive Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double eps, int depth = 24) {
  const double c = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fc = f(c);
  std::function<double(double, double, double, double, double, double, int)> rec =
      [&](double x0, double x2, double f0, double f1, double f2, double whole,
          int d) -> double {
    const double x1l = 0.5 * (x0 + 0.5 * (x0 + x2));
    const double xm = 0.5 * (x0 + x2);
    const double x1r = 0.5 * (xm + x2);
    const double fl = f(x1l), fr = f(x1r);
    const double left = (xm - x0) / 6.0 * (f0 + 4.0 * fl + f1);
    const double right = (x2 - xm) / 6.0 * (f1 + 4.0 * fr + f2);
    if (d <= 0 || std::abs(left + right - whole) < 15.0 * eps)
      return left + right + (left + right - whole) / 15.0;
    return rec(x0, xm, f0, fl, f1, left, d - 1) +
           rec(xm, x2, f1, fr, f2, right, d - 1);
  };
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
  return rec(a, b, fa, fc, fb, whole, depth);
}

/// Ellipse perimeter by quadrature of the arclength integrand.
inline double ellipse_perimeter(double a, double b) {
  return simpson(
      [&](double t) {
        const double s = std::sin(t), c = std::cos(t);
        return std::sqrt(a * a * s * s + b * b * c * c);
      },
      0.0, kTau, 1e-12);
}

/// Area comparison tolerance for raster-vs-vector checks.
inline double raster_area_tol(const raster::Grid& g, double eps_area) {
  return std::max(eps_area, 4.0 * g.pixel_area() * double(raster::boundary_pixels(g)));
}

/// Convex polygon from the hull of random points, optionally with bulged
/// (arc) edges; always validated by the caller.
class CorpusGenerator {
 public:
  explicit CorpusGenerator(unsigned seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Domain convex_polygon(int min_pts = 5, int max_pts = 12) {
    const int n = min_pts + pick(max_pts - min_pts + 1);
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i)
      pts.emplace_back(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    auto hull = convex_hull(pts);
    while (hull.size() < 3) {
      pts.emplace_back(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      hull = convex_hull(pts);
    }
    Domain d;
    d.start = hull[0];
    for (size_t i = 1; i <= hull.size(); ++i) {
      Segment s;
      s.kind = Segment::Kind::Line;
      s.end = hull[i % hull.size()];
      d.segments.push_back(s);
    }
    return d;
  }

  /// Convex polygon with every edge replaced by an outward circular bulge.
  /// The bulge half-angle at each vertex is capped by a fraction of the
  /// polygon's turn there so the result stays convex.
  Domain convex_blob() {
    Domain poly = convex_polygon(5, 9);
    const auto es = edges_of(poly);
    const size_t n = es.size();
    std::vector<double> turn(n);  // exterior angle at the END of edge i
    for (size_t i = 0; i < n; ++i) {
      const Vec2 t1 = es[i].tangent(1.0);
      const Vec2 t2 = es[(i + 1) % n].tangent(0.0);
      turn[i] = std::atan2(cross2(t1, t2), t1.dot(t2));
    }
    Domain d;
    d.start = poly.start;
    Vec2 cur = poly.start;
    for (size_t i = 0; i < n; ++i) {
      const Vec2 to = es[i].b;
      const Vec2 chord = to - cur;
      const double len = chord.norm();
      const double prev_turn = turn[(i + n - 1) % n];
      const double max_half = 0.35 * std::min(prev_turn, turn[i]);
      const double half = uniform(0.15, 0.9) * std::max(0.0, max_half);
      Segment s;
      if (half < 0.01) {
        s.kind = Segment::Kind::Line;
        s.end = to;
      } else {
        // circle through both endpoints with tangent deviation `half`
        const double R = 0.5 * len / std::sin(half);
        const Vec2 mid = 0.5 * (cur + to);
        const Vec2 in = rot90(chord / len);  // interior side of a ccw loop
        s.kind = Segment::Kind::Arc;
        s.end = to;
        s.center = mid + std::sqrt(std::max(0.0, R * R - 0.25 * len * len)) * in;
        s.ccw = true;
      }
      d.segments.push_back(s);
      cur = to;
    }
    return d;
  }

  /// Minkowski sum of a convex polygon with a disk: lines shifted outward and
  /// tangent corner arcs. Smooth (tangent junctions), convex, and rho-open by
  /// construction, with curvature supremum exactly 1/rho.
  Domain rounded_convex(double rho) {
    const Domain poly = convex_polygon(5, 9);
    const auto es = edges_of(poly);
    Domain d;
    std::vector<Segment> segs;
    Vec2 first{0, 0};
    for (size_t i = 0; i < es.size(); ++i) {
      const Edge& e = es[i];
      const Vec2 out = -rot90((e.b - e.a).normalized());
      const Vec2 a = e.a + rho * out;
      const Vec2 b = e.b + rho * out;
      if (i == 0)
        first = a;
      else {
        Segment corner;  // arc around the shared vertex from previous line end
        corner.kind = Segment::Kind::Arc;
        corner.end = a;
        corner.center = e.a;
        corner.ccw = true;
        segs.push_back(corner);
      }
      Segment line;
      line.kind = Segment::Kind::Line;
      line.end = b;
      segs.push_back(line);
    }
    Segment corner;
    corner.kind = Segment::Kind::Arc;
    corner.end = first;
    corner.center = es.front().a;
    corner.ccw = true;
    segs.push_back(corner);
    d.start = first;
    d.segments = std::move(segs);
    return d;
  }

  Domain any_shape() {
    switch (pick(7)) {
      case 0: return make_disk(uniform(0.3, 2.0));
      case 1: return make_square(uniform(0.4, 2.0));
      case 2: return make_stadium(uniform(0.3, 1.0), uniform(0.5, 3.0));
      case 3: return convex_polygon();
      case 4: return convex_blob();
      case 5: {
        const double R = uniform(0.6, 1.2);
        const double w = uniform(0.05, 0.3) * R;
        const double dist = uniform(2.6, 4.0) * R;
        return make_dumbbell(R, dist, w);
      }
      default: {
        const double R = 1.0;
        const double r = uniform(0.35, 0.95);
        const double th_max = std::asin(0.9 * r / R);
        const double th = uniform(0.1 * th_max, 0.9 * th_max);
        const double dd = two_ball_distance_for_angle(R, r, th);
        return two_balls({R, r, dd, 0.02 * r});
      }
    }
  }

 private:
  static std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& p, const Vec2& q) {
      return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y());
    });
    const auto build = [&](auto begin, auto end) {
      std::vector<Vec2> chain;
      for (auto it = begin; it != end; ++it) {
        while (chain.size() >= 2 &&
               cross2(chain[chain.size() - 1] - chain[chain.size() - 2],
                      *it - chain[chain.size() - 2]) <= 1e-9)
          chain.pop_back();
        chain.push_back(*it);
      }
      return chain;
    };
    auto lower = build(pts.begin(), pts.end());
    auto upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
  }

  std::mt19937 rng_;
};

}  // namespace oracles

#include "capgeo/gallery.hpp"

#include <cmath>

namespace capgeo {

namespace {

Segment line_to(const Vec2& end) {
  Segment s;
  s.kind = Segment::Kind::Line;
  s.end = end;
  return s;
}

Segment arc_to(const Vec2& end, const Vec2& center, bool ccw) {
  Segment s;
  s.kind = Segment::Kind::Arc;
  s.end = end;
  s.center = center;
  s.ccw = ccw;
  return s;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

Domain make_disk(double R) {
  require_positive(R, "disk radius");
  Domain d;
  d.start = Vec2(R, 0.0);
  d.segments.push_back(arc_to(Vec2(-R, 0.0), Vec2(0.0, 0.0), true));
  d.segments.push_back(arc_to(Vec2(R, 0.0), Vec2(0.0, 0.0), true));
  return d;
}

Domain make_square(double a) {
  require_positive(a, "square side");
  Domain d;
  d.start = Vec2(0.0, 0.0);
  d.segments.push_back(line_to(Vec2(a, 0.0)));
  d.segments.push_back(line_to(Vec2(a, a)));
  d.segments.push_back(line_to(Vec2(0.0, a)));
  d.segments.push_back(line_to(Vec2(0.0, 0.0)));
  return d;
}

Domain make_stadium(double R, double L) {
  require_positive(R, "stadium radius");
  require_positive(L, "stadium length");
  const double x = 0.5 * L;
  Domain d;
  d.start = Vec2(-x, -R);
  d.segments.push_back(line_to(Vec2(x, -R)));
  d.segments.push_back(arc_to(Vec2(x, R), Vec2(x, 0.0), true));
  d.segments.push_back(line_to(Vec2(-x, R)));
  d.segments.push_back(arc_to(Vec2(-x, -R), Vec2(-x, 0.0), true));
  return d;
}

Domain make_ellipse(double a, double b, int n) {
  require_positive(a, "ellipse semi-axis a");
  require_positive(b, "ellipse semi-axis b");
  if (n < 64) throw std::invalid_argument("ellipse polyline needs n >= 64");
  Domain d;
  d.start = Vec2(a, 0.0);
  d.segments.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const double t = kTau * k / n;
    d.segments.push_back(line_to(k == n ? d.start
                                        : Vec2(a * std::cos(t), b * std::sin(t))));
  }
  return d;
}

Domain make_dumbbell(double R, double dist, double w) {
  require_positive(R, "dumbbell radius");
  require_positive(w, "corridor half-width");
  if (!(w < R)) throw std::invalid_argument("corridor half-width must be below R");
  const double s = std::sqrt(R * R - w * w);
  if (!(dist > 2.0 * s))
    throw std::invalid_argument("dumbbell centers too close for a corridor");
  const double cx = 0.5 * dist;
  const double xr = cx - s;   // right junction x
  const double xl = -cx + s;  // left junction x
  Domain d;
  d.start = Vec2(xl, -w);
  d.segments.push_back(line_to(Vec2(xr, -w)));
  d.segments.push_back(arc_to(Vec2(xr, w), Vec2(cx, 0.0), true));
  d.segments.push_back(line_to(Vec2(xl, w)));
  d.segments.push_back(arc_to(Vec2(xl, -w), Vec2(-cx, 0.0), true));
  return d;
}

double two_ball_distance_for_angle(double R, double r, double theta_R) {
  require_positive(R, "R");
  require_positive(r, "r");
  if (!(theta_R > 0.0 && theta_R < 0.5 * kPi))
    throw std::invalid_argument("theta_R must lie in (0, pi/2)");
  const double xp = R * std::cos(theta_R);
  const double yp = R * std::sin(theta_R);
  if (yp >= r) throw std::invalid_argument("angle too wide for the small radius");
  return xp + std::sqrt(r * r - yp * yp);
}

Domain two_balls(const TwoBallParams& p) {
  require_positive(p.R, "R");
  require_positive(p.r, "r");
  if (p.r > p.R) throw std::invalid_argument("two_balls requires r <= R");
  if (!(p.d > p.R - p.r && p.d < p.R + p.r))
    throw std::invalid_argument("two_balls requires proper overlap: |R-r| < d < R+r");
  const double f = p.fillet > 0.0 ? p.fillet : 0.05 * p.r;

  const Vec2 cR(0.0, 0.0);
  const Vec2 cr(p.d, 0.0);

  // Fillet circle: externally tangent to both disks, near the upper junction.
  const double Rf = p.R + f, rf = p.r + f;
  const double xf = (p.d * p.d + Rf * Rf - rf * rf) / (2.0 * p.d);
  const double yf2 = Rf * Rf - xf * xf;
  if (!(yf2 > 0.0)) throw std::invalid_argument("fillet does not fit the junction");
  const double yf = std::sqrt(yf2);
  if (!(yf > f))
    throw std::invalid_argument("fillet too large: opposite fillets collide");

  const Vec2 Ft(xf, yf), Fb(xf, -yf);
  const Vec2 TRt = cR + (p.R / Rf) * (Ft - cR);  // tangency on the big circle
  const Vec2 TRb = cR + (p.R / Rf) * (Fb - cR);
  const Vec2 Trt = cr + (p.r / rf) * (Ft - cr);  // tangency on the small circle
  const Vec2 Trb = cr + (p.r / rf) * (Fb - cr);
  if (!(TRt.y() > 0.0 && Trt.y() > 0.0))
    throw std::invalid_argument("fillet tangencies degenerate");

  Domain d;
  d.start = TRt;
  d.segments.push_back(arc_to(TRb, cR, true));   // big circle, the long way
  d.segments.push_back(arc_to(Trb, Fb, false));  // lower fillet (reentrant)
  d.segments.push_back(arc_to(Trt, cr, true));   // small circle, the long way
  d.segments.push_back(arc_to(TRt, Ft, false));  // upper fillet
  return d;
}

Domain pinocchio(const PinocchioParams& p) {
  if (!(p.theta > 0.0 && p.theta < 0.5 * kPi))
    throw std::invalid_argument("pinocchio: theta must lie in (0, pi/2)");
  if (p.T < 0.0) throw std::invalid_argument("pinocchio: T must be nonnegative");
  const double s = std::sin(p.theta);
  const double c = std::cos(p.theta);
  const Vec2 tube_end(c + p.T, 0.0);

  Domain d;
  d.start = Vec2(c, s);
  d.segments.push_back(arc_to(Vec2(c, -s), Vec2(0.0, 0.0), true));  // main circle
  if (p.T == 0.0) {
    d.segments.push_back(arc_to(Vec2(c, s), Vec2(c, 0.0), true));
    return d;
  }
  d.segments.push_back(line_to(Vec2(c + p.T, -s)));
  d.segments.push_back(arc_to(Vec2(c + p.T, s), tube_end, true));  // nose cap
  d.segments.push_back(line_to(Vec2(c, s)));
  return d;
}

double solve_pinocchio_angle(const Tolerance& tol) {
  tol.check();
  auto f = [](double th) {
    const double s = std::sin(th), c = std::cos(th);
    return 2.0 * kPi * s - 2.0 * th * s + 0.5 * kPi * s * s - kPi + th - s * c;
  };
  double lo = 0.1, hi = 1.0;
  if (!(f(lo) < 0.0 && f(hi) > 0.0))
    throw std::runtime_error("pinocchio angle: bracket lost");
  // Bisect to machine precision; eps_root only bounds what callers assert.
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace capgeo

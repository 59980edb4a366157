#include "capgeo/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace capgeo {

double mod_tau(double a) {
  double y = std::fmod(a, kTau);
  if (y < 0.0) y += kTau;
  return y;
}

void Tolerance::check() const {
  if (!(eps_geom > 0.0 && eps_area > 0.0 && eps_root > 0.0))
    throw std::invalid_argument("tolerances must be strictly positive");
  if (eps_area < eps_geom * eps_geom)
    throw std::invalid_argument("eps_area must be >= eps_geom^2");
  if (n_samples < 16) throw std::invalid_argument("n_samples too small");
}

// ---------------------------------------------------------------------------
// Edge basics

double Edge::length() const {
  if (kind == Segment::Kind::Line) return (b - a).norm();
  return r * std::abs(sweep);
}

Vec2 Edge::point(double t) const {
  if (kind == Segment::Kind::Line) return a + t * (b - a);
  if (t <= 0.0) return a;
  if (t >= 1.0) return b;
  const double ang = ang_a + sweep * t;
  return c + r * Vec2(std::cos(ang), std::sin(ang));
}

Vec2 Edge::tangent(double t) const {
  if (kind == Segment::Kind::Line) {
    Vec2 d = b - a;
    const double n = d.norm();
    return n > 0.0 ? Vec2(d / n) : Vec2(1.0, 0.0);
  }
  const double ang = ang_a + sweep * t;
  Vec2 radial(std::cos(ang), std::sin(ang));
  Vec2 tang = rot90(radial);  // ccw direction
  return sweep >= 0.0 ? tang : Vec2(-tang);
}

static Edge make_line_edge(const Vec2& a, const Vec2& b) {
  Edge e;
  e.kind = Segment::Kind::Line;
  e.a = a;
  e.b = b;
  return e;
}

static Edge make_arc_edge(const Vec2& a, const Vec2& b, const Vec2& c, bool ccw) {
  Edge e;
  e.kind = Segment::Kind::Arc;
  e.a = a;
  e.b = b;
  e.c = c;
  e.r = 0.5 * ((a - c).norm() + (b - c).norm());
  e.ang_a = std::atan2(a.y() - c.y(), a.x() - c.x());
  const double ang_b = std::atan2(b.y() - c.y(), b.x() - c.x());
  if (ccw)
    e.sweep = mod_tau(ang_b - e.ang_a);
  else
    e.sweep = -mod_tau(e.ang_a - ang_b);
  // a == b would be ambiguous (empty vs full circle); validate() rejects it,
  // but keep the expansion well defined.
  if (std::abs(e.sweep) < 1e-15) e.sweep = ccw ? 1e-15 : -1e-15;
  return e;
}

std::vector<Edge> edges_of(const Domain& d) {
  std::vector<Edge> out;
  out.reserve(d.segments.size());
  Vec2 cur = d.start;
  for (const Segment& s : d.segments) {
    if (s.kind == Segment::Kind::Line)
      out.push_back(make_line_edge(cur, s.end));
    else
      out.push_back(make_arc_edge(cur, s.end, s.center, s.ccw));
    cur = s.end;
  }
  return out;
}

Domain domain_of(const std::vector<Edge>& loop) {
  Domain d;
  if (loop.empty()) return d;
  d.start = loop.front().a;
  d.segments.reserve(loop.size());
  for (size_t i = 0; i < loop.size(); ++i) {
    const Edge& e = loop[i];
    Segment s;
    s.kind = e.kind;
    s.end = (i + 1 == loop.size()) ? d.start : e.b;
    if (e.is_arc()) {
      s.center = e.c;
      s.ccw = e.sweep >= 0.0;
    }
    d.segments.push_back(s);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Measures

static double edge_area_contrib(const Edge& e) {
  double acc = 0.5 * cross2(e.a, e.b);
  if (e.is_arc()) {
    const double s = std::abs(e.sweep);
    const double seg = 0.5 * e.r * e.r * (s - std::sin(s));
    acc += (e.sweep >= 0.0) ? seg : -seg;
  }
  return acc;
}

double area(const std::vector<Edge>& loop) {
  double acc = 0.0;
  for (const Edge& e : loop) acc += edge_area_contrib(e);
  return acc;
}

double perimeter(const std::vector<Edge>& loop) {
  double acc = 0.0;
  for (const Edge& e : loop) acc += e.length();
  return acc;
}

double area(const Domain& d) { return area(edges_of(d)); }
double perimeter(const Domain& d) { return perimeter(edges_of(d)); }

double quotient(const Domain& d) {
  const double a = area(d);
  if (a <= 0.0) throw std::invalid_argument("quotient: nonpositive area");
  return perimeter(d) / a;
}

// ---------------------------------------------------------------------------
// Distances and containment

static bool angle_on_arc(const Edge& e, double phi, double slack = 1e-12) {
  const double span = std::abs(e.sweep);
  double off = (e.sweep >= 0.0) ? mod_tau(phi - e.ang_a) : mod_tau(e.ang_a - phi);
  if (off <= span + slack) return true;
  // wrap-around: just before the start counts as the start
  return off >= kTau - slack;
}

Vec2 closest_point(const Edge& e, const Vec2& q) {
  if (e.kind == Segment::Kind::Line) {
    const Vec2 d = e.b - e.a;
    const double len2 = d.squaredNorm();
    if (len2 <= 0.0) return e.a;
    double t = (q - e.a).dot(d) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return e.a + t * d;
  }
  const Vec2 v = q - e.c;
  const double rho = v.norm();
  if (rho < 1e-14) return e.point(0.5);  // center: every arc point is equidistant
  const double phi = std::atan2(v.y(), v.x());
  if (angle_on_arc(e, phi)) return e.c + (e.r / rho) * v;
  return ((q - e.a).squaredNorm() <= (q - e.b).squaredNorm()) ? e.a : e.b;
}

double distance(const Edge& e, const Vec2& q) {
  return (q - closest_point(e, q)).norm();
}

double boundary_distance(const std::vector<Edge>& edges, const Vec2& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Edge& e : edges) best = std::min(best, distance(e, p));
  return best;
}

// Counts crossings of the ray {y = ry, x > px}. Returns false via `ok` when
// the ray grazes an endpoint or a tangency, so the caller can nudge and retry.
static int ray_crossings(const Edge& e, double px, double ry, double delta, bool& ok) {
  int count = 0;
  if (e.kind == Segment::Kind::Line) {
    const double y1 = e.a.y(), y2 = e.b.y();
    if (std::abs(y1 - ry) < delta || std::abs(y2 - ry) < delta) {
      ok = false;
      return 0;
    }
    if ((y1 < ry) == (y2 < ry)) return 0;
    const double t = (ry - y1) / (y2 - y1);
    const double x = e.a.x() + t * (e.b.x() - e.a.x());
    if (std::abs(x - px) < delta) {
      ok = false;
      return 0;
    }
    if (x > px) ++count;
    return count;
  }
  const double dy = ry - e.c.y();
  const double rad = e.r;
  if (std::abs(std::abs(dy) - rad) < delta) {  // near tangency
    ok = false;
    return 0;
  }
  if (std::abs(dy) > rad) return 0;
  const double h = std::sqrt(rad * rad - dy * dy);
  for (const double sx : {-h, h}) {
    const Vec2 p(e.c.x() + sx, ry);
    if ((p - e.a).norm() < delta || (p - e.b).norm() < delta) {
      ok = false;
      return 0;
    }
    const double phi = std::atan2(p.y() - e.c.y(), p.x() - e.c.x());
    if (!angle_on_arc(e, phi, 1e-12)) continue;
    if (std::abs(p.x() - px) < delta) {
      ok = false;
      return 0;
    }
    if (p.x() > px) ++count;
  }
  return count;
}

bool contains(const std::vector<Edge>& loop, const Vec2& p) {
  double scale = 1.0;
  for (const Edge& e : loop)
    scale = std::max({scale, std::abs(e.a.x()), std::abs(e.a.y())});
  const double delta = 1e-11 * scale;
  int crossings = 0;
  for (int attempt = 0; attempt < 24; ++attempt) {
    const double nudge = attempt == 0 ? 0.0
                                      : ((attempt % 2 ? 1.0 : -1.0) *
                                         (double((attempt + 1) / 2)) * 64.0 * delta);
    const double ry = p.y() + nudge;
    bool ok = true;
    crossings = 0;
    for (const Edge& e : loop) {
      crossings += ray_crossings(e, p.x(), ry, delta, ok);
      if (!ok) break;
    }
    if (ok) return (crossings & 1) != 0;
  }
  return (crossings & 1) != 0;  // best effort after retries
}

double signed_distance(const Domain& d, const Vec2& p) {
  const auto es = edges_of(d);
  const double dist = boundary_distance(es, p);
  return contains(es, p) ? -dist : dist;
}

// ---------------------------------------------------------------------------
// Intersections

double param_of(const Edge& e, const Vec2& p) {
  if (e.kind == Segment::Kind::Line) {
    const Vec2 d = e.b - e.a;
    const double len2 = d.squaredNorm();
    if (len2 <= 0.0) return 0.0;
    return std::clamp((p - e.a).dot(d) / len2, 0.0, 1.0);
  }
  const double phi = std::atan2(p.y() - e.c.y(), p.x() - e.c.x());
  const double span = std::abs(e.sweep);
  double off = (e.sweep >= 0.0) ? mod_tau(phi - e.ang_a) : mod_tau(e.ang_a - phi);
  if (off > span) {
    // outside the span: snap to the nearer end
    off = (kTau - off < off - span) ? 0.0 : span;
  }
  return std::clamp(off / span, 0.0, 1.0);
}

static void circle_line_hits(const Vec2& c, double r, const Edge& seg,
                             std::vector<Vec2>& out) {
  const Vec2 d = seg.b - seg.a;
  const double len2 = d.squaredNorm();
  if (len2 <= 0.0) return;
  const Vec2 f = seg.a - c;
  const double A = len2;
  const double B = 2.0 * f.dot(d);
  const double C = f.squaredNorm() - r * r;
  double disc = B * B - 4.0 * A * C;
  const double tang_tol = 1e-12 * A * std::max(1.0, r * r);
  if (disc < -tang_tol) return;
  if (disc < 0.0) disc = 0.0;
  const double sq = std::sqrt(disc);
  const double t1 = (-B - sq) / (2.0 * A);
  const double t2 = (-B + sq) / (2.0 * A);
  for (const double t : {t1, t2}) {
    if (t < -1e-9 || t > 1.0 + 1e-9) continue;
    out.push_back(seg.a + std::clamp(t, 0.0, 1.0) * d);
    if (sq < 1e-9) break;  // tangency: one point
  }
}

static void circle_circle_hits(const Vec2& c1, double r1, const Vec2& c2, double r2,
                               std::vector<Vec2>& out) {
  const Vec2 d = c2 - c1;
  const double dist = d.norm();
  const double scale = std::max({1.0, r1, r2});
  if (dist < 1e-13 * scale) return;  // concentric (identical circles unsplit)
  if (dist > r1 + r2 + 1e-11 * scale) return;
  if (dist < std::abs(r1 - r2) - 1e-11 * scale) return;
  const double x = (dist * dist + r1 * r1 - r2 * r2) / (2.0 * dist);
  double h2 = r1 * r1 - x * x;
  if (h2 < 0.0) h2 = 0.0;
  const double h = std::sqrt(h2);
  const Vec2 u = d / dist;
  const Vec2 v = rot90(u);
  out.push_back(c1 + x * u + h * v);
  if (h > 1e-11 * scale) out.push_back(c1 + x * u - h * v);
}

std::vector<Vec2> intersect(const Edge& e, const Edge& f) {
  std::vector<Vec2> raw;
  if (e.kind == Segment::Kind::Line && f.kind == Segment::Kind::Line) {
    const Vec2 r = e.b - e.a;
    const Vec2 s = f.b - f.a;
    const double den = cross2(r, s);
    const double scale = std::max(r.norm() * s.norm(), 1e-300);
    if (std::abs(den) < 1e-13 * scale) return raw;  // parallel / collinear
    const Vec2 w = f.a - e.a;
    const double t = cross2(w, s) / den;
    const double u = cross2(w, r) / den;
    if (t < -1e-9 || t > 1.0 + 1e-9 || u < -1e-9 || u > 1.0 + 1e-9) return raw;
    raw.push_back(e.a + std::clamp(t, 0.0, 1.0) * r);
    return raw;
  }
  if (e.kind == Segment::Kind::Arc && f.kind == Segment::Kind::Arc)
    circle_circle_hits(e.c, e.r, f.c, f.r, raw);
  else if (e.kind == Segment::Kind::Arc)
    circle_line_hits(e.c, e.r, f, raw);
  else
    circle_line_hits(f.c, f.r, e, raw);

  std::vector<Vec2> out;
  for (const Vec2& p : raw) {
    bool on_e = true, on_f = true;
    if (e.is_arc())
      on_e = angle_on_arc(e, std::atan2(p.y() - e.c.y(), p.x() - e.c.x()), 1e-9);
    else {
      const double t = (p - e.a).dot(e.b - e.a) / std::max((e.b - e.a).squaredNorm(), 1e-300);
      on_e = t > -1e-9 && t < 1.0 + 1e-9;
    }
    if (f.is_arc())
      on_f = angle_on_arc(f, std::atan2(p.y() - f.c.y(), p.x() - f.c.x()), 1e-9);
    else {
      const double t = (p - f.a).dot(f.b - f.a) / std::max((f.b - f.a).squaredNorm(), 1e-300);
      on_f = t > -1e-9 && t < 1.0 + 1e-9;
    }
    if (on_e && on_f) out.push_back(p);
  }
  return out;
}

std::vector<Edge> split_edge(const Edge& e, std::vector<std::pair<double, Vec2>> cuts) {
  std::sort(cuts.begin(), cuts.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Edge> out;
  Vec2 cur = e.a;
  double prev_t = 0.0;
  auto emit = [&](const Vec2& to, double t_to) {
    Edge piece = e;
    piece.a = cur;
    piece.b = to;
    if (e.is_arc()) {
      piece.ang_a = e.ang_a + e.sweep * prev_t;
      piece.sweep = e.sweep * (t_to - prev_t);
    }
    if (piece.length() > 0.0) out.push_back(piece);
    cur = to;
    prev_t = t_to;
  };
  for (const auto& [t, p] : cuts) {
    if (t <= prev_t + 1e-12) continue;
    if (t >= 1.0 - 1e-12) break;
    emit(p, t);
  }
  emit(e.b, 1.0);
  return out;
}

// ---------------------------------------------------------------------------
// Boxes

void Box::grow(const Vec2& p) {
  lo = lo.cwiseMin(p);
  hi = hi.cwiseMax(p);
}

void Box::grow(const Box& o) {
  grow(o.lo);
  grow(o.hi);
}

bool Box::overlaps(const Box& o, double slack) const {
  return lo.x() <= o.hi.x() + slack && o.lo.x() <= hi.x() + slack &&
         lo.y() <= o.hi.y() + slack && o.lo.y() <= hi.y() + slack;
}

Box bounding_box(const Edge& e) {
  Box b{e.a, e.a};
  b.grow(e.b);
  if (e.is_arc()) {
    static const double cardinals[4] = {0.0, 0.5 * kPi, kPi, 1.5 * kPi};
    for (double phi : cardinals)
      if (angle_on_arc(e, phi))
        b.grow(e.c + e.r * Vec2(std::cos(phi), std::sin(phi)));
  }
  return b;
}

Box bounding_box(const Domain& d) {
  const auto es = edges_of(d);
  Box b{d.start, d.start};
  for (const Edge& e : es) b.grow(bounding_box(e));
  return b;
}

// ---------------------------------------------------------------------------
// Validation

Diagnostics validate(const Domain& d, const Tolerance& tol) {
  Diagnostics diag;
  auto fail = [&](const std::string& what, const Vec2& where) {
    diag.pass = false;
    diag.violation = what;
    diag.where = where;
    return diag;
  };
  if (d.segments.empty()) return fail("closure: empty segment list", d.start);
  for (const Vec2& p : {d.start})
    if (!p.allFinite()) return fail("finite: start not finite", p);

  Vec2 cur = d.start;
  for (size_t i = 0; i < d.segments.size(); ++i) {
    const Segment& s = d.segments[i];
    if (!s.end.allFinite()) return fail("finite: segment endpoint not finite", s.end);
    if (s.kind == Segment::Kind::Line) {
      if ((s.end - cur).norm() <= tol.eps_geom)
        return fail("segment: zero-length line", cur);
    } else {
      if (!s.center.allFinite()) return fail("finite: arc center not finite", s.center);
      const double ra = (cur - s.center).norm();
      const double rb = (s.end - s.center).norm();
      if (std::abs(ra - rb) > tol.eps_geom)
        return fail("arc: endpoint radii disagree", s.center);
      if (ra <= tol.eps_geom) return fail("arc: degenerate radius", s.center);
      if ((s.end - cur).norm() <= tol.eps_geom && ra > tol.eps_geom)
        return fail("arc: coincident endpoints (ambiguous sweep)", cur);
    }
    cur = s.end;
  }
  if ((cur - d.start).norm() > tol.eps_geom)
    return fail("closure: curve does not close on start", cur);

  // Simplicity: non-adjacent pieces must not touch; adjacent pieces may meet
  // only at the shared endpoint.
  const auto es = edges_of(d);
  const size_t n = es.size();
  std::vector<Box> boxes(n);
  for (size_t i = 0; i < n; ++i) boxes[i] = bounding_box(es[i]);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (!boxes[i].overlaps(boxes[j], tol.eps_geom)) continue;
      const bool next_to = j == i + 1;
      const bool wraps = i == 0 && j == n - 1;
      const bool adjacent = next_to || wraps;
      auto pts = intersect(es[i], es[j]);
      for (const Vec2& p : pts) {
        if (next_to && (p - es[i].b).norm() <= 10.0 * tol.eps_geom) continue;
        if (wraps && (p - es[i].a).norm() <= 10.0 * tol.eps_geom) continue;
        return fail("simplicity: boundary self-intersects", p);
      }
      if (!adjacent && !es[i].is_arc() && !es[j].is_arc()) {
        // collinear overlap is invisible to intersect(); reject it explicitly
        const Vec2 r = es[i].b - es[i].a;
        const double rl = r.norm();
        if (rl > 0.0) {
          const Vec2 u = r / rl;
          const double off1 = std::abs(cross2(u, es[j].a - es[i].a));
          const double off2 = std::abs(cross2(u, es[j].b - es[i].a));
          if (off1 <= tol.eps_geom && off2 <= tol.eps_geom) {
            const double t1 = u.dot(es[j].a - es[i].a);
            const double t2 = u.dot(es[j].b - es[i].a);
            const double lo = std::min(t1, t2), hi = std::max(t1, t2);
            if (hi > tol.eps_geom && lo < rl - tol.eps_geom)
              return fail("simplicity: collinear segments overlap",
                          es[i].point(std::clamp(0.5 * (lo + hi) / rl, 0.0, 1.0)));
          }
        }
      }
    }
  }

  const double a = area(es);
  if (a <= tol.eps_area)
    return fail(a < -tol.eps_area ? "orientation: boundary is clockwise"
                                  : "orientation: vanishing signed area",
                d.start);
  return diag;
}

void require_valid(const Domain& d, const Tolerance& tol) {
  const Diagnostics diag = validate(d, tol);
  if (!diag.pass) throw std::invalid_argument("invalid domain: " + diag.violation);
}

// ---------------------------------------------------------------------------
// Transforms and sampling

Domain translated(const Domain& d, const Vec2& t) {
  Domain out = d;
  out.start += t;
  for (Segment& s : out.segments) {
    s.end += t;
    if (s.kind == Segment::Kind::Arc) s.center += t;
  }
  return out;
}

Domain rotated(const Domain& d, double angle) {
  const double ca = std::cos(angle), sa = std::sin(angle);
  auto rot = [&](const Vec2& p) {
    return Vec2(ca * p.x() - sa * p.y(), sa * p.x() + ca * p.y());
  };
  Domain out = d;
  out.start = rot(d.start);
  for (Segment& s : out.segments) {
    s.end = rot(s.end);
    if (s.kind == Segment::Kind::Arc) s.center = rot(s.center);
  }
  return out;
}

Domain scaled(const Domain& d, double factor) {
  if (factor <= 0.0) throw std::invalid_argument("scaled: factor must be positive");
  Domain out = d;
  out.start *= factor;
  for (Segment& s : out.segments) {
    s.end *= factor;
    if (s.kind == Segment::Kind::Arc) s.center *= factor;
  }
  return out;
}

std::vector<Vec2> sample_boundary(const std::vector<Edge>& edges, int n) {
  std::vector<Vec2> out;
  if (edges.empty() || n <= 0) return out;
  const double total = perimeter(edges);
  if (total <= 0.0) return out;
  const double step = total / n;
  double carry = 0.0;
  for (const Edge& e : edges) {
    const double len = e.length();
    double s = carry;
    while (s < len) {
      out.push_back(e.point(s / len));
      s += step;
    }
    carry = s - len;
  }
  return out;
}

}  // namespace capgeo

#include "capgeo/morphology.hpp"

#include <algorithm>
#include <cmath>

namespace capgeo {

double area(const Region& reg) {
  double acc = 0.0;
  for (const Domain& d : reg.components) acc += area(d);
  return acc;
}

double perimeter(const Region& reg) {
  double acc = 0.0;
  for (const Domain& d : reg.components) acc += perimeter(d);
  return acc;
}

namespace {

enum class Side { Inward, Outward };

Vec2 edge_end_normal_in(const Edge& e) { return e.normal_in(1.0); }
Vec2 edge_start_normal_in(const Edge& e) { return e.normal_in(0.0); }

// Offset a single boundary piece. Inward offsets shrink convex (ccw) arcs and
// grow reentrant (cw) ones; outward offsets do the opposite. Arcs whose new
// radius falls to eps_geom or below collapse and are dropped.
std::optional<Edge> offset_edge(const Edge& e, double r, Side side, double eps_geom) {
  const double sgn = (side == Side::Inward) ? 1.0 : -1.0;
  if (e.kind == Segment::Kind::Line) {
    const Vec2 shift = sgn * r * e.normal_in(0.5);
    Edge out = e;
    out.a += shift;
    out.b += shift;
    return out;
  }
  const double new_r = (e.sweep >= 0.0) ? e.r - sgn * r : e.r + sgn * r;
  if (new_r <= eps_geom) return std::nullopt;
  Edge out = e;
  out.r = new_r;
  out.a = e.c + new_r * Vec2(std::cos(e.ang_a), std::sin(e.ang_a));
  const double ang_b = e.ang_a + e.sweep;
  out.b = e.c + new_r * Vec2(std::cos(ang_b), std::sin(ang_b));
  return out;
}

Edge make_join_arc(const Vec2& v, double r, const Vec2& n_from, const Vec2& n_to,
                   bool ccw) {
  Edge e;
  e.kind = Segment::Kind::Arc;
  e.c = v;
  e.r = r;
  e.a = v + r * n_from;
  e.b = v + r * n_to;
  e.ang_a = std::atan2(n_from.y(), n_from.x());
  const double ang_b = std::atan2(n_to.y(), n_to.x());
  e.sweep = ccw ? mod_tau(ang_b - e.ang_a) : -mod_tau(e.ang_a - ang_b);
  return e;
}

// Raw offset candidates for a single ccw loop: per-edge offsets plus vertex
// join arcs. Inward offsets join at reflex vertices with clockwise arcs;
// outward offsets join at convex vertices with counterclockwise arcs. A
// reversal (180-degree turn, e.g. the tip of a zero-width whisker) joins on
// the side appropriate to the offset direction.
void loop_offset_candidates(const std::vector<Edge>& loop, double r, Side side,
                            double eps_geom, std::vector<Edge>& out) {
  const size_t n = loop.size();
  const double dir = (side == Side::Inward) ? 1.0 : -1.0;
  for (size_t i = 0; i < n; ++i) {
    if (auto off = offset_edge(loop[i], r, side, eps_geom)) out.push_back(*off);
    const Edge& e = loop[i];
    const Edge& f = loop[(i + 1) % n];
    const Vec2 v = e.b;
    const Vec2 ni = dir * edge_end_normal_in(e);
    const Vec2 nj = dir * edge_start_normal_in(f);
    const double turn = cross2(ni, nj);
    const double dot = ni.dot(nj);
    const bool reversal = dot < -0.999999;
    bool add = false;
    bool ccw = false;
    if (side == Side::Inward) {
      if (turn < -1e-9 || (reversal && turn <= 1e-9)) {
        add = true;
        ccw = false;
      }
    } else {
      if (turn > 1e-9 || (reversal && turn >= -1e-9)) {
        add = true;
        ccw = true;
      }
    }
    if (!add) continue;
    Edge join = make_join_arc(v, r, ni, nj, ccw);
    if (std::abs(join.sweep) > kPi + 1e-3) continue;  // tangent-noise guard
    out.push_back(join);
  }
}

// Split every candidate at its crossings with the others.
std::vector<Edge> split_all(const std::vector<Edge>& cand, double merge_eps) {
  const size_t n = cand.size();
  std::vector<std::vector<std::pair<double, Vec2>>> cuts(n);
  std::vector<Box> boxes(n);
  for (size_t i = 0; i < n; ++i) boxes[i] = bounding_box(cand[i]);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (!boxes[i].overlaps(boxes[j], merge_eps)) continue;
      for (const Vec2& p : intersect(cand[i], cand[j])) {
        if ((p - cand[i].a).norm() > merge_eps && (p - cand[i].b).norm() > merge_eps)
          cuts[i].emplace_back(param_of(cand[i], p), p);
        if ((p - cand[j].a).norm() > merge_eps && (p - cand[j].b).norm() > merge_eps)
          cuts[j].emplace_back(param_of(cand[j], p), p);
      }
    }
  }
  std::vector<Edge> out;
  out.reserve(n * 2);
  for (size_t i = 0; i < n; ++i) {
    auto pieces = split_edge(cand[i], std::move(cuts[i]));
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return out;
}

struct LoopSet {
  std::vector<std::vector<Edge>> loops;
};

// Chain kept pieces into closed loops by endpoint matching. Open chains are
// degenerate trim leftovers and are discarded.
LoopSet stitch(std::vector<Edge> pieces, double stitch_eps) {
  LoopSet out;
  const size_t n = pieces.size();
  std::vector<bool> used(n, false);
  for (size_t s = 0; s < n; ++s) {
    if (used[s]) continue;
    std::vector<Edge> chain{pieces[s]};
    used[s] = true;
    const Vec2 origin = pieces[s].a;
    Vec2 cur = pieces[s].b;
    bool closed = false;
    for (size_t guard = 0; guard <= n; ++guard) {
      if ((cur - origin).norm() <= stitch_eps && chain.size() >= 2) {
        closed = true;
        break;
      }
      double best = stitch_eps;
      size_t pick = n;
      for (size_t k = 0; k < n; ++k) {
        if (used[k]) continue;
        const double gap = (pieces[k].a - cur).norm();
        if (gap < best) {
          best = gap;
          pick = k;
        }
      }
      if (pick == n) break;
      used[pick] = true;
      pieces[pick].a = cur;  // snap
      chain.push_back(pieces[pick]);
      cur = chain.back().b;
    }
    if (closed) {
      chain.back().b = origin;  // snap closure
      out.loops.push_back(std::move(chain));
    }
  }
  return out;
}

struct TrimConfig {
  double radius = 0.0;
  Side side = Side::Inward;
  double keep_tol = 0.0;
  double stitch_eps = 0.0;
};

// Global validity filter: a candidate piece survives iff its midpoint has
// clearance >= r from the whole source boundary and sits on the correct side
// of the source set. Surviving pieces stitch into the offset boundary.
LoopSet offset_trim(const std::vector<std::vector<Edge>>& source_loops,
                    const std::vector<Edge>& candidates, const TrimConfig& cfg) {
  std::vector<Edge> all_source;
  for (const auto& loop : source_loops)
    all_source.insert(all_source.end(), loop.begin(), loop.end());

  auto split = split_all(candidates, cfg.stitch_eps * 0.01 + 1e-12);

  std::vector<Box> src_boxes(all_source.size());
  for (size_t i = 0; i < all_source.size(); ++i)
    src_boxes[i] = bounding_box(all_source[i]);

  auto clearance = [&](const Vec2& q) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < all_source.size(); ++i) {
      const Box& b = src_boxes[i];
      const double dx = std::max({b.lo.x() - q.x(), q.x() - b.hi.x(), 0.0});
      const double dy = std::max({b.lo.y() - q.y(), q.y() - b.hi.y(), 0.0});
      if (dx * dx + dy * dy >= best * best) continue;
      best = std::min(best, distance(all_source[i], q));
    }
    return best;
  };
  auto inside_source = [&](const Vec2& q) {
    int parity = 0;
    for (const auto& loop : source_loops)
      if (contains(loop, q)) parity ^= 1;
    return parity != 0;
  };

  std::vector<Edge> kept;
  kept.reserve(split.size());
  for (const Edge& e : split) {
    const Vec2 mid = e.midpoint();
    if (clearance(mid) < cfg.radius - cfg.keep_tol) continue;
    const bool inside = inside_source(mid);
    if (cfg.side == Side::Inward ? !inside : inside) continue;
    kept.push_back(e);
  }
  return stitch(std::move(kept), cfg.stitch_eps);
}

std::vector<std::vector<Edge>> erode_raw(const Domain& d, double r,
                                         const Tolerance& tol) {
  const auto loop = edges_of(d);
  std::vector<Edge> cand;
  loop_offset_candidates(loop, r, Side::Inward, tol.eps_geom, cand);
  if (cand.empty()) return {};
  TrimConfig cfg;
  cfg.radius = r;
  cfg.side = Side::Inward;
  cfg.keep_tol = std::max(4.0 * tol.eps_root, 1e-9 * (1.0 + r));
  cfg.stitch_eps = 4.0 * tol.eps_geom;  // must bridge collapsed-arc gaps (<= 2 eps_geom)
  return offset_trim({loop}, cand, cfg).loops;
}

// Sanitize a stitched loop into representable segments: snap-noise micro
// edges get bridged away, arcs wider than ~1.75 pi split in two (a single
// arc with coincident endpoints cannot encode a full circle), and arc centers
// move onto the perpendicular bisector of their endpoints so both endpoint
// radii agree exactly after stitch snapping.
std::vector<Edge> representable(std::vector<Edge> loop, double eps_geom) {
  if (!loop.empty()) loop.back().b = loop.front().a;  // exact closure
  std::vector<Edge> out;
  for (const Edge& e : loop) {
    if (e.length() <= eps_geom) continue;
    if (e.is_arc() && std::abs(e.sweep) > 1.75 * kPi) {
      auto halves = split_edge(e, {{0.5, e.point(0.5)}});
      out.insert(out.end(), halves.begin(), halves.end());
    } else {
      out.push_back(e);
    }
  }
  for (Edge& e : out) {
    if (!e.is_arc()) continue;
    const Vec2 mid = 0.5 * (e.a + e.b);
    const Vec2 chord = e.b - e.a;
    const double len = chord.norm();
    if (len <= eps_geom) continue;
    const Vec2 axis = rot90(chord / len);
    e.c = mid + axis.dot(e.c - mid) * axis;
    e.r = 0.5 * ((e.a - e.c).norm() + (e.b - e.c).norm());
  }
  return out;
}

Region loops_to_region(const std::vector<std::vector<Edge>>& loops, double min_area,
                       double eps_geom) {
  Region reg;
  for (const auto& loop : loops) {
    const double a = area(loop);
    if (a < min_area) continue;  // drops slivers and clockwise loops
    const auto clean = representable(loop, eps_geom);
    if (clean.empty()) continue;
    reg.components.push_back(domain_of(clean));
  }
  return reg;
}

}  // namespace

namespace detail {

std::vector<std::vector<Edge>> erode_loops_keep_degenerate(const Domain& d, double r,
                                                           const Tolerance& tol) {
  auto loops = erode_raw(d, r, tol);
  std::vector<std::vector<Edge>> kept;
  Box bb = bounding_box(d);
  const double scale2 = bb.size().squaredNorm() + 1.0;
  for (auto& loop : loops) {
    if (area(loop) > -1e-12 * scale2) kept.push_back(std::move(loop));
  }
  return kept;
}

Region dilate_loops(const std::vector<std::vector<Edge>>& loops, double r,
                    const Tolerance& tol) {
  if (loops.empty()) return {};
  std::vector<Edge> cand;
  for (const auto& loop : loops)
    loop_offset_candidates(loop, r, Side::Outward, tol.eps_geom, cand);
  if (cand.empty()) return {};
  TrimConfig cfg;
  cfg.radius = r;
  cfg.side = Side::Outward;
  cfg.keep_tol = std::max(4.0 * tol.eps_root, 1e-9 * (1.0 + r));
  cfg.stitch_eps = 4.0 * tol.eps_geom;  // must bridge collapsed-arc gaps (<= 2 eps_geom)
  const auto out = offset_trim(loops, cand, cfg);
  return loops_to_region(out.loops, tol.eps_area, tol.eps_geom);
}

}  // namespace detail

Region erode(const Domain& d, double r, const Tolerance& tol) {
  tol.check();
  require_valid(d, tol);
  if (r < 0.0) throw std::invalid_argument("erode: negative radius");
  if (r == 0.0) return Region{{d}};
  return loops_to_region(erode_raw(d, r, tol), tol.eps_area, tol.eps_geom);
}

Region dilate(const Region& reg, double r, const Tolerance& tol) {
  tol.check();
  if (r < 0.0) throw std::invalid_argument("dilate: negative radius");
  if (reg.empty()) return {};
  if (r == 0.0) return reg;
  std::vector<std::vector<Edge>> loops;
  loops.reserve(reg.components.size());
  for (const Domain& d : reg.components) loops.push_back(edges_of(d));
  return detail::dilate_loops(loops, r, tol);
}

Region opening(const Domain& d, double r, const Tolerance& tol) {
  tol.check();
  require_valid(d, tol);
  if (r < 0.0) throw std::invalid_argument("opening: negative radius");
  if (r == 0.0) return Region{{d}};
  const auto loops = detail::erode_loops_keep_degenerate(d, r, tol);
  if (loops.empty()) return {};
  return detail::dilate_loops(loops, r, tol);
}

bool has_no_neck(const Domain& d, double r, const Tolerance& tol) {
  const Region reg = erode(d, r, tol);
  return reg.components.size() <= 1;
}

double inradius(const Domain& d, const Tolerance& tol) {
  tol.check();
  require_valid(d, tol);
  const Box bb = bounding_box(d);
  double lo = 0.0;
  double hi = 0.5 * bb.size().norm() + tol.eps_geom;
  // Emptiness via the degenerate-keeping erosion: the area threshold of the
  // public erode() would bias the root low by sqrt(eps_area/pi).
  for (int it = 0; it < 80 && hi - lo > tol.eps_root; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (detail::erode_loops_keep_degenerate(d, mid, tol).empty())
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

}  // namespace capgeo

#include "capgeo/reach.hpp"

#include <algorithm>
#include <cmath>

namespace capgeo {

namespace {

// Openness is evaluated a hair inside the requested radius so the closed
// condition (reach >= r) lands true at the critical radius itself, where the
// erosion degenerates to measure-zero sets.
constexpr double kRadiusMargin = 1e-6;

double opening_deficit(const Domain& d, double r, const Tolerance& tol) {
  const double r_eff = r * (1.0 - kRadiusMargin);
  const Region open = opening(d, r_eff, tol);
  return area(d) - area(open);
}

}  // namespace

bool rolling_ball(const Domain& d, double r, const Tolerance& tol) {
  tol.check();
  require_valid(d, tol);
  if (r <= 0.0) throw std::invalid_argument("rolling_ball: radius must be positive");
  return opening_deficit(d, r, tol) < tol.eps_area;
}

ContactSet contacts_at(const std::vector<Edge>& boundary, const Vec2& z, double r,
                       double contact_tol, double dedupe_eps) {
  ContactSet cs;
  cs.center = z;
  auto push = [&](const Vec2& p) {
    if (std::abs((p - z).norm() - r) > contact_tol) return;
    for (const Vec2& q : cs.contacts)
      if ((q - p).norm() <= dedupe_eps) return;
    cs.contacts.push_back(p);
  };
  for (const Edge& e : boundary) {
    if (e.is_arc() && (z - e.c).norm() <= dedupe_eps) {
      // Ball center coincides with the arc center: the whole arc is
      // equidistant, so sample it densely enough to expose antipodal pairs.
      const int k = 64;
      for (int i = 0; i <= k; ++i) push(e.point(double(i) / k));
      continue;
    }
    push(closest_point(e, z));
    push(e.a);
    push(e.b);
  }
  return cs;
}

ReachReport reach_report(const Domain& d, double r, const Tolerance& tol) {
  tol.check();
  require_valid(d, tol);
  if (r <= 0.0) throw std::invalid_argument("reach: radius must be positive");

  ReachReport rep;
  rep.rolling = opening_deficit(d, r, tol) < tol.eps_area;
  if (!rep.rolling) return rep;

  const auto boundary = edges_of(d);
  const auto loops =
      detail::erode_loops_keep_degenerate(d, r * (1.0 - kRadiusMargin), tol);

  double total = 0.0;
  for (const auto& loop : loops) total += perimeter(loop);
  if (total <= 0.0) {
    rep.strict = true;  // nothing to roll: vacuous
    return rep;
  }
  const double step = total / std::max(16, tol.n_samples);

  const double contact_tol = std::max(10.0 * tol.eps_geom, 1e-6 * r);
  bool antipodal = false;
  for (const auto& loop : loops) {
    for (const Edge& e : loop) {
      const double len = e.length();
      const int m = std::max(1, static_cast<int>(std::ceil(len / step)));
      for (int i = 0; i < m; ++i) {
        Vec2 z = e.point((i + 0.5) / m);
        // Project onto the exact distance-r level set.
        for (int it = 0; it < 4; ++it) {
          double best = std::numeric_limits<double>::infinity();
          Vec2 nearest = z;
          for (const Edge& be : boundary) {
            const Vec2 cp = closest_point(be, z);
            const double dd = (cp - z).norm();
            if (dd < best) {
              best = dd;
              nearest = cp;
            }
          }
          if (best <= 1e-14) break;
          const Vec2 g = (z - nearest) / best;
          z += (r - best) * g;
          if (std::abs(r - best) < 1e-13 * (1.0 + r)) break;
        }
        ++rep.centers_checked;
        const ContactSet cs = contacts_at(boundary, z, r, contact_tol, tol.eps_geom);
        for (size_t p = 0; p < cs.contacts.size(); ++p) {
          for (size_t q = p + 1; q < cs.contacts.size(); ++q) {
            const double defect =
                ((cs.contacts[p] - z) + (cs.contacts[q] - z)).norm();
            rep.worst_antipodal_defect = std::min(rep.worst_antipodal_defect, defect);
            if (defect < tol.eps_geom) antipodal = true;
            else if (defect < 10.0 * tol.eps_geom)
              rep.near_miss = true;
          }
        }
      }
    }
  }
  rep.strict = !antipodal;
  return rep;
}

bool strict_rolling_ball(const Domain& d, double r, const Tolerance& tol) {
  const ReachReport rep = reach_report(d, r, tol);
  return rep.rolling && rep.strict;
}

}  // namespace capgeo

#pragma once

#include "capgeo/geometry.hpp"
#include "capgeo/morphology.hpp"

namespace capgeo {

/// One rolling position: a center at distance r from the boundary together
/// with its contact points on the boundary.
struct ContactSet {
  Vec2 center{0.0, 0.0};
  std::vector<Vec2> contacts;
};

struct ReachReport {
  bool rolling = false;
  bool strict = false;
  double worst_antipodal_defect = std::numeric_limits<double>::infinity();
  int centers_checked = 0;
  bool near_miss = false;  // a pair antipodal within 10 * eps_geom
};

/// Weak interior rolling ball condition of radius r, tested as r-openness:
/// the opening by radius r must exhaust the domain up to eps_area.
bool rolling_ball(const Domain& d, double r, const Tolerance& tol);

/// Weak condition plus the antipodal-contact exclusion, sampled over rolling
/// centers walked along the eroded boundary.
ReachReport reach_report(const Domain& d, double r, const Tolerance& tol);

bool strict_rolling_ball(const Domain& d, double r, const Tolerance& tol);

/// Contact points of the ball of radius r centered at z (distance within
/// contact_tol of r). Exposed for tests.
ContactSet contacts_at(const std::vector<Edge>& boundary, const Vec2& z, double r,
                       double contact_tol, double dedupe_eps);

}  // namespace capgeo

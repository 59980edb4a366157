#pragma once

#include "capgeo/geometry.hpp"
#include "capgeo/morphology.hpp"

namespace capgeo {

struct CheegerResult {
  double r_star = 0.0;   // inner Cheeger radius: |Omega^r| = pi r^2
  double h = 0.0;        // 1 / r_star
  double r_phys = 0.0;   // |Omega| / P(Omega)
  Region cheeger_set;    // dilate(erode(Omega, r_star), r_star)
  bool no_neck_valid = false;
  bool self_cheeger = false;
  bool minimal = false;
  std::vector<std::string> notes;
};

/// Root of g(r) = |Omega^r| - pi r^2, bisected on [0, inradius]. g is
/// strictly decreasing with g(0) = |Omega| > 0.
double inner_cheeger_radius(const Domain& d, const Tolerance& tol);

/// h = 1/r_star. The value is certified only when Omega has no necks of
/// radius r_star; otherwise it is a candidate and valid is false.
std::pair<double, bool> cheeger_constant(const Domain& d, const Tolerance& tol);

/// The maximal Cheeger set Omega^{r*} (+) B_{r*}. Refuses when the no-neck
/// hypothesis fails at r_star.
Region maximal_cheeger_set(const Domain& d, const Tolerance& tol);

/// Full classification: self-Cheeger (Omega attains its own constant) and
/// minimality (unique Cheeger set, certified by the strict rolling ball test
/// at the physical radius).
CheegerResult classify(const Domain& d, const Tolerance& tol);

}  // namespace capgeo

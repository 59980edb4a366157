#include "capgeo/cheeger.hpp"

#include "capgeo/reach.hpp"

#include <algorithm>
#include <cmath>

namespace capgeo {

double inner_cheeger_radius(const Domain& d, const Tolerance& tol) {
  tol.check();
  require_valid(d, tol);
  const double A = area(d);
  auto g = [&](double r) { return area(erode(d, r, tol)) - kPi * r * r; };

  double lo = 0.0;
  double hi = inradius(d, tol);
  if (g(hi) > 0.0) {
    // cannot happen for a valid domain; widen defensively before giving up
    hi = 0.5 * bounding_box(d).size().norm();
    if (g(hi) > 0.0)
      throw std::runtime_error("inner_cheeger_radius: bisection not bracketed");
  }
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 80; ++it) {
    mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (hi - lo < 0.25 * tol.eps_root && std::abs(gm) < 0.5 * tol.eps_root * A) break;
    if (gm > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

std::pair<double, bool> cheeger_constant(const Domain& d, const Tolerance& tol) {
  const double r = inner_cheeger_radius(d, tol);
  const bool valid = has_no_neck(d, r, tol);
  return {1.0 / r, valid};
}

namespace {

Region cheeger_set_at(const Domain& d, double r_star, const Tolerance& tol) {
  // Same composition as opening(): degenerate erosion whiskers must survive
  // so the dilation can rebuild the full maximal set.
  const auto loops = detail::erode_loops_keep_degenerate(d, r_star, tol);
  if (loops.empty()) return {};
  return detail::dilate_loops(loops, r_star, tol);
}

}  // namespace

Region maximal_cheeger_set(const Domain& d, const Tolerance& tol) {
  const double r = inner_cheeger_radius(d, tol);
  if (!has_no_neck(d, r, tol))
    throw std::runtime_error(
        "maximal_cheeger_set: domain has a neck of radius r*; the inner "
        "Cheeger formula does not certify the set");
  return cheeger_set_at(d, r, tol);
}

CheegerResult classify(const Domain& d, const Tolerance& tol) {
  tol.check();
  require_valid(d, tol);
  CheegerResult res;
  const double A = area(d);
  const double P = perimeter(d);
  res.r_phys = A / P;
  res.r_star = inner_cheeger_radius(d, tol);
  res.h = 1.0 / res.r_star;

  const Region eroded = erode(d, res.r_star, tol);
  res.no_neck_valid = eroded.components.size() <= 1;
  if (eroded.empty())
    res.notes.push_back("erosion at r* is empty; no-neck holds vacuously");
  res.cheeger_set = cheeger_set_at(d, res.r_star, tol);

  if (!res.no_neck_valid) {
    res.notes.push_back("neck at r*: h reported as a candidate only");
    return res;
  }

  const double sym_diff = std::abs(A - area(res.cheeger_set));
  res.self_cheeger =
      sym_diff < tol.eps_area && std::abs(res.r_star - res.r_phys) < tol.eps_root;
  res.minimal = res.self_cheeger && strict_rolling_ball(d, res.r_phys, tol);
  return res;
}

}  // namespace capgeo

#include "capgeo/convex.hpp"

#include <algorithm>
#include <cmath>

namespace capgeo {

bool is_convex(const Domain& d, const Tolerance& tol) {
  require_valid(d, tol);
  const auto es = edges_of(d);
  const size_t n = es.size();
  for (const Edge& e : es) {
    if (e.is_arc() && e.sweep < 0.0) return false;  // reentrant arc
  }
  for (size_t i = 0; i < n; ++i) {
    const Edge& e = es[i];
    const Edge& f = es[(i + 1) % n];
    const double turn = cross2(e.tangent(1.0), f.tangent(0.0));
    if (turn < -tol.eps_geom) return false;
  }
  return true;
}

SupportFunction support_function(const Domain& d, int n) {
  if (n < 64 || n % 2 != 0)
    throw std::invalid_argument("support_function: n must be even and >= 64");
  if (!is_convex(d, Tolerance{}))
    throw std::invalid_argument("support_function: non-convex input");

  const auto es = edges_of(d);
  SupportFunction sf;
  sf.n = n;
  sf.values.resize(n);
  for (int k = 0; k < n; ++k) {
    const double th = kTau * k / n;
    const Vec2 u(std::cos(th), std::sin(th));
    double best = -std::numeric_limits<double>::infinity();
    for (const Edge& e : es) {
      best = std::max(best, u.dot(e.a));
      best = std::max(best, u.dot(e.b));
      if (e.is_arc()) {
        // the circle point with outward direction u, when the arc covers it
        const double span = std::abs(e.sweep);
        const double off =
            (e.sweep >= 0.0) ? mod_tau(th - e.ang_a) : mod_tau(e.ang_a - th);
        if (off <= span || off >= kTau - 1e-12)
          best = std::max(best, u.dot(e.c) + e.r);
      }
    }
    sf.values[k] = best;
  }

  // Discrete convexity: rho_k >= -slack, with the slack scaled by the O(h^2)
  // truncation error of the second difference.
  const CurvatureProfile cp = curvature_profile(sf);
  const double h = kTau / n;
  double p_scale = 0.0;
  for (int k = 0; k < n; ++k)
    p_scale = std::max(p_scale, std::abs(cp.rho[k]));
  const double slack = std::max(1e-7, 10.0 * p_scale * h * h);
  for (double rho : cp.rho)
    if (rho < -slack)
      throw std::logic_error("support_function: discrete convexity violated");
  return sf;
}

CurvatureProfile curvature_profile(const SupportFunction& sf) {
  CurvatureProfile cp;
  const int n = sf.n;
  if (n <= 0) return cp;
  const double h = kTau / n;

  // rho = p + p'' is translation invariant, but the discrete second
  // difference of the translation term t.u(theta) only cancels to O(h^2).
  // Recentering on the discrete Steiner point keeps the truncation error
  // proportional to the body size instead of its distance from the origin.
  double sx = 0.0, sy = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = sf.theta(k);
    sx += sf.values[k] * std::cos(th);
    sy += sf.values[k] * std::sin(th);
  }
  sx *= h / kPi;
  sy *= h / kPi;
  std::vector<double> p(n);
  double p_scale = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = sf.theta(k);
    p[k] = sf.values[k] - sx * std::cos(th) - sy * std::sin(th);
    p_scale = std::max(p_scale, std::abs(p[k]));
  }
  const double flat_cutoff = std::max(1e-7, 10.0 * p_scale * h * h);

  cp.rho.resize(n);
  double max_kappa = 0.0;
  bool unbounded = false;
  for (int k = 0; k < n; ++k) {
    const double pm = p[(k + n - 1) % n];
    const double pp = p[(k + 1) % n];
    const double rho = p[k] + (pp - 2.0 * p[k] + pm) / (h * h);
    cp.rho[k] = rho;
    if (rho <= flat_cutoff)
      unbounded = true;
    else
      max_kappa = std::max(max_kappa, 1.0 / rho);
  }
  cp.kappa_bar = unbounded ? std::numeric_limits<double>::infinity() : max_kappa;
  return cp;
}

bool giusti_criterion(const Domain& d, const Tolerance& tol) {
  if (!is_convex(d, tol))
    throw std::invalid_argument("giusti_criterion: requires a convex domain");
  const SupportFunction sf = support_function(d, tol.n_samples);
  const CurvatureProfile cp = curvature_profile(sf);
  if (!cp.bounded()) return false;
  return cp.kappa_bar <= quotient(d) + tol.eps_root;
}

std::vector<Vec2> support_boundary_points(const SupportFunction& sf) {
  std::vector<Vec2> pts;
  const int n = sf.n;
  if (n <= 0) return pts;
  const double h = kTau / n;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double th = sf.theta(k);
    const double p = sf.values[k];
    const double dp =
        (sf.values[(k + 1) % n] - sf.values[(k + n - 1) % n]) / (2.0 * h);
    const double c = std::cos(th), s = std::sin(th);
    pts.emplace_back(p * c - dp * s, p * s + dp * c);
  }
  return pts;
}

}  // namespace capgeo

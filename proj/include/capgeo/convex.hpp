#pragma once

#include "capgeo/geometry.hpp"

#include <limits>

namespace capgeo {

/// Periodic sample table of the support function p(theta_k), theta_k = 2*pi*k/n.
struct SupportFunction {
  int n = 0;
  std::vector<double> values;

  double theta(int k) const { return kTau * k / n; }
};

/// Curvature radius samples rho = p + p'' and the curvature supremum.
/// kappa_bar is +infinity when rho touches zero anywhere (corners).
struct CurvatureProfile {
  std::vector<double> rho;
  double kappa_bar = std::numeric_limits<double>::infinity();

  bool bounded() const { return std::isfinite(kappa_bar); }
};

/// True iff every junction turns left (ccw) and every arc bulges outward.
bool is_convex(const Domain& d, const Tolerance& tol);

/// Exact per-segment maximization of x cos(theta) + y sin(theta).
/// Throws on non-convex input. n must be even and at least 64.
SupportFunction support_function(const Domain& d, int n);

/// rho by periodic central second differences; the infinity cutoff scales
/// with the sampling step so flat stretches of p (polygon vertices) register
/// as unbounded curvature at any resolution.
CurvatureProfile curvature_profile(const SupportFunction& sf);

/// kappa_bar <= P(Omega)/|Omega| decides existence (both ways) for convex
/// cross-sections with a vertical contact angle.
bool giusti_criterion(const Domain& d, const Tolerance& tol);

/// Boundary reconstruction from the support samples:
/// (p cos - p' sin, p sin + p' cos). Used by consistency tests.
std::vector<Vec2> support_boundary_points(const SupportFunction& sf);

}  // namespace capgeo

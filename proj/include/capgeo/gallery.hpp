#pragma once

#include "capgeo/geometry.hpp"

namespace capgeo {

Domain make_disk(double R);
Domain make_square(double a);  // [0,a]^2

/// Straight section of length L (centered on the x-axis) capped by two
/// half-disks of radius R. Area 2RL + pi R^2, perimeter 2L + 2 pi R.
Domain make_stadium(double R, double L);

/// Closed polyline with n vertices at uniform parameter; n >= 64.
Domain make_ellipse(double a, double b, int n);

/// Two disks of radius R at center distance `dist`, joined by a corridor of
/// half-width w. Test-corpus shape with a neck of radius w.
Domain make_dumbbell(double R, double dist, double w);

/// Union of two overlapping disks with the reentrant junctions replaced by
/// concave fillet arcs tangent to both circles.
struct TwoBallParams {
  double R = 1.0;      // large radius
  double r = 0.5;      // small radius
  double d = 1.4;      // center distance
  double fillet = 0.0; // 0 picks the default 0.05 * r
};
Domain two_balls(const TwoBallParams& p);

/// Center distance that realizes a prescribed junction half-angle at the
/// large circle (smaller angle = smaller overlap).
double two_ball_distance_for_angle(double R, double r, double theta_R);

/// Unit disk with a tube of half-width sin(theta) grown along the x-axis to
/// length T, capped by a half-disk; T = 0 is the plain two-disk union.
struct PinocchioParams {
  double theta = 0.531;
  double T = 0.0;
};
Domain pinocchio(const PinocchioParams& p);

/// The self-balanced tube angle: sin(theta) = |Omega_theta| / P(Omega_theta)
/// for the T = 0 set, i.e. the root of
///   2 pi s - 2 theta s + (pi/2) s^2 - pi + theta - s c = 0,  s = sin, c = cos,
/// bisected on (0.1, 1.0).
double solve_pinocchio_angle(const Tolerance& tol);

}  // namespace capgeo

#pragma once

#include "capgeo/geometry.hpp"

namespace capgeo {

/// Finite disjoint union of domains: erosions, openings, Cheeger sets.
struct Region {
  std::vector<Domain> components;
  bool empty() const { return components.empty(); }
};

double area(const Region& reg);
double perimeter(const Region& reg);

/// Inner parallel set at distance r, split into connected components.
/// r = 0 returns {d}; components with area below eps_area are discarded.
Region erode(const Domain& d, double r, const Tolerance& tol);

/// Minkowski sum of every component with the closed disk of radius r;
/// overlapping results merge. Regions cannot carry holes, so a dilation that
/// encloses a cavity (possible for horseshoe-shaped inputs, never for the
/// erosions of a simple domain) reports the filled outer boundary.
Region dilate(const Region& reg, double r, const Tolerance& tol);

/// dilate(erode(d, r), r); always a subset of d up to eps_area. Degenerate
/// erosion slivers are kept internally so the dilation restores everything a
/// radius-r disk can reach.
Region opening(const Domain& d, double r, const Tolerance& tol);

/// True iff the inner parallel set at distance r has at most one component
/// (empty erosion counts vacuously).
bool has_no_neck(const Domain& d, double r, const Tolerance& tol);

/// Radius of the largest inscribed disk, by bisection on erosion emptiness.
double inradius(const Domain& d, const Tolerance& tol);

namespace detail {

/// Erosion that keeps every stitched loop with nonnegative signed area, no
/// matter how small; openings and Cheeger-set dilations need the degenerate
/// whiskers that the public erode() drops.
std::vector<std::vector<Edge>> erode_loops_keep_degenerate(const Domain& d, double r,
                                                           const Tolerance& tol);

Region dilate_loops(const std::vector<std::vector<Edge>>& loops, double r,
                    const Tolerance& tol);

}  // namespace detail

}  // namespace capgeo

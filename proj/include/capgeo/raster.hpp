#pragma once

#include "capgeo/geometry.hpp"

#include <cstdint>
#include <vector>

namespace capgeo::raster {

/// Pixel grid over a boundary curve: inside mask from scanline parity plus an
/// exact Euclidean distance transform (distance to the complement). Kept
/// deliberately independent of the vector offset/trim machinery so it can act
/// as ground truth for it.
struct Grid {
  int nx = 0, ny = 0;
  double x0 = 0.0, y0 = 0.0;  // lower-left corner of pixel (0,0)
  double px = 0.0;            // pixel size
  std::vector<std::uint8_t> inside;
  std::vector<double> dist;  // Euclidean distance to nearest outside pixel

  double pixel_area() const { return px * px; }
  Vec2 center(int i, int j) const {
    return Vec2(x0 + (i + 0.5) * px, y0 + (j + 0.5) * px);
  }
};

/// Rasterize one or several disjoint loops at `n` pixels across the longest
/// bounding-box side. Parallelism is capped by the CAPGEO_THREADS variable.
Grid rasterize(const std::vector<Domain>& components, int n);
Grid rasterize(const Domain& d, int n);

double area(const Grid& g);
double eroded_area(const Grid& g, double r);
int eroded_components(const Grid& g, double r);  // 8-connectivity
double max_inner_distance(const Grid& g);

/// Count of inside pixels adjacent to an outside pixel (tolerance bookkeeping
/// for area comparisons).
long boundary_pixels(const Grid& g);

int thread_budget();

}  // namespace capgeo::raster

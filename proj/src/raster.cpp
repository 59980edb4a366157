#include "capgeo/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

namespace capgeo::raster {

int thread_budget() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int budget = std::min(hw, 4);
  if (const char* env = std::getenv("CAPGEO_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) budget = std::min(budget, cap);
  }
  return budget;
}

// Horizontal crossings of one loop with the scan row y, for the parity fill.
// Returns false when the row grazes a vertex or a tangency.
static bool row_crossings(const std::vector<Edge>& edges, double y, double delta,
                          std::vector<double>& xs) {
  for (const Edge& e : edges) {
    if (e.kind == Segment::Kind::Line) {
      const double y1 = e.a.y(), y2 = e.b.y();
      if (std::abs(y1 - y) < delta || std::abs(y2 - y) < delta) return false;
      if ((y1 < y) == (y2 < y)) continue;
      const double t = (y - y1) / (y2 - y1);
      xs.push_back(e.a.x() + t * (e.b.x() - e.a.x()));
    } else {
      const double dy = y - e.c.y();
      if (std::abs(std::abs(dy) - e.r) < delta) return false;
      if (std::abs(dy) > e.r) continue;
      const double h = std::sqrt(e.r * e.r - dy * dy);
      for (const double sx : {-h, h}) {
        const Vec2 p(e.c.x() + sx, y);
        if ((p - e.a).norm() < delta || (p - e.b).norm() < delta) return false;
        const double phi = std::atan2(p.y() - e.c.y(), p.x() - e.c.x());
        const double span = std::abs(e.sweep);
        const double off =
            (e.sweep >= 0.0) ? mod_tau(phi - e.ang_a) : mod_tau(e.ang_a - phi);
        if (off <= span || off >= kTau - 1e-12) xs.push_back(p.x());
      }
    }
  }
  return true;
}

// Exact 1D squared distance transform (lower envelope of parabolas).
static void edt_pass(const double* f, double* d, int n, std::vector<int>& v,
                     std::vector<double>& z) {
  v.assign(n, 0);
  z.assign(n + 1, 0.0);
  int k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  for (int q = 1; q < n; ++q) {
    if (f[q] == std::numeric_limits<double>::infinity() &&
        f[v[k]] == std::numeric_limits<double>::infinity())
      continue;
    double s;
    while (true) {
      const int p = v[k];
      s = ((f[q] + q * q) - (f[p] + p * p)) / (2.0 * q - 2.0 * p);
      if (s <= z[k]) {
        --k;
        continue;
      }
      break;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

Grid rasterize(const std::vector<Domain>& components, int n) {
  Grid g;
  if (components.empty() || n < 8) return g;

  Box box = bounding_box(components.front());
  for (const Domain& d : components) box.grow(bounding_box(d));
  const Vec2 sz = box.size();
  const double longest = std::max(sz.x(), sz.y());
  if (longest <= 0.0) return g;
  g.px = longest / n;
  const double margin = 2.0 * g.px;
  g.x0 = box.lo.x() - margin;
  g.y0 = box.lo.y() - margin;
  g.nx = static_cast<int>(std::ceil((sz.x() + 2.0 * margin) / g.px));
  g.ny = static_cast<int>(std::ceil((sz.y() + 2.0 * margin) / g.px));
  g.inside.assign(static_cast<size_t>(g.nx) * g.ny, 0);

  std::vector<std::vector<Edge>> loops;
  loops.reserve(components.size());
  for (const Domain& d : components) loops.push_back(edges_of(d));

  const double delta = 1e-11 * std::max(1.0, longest);
  auto fill_rows = [&](int j_begin, int j_end) {
    std::vector<double> xs;
    for (int j = j_begin; j < j_end; ++j) {
      const double y_base = g.y0 + (j + 0.5) * g.px;
      for (const auto& loop : loops) {
        for (int attempt = 0; attempt < 16; ++attempt) {
          xs.clear();
          const double y =
              y_base + (attempt == 0
                            ? 0.0
                            : (attempt % 2 ? 1.0 : -1.0) * double((attempt + 1) / 2) *
                                  1e-6 * g.px);
          if (!row_crossings(loop, y, delta, xs)) continue;
          std::sort(xs.begin(), xs.end());
          for (size_t k = 0; k + 1 < xs.size(); k += 2) {
            int i_lo = static_cast<int>(std::ceil((xs[k] - g.x0) / g.px - 0.5));
            int i_hi = static_cast<int>(std::floor((xs[k + 1] - g.x0) / g.px - 0.5));
            i_lo = std::max(i_lo, 0);
            i_hi = std::min(i_hi, g.nx - 1);
            for (int i = i_lo; i <= i_hi; ++i)
              g.inside[static_cast<size_t>(j) * g.nx + i] ^= 1;
          }
          break;
        }
      }
    }
  };

  const int threads = thread_budget();
  if (threads <= 1 || g.ny < 64) {
    fill_rows(0, g.ny);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (g.ny + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int lo = t * chunk, hi = std::min(g.ny, lo + chunk);
      if (lo < hi) pool.emplace_back(fill_rows, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  // Distance to outside: two 1D passes over squared distances.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> f(std::max(g.nx, g.ny)), dcol(std::max(g.nx, g.ny));
  std::vector<double> tmp(static_cast<size_t>(g.nx) * g.ny);
  std::vector<int> v;
  std::vector<double> z;
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j)
      f[j] = g.inside[static_cast<size_t>(j) * g.nx + i] ? inf : 0.0;
    edt_pass(f.data(), dcol.data(), g.ny, v, z);
    for (int j = 0; j < g.ny; ++j) tmp[static_cast<size_t>(j) * g.nx + i] = dcol[j];
  }
  g.dist.assign(tmp.size(), 0.0);
  std::vector<double> drow(g.nx);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) f[i] = tmp[static_cast<size_t>(j) * g.nx + i];
    edt_pass(f.data(), drow.data(), g.nx, v, z);
    for (int i = 0; i < g.nx; ++i)
      g.dist[static_cast<size_t>(j) * g.nx + i] = g.px * std::sqrt(drow[i]);
  }
  return g;
}

Grid rasterize(const Domain& d, int n) {
  return rasterize(std::vector<Domain>{d}, n);
}

double area(const Grid& g) { return eroded_area(g, 0.0); }

double eroded_area(const Grid& g, double r) {
  long count = 0;
  for (size_t k = 0; k < g.inside.size(); ++k)
    if (g.inside[k] && g.dist[k] >= r) ++count;
  return count * g.pixel_area();
}

int eroded_components(const Grid& g, double r) {
  const size_t n = g.inside.size();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<size_t> stack;
  int comps = 0;
  auto keep = [&](size_t k) { return g.inside[k] && g.dist[k] >= r; };
  for (size_t s = 0; s < n; ++s) {
    if (seen[s] || !keep(s)) continue;
    ++comps;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const size_t k = stack.back();
      stack.pop_back();
      const int i = static_cast<int>(k % g.nx);
      const int j = static_cast<int>(k / g.nx);
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= g.nx || jj >= g.ny) continue;
          const size_t kk = static_cast<size_t>(jj) * g.nx + ii;
          if (!seen[kk] && keep(kk)) {
            seen[kk] = 1;
            stack.push_back(kk);
          }
        }
      }
    }
  }
  return comps;
}

double max_inner_distance(const Grid& g) {
  double best = 0.0;
  for (size_t k = 0; k < g.inside.size(); ++k)
    if (g.inside[k]) best = std::max(best, g.dist[k]);
  return best;
}

long boundary_pixels(const Grid& g) {
  long count = 0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const size_t k = static_cast<size_t>(j) * g.nx + i;
      if (!g.inside[k]) continue;
      bool edge = i == 0 || j == 0 || i == g.nx - 1 || j == g.ny - 1;
      if (!edge) {
        edge = !g.inside[k - 1] || !g.inside[k + 1] || !g.inside[k - g.nx] ||
               !g.inside[k + g.nx];
      }
      if (edge) ++count;
    }
  }
  return count;
}

}  // namespace capgeo::raster

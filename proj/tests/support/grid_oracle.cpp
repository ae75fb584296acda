#include "support/grid_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace lpz::testkit {

Raster rasterize(const std::vector<Contour>& contours, Point2 origin, double size, int n) {
  Raster r;
  r.n = n;
  r.origin = origin;
  r.cell = size / n;
  r.inside.assign(static_cast<std::size_t>(n) * n, 0);
  r.band.assign(static_cast<std::size_t>(n) * n, 0);

  std::vector<std::pair<Point2, Point2>> edges;
  for (const auto& c : contours) {
    const auto pts = c.flatten(720);
    for (std::size_t i = 0; i < pts.size(); ++i) edges.emplace_back(pts[i], pts[(i + 1) % pts.size()]);
  }

  auto mark = [&](Point2 p) {
    const int ci = static_cast<int>(std::floor((p.x - origin.x) / r.cell));
    const int cj = static_cast<int>(std::floor((p.y - origin.y) / r.cell));
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        const int i = ci + di, j = cj + dj;
        if (i >= 0 && j >= 0 && i < n && j < n) r.band[static_cast<std::size_t>(j) * n + i] = 1;
      }
    }
  };
  for (const auto& [a, b] : edges) {
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    const int steps = std::max(1, static_cast<int>(std::ceil(len / (r.cell / 4))));
    for (int k = 0; k <= steps; ++k) {
      const double t = static_cast<double>(k) / steps;
      mark({a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
    }
  }

  // Scanline fill with signed crossings.
  for (int j = 0; j < n; ++j) {
    const double y = origin.y + (j + 0.5) * r.cell;
    std::vector<std::pair<double, int>> xs;
    for (const auto& [a, b] : edges) {
      if ((a.y <= y) == (b.y <= y)) continue;
      const double x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
      xs.emplace_back(x, b.y > a.y ? 1 : -1);
    }
    std::sort(xs.begin(), xs.end());
    int winding = 0;
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
      const double x = origin.x + (i + 0.5) * r.cell;
      while (k < xs.size() && xs[k].first < x) winding += xs[k++].second;
      r.inside[static_cast<std::size_t>(j) * n + i] = winding != 0;
    }
  }
  return r;
}

}  // namespace lpz::testkit

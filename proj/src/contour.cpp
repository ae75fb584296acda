#include "lpz/contour.hpp"

#include <cmath>
#include <numbers>

namespace lpz {

Point2 ArcSeg::point_at(double angle) const {
  return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
}

std::vector<Point2> Contour::flatten(int segments_per_turn) const {
  std::vector<Point2> out;
  const double step = 2 * std::numbers::pi / segments_per_turn;
  for (const auto& s : segments) {
    if (const auto* l = std::get_if<LineSeg>(&s)) {
      out.push_back(l->a);
    } else {
      const auto& a = std::get<ArcSeg>(s);
      const int n = std::max(1, static_cast<int>(std::ceil(std::abs(a.sweep) / step - 1e-9)));
      for (int i = 0; i < n; ++i) out.push_back(a.point_at(a.start + a.sweep * i / n));
    }
  }
  return out;
}

double Contour::signed_area() const {
  // Polygon part over segment endpoints plus the circular-segment area of
  // every arc.
  double twice = 0;
  double arcs = 0;
  for (const auto& s : segments) {
    Point2 a, b;
    if (const auto* l = std::get_if<LineSeg>(&s)) {
      a = l->a;
      b = l->b;
    } else {
      const auto& arc = std::get<ArcSeg>(s);
      a = arc.start_point();
      b = arc.end_point();
      arcs += 0.5 * arc.radius * arc.radius * (arc.sweep - std::sin(arc.sweep));
    }
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2 + arcs;
}

Contour circle_contour(Point2 center, double radius) {
  Contour c;
  c.segments.push_back(ArcSeg{center, radius, 0.0, std::numbers::pi});
  c.segments.push_back(ArcSeg{center, radius, std::numbers::pi, std::numbers::pi});
  return c;
}

Contour polygon_contour(const std::vector<Point2>& pts) {
  Contour c;
  for (std::size_t i = 0; i < pts.size(); ++i) c.segments.push_back(LineSeg{pts[i], pts[(i + 1) % pts.size()]});
  return c;
}

int winding_number(const std::vector<Point2>& poly, Point2 p) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % n];
    const double side = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0) ++wn;
    } else if (b.y <= p.y && side < 0) {
      --wn;
    }
  }
  return wn;
}

bool region_contains(const std::vector<Contour>& contours, Point2 p) {
  int wn = 0;
  for (const auto& c : contours) wn += winding_number(c.flatten(), p);
  return wn != 0;
}

}  // namespace lpz

#pragma once

#include <variant>
#include <vector>

#include "lpz/model.hpp"

namespace lpz {

struct LineSeg {
  Point2 a;
  Point2 b;
  bool operator==(const LineSeg&) const = default;
};

/// Circular arc from `start` (radians, CCW from +X) sweeping `sweep` radians;
/// positive sweep runs counter-clockwise.
struct ArcSeg {
  Point2 center;
  double radius = 0;
  double start = 0;
  double sweep = 0;

  Point2 point_at(double angle) const;
  Point2 start_point() const { return point_at(start); }
  Point2 end_point() const { return point_at(start + sweep); }
  bool operator==(const ArcSeg&) const = default;
};

using ContourSegment = std::variant<LineSeg, ArcSeg>;

/// Closed planar curve made of lines and arcs, end of each segment meeting
/// the start of the next. Outer boundaries run CCW, holes CW.
struct Contour {
  std::vector<ContourSegment> segments;

  /// Vertices of a polygonal approximation (arcs split into chords of at
  /// most 2*pi/segments_per_turn); the closing vertex is not repeated.
  std::vector<Point2> flatten(int segments_per_turn = 720) const;
  double signed_area() const;
  bool operator==(const Contour&) const = default;
};

Contour circle_contour(Point2 center, double radius);
Contour polygon_contour(const std::vector<Point2>& pts);

/// Nonzero-winding membership over a set of contours (holes subtract).
bool region_contains(const std::vector<Contour>& contours, Point2 p);

/// Winding number of a closed polygon around p.
int winding_number(const std::vector<Point2>& poly, Point2 p);

}  // namespace lpz

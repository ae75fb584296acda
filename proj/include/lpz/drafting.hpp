#pragma once

// Plan and section drawings of a project as display lists.

#include <string>

#include "lpz/display.hpp"
#include "lpz/model.hpp"

namespace lpz {

/// Nature -> Paper mapping of one view. For sections the abscissa is the
/// signed distance along the cut line in the viewing sense, so the base point
/// projects onto `origin` in both kinds of view.
struct ViewTransform {
  Id view = kPlan;
  double scale = 0.005;
  Point2 origin;
  Point2 cut_a, cut_b;
  int sense = 1;

  /// Nature abscissa of a plan point in a section view.
  double along(Point2 xy) const;
};

ViewTransform plan_transform(const Project& p);
ViewTransform section_transform(const DrawingSection& s);

/// +1 when the viewer looks toward the left of cut_a -> cut_b.
int view_sense(const DrawingSection& s);

Point2 to_paper(const ViewTransform& t, Point3 p);

/// Plan contour (z = 0) in paper coordinates.
Contour contour_to_paper(const Contour& c, const ViewTransform& vt);

/// "Rx1 = 17.00": value converted from mm to m at the given precision.
std::string dimension_text(const std::string& param, double value_mm, int precision);

/// "М 1: 100".
std::string scale_text(double scale);

/// Throws RenderError when the project does not validate.
DisplayList render_plan(const Project& p);

/// Throws NotFound for an unknown section and RenderError when the project
/// does not validate.
DisplayList render_section(const Project& p, Id section_id);

}  // namespace lpz

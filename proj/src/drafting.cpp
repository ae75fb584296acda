#include "lpz/drafting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lpz/numfmt.hpp"
#include "lpz/tablegen.hpp"
#include "lpz/zonecalc.hpp"

namespace lpz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDefaultLeaderLen = 10.0;

Point2 sub(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
Point2 add(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
Point2 add(Point2 a, PaperVec v) { return {a.x + v.dx, a.y + v.dy}; }
Point2 mul(Point2 a, double k) { return {a.x * k, a.y * k}; }
double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double norm(Point2 a) { return std::hypot(a.x, a.y); }
Point2 unit(Point2 a) {
  const double n = norm(a);
  return n > 0 ? mul(a, 1.0 / n) : Point2{1, 0};
}
Point2 left_normal(Point2 d) { return {-d.y, d.x}; }
Point2 rotate(Point2 v, double ang) {
  return {v.x * std::cos(ang) - v.y * std::sin(ang), v.x * std::sin(ang) + v.y * std::cos(ang)};
}

/// Angle of a text laid along direction d, turned so it never reads upside
/// down.
double readable_angle(Point2 d) {
  double a = std::atan2(d.y, d.x);
  if (a > kPi / 2 + 1e-12) a -= kPi;
  if (a <= -kPi / 2 + 1e-12) a += kPi;
  return a;
}

Point2 anchor_point(const AirTerminal& t) {
  const auto pts = terminal_points(t);
  return pts.front().xy();
}

// -------------------------------------------------------------------------
// Shared drawing helpers

struct Painter {
  DisplayList& dl;

  void line(Point2 a, Point2 b, Style st, Id src) { dl.add(LinePrim{a, b}, st, src); }

  void text(Point2 pos, std::string s, const FontSettings& f, Style st, Id src, double angle = 0,
            TextAnchor anchor = TextAnchor::Start) {
    dl.add(TextPrim{pos, std::move(s), f, angle, anchor}, st, src);
  }

  void arrowhead(Point2 tip, Point2 dir, double len, Style st, Id src) {
    const Point2 back = sub(tip, mul(dir, len));
    const Point2 n = mul(left_normal(dir), len / 6);
    dl.add(PolylinePrim{{tip, add(back, n), sub(back, n)}, true, true}, st, src);
  }

  /// Terminator at `end` of a dimension line running along `dir` (pointing
  /// from the line's interior toward `end`).
  void terminator(Point2 end, Point2 dir, TickStyle style, double size, Style st, Id src) {
    switch (style) {
      case TickStyle::ArrowIn: arrowhead(end, dir, size, st, src); break;
      case TickStyle::ArrowOut:
        arrowhead(end, mul(dir, -1), size, st, src);
        line(end, add(end, mul(dir, size)), st, src);
        break;
      case TickStyle::Tick: {
        const Point2 w = rotate(dir, kPi / 4);
        line(sub(end, mul(w, size / 2)), add(end, mul(w, size / 2)), st, src);
        break;
      }
    }
  }

  /// Text on a shelf; returns the shelf ends.
  std::pair<Point2, Point2> shelf_text(Point2 start, const std::string& s, const FontSettings& f, Style st,
                                       Id src) {
    const double w = measure_text(s, f).width;
    const double y = start.y - f.size * 0.25;
    text(start, s, f, st, src);
    const Point2 a{start.x, y}, b{start.x + w, y};
    line(a, b, st, src);
    return {a, b};
  }

  /// Text laid along a dimension line a-b, offset to its readable upper side.
  void dim_text(Point2 a, Point2 b, const std::string& s, double offset, const FontSettings& f, Style st, Id src) {
    const Point2 d = unit(sub(b, a));
    const double ang = readable_angle(d);
    const Point2 up{-std::sin(ang), std::cos(ang)};
    const Point2 mid = mul(add(a, b), 0.5);
    text(add(mid, mul(up, offset)), s, f, st, src, ang, TextAnchor::Middle);
  }

  void hatch(const std::vector<Point2>& ring, double spacing, Style st, Id src);
};

/// Hatch lines at +45 and -45 degrees clipped to the ring (even-odd).
void Painter::hatch(const std::vector<Point2>& ring, double spacing, Style st, Id src) {
  HatchPrim h;
  h.boundary = ring;
  for (double ang : {kPi / 4, -kPi / 4}) {
    std::vector<Point2> rot;
    for (const auto& p : ring) rot.push_back(rotate(p, -ang));
    double y0 = rot.front().y, y1 = y0;
    for (const auto& p : rot) {
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    for (double k = std::ceil(y0 / spacing); k * spacing <= y1; k += 1) {
      const double y = k * spacing;
      std::vector<double> xs;
      for (std::size_t i = 0; i < rot.size(); ++i) {
        const Point2 a = rot[i], b = rot[(i + 1) % rot.size()];
        if ((a.y <= y) == (b.y <= y)) continue;
        xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
      }
      std::sort(xs.begin(), xs.end());
      for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
        h.lines.emplace_back(rotate({xs[i], y}, ang), rotate({xs[i + 1], y}, ang));
      }
    }
  }
  dl.add(std::move(h), st, src);
}

}  // namespace

Contour contour_to_paper(const Contour& c, const ViewTransform& vt) {
  Contour out;
  for (const auto& s : c.segments) {
    if (const auto* l = std::get_if<LineSeg>(&s)) {
      out.segments.push_back(LineSeg{to_paper(vt, {l->a.x, l->a.y, 0}), to_paper(vt, {l->b.x, l->b.y, 0})});
    } else {
      const auto& a = std::get<ArcSeg>(s);
      out.segments.push_back(ArcSeg{to_paper(vt, {a.center.x, a.center.y, 0}), a.radius * vt.scale, a.start, a.sweep});
    }
  }
  return out;
}

namespace {

/// Distance along a ray to the first crossing with any contour, if any.
std::optional<double> ray_hit(Point2 o, Point2 d, const std::vector<Contour>& contours) {
  std::optional<double> best;
  for (const auto& c : contours) {
    const auto pts = c.flatten(720);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point2 a = pts[i], b = pts[(i + 1) % pts.size()];
      const Point2 e = sub(b, a);
      const double den = d.x * e.y - d.y * e.x;
      if (den == 0) continue;
      const Point2 ao = sub(a, o);
      const double t = (ao.x * e.y - ao.y * e.x) / den;
      const double u = (ao.x * d.y - ao.y * d.x) / den;
      if (t > 1e-9 && u >= 0 && u <= 1 && (!best || t < *best)) best = t;
    }
  }
  return best;
}

// -------------------------------------------------------------------------

struct PairGeometry {
  Point2 mid;        // Nature
  Point2 direction;  // unit, Nature
  double rcx = 0;
};

PairGeometry min_width_geometry(const Project& p, const MinWidthDim& d, double hx) {
  const auto zone = p.general.zone_type;
  const AirTerminal& a = *p.find_terminal(d.terminal_a);
  PairGeometry g;
  PairParams pp;
  if (const auto* dw = std::get_if<DoubleWire>(&a.construction)) {
    const auto [s1b, s2b] = second_wire(*dw);
    const double span = std::hypot(dw->support2.x - dw->support1.x, dw->support2.y - dw->support1.y);
    const double h1 = effective_wire_height(dw->support1.z, span);
    const double h2 = effective_wire_height(dw->height2, span);
    if (std::abs(h1 - h2) <= 1e-6) pp = pair_params(h1, std::abs(dw->offset2), zone, TerminalKind::Wire);
    g.mid = mul(add(dw->support1.xy(), s1b.xy()), 0.5);
    g.direction = unit(sub(dw->support1.xy(), dw->support2.xy()));
  } else {
    const AirTerminal& b = *p.find_terminal(d.terminal_b);
    const Point2 pa = anchor_point(a), pb = anchor_point(b);
    const double L = norm(sub(pb, pa));
    const double h = zone_height(a);
    if (L > 0 && std::abs(h - zone_height(b)) <= 1e-6) pp = pair_params(h, L, zone, TerminalKind::Rod);
    g.mid = mul(add(pa, pb), 0.5);
    g.direction = left_normal(unit(sub(pb, pa)));
  }
  g.rcx = min_width_at(pp, hx);
  return g;
}

/// Dimension text placement shared by plan radius and min-width dims.
struct TextPlacement {
  bool auto_pos;
  double text_offset;
  PaperVec manual_pos;
  LeaderMode leader;
  bool leader_to_shelf_end;
};

void place_dim_text(Painter& pt, const Project& p, Point2 a, Point2 b, const std::string& s, const TextPlacement& tp,
                    const FontSettings& f, Style st, Id src) {
  if (tp.auto_pos) {
    pt.dim_text(a, b, s, tp.text_offset, f, st, src);
    return;
  }
  const Point2 start = add(p.general.base_point_paper, tp.manual_pos);
  const auto [s0, s1] = pt.shelf_text(start, s, f, st, src);
  if (tp.leader == LeaderMode::None) return;
  const Point2 from = tp.leader == LeaderMode::Start ? a : tp.leader == LeaderMode::End ? b : mul(add(a, b), 0.5);
  pt.line(from, tp.leader_to_shelf_end ? s1 : s0, st, src);
}

void draw_label_block(Painter& pt, Point2 shelf_mid, const std::string& title, const std::string& scale,
                      ScalePlacement placement, double above_gap, double below_gap, const FontSettings& f, Style st,
                      Id src) {
  const std::string first = placement == ScalePlacement::Inline ? title + " " + scale : title;
  double w = measure_text(first, f).width;
  if (placement == ScalePlacement::OwnLine) w = std::max(w, measure_text(scale, f).width);
  pt.text({shelf_mid.x, shelf_mid.y + above_gap}, first, f, st, src, 0, TextAnchor::Middle);
  if (placement == ScalePlacement::OwnLine) {
    pt.text({shelf_mid.x, shelf_mid.y - below_gap - f.size}, scale, f, st, src, 0, TextAnchor::Middle);
  }
  pt.line({shelf_mid.x - w / 2, shelf_mid.y}, {shelf_mid.x + w / 2, shelf_mid.y}, st, src);
}

Style dim_style(const DimKindStyle& k) { return {k.color, Linetype::Solid}; }

void require_valid(const Project& p) {
  if (auto v = validate(p); !v.empty()) throw RenderError(std::move(v));
}

}  // namespace

// ---------------------------------------------------------------------------

double ViewTransform::along(Point2 xy) const {
  const Point2 d = unit(sub(cut_b, cut_a));
  return sense * dot(xy, d);
}

ViewTransform plan_transform(const Project& p) {
  ViewTransform t;
  t.view = kPlan;
  t.scale = p.general.plan_view.scale;
  t.origin = p.general.base_point_paper;
  return t;
}

int view_sense(const DrawingSection& s) { return s.label_side == Side::Left ? 1 : -1; }

ViewTransform section_transform(const DrawingSection& s) {
  ViewTransform t;
  t.view = s.id;
  t.scale = s.scale;
  t.origin = s.base_projection;
  t.cut_a = s.cut_a;
  t.cut_b = s.cut_b;
  t.sense = view_sense(s);
  return t;
}

Point2 to_paper(const ViewTransform& t, Point3 p) {
  if (t.view == kPlan) return {t.origin.x + p.x * t.scale, t.origin.y + p.y * t.scale};
  return {t.origin.x + t.along(p.xy()) * t.scale, t.origin.y + p.z * t.scale};
}

std::string dimension_text(const std::string& param, double value_mm, int precision) {
  return param + " = " + format_fixed(value_mm / 1000, precision);
}

std::string scale_text(double scale) {
  return "М 1: " + format_fixed(1 / scale, 0);
}

DisplayList render_plan(const Project& p) {
  require_valid(p);
  const auto& g = p.general;
  const ViewTransform vt = plan_transform(p);
  auto P = [&](Point3 q) { return to_paper(vt, q); };
  auto P2 = [&](Point2 q) { return to_paper(vt, {q.x, q.y, 0}); };
  DisplayList dl;
  Painter pt{dl};

  // Zone contours of plan zone sections.
  std::map<Id, std::vector<Contour>> plan_contours;
  for (const auto& zs : p.zone_sections) {
    if (zs.section_ref != kPlan) continue;
    const auto ts = section_terminals(p, zs);
    if (ts.empty()) continue;
    const ZoneField field(ts, g.zone_type);
    auto& out = plan_contours[zs.id];
    for (const auto& c : field.horizontal_section(zs.cut_height.value_or(0))) {
      out.push_back(contour_to_paper(c, vt));
      dl.add(PathPrim{out.back()}, {zs.color, zs.linetype}, zs.id);
    }
  }

  // Mesh hatching.
  for (const auto& t : p.terminals) {
    if (const auto* m = std::get_if<Mesh>(&t.construction)) {
      std::vector<Point2> ring;
      for (const auto& v : m->ring) ring.push_back(P(v));
      pt.hatch(ring, g.mesh_hatch.spacing, {g.mesh_hatch.color, Linetype::Solid}, t.id);
    }
  }

  // Terminal symbols.
  const auto& sym = g.terminal_symbols;
  for (const auto& t : p.terminals) {
    const Style st{t.color, t.linetype};
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Rod>) {
            const Point2 o = P(c.apex);
            if (c.freestanding) {
              const double h = sym.square_side / 2;
              const Point2 q0{o.x - h, o.y - h}, q1{o.x + h, o.y - h}, q2{o.x + h, o.y + h}, q3{o.x - h, o.y + h};
              dl.add(PolylinePrim{{q0, q1, q2, q3}, true}, st, t.id);
              pt.line(q0, q2, st, t.id);
              pt.line(q1, q3, st, t.id);
            } else {
              dl.add(DotPrim{o, sym.dot_diameter_plan}, st, t.id);
            }
          } else if constexpr (std::is_same_v<T, Mesh>) {
            std::vector<Point2> ring;
            for (const auto& v : c.ring) ring.push_back(P(v));
            dl.add(PolylinePrim{ring, true}, st, t.id);
          } else {
            pt.line(P(c.support1), P(c.support2), st, t.id);
            if constexpr (std::is_same_v<T, DoubleWire>) {
              const auto [a2, b2] = second_wire(c);
              pt.line(P(a2), P(b2), st, t.id);
            }
          }
        },
        t.construction);
  }

  // Grounding electrodes.
  for (const auto& ge : p.grounding) {
    const Style st{g.grounding_color, ge.linetype};
    const Point2 u{std::cos(ge.angle), std::sin(ge.angle)};
    const double r = std::max(ge.rod_diameter * vt.scale, sym.dot_diameter_plan) / 2;
    std::vector<Point2> centers;
    for (int i = 0; i < ge.rod_count; ++i) {
      const double k = (i - (ge.rod_count - 1) / 2.0) * ge.rod_spacing;
      centers.push_back(P2(add(ge.center_offset, mul(u, k))));
    }
    for (const auto& c : centers) dl.add(CirclePrim{c, r}, st, ge.id);
    for (std::size_t i = 0; i + 1 < centers.size(); ++i) {
      const Point2 d = unit(sub(centers[i + 1], centers[i]));
      pt.line(add(centers[i], mul(d, r)), sub(centers[i + 1], mul(d, r)), st, ge.id);
    }
  }

  // Section marks.
  const auto& sm = g.section_marks;
  for (const auto& s : p.drawing_sections) {
    const Style thick{sm.plan_color, Linetype::ThickSolid};
    const Style thin{sm.plan_color, Linetype::Solid};
    const Point2 a = P2(s.cut_a), b = P2(s.cut_b);
    const Point2 d = unit(sub(b, a));
    const Point2 view = mul(left_normal(d), view_sense(s));
    const auto& lay = s.plan_label_layout;
    for (int end = 0; end < 2; ++end) {
      const Point2 e = end == 0 ? a : b;
      const Point2 inward = end == 0 ? d : mul(d, -1);
      pt.line(e, add(e, mul(inward, lay.dash_len)), thick, s.id);
      const Point2 q = add(e, mul(inward, lay.arrow_offset));
      const Point2 tip = add(q, mul(view, sm.arrow_tail_len));
      pt.line(q, sub(tip, mul(view, sm.arrow_len)), thin, s.id);
      pt.arrowhead(tip, view, sm.arrow_len, thin, s.id);
      const Point2 c = add(e, mul(view, lay.label_offset));
      pt.text({c.x, c.y - sm.plan_font.size / 2}, s.letter, sm.plan_font, thin, s.id, 0, TextAnchor::Middle);
    }
  }

  // Dimensions.
  const auto& dc = g.dims_common;
  for (const auto& d : p.distance_dims) {
    if (d.section_ref != kPlan) continue;
    const Style st = dim_style(g.per_dim_kind.distance);
    const Point2 na = anchor_point(*p.find_terminal(d.terminal_a));
    const Point2 nb = anchor_point(*p.find_terminal(d.terminal_b));
    const Point2 a = P2(na), b = P2(nb);
    const Point2 off{d.line_offset.dx, d.line_offset.dy};
    const Point2 da = add(a, off), db = add(b, off);
    if (norm(off) > 0) {
      const Point2 over = mul(unit(off), dc.extension_overrun);
      pt.line(a, add(da, over), st, d.id);
      pt.line(b, add(db, over), st, d.id);
    }
    pt.line(da, db, st, d.id);
    const Point2 u = unit(sub(db, da));
    pt.terminator(db, u, d.tick_style, dc.tick_size, st, d.id);
    pt.terminator(da, mul(u, -1), d.tick_style, dc.tick_size, st, d.id);
    pt.dim_text(da, db, format_fixed(norm(sub(nb, na)) / 1000, g.per_dim_kind.distance.precision), d.text_offset,
                dc.font, st, d.id);
  }
  for (const auto& d : p.radius_dims_plan) {
    const Style st = dim_style(g.per_dim_kind.radius_plan);
    const AirTerminal& t = *p.find_terminal(d.terminal_ref);
    const double hx = p.find_zone_section(d.zone_section_ref)->cut_height.value_or(0);
    const double rx = radius_at(zone_height(t), g.zone_type, TerminalKind::Rod, hx);
    const Point2 c = P2(anchor_point(t));
    const Point2 u{std::cos(d.angle), std::sin(d.angle)};
    const Point2 e = add(c, mul(u, rx * vt.scale));
    pt.line(c, e, st, d.id);
    pt.terminator(e, u, d.tick_style, dc.tick_size, st, d.id);
    std::string s = dimension_text(d.param_text, rx, g.per_dim_kind.radius_plan.precision);
    if (d.include_height_in_text) s += ", hx = " + format_fixed(hx / 1000, g.per_dim_kind.radius_plan.precision);
    place_dim_text(pt, p, c, e, s,
                   {d.auto_text_pos, d.text_offset, d.manual_text_pos, d.leader, d.leader_to_shelf_end}, dc.font, st,
                   d.id);
  }
  for (const auto& d : p.min_width_dims) {
    const Style st = dim_style(g.per_dim_kind.min_width);
    const double hx = p.find_zone_section(d.zone_section_ref)->cut_height.value_or(0);
    const auto geo = min_width_geometry(p, d, hx);
    const Point2 a = P2(geo.mid);
    const Point2 b = add(a, mul(geo.direction, geo.rcx * vt.scale));
    pt.line(a, b, st, d.id);
    pt.terminator(b, geo.direction, d.tick_style, dc.tick_size, st, d.id);
    place_dim_text(pt, p, a, b, dimension_text(d.param_text, geo.rcx, g.per_dim_kind.min_width.precision),
                   {d.auto_text_pos, d.text_offset, d.manual_text_pos, d.leader, d.leader_to_shelf_end}, dc.font, st,
                   d.id);
  }

  // Texts.
  const Style term_st{g.terminal_text_style.color, Linetype::Solid};
  for (const auto& tt : p.terminal_texts) {
    if (tt.section_ref != kPlan) continue;
    const AirTerminal& t = *p.find_terminal(tt.terminal_ref);
    const Point2 start = add(g.base_point_paper, tt.start_offset);
    const auto [s0, s1] = pt.shelf_text(start, t.label, g.terminal_text_style.font, term_st, tt.id);
    pt.line(add(P2(anchor_point(t)), tt.leader_point_offset), tt.leader_to_shelf_end ? s1 : s0, term_st, tt.id);
  }
  const auto& zts = g.zone_text_style;
  for (const auto& zt : p.zone_texts) {
    const Style st{zts.color, Linetype::Solid};
    const auto* zs = p.find_zone_section(zt.zone_section_ref);
    const double level = zs->cut_height.value_or(0) / 1000;
    const std::string mark = "на отм. " + std::string(level >= 0 ? "+" : "") + format_fixed(level, zts.precision);
    const Point2 start = add(g.base_point_paper, zt.start_offset);
    std::pair<Point2, Point2> shelf;
    if (zt.two_lines) {
      shelf = pt.shelf_text(start, "Зона защиты", zts.font, st, zt.id);
      pt.text({start.x, start.y - zts.font.size * 1.5}, mark, zts.font, st, zt.id);
    } else {
      shelf = pt.shelf_text(start, "Зона защиты " + mark, zts.font, st, zt.id);
    }
    const Point2 from = zt.leader_to_shelf_end ? shelf.second : shelf.first;
    const Point2 dir{std::cos(zt.leader_angle), std::sin(zt.leader_angle)};
    const auto it = plan_contours.find(zt.zone_section_ref);
    const auto hit = it == plan_contours.end() ? std::nullopt : ray_hit(from, dir, it->second);
    pt.line(from, add(from, mul(dir, hit.value_or(kDefaultLeaderLen))), st, zt.id);
  }

  const auto& pv = g.plan_view;
  draw_label_block(pt, add(g.base_point_paper, pv.shelf_mid_offset), pv.label, scale_text(pv.scale),
                   pv.scale_placement, pv.above_gap, pv.below_gap, pv.font, {Color::Black, Linetype::Solid}, 0);

  if (!p.table_entries.empty()) {
    dl.append(layout_table(build_table(p), add(g.base_point_paper, g.table.corner_offset)));
  }
  return dl;
}

DisplayList render_section(const Project& p, Id section_id) {
  const DrawingSection* s = p.find_drawing_section(section_id);
  if (!s) throw NotFound("drawing section " + std::to_string(section_id) + " not found");
  require_valid(p);
  const auto& g = p.general;
  const ViewTransform vt = section_transform(*s);
  auto P = [&](Point3 q) { return to_paper(vt, q); };
  DisplayList dl;
  Painter pt{dl};

  const ZoneSection* zs = p.zone_section_of(section_id);
  const std::vector<AirTerminal> terms = zs ? section_terminals(p, *zs) : std::vector<AirTerminal>{};

  if (!terms.empty()) {
    const ZoneField field(terms, g.zone_type);
    for (const auto& chain : field.vertical_profile(s->cut_a, s->cut_b, vt.sense)) {
      PolylinePrim pl;
      for (const auto& q : chain.points) pl.points.push_back({vt.origin.x + q.x * vt.scale, vt.origin.y + q.y * vt.scale});
      dl.add(std::move(pl), {zs->color, zs->linetype}, zs->id);
    }
  }

  const auto& sym = g.terminal_symbols;
  const Point2 cut_dir = unit(sub(s->cut_b, s->cut_a));
  auto draw_wire = [&](Point3 a, Point3 b, Style st, Id src) {
    // Cross-section dot where the wire passes the cutting plane, else its
    // projection.
    const Point2 n = left_normal(cut_dir);
    const double da = dot(sub(a.xy(), s->cut_a), n);
    const double db = dot(sub(b.xy(), s->cut_a), n);
    if ((da < 0) != (db < 0) && da != db) {
      const double t = da / (da - db);
      const Point3 x{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t, a.z};
      dl.add(DotPrim{P(x), sym.dot_diameter_section}, st, src);
    } else {
      pt.line(P(a), P(b), st, src);
    }
  };
  for (const auto& t : terms) {
    const Style st{t.color, t.linetype};
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Rod>) {
            const Point2 apex = P(c.apex);
            const Point2 base = P({c.apex.x, c.apex.y, rod_mount_z(t)});
            const double hb = sym.triangle_base / 2;
            dl.add(PolylinePrim{{apex, {base.x + hb, base.y}, {base.x - hb, base.y}}, true}, st, t.id);
          } else if constexpr (std::is_same_v<T, Mesh>) {
            double lo = 1e300, hi = -1e300;
            for (const auto& v : c.ring) {
              lo = std::min(lo, vt.along(v.xy()));
              hi = std::max(hi, vt.along(v.xy()));
            }
            const double z = c.ring.front().z;
            pt.line({vt.origin.x + lo * vt.scale, vt.origin.y + z * vt.scale},
                    {vt.origin.x + hi * vt.scale, vt.origin.y + z * vt.scale}, {t.color, Linetype::ThickSolid}, t.id);
          } else {
            draw_wire(c.support1, c.support2, st, t.id);
            if constexpr (std::is_same_v<T, DoubleWire>) {
              const auto [a2, b2] = second_wire(c);
              draw_wire(a2, b2, st, t.id);
            }
          }
        },
        t.construction);
  }

  const auto& dc = g.dims_common;
  for (const auto& d : p.radius_dims_vert) {
    if (d.section_ref != section_id) continue;
    const Style st = dim_style(g.per_dim_kind.radius_vert);
    const AirTerminal& t = *p.find_terminal(d.terminal_ref);
    const TerminalKind kind = std::holds_alternative<Rod>(t.construction) ? TerminalKind::Rod : TerminalKind::Wire;
    const double r0 = cone_params(zone_height(t), g.zone_type, kind).r0;
    const Point2 base = P({anchor_point(t).x, anchor_point(t).y, 0});
    const Point2 a = add(base, d.line_offset);
    const Point2 u{d.direction == Side::Right ? 1.0 : -1.0, 0};
    const Point2 b = add(a, mul(u, r0 * vt.scale));
    if (d.line_offset.dx != 0 || d.line_offset.dy != 0) pt.line(base, a, st, d.id);
    pt.line(a, b, st, d.id);
    pt.terminator(b, u, d.tick_style, dc.tick_size, st, d.id);
    pt.dim_text(a, b, dimension_text(d.param_text, r0, g.per_dim_kind.radius_vert.precision), d.text_offset, dc.font,
                st, d.id);
  }
  for (const auto& d : p.distance_dims) {
    if (d.section_ref != section_id) continue;
    const Style st = dim_style(g.per_dim_kind.distance);
    const Point2 na = anchor_point(*p.find_terminal(d.terminal_a));
    const Point2 nb = anchor_point(*p.find_terminal(d.terminal_b));
    const Point2 a = P({na.x, na.y, 0}), b = P({nb.x, nb.y, 0});
    const Point2 da = add(a, d.line_offset), db = add(b, d.line_offset);
    const Point2 off{d.line_offset.dx, d.line_offset.dy};
    if (norm(off) > 0) {
      const Point2 over = mul(unit(off), dc.extension_overrun);
      pt.line(a, add(da, over), st, d.id);
      pt.line(b, add(db, over), st, d.id);
    }
    pt.line(da, db, st, d.id);
    const Point2 u = unit(sub(db, da));
    pt.terminator(db, u, d.tick_style, dc.tick_size, st, d.id);
    pt.terminator(da, mul(u, -1), d.tick_style, dc.tick_size, st, d.id);
    const double value = std::abs(vt.along(nb) - vt.along(na));
    pt.dim_text(da, db, format_fixed(value / 1000, g.per_dim_kind.distance.precision), d.text_offset, dc.font, st,
                d.id);
  }

  const Style term_st{g.terminal_text_style.color, Linetype::Solid};
  for (const auto& tt : p.terminal_texts) {
    if (tt.section_ref != section_id) continue;
    const AirTerminal& t = *p.find_terminal(tt.terminal_ref);
    const Point2 start = add(vt.origin, tt.start_offset);
    const auto [s0, s1] = pt.shelf_text(start, t.label, g.terminal_text_style.font, term_st, tt.id);
    pt.line(add(P(terminal_points(t).front()), tt.leader_point_offset), tt.leader_to_shelf_end ? s1 : s0, term_st,
            tt.id);
  }

  const auto& own = s->own_label_layout;
  std::string title = s->letter + " – " + s->letter;
  if (s->rotated) title += " повернуто";
  draw_label_block(pt, add(vt.origin, own.shelf_mid_offset), title, scale_text(s->scale), own.scale_placement,
                   own.above_gap, own.below_gap, own.font, {g.section_marks.own_color, Linetype::Solid}, s->id);
  return dl;
}

}  // namespace lpz

#include "lpz/refgraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "lpz/formula_table.hpp"

namespace lpz {

namespace {

constexpr double kTol = 1e-6;

std::string idx(const char* list, std::size_t i) { return std::string(list) + "[" + std::to_string(i) + "]"; }

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
bool finite(Point3 p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }
bool finite(PaperVec v) { return std::isfinite(v.dx) && std::isfinite(v.dy); }
bool single_line(const std::string& s) { return s.find('\n') == std::string::npos && s.find('\r') == std::string::npos; }

class Collector {
 public:
  void hard(std::string path, std::string kind, std::string msg, Id owner = 0) {
    out.push_back({{std::move(path), std::move(kind), std::move(msg)}, owner, false});
  }
  void dependent(std::string path, std::string kind, std::string msg, Id owner) {
    out.push_back({{std::move(path), std::move(kind), std::move(msg)}, owner, true});
  }

  void range(const std::string& path, const char* field, double v, double lo, double hi) {
    if (!std::isfinite(v) || v < lo || v > hi) {
      hard(path, "Range", std::string(field) + " out of " + num(lo) + ".." + num(hi));
    }
  }
  void positive(const std::string& path, const char* field, double v) {
    if (!std::isfinite(v) || v <= 0) hard(path, "Range", std::string(field) + " must be > 0");
  }
  void font(const std::string& path, const FontSettings& f) {
    positive(path + ".size", "size", f.size);
    positive(path + ".compression", "compression", f.compression);
    if (!std::isfinite(f.slant)) hard(path + ".slant", "NonFinite", "slant must be finite");
  }
  void finite_vec(const std::string& path, PaperVec v) {
    if (!finite(v)) hard(path, "NonFinite", "offset must be finite");
  }
  void finite_scalar(const std::string& path, double v) {
    if (!std::isfinite(v)) hard(path, "NonFinite", "value must be finite");
  }

  std::vector<Finding> out;
};

void check_settings(Collector& c, const GeneralSettings& g, const DefaultSettings& d) {
  if (!finite(g.base_point_paper)) c.hard("general.base_point_paper", "NonFinite", "base point must be finite");
  const auto& pv = g.plan_view;
  if (!single_line(pv.label)) c.hard("general.plan_view.label", "Text", "label must be a single line");
  c.finite_vec("general.plan_view.shelf_mid_offset", pv.shelf_mid_offset);
  c.range("general.plan_view.above_gap", "above_gap", pv.above_gap, 0, 25.5);
  c.range("general.plan_view.below_gap", "below_gap", pv.below_gap, 0, 25.5);
  c.positive("general.plan_view.scale", "scale", pv.scale);
  c.font("general.plan_view.font", pv.font);

  const auto& t = g.table;
  c.finite_vec("general.table.corner_offset", t.corner_offset);
  c.range("general.table.precision", "precision", t.precision, 0, 7);
  c.range("general.table.row_height", "row_height", t.row_height, 3, 50);
  c.font("general.table.font", t.font);

  const auto& s = g.terminal_symbols;
  c.positive("general.terminal_symbols.square_side", "square_side", s.square_side);
  c.positive("general.terminal_symbols.dot_diameter_plan", "dot_diameter_plan", s.dot_diameter_plan);
  c.positive("general.terminal_symbols.dot_diameter_section", "dot_diameter_section", s.dot_diameter_section);
  c.positive("general.terminal_symbols.triangle_base", "triangle_base", s.triangle_base);

  const auto& m = g.section_marks;
  c.font("general.section_marks.plan_font", m.plan_font);
  c.font("general.section_marks.own_font", m.own_font);
  c.range("general.section_marks.arrow_tail_len", "arrow_tail_len", m.arrow_tail_len, 0, 50);
  c.range("general.section_marks.arrow_len", "arrow_len", m.arrow_len, 0, 50);

  c.font("general.terminal_text_style.font", g.terminal_text_style.font);
  c.font("general.zone_text_style.font", g.zone_text_style.font);
  c.range("general.zone_text_style.precision", "precision", g.zone_text_style.precision, 0, 7);

  c.font("general.dims_common.font", g.dims_common.font);
  c.range("general.dims_common.extension_overrun", "extension_overrun", g.dims_common.extension_overrun, 0, 7.5);
  c.range("general.dims_common.tick_size", "tick_size", g.dims_common.tick_size, 0, 12.6);
  c.range("general.per_dim_kind.distance.precision", "precision", g.per_dim_kind.distance.precision, 0, 7);
  c.range("general.per_dim_kind.radius_plan.precision", "precision", g.per_dim_kind.radius_plan.precision, 0, 7);
  c.range("general.per_dim_kind.radius_vert.precision", "precision", g.per_dim_kind.radius_vert.precision, 0, 7);
  c.range("general.per_dim_kind.min_width.precision", "precision", g.per_dim_kind.min_width.precision, 0, 7);
  c.positive("general.mesh_hatch.spacing", "spacing", g.mesh_hatch.spacing);

  const auto& sm = d.section_mark;
  c.range("defaults.section_mark.dash_len", "dash_len", sm.dash_len, 0, 25.5);
  c.range("defaults.section_mark.arrow_offset", "arrow_offset", sm.arrow_offset, 0, 25.5);
  c.range("defaults.section_mark.label_offset", "label_offset", sm.label_offset, 0, 25.5);
  c.range("defaults.section_mark.above_gap", "above_gap", sm.above_gap, 0, 25.5);
  c.range("defaults.section_mark.below_gap", "below_gap", sm.below_gap, 0, 25.5);
  c.range("defaults.dims.text_offset", "text_offset", d.dims.text_offset, 0, 25.5);
  const auto& gd = d.grounding;
  c.range("defaults.grounding.rod_count", "rod_count", gd.rod_count, 1, 32);
  c.finite_scalar("defaults.grounding.angle", gd.angle);
  c.range("defaults.grounding.rod_spacing", "rod_spacing", gd.rod_spacing, 3000, 5000);
  c.positive("defaults.grounding.rod_diameter", "rod_diameter", gd.rod_diameter);
  if (gd.linetype == Linetype::Dashed || gd.linetype == Linetype::DashDot) {
    c.hard("defaults.grounding.linetype", "Range", "grounding segments cannot be dashed");
  }
}

void check_terminal(Collector& c, const std::string& path, const AirTerminal& t) {
  if (!single_line(t.label)) c.hard(path + ".label", "Text", "label must be a single line", t.id);
  if (!single_line(t.type_text)) c.hard(path + ".type_text", "Text", "type must be a single line", t.id);
  const std::string cp = path + ".construction";

  const auto check_height = [&](bool required) {
    if (!required) {
      if (t.height) c.hard(path + ".height", "Shape", "mesh terminals carry no height", t.id);
      return;
    }
    if (!t.height) {
      c.hard(path + ".height", "Missing", "height is required", t.id);
      return;
    }
    if (!std::isfinite(*t.height) || *t.height <= 0) c.hard(path + ".height", "Range", "height must be > 0", t.id);
    if (*t.height > kMaxTerminalHeight) c.hard(path + ".height", "Range", "height above 150 m", t.id);
  };

  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Rod>) {
          check_height(true);
          if (!finite(k.apex)) {
            c.hard(cp + ".apex", "NonFinite", "apex must be finite", t.id);
            return;
          }
          if (k.apex.z > kMaxTerminalHeight) c.hard(cp + ".apex", "Range", "apex above 150 m", t.id);
          if (t.height && std::isfinite(*t.height)) {
            const double mount = k.apex.z - *t.height;
            if (mount < -kTol) c.hard(cp + ".apex", "Geometry", "rod base below the zero mark", t.id);
            if (k.freestanding && std::abs(mount) > kTol) {
              c.hard(cp + ".freestanding", "Geometry", "freestanding rod must stand on the zero mark", t.id);
            }
          }
        } else if constexpr (std::is_same_v<T, Mesh>) {
          check_height(false);
          const auto& ring = k.ring;
          if (ring.size() < 3) {
            c.hard(cp + ".ring", "Geometry", "mesh needs at least 3 vertices", t.id);
            return;
          }
          for (std::size_t i = 0; i < ring.size(); ++i) {
            if (!finite(ring[i])) {
              c.hard(cp + ".ring[" + std::to_string(i) + "]", "NonFinite", "vertex must be finite", t.id);
              return;
            }
          }
          bool flat = true;
          for (const auto& v : ring) flat = flat && v.z == ring.front().z;
          if (!flat) {
            c.hard(cp + ".ring", "Geometry", "mesh vertices must share one elevation", t.id);
            return;
          }
          if (ring.front().z <= 0 || ring.front().z > kMaxTerminalHeight) {
            c.hard(cp + ".ring", "Range", "mesh elevation out of (0, 150 m]", t.id);
          }
          const double area = mesh_ring_area(ring);
          if (area == 0) {
            c.hard(cp + ".ring", "Degenerate", "mesh ring has zero area", t.id);
          } else if (area < 0) {
            c.hard(cp + ".ring", "Orientation", "mesh ring must run counter-clockwise", t.id);
          }
          std::vector<Point2> flat2;
          for (const auto& v : ring) flat2.push_back(v.xy());
          if (area != 0 && ring_self_intersects(flat2)) {
            c.hard(cp + ".ring", "SelfIntersection", "mesh ring crosses itself", t.id);
          }
        } else {
          check_height(true);
          if (!finite(k.support1) || !finite(k.support2)) {
            c.hard(cp, "NonFinite", "supports must be finite", t.id);
            return;
          }
          if (k.support1.z != k.support2.z) {
            c.hard(cp + ".support2", "Geometry", "wire supports must share one elevation", t.id);
          }
          const double span = std::hypot(k.support2.x - k.support1.x, k.support2.y - k.support1.y);
          if (span <= 0) {
            c.hard(cp, "Degenerate", "wire span must be > 0", t.id);
            return;
          }
          const auto sag = FormulaTable::standard().wire_sag(span);
          if (!sag) {
            c.hard(cp, "Range", "wire span beyond the tabulated 150 m", t.id);
            return;
          }
          const auto check_elevation = [&](const std::string& p, double z) {
            if (z - *sag <= 0) c.hard(p, "Range", "wire too low for its sag", t.id);
            if (z > kMaxTerminalHeight) c.hard(p, "Range", "wire above 150 m", t.id);
          };
          check_elevation(cp + ".support1", k.support1.z);
          if (t.height && std::isfinite(*t.height) && *t.height > k.support1.z + kTol) {
            c.hard(path + ".height", "Geometry", "construction height exceeds support elevation", t.id);
          }
          if constexpr (std::is_same_v<T, DoubleWire>) {
            if (!std::isfinite(k.offset2) || k.offset2 == 0) {
              c.hard(cp + ".offset2", "Range", "second wire offset must be nonzero", t.id);
            }
            if (!std::isfinite(k.height2)) {
              c.hard(cp + ".height2", "NonFinite", "second wire height must be finite", t.id);
            } else {
              check_elevation(cp + ".height2", k.height2);
            }
          }
        }
      },
      t.construction);
}

void check_section(Collector& c, const std::string& path, const DrawingSection& s) {
  if (s.letter.empty() || !single_line(s.letter)) c.hard(path + ".letter", "Text", "letter must be a single nonempty line", s.id);
  c.positive(path + ".scale", "scale", s.scale);
  if (!finite(s.base_projection)) c.hard(path + ".base_projection", "NonFinite", "must be finite", s.id);
  if (!finite(s.cut_a) || !finite(s.cut_b)) {
    c.hard(path + ".cut_segment", "NonFinite", "must be finite", s.id);
  } else if (s.cut_a == s.cut_b) {
    c.hard(path + ".cut_segment", "Degenerate", "cut segment has zero length", s.id);
  }
  c.range(path + ".plan_label_layout.dash_len", "dash_len", s.plan_label_layout.dash_len, 0, 25.5);
  c.range(path + ".plan_label_layout.arrow_offset", "arrow_offset", s.plan_label_layout.arrow_offset, 0, 25.5);
  c.range(path + ".plan_label_layout.label_offset", "label_offset", s.plan_label_layout.label_offset, 0, 25.5);
  c.finite_vec(path + ".own_label_layout.shelf_mid_offset", s.own_label_layout.shelf_mid_offset);
  c.range(path + ".own_label_layout.above_gap", "above_gap", s.own_label_layout.above_gap, 0, 25.5);
  c.range(path + ".own_label_layout.below_gap", "below_gap", s.own_label_layout.below_gap, 0, 25.5);
  c.font(path + ".own_label_layout.font", s.own_label_layout.font);
}

bool is_rod(const AirTerminal* t) { return t && std::holds_alternative<Rod>(t->construction); }

}  // namespace

std::vector<RefEdge> reference_edges(const Project& p) {
  std::vector<RefEdge> e;
  auto add = [&](Id owner, std::string path, Id target, TargetKind k, OnDelete od = OnDelete::DeleteOwner) {
    if (k == TargetKind::SectionOrPlan && target == kPlan) return;
    e.push_back({owner, std::move(path), target, k, od});
  };
  for (std::size_t i = 0; i < p.zone_sections.size(); ++i) {
    const auto& z = p.zone_sections[i];
    const auto base = idx("zone_sections", i);
    add(z.id, base + ".section_ref", z.section_ref, TargetKind::SectionOrPlan);
    for (std::size_t j = 0; j < z.terminal_refs.size(); ++j) {
      add(z.id, base + ".terminal_refs[" + std::to_string(j) + "]", z.terminal_refs[j], TargetKind::Terminal,
          OnDelete::Detach);
    }
  }
  for (std::size_t i = 0; i < p.terminal_texts.size(); ++i) {
    const auto& t = p.terminal_texts[i];
    const auto base = idx("terminal_texts", i);
    add(t.id, base + ".terminal_ref", t.terminal_ref, TargetKind::Terminal);
    add(t.id, base + ".section_ref", t.section_ref, TargetKind::SectionOrPlan);
  }
  for (std::size_t i = 0; i < p.zone_texts.size(); ++i) {
    const auto& t = p.zone_texts[i];
    add(t.id, idx("zone_texts", i) + ".zone_section_ref", t.zone_section_ref, TargetKind::ZoneSection);
  }
  for (std::size_t i = 0; i < p.distance_dims.size(); ++i) {
    const auto& d = p.distance_dims[i];
    const auto base = idx("distance_dims", i);
    add(d.id, base + ".terminal_a", d.terminal_a, TargetKind::Terminal);
    add(d.id, base + ".terminal_b", d.terminal_b, TargetKind::Terminal);
    add(d.id, base + ".section_ref", d.section_ref, TargetKind::SectionOrPlan);
  }
  for (std::size_t i = 0; i < p.radius_dims_plan.size(); ++i) {
    const auto& d = p.radius_dims_plan[i];
    const auto base = idx("radius_dims_plan", i);
    add(d.id, base + ".terminal_ref", d.terminal_ref, TargetKind::Terminal);
    add(d.id, base + ".zone_section_ref", d.zone_section_ref, TargetKind::ZoneSection);
  }
  for (std::size_t i = 0; i < p.radius_dims_vert.size(); ++i) {
    const auto& d = p.radius_dims_vert[i];
    const auto base = idx("radius_dims_vert", i);
    add(d.id, base + ".terminal_ref", d.terminal_ref, TargetKind::Terminal);
    add(d.id, base + ".section_ref", d.section_ref, TargetKind::DrawingSection);
  }
  for (std::size_t i = 0; i < p.min_width_dims.size(); ++i) {
    const auto& d = p.min_width_dims[i];
    const auto base = idx("min_width_dims", i);
    add(d.id, base + ".terminal_a", d.terminal_a, TargetKind::Terminal);
    add(d.id, base + ".terminal_b", d.terminal_b, TargetKind::Terminal);
    add(d.id, base + ".zone_section_ref", d.zone_section_ref, TargetKind::ZoneSection);
  }
  for (std::size_t i = 0; i < p.table_entries.size(); ++i) {
    const auto& t = p.table_entries[i];
    const auto base = idx("table_entries", i);
    add(t.id, base + ".terminal_ref", t.terminal_ref, TargetKind::Terminal);
    if (t.terminal_ref2) add(t.id, base + ".terminal_ref2", *t.terminal_ref2, TargetKind::Terminal);
  }
  return e;
}

std::vector<Id> all_object_ids(const Project& p) {
  std::vector<Id> ids;
  auto collect = [&](const auto& list) {
    for (const auto& o : list) ids.push_back(o.id);
  };
  collect(p.terminals);
  collect(p.drawing_sections);
  collect(p.zone_sections);
  collect(p.terminal_texts);
  collect(p.zone_texts);
  collect(p.distance_dims);
  collect(p.radius_dims_plan);
  collect(p.radius_dims_vert);
  collect(p.min_width_dims);
  collect(p.table_entries);
  collect(p.grounding);
  return ids;
}

bool contains_object(const Project& p, Id id) {
  const auto ids = all_object_ids(p);
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<Finding> check(const Project& p) {
  Collector c;
  check_settings(c, p.general, p.defaults);

  // Identity.
  {
    std::map<Id, int> seen;
    for (Id id : all_object_ids(p)) ++seen[id];
    for (const auto& [id, n] : seen) {
      if (id == 0) c.hard("ids", "Identity", "id 0 is reserved for the plan view");
      if (n > 1) c.hard("ids", "Duplicate", "id " + std::to_string(id) + " used " + std::to_string(n) + " times", id);
      if (id >= p.next_id) c.hard("next_id", "Identity", "id " + std::to_string(id) + " not below next_id", id);
    }
  }

  for (std::size_t i = 0; i < p.terminals.size(); ++i) check_terminal(c, idx("terminals", i), p.terminals[i]);
  for (std::size_t i = 0; i < p.drawing_sections.size(); ++i) {
    check_section(c, idx("drawing_sections", i), p.drawing_sections[i]);
  }

  // Links: existence and kind of every target.
  for (const auto& e : reference_edges(p)) {
    bool ok = false;
    switch (e.kind) {
      case TargetKind::Terminal: ok = p.find_terminal(e.target) != nullptr; break;
      case TargetKind::DrawingSection:
      case TargetKind::SectionOrPlan: ok = p.find_drawing_section(e.target) != nullptr; break;
      case TargetKind::ZoneSection: ok = p.find_zone_section(e.target) != nullptr; break;
    }
    if (!ok) {
      c.dependent(e.path, "DanglingRef", "reference to missing object " + std::to_string(e.target), e.owner);
    }
  }

  // Zone sections.
  std::map<Id, int> per_section;
  for (std::size_t i = 0; i < p.zone_sections.size(); ++i) {
    const auto& z = p.zone_sections[i];
    const auto base = idx("zone_sections", i);
    if (z.section_ref != kPlan && ++per_section[z.section_ref] > 1) {
      c.hard(base + ".section_ref", "Duplicate", "drawing section already has a zone section", z.id);
    }
    if (z.section_ref == kPlan) {
      if (!z.cut_height) {
        c.hard(base + ".cut_height", "Missing", "plan zone section needs a cut height", z.id);
      } else if (!std::isfinite(*z.cut_height) || *z.cut_height < 0) {
        c.hard(base + ".cut_height", "Range", "cut height must be >= 0", z.id);
      }
    } else if (z.cut_height) {
      c.hard(base + ".cut_height", "Shape", "vertical zone sections carry no cut height", z.id);
    }
    std::set<Id> uniq(z.terminal_refs.begin(), z.terminal_refs.end());
    if (uniq.size() != z.terminal_refs.size()) {
      c.hard(base + ".terminal_refs", "Duplicate", "terminal listed twice", z.id);
    }
  }

  auto plan_bound = [&](Id zs) {
    const auto* z = p.find_zone_section(zs);
    return z == nullptr || z->section_ref == kPlan;  // dangling is reported separately
  };
  auto member = [&](Id zs, Id t) {
    const auto* z = p.find_zone_section(zs);
    if (!z || !p.find_terminal(t)) return true;
    return std::find(z->terminal_refs.begin(), z->terminal_refs.end(), t) != z->terminal_refs.end();
  };
  auto rod_or_missing = [&](Id t) {
    const auto* a = p.find_terminal(t);
    return a == nullptr || is_rod(a);
  };

  for (std::size_t i = 0; i < p.terminal_texts.size(); ++i) {
    const auto& t = p.terminal_texts[i];
    const auto base = idx("terminal_texts", i);
    c.finite_vec(base + ".start_offset", t.start_offset);
    c.finite_vec(base + ".leader_point_offset", t.leader_point_offset);
  }

  for (std::size_t i = 0; i < p.zone_texts.size(); ++i) {
    const auto& t = p.zone_texts[i];
    const auto base = idx("zone_texts", i);
    c.finite_vec(base + ".start_offset", t.start_offset);
    c.finite_scalar(base + ".leader_angle", t.leader_angle);
    if (!plan_bound(t.zone_section_ref)) {
      c.dependent(base + ".zone_section_ref", "NotPlanBound", "level texts annotate plan zone sections", t.id);
    }
  }

  for (std::size_t i = 0; i < p.distance_dims.size(); ++i) {
    const auto& d = p.distance_dims[i];
    const auto base = idx("distance_dims", i);
    c.finite_vec(base + ".line_offset", d.line_offset);
    c.finite_scalar(base + ".text_offset", d.text_offset);
    if (d.terminal_a == d.terminal_b) c.dependent(base + ".terminal_b", "SameTerminal", "needs two terminals", d.id);
    if (!rod_or_missing(d.terminal_a)) c.dependent(base + ".terminal_a", "KindMismatch", "must be a rod", d.id);
    if (!rod_or_missing(d.terminal_b)) c.dependent(base + ".terminal_b", "KindMismatch", "must be a rod", d.id);
  }

  for (std::size_t i = 0; i < p.radius_dims_plan.size(); ++i) {
    const auto& d = p.radius_dims_plan[i];
    const auto base = idx("radius_dims_plan", i);
    if (!single_line(d.param_text)) c.hard(base + ".param_text", "Text", "must be a single line", d.id);
    c.finite_scalar(base + ".angle", d.angle);
    c.finite_scalar(base + ".text_offset", d.text_offset);
    c.finite_vec(base + ".manual_text_pos", d.manual_text_pos);
    if (!rod_or_missing(d.terminal_ref)) c.dependent(base + ".terminal_ref", "KindMismatch", "must be a rod", d.id);
    if (!plan_bound(d.zone_section_ref)) {
      c.dependent(base + ".zone_section_ref", "NotPlanBound", "plan radius needs a plan zone section", d.id);
    }
    if (!member(d.zone_section_ref, d.terminal_ref)) {
      c.dependent(base + ".terminal_ref", "Membership", "terminal not in the zone section", d.id);
    }
  }

  for (std::size_t i = 0; i < p.radius_dims_vert.size(); ++i) {
    const auto& d = p.radius_dims_vert[i];
    const auto base = idx("radius_dims_vert", i);
    if (!single_line(d.param_text)) c.hard(base + ".param_text", "Text", "must be a single line", d.id);
    c.finite_vec(base + ".line_offset", d.line_offset);
    c.finite_scalar(base + ".text_offset", d.text_offset);
    const auto* t = p.find_terminal(d.terminal_ref);
    if (t && std::holds_alternative<Mesh>(t->construction)) {
      c.dependent(base + ".terminal_ref", "KindMismatch", "meshes have no zone radius", d.id);
    }
  }

  for (std::size_t i = 0; i < p.min_width_dims.size(); ++i) {
    const auto& d = p.min_width_dims[i];
    const auto base = idx("min_width_dims", i);
    if (!single_line(d.param_text)) c.hard(base + ".param_text", "Text", "must be a single line", d.id);
    c.finite_scalar(base + ".text_offset", d.text_offset);
    c.finite_vec(base + ".manual_text_pos", d.manual_text_pos);
    const auto* a = p.find_terminal(d.terminal_a);
    const auto* b = p.find_terminal(d.terminal_b);
    if (a && b) {
      bool valid = false;
      if (a == b) {
        valid = std::holds_alternative<DoubleWire>(a->construction);
      } else if (is_rod(a) && is_rod(b)) {
        valid = std::abs(top_elevation(*a) - top_elevation(*b)) <= kTol;
      }
      if (!valid) {
        c.dependent(base, "PairInvalid", "needs two equal-height rods or one double wire", d.id);
      }
    }
    if (!plan_bound(d.zone_section_ref)) {
      c.dependent(base + ".zone_section_ref", "NotPlanBound", "min width needs a plan zone section", d.id);
    }
    if (!member(d.zone_section_ref, d.terminal_a) || !member(d.zone_section_ref, d.terminal_b)) {
      c.dependent(base, "Membership", "terminals not in the zone section", d.id);
    }
  }

  for (std::size_t i = 0; i < p.table_entries.size(); ++i) {
    const auto& t = p.table_entries[i];
    const auto base = idx("table_entries", i);
    if (!std::isfinite(t.protected_level) || t.protected_level < 0) {
      c.hard(base + ".protected_level", "Range", "protected level must be >= 0", t.id);
    }
    if (t.terminal_ref2) {
      if (*t.terminal_ref2 == t.terminal_ref) {
        c.dependent(base + ".terminal_ref2", "SameTerminal", "double entry needs two terminals", t.id);
      }
      if (!rod_or_missing(t.terminal_ref) || !rod_or_missing(*t.terminal_ref2)) {
        c.dependent(base, "KindMismatch", "double entries pair two rods", t.id);
      }
    } else {
      const auto* a = p.find_terminal(t.terminal_ref);
      if (a && std::holds_alternative<Mesh>(a->construction)) {
        c.dependent(base + ".terminal_ref", "KindMismatch", "meshes are not tabulated", t.id);
      }
    }
  }

  for (std::size_t i = 0; i < p.grounding.size(); ++i) {
    const auto& g = p.grounding[i];
    const auto base = idx("grounding", i);
    if (!finite(g.center_offset)) c.hard(base + ".center_offset", "NonFinite", "must be finite", g.id);
    if (g.rod_count < 1 || g.rod_count > 32) c.hard(base + ".rod_count", "Range", "rod_count out of 1..32", g.id);
    c.finite_scalar(base + ".angle", g.angle);
    c.range(base + ".rod_spacing", "rod_spacing", g.rod_spacing, 3000, 25000);
    c.positive(base + ".rod_diameter", "rod_diameter", g.rod_diameter);
    if (g.linetype == Linetype::Dashed || g.linetype == Linetype::DashDot) {
      c.hard(base + ".linetype", "Range", "grounding segments cannot be dashed", g.id);
    }
  }

  std::stable_sort(c.out.begin(), c.out.end(), [](const Finding& a, const Finding& b) {
    return natural_less(a.violation.path, b.violation.path);
  });
  return std::move(c.out);
}

std::vector<Violation> validate_settings(const GeneralSettings& g, const DefaultSettings& d) {
  Collector c;
  check_settings(c, g, d);
  std::vector<Violation> out;
  for (auto& f : c.out) out.push_back(std::move(f.violation));
  std::stable_sort(out.begin(), out.end(),
                   [](const Violation& a, const Violation& b) { return natural_less(a.path, b.path); });
  return out;
}

}  // namespace lpz

#include "lpz/editops.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "lpz/refgraph.hpp"

namespace lpz {

const char* command_name(const Command& c) {
  return std::visit([](const auto& v) { return std::decay_t<decltype(v)>::kName; }, c);
}

const char* to_string(ActionKind k) {
  switch (k) {
    case ActionKind::Delete: return "Delete";
    case ActionKind::Detach: return "Detach";
    case ActionKind::Regenerate: return "Regenerate";
    case ActionKind::Touch: return "Touch";
  }
  return "?";
}

namespace {

template <class T>
T* find_in(std::vector<T>& list, Id id) {
  for (auto& o : list) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

template <class T>
T& need(std::vector<T>& list, Id id, const char* what) {
  if (auto* o = find_in(list, id)) return *o;
  throw RefError(std::string("no ") + what + " with id " + std::to_string(id));
}

template <class T>
void erase_id(std::vector<T>& list, Id id) {
  std::erase_if(list, [&](const T& o) { return o.id == id; });
}

template <class T>
void remove_existing(std::vector<T>& list, Id id, const char* what) {
  need(list, id, what);
  erase_id(list, id);
}

void need_section_or_plan(Project& q, Id id) {
  if (id != kPlan) need(q.drawing_sections, id, "drawing section");
}

PaperVec add(PaperVec a, PaperVec b) { return {a.dx + b.dx, a.dy + b.dy}; }

void translate(Point3& p, const Point3& d) {
  p.x += d.x;
  p.y += d.y;
  p.z += d.z;
}

void translate(AirTerminal& t, const Point3& d) {
  std::visit(
      [&](auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Rod>) {
          translate(k.apex, d);
        } else if constexpr (std::is_same_v<T, Mesh>) {
          for (auto& v : k.ring) translate(v, d);
        } else {
          translate(k.support1, d);
          translate(k.support2, d);
          if constexpr (std::is_same_v<T, DoubleWire>) k.height2 += d.z;
        }
      },
      t.construction);
}

Mesh& need_mesh(AirTerminal& t) {
  if (auto* m = std::get_if<Mesh>(&t.construction)) return *m;
  throw KindError("terminal " + std::to_string(t.id) + " is not a mesh");
}

/// Trailing ASCII digit run of a label, split off.
std::pair<std::string, std::optional<long>> split_suffix(const std::string& label) {
  std::size_t i = label.size();
  while (i > 0 && label[i - 1] >= '0' && label[i - 1] <= '9') --i;
  if (i == label.size() || label.size() - i > 9) return {label, std::nullopt};
  long n = 0;
  std::from_chars(label.data() + i, label.data() + label.size(), n);
  return {label.substr(0, i), n};
}

std::string next_label(const Project& p, const std::string& label) {
  if (label.empty()) return label;
  auto [prefix, n] = split_suffix(label);
  if (!n) prefix = label + "-";
  long top = n.value_or(1);
  for (const auto& t : p.terminals) {
    auto [pre, m] = split_suffix(t.label);
    if (m && pre == prefix) top = std::max(top, *m);
  }
  return prefix + std::to_string(top + 1);
}

Id fresh_id(Project& q) { return q.next_id++; }

// ---------------------------------------------------------------------------
// Per-command mutation. Each returns the id the command addresses directly,
// if any; findings on that object reject the command instead of cascading.

struct Mutator {
  Project& q;

  std::optional<Id> operator()(const AddTerminal& c) {
    const auto& d = q.defaults.terminal;
    AirTerminal t;
    t.id = fresh_id(q);
    t.label = c.label;
    t.type_text = c.type_text;
    t.construction = c.construction;
    t.color = c.color.value_or(d.color);
    t.linetype = c.linetype.value_or(d.linetype);
    t.height = c.height;
    std::visit(
        [&](auto& k) {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, Rod>) {
            k.freestanding = c.freestanding.value_or(d.freestanding);
            if (!t.height && k.freestanding) t.height = k.apex.z;
          } else if constexpr (std::is_same_v<T, Mesh>) {
            if (c.freestanding) throw KindError("only rods are freestanding");
          } else {
            if (c.freestanding) throw KindError("only rods are freestanding");
            if (!t.height) t.height = k.support1.z;
          }
        },
        t.construction);
    q.terminals.push_back(std::move(t));
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteTerminal& c) {
    need(q.terminals, c.id, "terminal");
    if (c.section_ref == kPlan) {
      erase_id(q.terminals, c.id);
      return std::nullopt;
    }
    need(q.drawing_sections, c.section_ref, "drawing section");
    auto zs = std::find_if(q.zone_sections.begin(), q.zone_sections.end(),
                           [&](const ZoneSection& z) { return z.section_ref == c.section_ref; });
    if (zs == q.zone_sections.end() ||
        std::find(zs->terminal_refs.begin(), zs->terminal_refs.end(), c.id) == zs->terminal_refs.end()) {
      throw RefError("terminal " + std::to_string(c.id) + " is not shown on section " +
                     std::to_string(c.section_ref));
    }
    std::erase(zs->terminal_refs, c.id);
    // Annotations of the terminal drawn on that section go with it.
    std::erase_if(q.terminal_texts,
                  [&](const TerminalText& t) { return t.terminal_ref == c.id && t.section_ref == c.section_ref; });
    std::erase_if(q.radius_dims_vert,
                  [&](const RadiusDimVert& d) { return d.terminal_ref == c.id && d.section_ref == c.section_ref; });
    std::erase_if(q.distance_dims, [&](const DistanceDim& d) {
      return d.section_ref == c.section_ref && (d.terminal_a == c.id || d.terminal_b == c.id);
    });
    return std::nullopt;
  }

  std::optional<Id> operator()(const MoveTerminal& c) {
    auto& t = need(q.terminals, c.id, "terminal");
    if (c.section_ref == kPlan) {
      if (c.delta.z != 0) throw DomainError("plan moves are horizontal; change the height on a section");
      translate(t, c.delta);
      return c.id;
    }
    need(q.drawing_sections, c.section_ref, "drawing section");
    if (c.delta.x != 0 || c.delta.y != 0) throw DomainError("on a vertical section a terminal moves only vertically");
    translate(t, c.delta);
    if (t.height) *t.height += c.delta.z;
    return c.id;
  }

  std::optional<Id> operator()(const CopyTerminal& c) {
    need(q.terminals, c.id, "terminal");
    q = copy_object(q, c.id, c.delta).first;
    return std::nullopt;
  }

  std::optional<Id> operator()(const SetTerminalProps& c) {
    auto& t = need(q.terminals, c.id, "terminal");
    if (c.label) t.label = *c.label;
    if (c.type_text) t.type_text = *c.type_text;
    if (c.color) t.color = *c.color;
    if (c.linetype) t.linetype = *c.linetype;
    auto* rod = std::get_if<Rod>(&t.construction);
    if (c.freestanding) {
      if (!rod) throw KindError("only rods are freestanding");
      if (*c.freestanding && !rod->freestanding && t.height) rod->apex.z = *t.height;
      rod->freestanding = *c.freestanding;
    }
    if (c.height) {
      if (std::holds_alternative<Mesh>(t.construction)) throw KindError("meshes carry no height");
      if (rod) {
        const double mount = rod->freestanding ? 0.0 : rod_mount_z(t);
        rod->apex.z = mount + *c.height;
      }
      t.height = *c.height;
    }
    return c.id;
  }

  std::optional<Id> operator()(const AddMeshVertex& c) {
    auto& m = need_mesh(need(q.terminals, c.terminal, "terminal"));
    if (c.index > m.ring.size()) throw DomainError("vertex index out of range");
    const double z = m.ring.empty() ? 0.0 : m.ring.front().z;
    m.ring.insert(m.ring.begin() + static_cast<std::ptrdiff_t>(c.index), Point3{c.point.x, c.point.y, z});
    return c.terminal;
  }

  std::optional<Id> operator()(const MoveMeshVertex& c) {
    auto& m = need_mesh(need(q.terminals, c.terminal, "terminal"));
    if (c.index >= m.ring.size()) throw DomainError("vertex index out of range");
    m.ring[c.index].x = c.point.x;
    m.ring[c.index].y = c.point.y;
    return c.terminal;
  }

  std::optional<Id> operator()(const DeleteMeshVertex& c) {
    auto& m = need_mesh(need(q.terminals, c.terminal, "terminal"));
    if (c.index >= m.ring.size()) throw DomainError("vertex index out of range");
    if (m.ring.size() <= 3) throw GeometryError("a mesh needs at least 3 vertices");
    m.ring.erase(m.ring.begin() + static_cast<std::ptrdiff_t>(c.index));
    return c.terminal;
  }

  std::optional<Id> operator()(const AddDrawingSection& c) {
    const auto& d = q.defaults.section_mark;
    DrawingSection s;
    s.id = fresh_id(q);
    s.letter = c.letter;
    s.rotated = c.rotated;
    s.scale = c.scale.value_or(q.general.plan_view.scale);
    s.base_projection = c.base_projection;
    s.cut_a = c.cut_a;
    s.cut_b = c.cut_b;
    s.label_side = c.label_side;
    s.plan_label_layout = {d.dash_len, d.arrow_offset, d.label_offset};
    s.own_label_layout.shelf_mid_offset = c.shelf_mid_offset;
    s.own_label_layout.above_gap = d.above_gap;
    s.own_label_layout.below_gap = d.below_gap;
    s.own_label_layout.scale_placement = d.scale_placement;
    s.own_label_layout.font = q.general.section_marks.own_font;
    q.drawing_sections.push_back(std::move(s));
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteDrawingSection& c) {
    remove_existing(q.drawing_sections, c.id, "drawing section");
    return std::nullopt;
  }

  std::optional<Id> operator()(const MoveDrawingSectionMark& c) {
    auto& s = need(q.drawing_sections, c.id, "drawing section");
    if (c.cut_a) s.cut_a = *c.cut_a;
    if (c.cut_b) s.cut_b = *c.cut_b;
    if (c.base_projection) s.base_projection = *c.base_projection;
    if (c.label_side) s.label_side = *c.label_side;
    if (c.rotated) s.rotated = *c.rotated;
    if (c.scale) s.scale = *c.scale;
    if (c.letter) s.letter = *c.letter;
    if (c.shelf_mid_offset) s.own_label_layout.shelf_mid_offset = *c.shelf_mid_offset;
    return c.id;
  }

  std::optional<Id> operator()(const AddZoneSection& c) {
    need_section_or_plan(q, c.section_ref);
    for (Id t : c.terminal_refs) need(q.terminals, t, "terminal");
    ZoneSection z;
    z.id = fresh_id(q);
    z.section_ref = c.section_ref;
    z.terminal_refs = c.terminal_refs;
    z.cut_height = c.cut_height;
    z.color = c.color.value_or(q.defaults.zone_section.color);
    z.linetype = c.linetype.value_or(q.defaults.zone_section.linetype);
    q.zone_sections.push_back(std::move(z));
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteZoneSection& c) {
    remove_existing(q.zone_sections, c.id, "zone section");
    return std::nullopt;
  }

  std::optional<Id> operator()(const SetZoneSectionProps& c) {
    auto& z = need(q.zone_sections, c.id, "zone section");
    if (c.cut_height) z.cut_height = *c.cut_height;
    if (c.color) z.color = *c.color;
    if (c.linetype) z.linetype = *c.linetype;
    return c.id;
  }

  std::optional<Id> operator()(const AddTerminalToZoneSection& c) {
    auto& z = need(q.zone_sections, c.zone_section, "zone section");
    need(q.terminals, c.terminal, "terminal");
    z.terminal_refs.push_back(c.terminal);
    return c.zone_section;
  }

  std::optional<Id> operator()(const RemoveTerminalFromZoneSection& c) {
    auto& z = need(q.zone_sections, c.zone_section, "zone section");
    auto it = std::find(z.terminal_refs.begin(), z.terminal_refs.end(), c.terminal);
    if (it == z.terminal_refs.end()) {
      throw RefError("terminal " + std::to_string(c.terminal) + " is not in zone section " +
                     std::to_string(c.zone_section));
    }
    z.terminal_refs.erase(it);
    return std::nullopt;
  }

  std::optional<Id> operator()(const AddTerminalText& c) {
    need(q.terminals, c.terminal_ref, "terminal");
    need_section_or_plan(q, c.section_ref);
    TerminalText t;
    t.id = fresh_id(q);
    t.terminal_ref = c.terminal_ref;
    t.section_ref = c.section_ref;
    t.start_offset = c.start_offset;
    t.leader_point_offset = c.leader_point_offset;
    t.leader_to_shelf_end = c.leader_to_shelf_end.value_or(q.defaults.text_leader_to_shelf_end);
    q.terminal_texts.push_back(t);
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteTerminalText& c) {
    remove_existing(q.terminal_texts, c.id, "terminal text");
    return std::nullopt;
  }

  std::optional<Id> operator()(const MoveTerminalText& c) {
    auto& t = need(q.terminal_texts, c.id, "terminal text");
    t.start_offset = add(t.start_offset, c.delta);
    if (c.leader_point_offset) t.leader_point_offset = *c.leader_point_offset;
    return c.id;
  }

  std::optional<Id> operator()(const AddZoneLevelText& c) {
    need(q.zone_sections, c.zone_section_ref, "zone section");
    ZoneLevelText t;
    t.id = fresh_id(q);
    t.zone_section_ref = c.zone_section_ref;
    t.start_offset = c.start_offset;
    t.leader_angle = c.leader_angle;
    t.leader_to_shelf_end = c.leader_to_shelf_end.value_or(q.defaults.text_leader_to_shelf_end);
    t.two_lines = c.two_lines.value_or(q.defaults.zone_text_two_lines);
    q.zone_texts.push_back(t);
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteZoneLevelText& c) {
    remove_existing(q.zone_texts, c.id, "zone level text");
    return std::nullopt;
  }

  std::optional<Id> operator()(const MoveZoneLevelText& c) {
    auto& t = need(q.zone_texts, c.id, "zone level text");
    t.start_offset = add(t.start_offset, c.delta);
    if (c.leader_angle) t.leader_angle = *c.leader_angle;
    return c.id;
  }

  std::optional<Id> operator()(const AddDistanceDim& c) {
    need(q.terminals, c.terminal_a, "terminal");
    need(q.terminals, c.terminal_b, "terminal");
    need_section_or_plan(q, c.section_ref);
    DistanceDim d;
    d.id = fresh_id(q);
    d.terminal_a = c.terminal_a;
    d.terminal_b = c.terminal_b;
    d.section_ref = c.section_ref;
    d.line_offset = c.line_offset;
    d.text_offset = c.text_offset.value_or(q.defaults.dims.text_offset);
    d.tick_style = c.tick_style.value_or(q.defaults.dims.tick_style);
    q.distance_dims.push_back(d);
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteDistanceDim& c) {
    remove_existing(q.distance_dims, c.id, "distance dimension");
    return std::nullopt;
  }

  std::optional<Id> operator()(const MoveDistanceDim& c) {
    auto& d = need(q.distance_dims, c.id, "distance dimension");
    d.line_offset = add(d.line_offset, c.delta);
    return c.id;
  }

  std::optional<Id> operator()(const AddRadiusDimPlan& c) {
    need(q.terminals, c.terminal_ref, "terminal");
    need(q.zone_sections, c.zone_section_ref, "zone section");
    const auto& dd = q.defaults.dims;
    RadiusDimPlan d;
    d.id = fresh_id(q);
    d.param_text = c.param_text;
    d.terminal_ref = c.terminal_ref;
    d.zone_section_ref = c.zone_section_ref;
    d.angle = c.angle;
    d.auto_text_pos = c.auto_text_pos.value_or(dd.auto_text_pos);
    d.text_offset = c.text_offset.value_or(dd.text_offset);
    d.manual_text_pos = c.manual_text_pos;
    d.leader = c.leader.value_or(dd.leader);
    d.leader_to_shelf_end = c.leader_to_shelf_end.value_or(dd.leader_to_shelf_end);
    d.tick_style = c.tick_style.value_or(dd.tick_style);
    d.include_height_in_text = c.include_height_in_text.value_or(q.defaults.plan_radius_include_height);
    q.radius_dims_plan.push_back(std::move(d));
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteRadiusDimPlan& c) {
    remove_existing(q.radius_dims_plan, c.id, "plan radius dimension");
    return std::nullopt;
  }

  std::optional<Id> operator()(const MoveRadiusDimPlan& c) {
    auto& d = need(q.radius_dims_plan, c.id, "plan radius dimension");
    d.manual_text_pos = add(d.manual_text_pos, c.delta);
    if (c.angle) d.angle = *c.angle;
    return c.id;
  }

  std::optional<Id> operator()(const AddRadiusDimVert& c) {
    need(q.terminals, c.terminal_ref, "terminal");
    need(q.drawing_sections, c.section_ref, "drawing section");
    RadiusDimVert d;
    d.id = fresh_id(q);
    d.param_text = c.param_text;
    d.terminal_ref = c.terminal_ref;
    d.section_ref = c.section_ref;
    d.line_offset = c.line_offset;
    d.direction = c.direction;
    d.text_offset = c.text_offset.value_or(q.defaults.dims.text_offset);
    d.tick_style = c.tick_style.value_or(q.defaults.dims.tick_style);
    q.radius_dims_vert.push_back(std::move(d));
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteRadiusDimVert& c) {
    remove_existing(q.radius_dims_vert, c.id, "vertical radius dimension");
    return std::nullopt;
  }

  std::optional<Id> operator()(const MoveRadiusDimVert& c) {
    auto& d = need(q.radius_dims_vert, c.id, "vertical radius dimension");
    d.line_offset = add(d.line_offset, c.delta);
    if (c.direction) d.direction = *c.direction;
    return c.id;
  }

  std::optional<Id> operator()(const AddMinWidthDim& c) {
    need(q.terminals, c.terminal_a, "terminal");
    need(q.terminals, c.terminal_b, "terminal");
    need(q.zone_sections, c.zone_section_ref, "zone section");
    const auto& dd = q.defaults.dims;
    MinWidthDim d;
    d.id = fresh_id(q);
    d.param_text = c.param_text;
    d.terminal_a = c.terminal_a;
    d.terminal_b = c.terminal_b;
    d.zone_section_ref = c.zone_section_ref;
    d.auto_text_pos = c.auto_text_pos.value_or(dd.auto_text_pos);
    d.text_offset = c.text_offset.value_or(dd.text_offset);
    d.manual_text_pos = c.manual_text_pos;
    d.leader = c.leader.value_or(dd.leader);
    d.leader_to_shelf_end = c.leader_to_shelf_end.value_or(dd.leader_to_shelf_end);
    d.tick_style = c.tick_style.value_or(dd.tick_style);
    q.min_width_dims.push_back(std::move(d));
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteMinWidthDim& c) {
    remove_existing(q.min_width_dims, c.id, "min-width dimension");
    return std::nullopt;
  }

  std::optional<Id> operator()(const MoveMinWidthDim& c) {
    auto& d = need(q.min_width_dims, c.id, "min-width dimension");
    d.manual_text_pos = add(d.manual_text_pos, c.delta);
    return c.id;
  }

  std::optional<Id> operator()(const AddTableEntry& c) {
    need(q.terminals, c.terminal_ref, "terminal");
    if (c.terminal_ref2) need(q.terminals, *c.terminal_ref2, "terminal");
    TableEntry e;
    e.id = fresh_id(q);
    e.terminal_ref = c.terminal_ref;
    e.terminal_ref2 = c.terminal_ref2;
    e.protected_level = c.protected_level;
    q.table_entries.push_back(e);
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteTableEntry& c) {
    remove_existing(q.table_entries, c.id, "table entry");
    return std::nullopt;
  }

  std::optional<Id> operator()(const EditTableEntry& c) {
    auto& e = need(q.table_entries, c.id, "table entry");
    if (c.terminal_ref) e.terminal_ref = need(q.terminals, *c.terminal_ref, "terminal").id;
    if (c.terminal_ref2) e.terminal_ref2 = need(q.terminals, *c.terminal_ref2, "terminal").id;
    if (c.clear_ref2) {
      if (c.terminal_ref2) throw DomainError("clear_ref2 conflicts with terminal_ref2");
      e.terminal_ref2.reset();
    }
    if (c.protected_level) e.protected_level = *c.protected_level;
    return c.id;
  }

  std::optional<Id> operator()(const AddGroundingElectrode& c) {
    const auto& d = q.defaults.grounding;
    GroundingElectrode g;
    g.id = fresh_id(q);
    g.center_offset = c.center_offset;
    g.linetype = c.linetype.value_or(d.linetype);
    g.rod_count = c.rod_count.value_or(d.rod_count);
    g.angle = c.angle.value_or(d.angle);
    g.rod_spacing = c.rod_spacing.value_or(d.rod_spacing);
    g.rod_diameter = c.rod_diameter.value_or(d.rod_diameter);
    q.grounding.push_back(g);
    return std::nullopt;
  }

  std::optional<Id> operator()(const DeleteGroundingElectrode& c) {
    remove_existing(q.grounding, c.id, "grounding electrode");
    return std::nullopt;
  }

  std::optional<Id> operator()(const MoveGroundingElectrode& c) {
    auto& g = need(q.grounding, c.id, "grounding electrode");
    g.center_offset.x += c.delta.x;
    g.center_offset.y += c.delta.y;
    if (c.angle) g.angle = *c.angle;
    return c.id;
  }

  std::optional<Id> operator()(const CopyGroundingElectrode& c) {
    need(q.grounding, c.id, "grounding electrode");
    q = copy_object(q, c.id, {c.delta.x, c.delta.y, 0}).first;
    return std::nullopt;
  }

  std::optional<Id> operator()(const MoveProject& c) {
    q.general.base_point_paper.x += c.delta.dx;
    q.general.base_point_paper.y += c.delta.dy;
    return std::nullopt;
  }

  std::optional<Id> operator()(const UpdateGeneralSettings& c) {
    if (auto vs = validate_settings(c.general, q.defaults); !vs.empty()) throw ValidationError(std::move(vs));
    q.general = c.general;
    return std::nullopt;
  }

  std::optional<Id> operator()(const UpdateDefaults& c) {
    if (auto vs = validate_settings(q.general, c.defaults); !vs.empty()) throw ValidationError(std::move(vs));
    q.defaults = c.defaults;
    return std::nullopt;
  }
};

// ---------------------------------------------------------------------------
// Change tracking

template <class T>
void changed_in(const std::vector<T>& before, const std::vector<T>& after, std::set<Id>& out) {
  std::map<Id, const T*> old;
  for (const auto& o : before) old[o.id] = &o;
  for (const auto& o : after) {
    auto it = old.find(o.id);
    if (it != old.end() && !(*it->second == o)) out.insert(o.id);
  }
}

std::set<Id> changed_objects(const Project& a, const Project& b) {
  std::set<Id> out;
  changed_in(a.terminals, b.terminals, out);
  changed_in(a.drawing_sections, b.drawing_sections, out);
  changed_in(a.zone_sections, b.zone_sections, out);
  changed_in(a.terminal_texts, b.terminal_texts, out);
  changed_in(a.zone_texts, b.zone_texts, out);
  changed_in(a.distance_dims, b.distance_dims, out);
  changed_in(a.radius_dims_plan, b.radius_dims_plan, out);
  changed_in(a.radius_dims_vert, b.radius_dims_vert, out);
  changed_in(a.min_width_dims, b.min_width_dims, out);
  changed_in(a.table_entries, b.table_entries, out);
  changed_in(a.grounding, b.grounding, out);
  return out;
}

/// Owners reachable from `roots` through reference edges, plus annotations
/// bound to a changed drawing section, excluding the roots themselves.
std::vector<Id> dependents_of(const Project& q, const std::set<Id>& roots) {
  const auto edges = reference_edges(q);
  std::set<Id> reached = roots;
  std::vector<Id> order;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : edges) {
      if (reached.count(e.target) && !reached.count(e.owner)) {
        reached.insert(e.owner);
        order.push_back(e.owner);
        grew = true;
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

struct Outcome {
  Project project;
  std::vector<CascadeAction> actions;
  std::vector<Id> created;
  std::vector<Id> deleted;
};

bool touches_all(const Command& c) {
  return std::holds_alternative<UpdateGeneralSettings>(c) || std::holds_alternative<MoveProject>(c);
}

void reject_hard(const std::vector<Finding>& hard) {
  std::vector<Violation> vs;
  bool geometric = false;
  for (const auto& f : hard) {
    vs.push_back(f.violation);
    geometric = geometric || f.violation.path.find(".construction") != std::string::npos;
  }
  if (geometric) {
    throw GeometryError(vs.front().path + ": " + vs.front().message);
  }
  throw CommandRejected("command rejected", std::move(vs));
}

Outcome run(const Project& p, const Command& c) {
  if (auto vs = validate(p); !vs.empty()) throw CommandRejected("project is invalid before the command", std::move(vs));

  Outcome out{p, {}, {}, {}};
  Project& q = out.project;
  const auto subject = std::visit(Mutator{q}, c);

  std::set<Id> guarded;
  for (Id id = p.next_id; id < q.next_id; ++id) guarded.insert(id);
  if (subject) guarded.insert(*subject);

  // Settle: resolve dependent findings until only a clean project or a hard
  // finding remains.
  for (;;) {
    const auto findings = check(q);
    std::vector<Finding> hard;
    std::vector<Finding> soft;
    for (const auto& f : findings) (f.dependent ? soft : hard).push_back(f);
    if (!hard.empty()) reject_hard(hard);
    if (soft.empty()) break;

    std::map<std::string, RefEdge> by_path;
    for (auto& e : reference_edges(q)) by_path.emplace(e.path, e);

    std::set<Id> doomed;
    std::map<Id, std::set<Id>> detach;
    std::vector<Violation> blocked;
    for (const auto& f : soft) {
      if (guarded.count(f.owner)) {
        blocked.push_back(f.violation);
        continue;
      }
      auto e = by_path.find(f.violation.path);
      if (f.violation.kind == "DanglingRef" && e != by_path.end() && e->second.on_delete == OnDelete::Detach) {
        if (detach[f.owner].insert(e->second.target).second) {
          out.actions.push_back({ActionKind::Detach, f.owner, e->second.target, f.violation.path});
        }
      } else if (doomed.insert(f.owner).second) {
        out.actions.push_back({ActionKind::Delete, f.owner, 0, f.violation.path + ": " + f.violation.kind});
      }
    }
    if (!blocked.empty()) {
      bool dangling = std::all_of(blocked.begin(), blocked.end(), [](const Violation& v) { return v.kind == "DanglingRef"; });
      if (dangling) throw RefError(blocked.front().path + ": " + blocked.front().message);
      throw CommandRejected("command rejected", std::move(blocked));
    }

    for (auto& z : q.zone_sections) {
      auto it = detach.find(z.id);
      if (it == detach.end()) continue;
      std::erase_if(z.terminal_refs, [&](Id t) { return it->second.count(t) != 0; });
    }
    auto gone = [&](const auto& o) { return doomed.count(o.id) != 0; };
    std::erase_if(q.zone_sections, gone);
    std::erase_if(q.terminal_texts, gone);
    std::erase_if(q.zone_texts, gone);
    std::erase_if(q.distance_dims, gone);
    std::erase_if(q.radius_dims_plan, gone);
    std::erase_if(q.radius_dims_vert, gone);
    std::erase_if(q.min_width_dims, gone);
    std::erase_if(q.table_entries, gone);
  }

  const auto before = all_object_ids(p);
  const auto after = all_object_ids(q);
  const std::set<Id> before_set(before.begin(), before.end());
  const std::set<Id> after_set(after.begin(), after.end());
  for (Id id : after) {
    if (!before_set.count(id)) out.created.push_back(id);
  }
  for (Id id : before) {
    if (!after_set.count(id)) out.deleted.push_back(id);
  }
  std::sort(out.created.begin(), out.created.end());
  std::sort(out.deleted.begin(), out.deleted.end());

  if (touches_all(c)) {
    if (!(p.general == q.general)) {
      std::vector<Id> all = after;
      std::sort(all.begin(), all.end());
      for (Id id : all) {
        if (!std::binary_search(out.created.begin(), out.created.end(), id)) {
          out.actions.push_back({ActionKind::Touch, id, 0, "general settings"});
        }
      }
    }
  } else {
    std::set<Id> roots = changed_objects(p, q);
    for (Id id : out.deleted) roots.insert(id);
    for (Id id : dependents_of(q, roots)) {
      if (!std::binary_search(out.created.begin(), out.created.end(), id)) {
        out.actions.push_back({ActionKind::Regenerate, id, 0, "depends on a changed object"});
      }
    }
  }
  return out;
}

}  // namespace

std::pair<Project, ChangeSet> apply(const Project& p, const Command& c) {
  auto out = run(p, c);
  ChangeSet cs;
  cs.created = out.created;
  cs.deleted = out.deleted;

  std::set<Id> modified = changed_objects(p, out.project);
  for (const auto& a : out.actions) {
    if (a.kind != ActionKind::Delete) modified.insert(a.target);
    if (a.kind != ActionKind::Regenerate && a.kind != ActionKind::Touch) {
      cs.diagnostics.push_back(std::string(to_string(a.kind)) + " " + std::to_string(a.target) +
                               (a.kind == ActionKind::Detach ? " drops " + std::to_string(a.detached) : "") + " (" +
                               a.reason + ")");
    }
  }
  for (Id id : cs.deleted) modified.erase(id);
  for (Id id : cs.created) modified.erase(id);
  cs.modified.assign(modified.begin(), modified.end());
  return {std::move(out.project), std::move(cs)};
}

std::vector<CascadeAction> cascade_rules(const Command& c, const Project& p) { return run(p, c).actions; }

std::pair<Project, Id> copy_object(const Project& p, Id id, const Point3& delta) {
  Project q = p;
  if (const auto* t = p.find_terminal(id)) {
    AirTerminal copy = *t;
    copy.id = fresh_id(q);
    copy.label = next_label(p, t->label);
    translate(copy, delta);
    const Id fresh = copy.id;
    q.terminals.push_back(std::move(copy));
    return {std::move(q), fresh};
  }
  for (const auto& g : p.grounding) {
    if (g.id != id) continue;
    GroundingElectrode copy = g;
    copy.id = fresh_id(q);
    copy.center_offset.x += delta.x;
    copy.center_offset.y += delta.y;
    q.grounding.push_back(copy);
    return {std::move(q), copy.id};
  }
  if (contains_object(p, id)) throw KindError("only terminals and grounding electrodes can be copied");
  throw RefError("no object with id " + std::to_string(id));
}

}  // namespace lpz

#include "lpz/store.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>

#include "lpz/formula_table.hpp"

namespace lpz {

namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

/// A well-formed document that does not match the schema, addressed by a
/// JSON pointer into it.
struct SchemaError {
  std::string pointer;
  std::string message;
};

std::string escape_token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Field lists, in document order.

template <class V> void reflect(Point2& o, V&& v) { v("x", o.x); v("y", o.y); }
template <class V> void reflect(Point3& o, V&& v) { v("x", o.x); v("y", o.y); v("z", o.z); }
template <class V> void reflect(PaperVec& o, V&& v) { v("dx", o.dx); v("dy", o.dy); }

template <class V>
void reflect(FontSettings& o, V&& v) {
  v("size", o.size);
  v("slant", o.slant);
  v("compression", o.compression);
}

template <class V> void reflect(Rod& o, V&& v) { v("apex", o.apex); v("freestanding", o.freestanding); }
template <class V> void reflect(Mesh& o, V&& v) { v("ring", o.ring); }
template <class V> void reflect(Wire& o, V&& v) { v("support1", o.support1); v("support2", o.support2); }

template <class V>
void reflect(DoubleWire& o, V&& v) {
  v("support1", o.support1);
  v("support2", o.support2);
  v("offset2", o.offset2);
  v("height2", o.height2);
}

template <class V>
void reflect(AirTerminal& o, V&& v) {
  v("id", o.id);
  v("label", o.label);
  v("type_text", o.type_text);
  v("construction", o.construction);
  v("height", o.height);
  v("color", o.color);
  v("linetype", o.linetype);
}

template <class V>
void reflect(PlanLabelLayout& o, V&& v) {
  v("dash_len", o.dash_len);
  v("arrow_offset", o.arrow_offset);
  v("label_offset", o.label_offset);
}

template <class V>
void reflect(OwnLabelLayout& o, V&& v) {
  v("shelf_mid_offset", o.shelf_mid_offset);
  v("above_gap", o.above_gap);
  v("below_gap", o.below_gap);
  v("scale_placement", o.scale_placement);
  v("font", o.font);
}

template <class V>
void reflect(DrawingSection& o, V&& v) {
  v("id", o.id);
  v("letter", o.letter);
  v("rotated", o.rotated);
  v("scale", o.scale);
  v("base_projection", o.base_projection);
  v("cut_a", o.cut_a);
  v("cut_b", o.cut_b);
  v("label_side", o.label_side);
  v("plan_label_layout", o.plan_label_layout);
  v("own_label_layout", o.own_label_layout);
}

template <class V>
void reflect(ZoneSection& o, V&& v) {
  v("id", o.id);
  v("section_ref", o.section_ref);
  v("terminal_refs", o.terminal_refs);
  v("cut_height", o.cut_height);
  v("color", o.color);
  v("linetype", o.linetype);
}

template <class V>
void reflect(TerminalText& o, V&& v) {
  v("id", o.id);
  v("terminal_ref", o.terminal_ref);
  v("section_ref", o.section_ref);
  v("start_offset", o.start_offset);
  v("leader_point_offset", o.leader_point_offset);
  v("leader_to_shelf_end", o.leader_to_shelf_end);
}

template <class V>
void reflect(ZoneLevelText& o, V&& v) {
  v("id", o.id);
  v("zone_section_ref", o.zone_section_ref);
  v("start_offset", o.start_offset);
  v("leader_angle", o.leader_angle);
  v("leader_to_shelf_end", o.leader_to_shelf_end);
  v("two_lines", o.two_lines);
}

template <class V>
void reflect(DistanceDim& o, V&& v) {
  v("id", o.id);
  v("terminal_a", o.terminal_a);
  v("terminal_b", o.terminal_b);
  v("section_ref", o.section_ref);
  v("line_offset", o.line_offset);
  v("text_offset", o.text_offset);
  v("tick_style", o.tick_style);
}

template <class V>
void reflect(RadiusDimPlan& o, V&& v) {
  v("id", o.id);
  v("param_text", o.param_text);
  v("terminal_ref", o.terminal_ref);
  v("zone_section_ref", o.zone_section_ref);
  v("angle", o.angle);
  v("auto_text_pos", o.auto_text_pos);
  v("text_offset", o.text_offset);
  v("manual_text_pos", o.manual_text_pos);
  v("leader", o.leader);
  v("leader_to_shelf_end", o.leader_to_shelf_end);
  v("tick_style", o.tick_style);
  v("include_height_in_text", o.include_height_in_text);
}

template <class V>
void reflect(RadiusDimVert& o, V&& v) {
  v("id", o.id);
  v("param_text", o.param_text);
  v("terminal_ref", o.terminal_ref);
  v("section_ref", o.section_ref);
  v("line_offset", o.line_offset);
  v("text_offset", o.text_offset);
  v("tick_style", o.tick_style);
  v("direction", o.direction);
}

template <class V>
void reflect(MinWidthDim& o, V&& v) {
  v("id", o.id);
  v("param_text", o.param_text);
  v("terminal_a", o.terminal_a);
  v("terminal_b", o.terminal_b);
  v("zone_section_ref", o.zone_section_ref);
  v("auto_text_pos", o.auto_text_pos);
  v("text_offset", o.text_offset);
  v("manual_text_pos", o.manual_text_pos);
  v("leader", o.leader);
  v("leader_to_shelf_end", o.leader_to_shelf_end);
  v("tick_style", o.tick_style);
}

template <class V>
void reflect(TableEntry& o, V&& v) {
  v("id", o.id);
  v("terminal_ref", o.terminal_ref);
  v("terminal_ref2", o.terminal_ref2);
  v("protected_level", o.protected_level);
}

template <class V>
void reflect(GroundingElectrode& o, V&& v) {
  v("id", o.id);
  v("center_offset", o.center_offset);
  v("linetype", o.linetype);
  v("rod_count", o.rod_count);
  v("angle", o.angle);
  v("rod_spacing", o.rod_spacing);
  v("rod_diameter", o.rod_diameter);
}

template <class V>
void reflect(PlanViewSettings& o, V&& v) {
  v("label", o.label);
  v("shelf_mid_offset", o.shelf_mid_offset);
  v("above_gap", o.above_gap);
  v("below_gap", o.below_gap);
  v("scale", o.scale);
  v("scale_placement", o.scale_placement);
  v("font", o.font);
}

template <class V>
void reflect(TableSettings& o, V&& v) {
  v("corner_offset", o.corner_offset);
  v("unit", o.unit);
  v("precision", o.precision);
  v("row_height", o.row_height);
  v("header_linetype", o.header_linetype);
  v("border_linetype", o.border_linetype);
  v("separator_linetype", o.separator_linetype);
  v("font", o.font);
  v("sort_mode", o.sort_mode);
  v("merge_identical_singles", o.merge_identical_singles);
}

template <class V>
void reflect(TerminalSymbolSettings& o, V&& v) {
  v("square_side", o.square_side);
  v("dot_diameter_plan", o.dot_diameter_plan);
  v("dot_diameter_section", o.dot_diameter_section);
  v("triangle_base", o.triangle_base);
}

template <class V>
void reflect(SectionMarkSettings& o, V&& v) {
  v("plan_font", o.plan_font);
  v("own_font", o.own_font);
  v("arrow_tail_len", o.arrow_tail_len);
  v("arrow_len", o.arrow_len);
  v("plan_color", o.plan_color);
  v("own_color", o.own_color);
}

template <class V> void reflect(TextStyle& o, V&& v) { v("font", o.font); v("color", o.color); }

template <class V>
void reflect(ZoneTextStyle& o, V&& v) {
  v("font", o.font);
  v("precision", o.precision);
  v("color", o.color);
}

template <class V>
void reflect(DimsCommon& o, V&& v) {
  v("font", o.font);
  v("extension_overrun", o.extension_overrun);
  v("tick_size", o.tick_size);
}

template <class V> void reflect(DimKindStyle& o, V&& v) { v("precision", o.precision); v("color", o.color); }

template <class V>
void reflect(PerDimKind& o, V&& v) {
  v("distance", o.distance);
  v("radius_plan", o.radius_plan);
  v("radius_vert", o.radius_vert);
  v("min_width", o.min_width);
}

template <class V> void reflect(HatchSettings& o, V&& v) { v("spacing", o.spacing); v("color", o.color); }

template <class V>
void reflect(GeneralSettings& o, V&& v) {
  v("base_point_paper", o.base_point_paper);
  v("zone_type", o.zone_type);
  v("plan_view", o.plan_view);
  v("table", o.table);
  v("terminal_symbols", o.terminal_symbols);
  v("section_marks", o.section_marks);
  v("terminal_text_style", o.terminal_text_style);
  v("zone_text_style", o.zone_text_style);
  v("dims_common", o.dims_common);
  v("per_dim_kind", o.per_dim_kind);
  v("grounding_color", o.grounding_color);
  v("mesh_hatch", o.mesh_hatch);
}

template <class V>
void reflect(TerminalDefaults& o, V&& v) {
  v("construction_variant", o.construction_variant);
  v("freestanding", o.freestanding);
  v("color", o.color);
  v("linetype", o.linetype);
}

template <class V>
void reflect(SectionMarkDefaults& o, V&& v) {
  v("dash_len", o.dash_len);
  v("arrow_offset", o.arrow_offset);
  v("label_offset", o.label_offset);
  v("above_gap", o.above_gap);
  v("below_gap", o.below_gap);
  v("scale_placement", o.scale_placement);
}

template <class V> void reflect(ZoneSectionDefaults& o, V&& v) { v("color", o.color); v("linetype", o.linetype); }

template <class V>
void reflect(DimDefaults& o, V&& v) {
  v("text_offset", o.text_offset);
  v("auto_text_pos", o.auto_text_pos);
  v("leader", o.leader);
  v("leader_to_shelf_end", o.leader_to_shelf_end);
  v("tick_style", o.tick_style);
}

template <class V>
void reflect(GroundingDefaults& o, V&& v) {
  v("linetype", o.linetype);
  v("rod_count", o.rod_count);
  v("angle", o.angle);
  v("rod_spacing", o.rod_spacing);
  v("rod_diameter", o.rod_diameter);
}

template <class V>
void reflect(DefaultSettings& o, V&& v) {
  v("terminal", o.terminal);
  v("section_mark", o.section_mark);
  v("zone_section", o.zone_section);
  v("text_leader_to_shelf_end", o.text_leader_to_shelf_end);
  v("zone_text_two_lines", o.zone_text_two_lines);
  v("dims", o.dims);
  v("plan_radius_include_height", o.plan_radius_include_height);
  v("grounding", o.grounding);
}

template <class V>
void reflect(Project& o, V&& v) {
  v("general", o.general);
  v("defaults", o.defaults);
  v("terminals", o.terminals);
  v("drawing_sections", o.drawing_sections);
  v("zone_sections", o.zone_sections);
  v("terminal_texts", o.terminal_texts);
  v("zone_texts", o.zone_texts);
  v("distance_dims", o.distance_dims);
  v("radius_dims_plan", o.radius_dims_plan);
  v("radius_dims_vert", o.radius_dims_vert);
  v("min_width_dims", o.min_width_dims);
  v("table_entries", o.table_entries);
  v("grounding", o.grounding);
  v("next_id", o.next_id);
}

// Command payloads.

template <class V>
void reflect(AddTerminal& o, V&& v) {
  v("label", o.label);
  v("type_text", o.type_text);
  v("construction", o.construction);
  v("height", o.height);
  v("freestanding", o.freestanding);
  v("color", o.color);
  v("linetype", o.linetype);
}
template <class V> void reflect(DeleteTerminal& o, V&& v) { v("id", o.id); v("section_ref", o.section_ref); }
template <class V>
void reflect(MoveTerminal& o, V&& v) {
  v("id", o.id);
  v("delta", o.delta);
  v("section_ref", o.section_ref);
}
template <class V> void reflect(CopyTerminal& o, V&& v) { v("id", o.id); v("delta", o.delta); }
template <class V>
void reflect(SetTerminalProps& o, V&& v) {
  v("id", o.id);
  v("label", o.label);
  v("type_text", o.type_text);
  v("height", o.height);
  v("freestanding", o.freestanding);
  v("color", o.color);
  v("linetype", o.linetype);
}
template <class V>
void reflect(AddMeshVertex& o, V&& v) {
  v("terminal", o.terminal);
  v("index", o.index);
  v("point", o.point);
}
template <class V>
void reflect(MoveMeshVertex& o, V&& v) {
  v("terminal", o.terminal);
  v("index", o.index);
  v("point", o.point);
}
template <class V> void reflect(DeleteMeshVertex& o, V&& v) { v("terminal", o.terminal); v("index", o.index); }
template <class V>
void reflect(AddDrawingSection& o, V&& v) {
  v("letter", o.letter);
  v("cut_a", o.cut_a);
  v("cut_b", o.cut_b);
  v("base_projection", o.base_projection);
  v("scale", o.scale);
  v("rotated", o.rotated);
  v("label_side", o.label_side);
  v("shelf_mid_offset", o.shelf_mid_offset);
}
template <class V> void reflect(DeleteDrawingSection& o, V&& v) { v("id", o.id); }
template <class V>
void reflect(MoveDrawingSectionMark& o, V&& v) {
  v("id", o.id);
  v("cut_a", o.cut_a);
  v("cut_b", o.cut_b);
  v("base_projection", o.base_projection);
  v("label_side", o.label_side);
  v("rotated", o.rotated);
  v("scale", o.scale);
  v("letter", o.letter);
  v("shelf_mid_offset", o.shelf_mid_offset);
}
template <class V>
void reflect(AddZoneSection& o, V&& v) {
  v("section_ref", o.section_ref);
  v("terminal_refs", o.terminal_refs);
  v("cut_height", o.cut_height);
  v("color", o.color);
  v("linetype", o.linetype);
}
template <class V> void reflect(DeleteZoneSection& o, V&& v) { v("id", o.id); }
template <class V>
void reflect(SetZoneSectionProps& o, V&& v) {
  v("id", o.id);
  v("cut_height", o.cut_height);
  v("color", o.color);
  v("linetype", o.linetype);
}
template <class V>
void reflect(AddTerminalToZoneSection& o, V&& v) {
  v("zone_section", o.zone_section);
  v("terminal", o.terminal);
}
template <class V>
void reflect(RemoveTerminalFromZoneSection& o, V&& v) {
  v("zone_section", o.zone_section);
  v("terminal", o.terminal);
}
template <class V>
void reflect(AddTerminalText& o, V&& v) {
  v("terminal_ref", o.terminal_ref);
  v("section_ref", o.section_ref);
  v("start_offset", o.start_offset);
  v("leader_point_offset", o.leader_point_offset);
  v("leader_to_shelf_end", o.leader_to_shelf_end);
}
template <class V> void reflect(DeleteTerminalText& o, V&& v) { v("id", o.id); }
template <class V>
void reflect(MoveTerminalText& o, V&& v) {
  v("id", o.id);
  v("delta", o.delta);
  v("leader_point_offset", o.leader_point_offset);
}
template <class V>
void reflect(AddZoneLevelText& o, V&& v) {
  v("zone_section_ref", o.zone_section_ref);
  v("start_offset", o.start_offset);
  v("leader_angle", o.leader_angle);
  v("leader_to_shelf_end", o.leader_to_shelf_end);
  v("two_lines", o.two_lines);
}
template <class V> void reflect(DeleteZoneLevelText& o, V&& v) { v("id", o.id); }
template <class V>
void reflect(MoveZoneLevelText& o, V&& v) {
  v("id", o.id);
  v("delta", o.delta);
  v("leader_angle", o.leader_angle);
}
template <class V>
void reflect(AddDistanceDim& o, V&& v) {
  v("terminal_a", o.terminal_a);
  v("terminal_b", o.terminal_b);
  v("section_ref", o.section_ref);
  v("line_offset", o.line_offset);
  v("text_offset", o.text_offset);
  v("tick_style", o.tick_style);
}
template <class V> void reflect(DeleteDistanceDim& o, V&& v) { v("id", o.id); }
template <class V> void reflect(MoveDistanceDim& o, V&& v) { v("id", o.id); v("delta", o.delta); }
template <class V>
void reflect(AddRadiusDimPlan& o, V&& v) {
  v("param_text", o.param_text);
  v("terminal_ref", o.terminal_ref);
  v("zone_section_ref", o.zone_section_ref);
  v("angle", o.angle);
  v("manual_text_pos", o.manual_text_pos);
  v("auto_text_pos", o.auto_text_pos);
  v("text_offset", o.text_offset);
  v("leader", o.leader);
  v("leader_to_shelf_end", o.leader_to_shelf_end);
  v("tick_style", o.tick_style);
  v("include_height_in_text", o.include_height_in_text);
}
template <class V> void reflect(DeleteRadiusDimPlan& o, V&& v) { v("id", o.id); }
template <class V>
void reflect(MoveRadiusDimPlan& o, V&& v) {
  v("id", o.id);
  v("delta", o.delta);
  v("angle", o.angle);
}
template <class V>
void reflect(AddRadiusDimVert& o, V&& v) {
  v("param_text", o.param_text);
  v("terminal_ref", o.terminal_ref);
  v("section_ref", o.section_ref);
  v("line_offset", o.line_offset);
  v("direction", o.direction);
  v("text_offset", o.text_offset);
  v("tick_style", o.tick_style);
}
template <class V> void reflect(DeleteRadiusDimVert& o, V&& v) { v("id", o.id); }
template <class V>
void reflect(MoveRadiusDimVert& o, V&& v) {
  v("id", o.id);
  v("delta", o.delta);
  v("direction", o.direction);
}
template <class V>
void reflect(AddMinWidthDim& o, V&& v) {
  v("param_text", o.param_text);
  v("terminal_a", o.terminal_a);
  v("terminal_b", o.terminal_b);
  v("zone_section_ref", o.zone_section_ref);
  v("manual_text_pos", o.manual_text_pos);
  v("auto_text_pos", o.auto_text_pos);
  v("text_offset", o.text_offset);
  v("leader", o.leader);
  v("leader_to_shelf_end", o.leader_to_shelf_end);
  v("tick_style", o.tick_style);
}
template <class V> void reflect(DeleteMinWidthDim& o, V&& v) { v("id", o.id); }
template <class V> void reflect(MoveMinWidthDim& o, V&& v) { v("id", o.id); v("delta", o.delta); }
template <class V>
void reflect(AddTableEntry& o, V&& v) {
  v("terminal_ref", o.terminal_ref);
  v("terminal_ref2", o.terminal_ref2);
  v("protected_level", o.protected_level);
}
template <class V> void reflect(DeleteTableEntry& o, V&& v) { v("id", o.id); }
template <class V>
void reflect(EditTableEntry& o, V&& v) {
  v("id", o.id);
  v("protected_level", o.protected_level);
  v("terminal_ref", o.terminal_ref);
  v("terminal_ref2", o.terminal_ref2);
  v("clear_ref2", o.clear_ref2);
}
template <class V>
void reflect(AddGroundingElectrode& o, V&& v) {
  v("center_offset", o.center_offset);
  v("linetype", o.linetype);
  v("rod_count", o.rod_count);
  v("angle", o.angle);
  v("rod_spacing", o.rod_spacing);
  v("rod_diameter", o.rod_diameter);
}
template <class V> void reflect(DeleteGroundingElectrode& o, V&& v) { v("id", o.id); }
template <class V>
void reflect(MoveGroundingElectrode& o, V&& v) {
  v("id", o.id);
  v("delta", o.delta);
  v("angle", o.angle);
}
template <class V> void reflect(CopyGroundingElectrode& o, V&& v) { v("id", o.id); v("delta", o.delta); }
template <class V> void reflect(MoveProject& o, V&& v) { v("delta", o.delta); }
template <class V> void reflect(UpdateGeneralSettings& o, V&& v) { v("general", o.general); }
template <class V> void reflect(UpdateDefaults& o, V&& v) { v("defaults", o.defaults); }

// ---------------------------------------------------------------------------
// Generic encode / decode

template <class T> struct is_optional : std::false_type {};
template <class T> struct is_optional<std::optional<T>> : std::true_type {};
template <class T> struct is_vector : std::false_type {};
template <class T> struct is_vector<std::vector<T>> : std::true_type {};

template <class E> constexpr int enum_count();
template <> constexpr int enum_count<ZoneType>() { return 2; }
template <> constexpr int enum_count<Color>() { return 8; }
template <> constexpr int enum_count<Linetype>() { return 4; }
template <> constexpr int enum_count<TickStyle>() { return 3; }
template <> constexpr int enum_count<LeaderMode>() { return 4; }
template <> constexpr int enum_count<ScalePlacement>() { return 2; }
template <> constexpr int enum_count<Side>() { return 2; }
template <> constexpr int enum_count<LengthUnit>() { return 3; }
template <> constexpr int enum_count<SortMode>() { return 3; }
template <> constexpr int enum_count<ConstructionKind>() { return 4; }

template <class T> ojson enc(const T& v);

struct Writer {
  ojson& out;
  template <class T>
  void operator()(const char* key, const T& v) {
    out[key] = enc(v);
  }
};

template <class T>
ojson enc(const T& v) {
  if constexpr (std::is_same_v<T, bool> || std::is_same_v<T, double> || std::is_same_v<T, int> ||
                std::is_same_v<T, std::uint64_t> || std::is_same_v<T, std::string>) {
    return v;
  } else if constexpr (std::is_enum_v<T>) {
    return to_string(v);
  } else if constexpr (is_optional<T>::value) {
    return v ? enc(*v) : ojson(nullptr);
  } else if constexpr (is_vector<T>::value) {
    ojson a = ojson::array();
    for (const auto& e : v) a.push_back(enc(e));
    return a;
  } else if constexpr (std::is_same_v<T, Construction>) {
    ojson o = ojson::object();
    o["kind"] = to_string(kind_of(v));
    std::visit([&](const auto& k) { reflect(const_cast<std::decay_t<decltype(k)>&>(k), Writer{o}); }, v);
    return o;
  } else {
    ojson o = ojson::object();
    reflect(const_cast<T&>(v), Writer{o});
    return o;
  }
}

template <class T> void dec(const json& j, T& out, const std::string& ptr, bool lenient);

struct Reader {
  const json& j;
  const std::string& ptr;
  bool lenient;
  std::set<std::string> seen;

  template <class T>
  void operator()(const char* key, T& v) {
    seen.insert(key);
    auto it = j.find(key);
    if (it == j.end()) {
      if (lenient) return;
      throw SchemaError{ptr, std::string("missing key \"") + key + "\""};
    }
    dec(*it, v, ptr + "/" + key, lenient);
  }
};

template <class T>
void dec_fields(const json& j, T& out, const std::string& ptr, bool lenient, const char* extra = nullptr) {
  if (!j.is_object()) throw SchemaError{ptr, "expected an object"};
  Reader r{j, ptr, lenient, {}};
  reflect(out, r);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!r.seen.count(it.key()) && !(extra && it.key() == extra)) {
      throw SchemaError{ptr + "/" + escape_token(it.key()), "unknown key \"" + it.key() + "\""};
    }
  }
}

template <std::size_t... I>
Construction make_construction(ConstructionKind k, std::index_sequence<I...>) {
  Construction c;
  ((static_cast<std::size_t>(k) == I ? (c.template emplace<I>(), true) : false) || ...);
  return c;
}

template <class T>
void dec(const json& j, T& out, const std::string& ptr, bool lenient) {
  if constexpr (std::is_same_v<T, bool>) {
    if (!j.is_boolean()) throw SchemaError{ptr, "expected true or false"};
    out = j.get<bool>();
  } else if constexpr (std::is_same_v<T, double>) {
    if (!j.is_number()) throw SchemaError{ptr, "expected a number"};
    out = j.get<double>();
  } else if constexpr (std::is_same_v<T, int>) {
    if (!j.is_number_integer()) throw SchemaError{ptr, "expected an integer"};
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      throw SchemaError{ptr, "integer out of range"};
    }
    out = static_cast<int>(v);
  } else if constexpr (std::is_same_v<T, std::uint64_t>) {
    if (!j.is_number_unsigned()) throw SchemaError{ptr, "expected a non-negative integer"};
    out = j.get<std::uint64_t>();
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!j.is_string()) throw SchemaError{ptr, "expected a string"};
    out = j.get<std::string>();
  } else if constexpr (std::is_enum_v<T>) {
    if (!j.is_string()) throw SchemaError{ptr, "expected a string"};
    const auto& s = j.get_ref<const std::string&>();
    for (int i = 0; i < enum_count<T>(); ++i) {
      if (s == to_string(static_cast<T>(i))) {
        out = static_cast<T>(i);
        return;
      }
    }
    throw SchemaError{ptr, "unknown value \"" + s + "\""};
  } else if constexpr (is_optional<T>::value) {
    if (j.is_null()) {
      out.reset();
    } else {
      out.emplace();
      dec(j, *out, ptr, lenient);
    }
  } else if constexpr (is_vector<T>::value) {
    if (!j.is_array()) throw SchemaError{ptr, "expected an array"};
    out.clear();
    out.resize(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) dec(j[i], out[i], ptr + "/" + std::to_string(i), lenient);
  } else if constexpr (std::is_same_v<T, Construction>) {
    if (!j.is_object()) throw SchemaError{ptr, "expected an object"};
    auto it = j.find("kind");
    if (it == j.end()) throw SchemaError{ptr, "missing key \"kind\""};
    ConstructionKind k{};
    dec(*it, k, ptr + "/kind", lenient);
    out = make_construction(k, std::make_index_sequence<std::variant_size_v<Construction>>{});
    std::visit([&](auto& c) { dec_fields(j, c, ptr, lenient, "kind"); }, out);
  } else {
    dec_fields(j, out, ptr, lenient);
  }
}

// ---------------------------------------------------------------------------
// Positions

struct LineCol {
  int line = 1;
  int column = 1;
};

LineCol line_col(std::string_view text, std::size_t pos) {
  LineCol lc;
  pos = std::min(pos, text.size());
  for (std::size_t i = 0; i < pos; ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.column = 1;
    } else {
      ++lc.column;
    }
  }
  return lc;
}

/// Walks already-validated JSON text to the value a pointer names; stops at
/// the deepest value that exists.
class Locator {
 public:
  explicit Locator(std::string_view s) : s_(s) {}

  std::size_t find(const std::string& pointer) {
    std::vector<std::string> tokens;
    std::size_t start = 1;
    while (start <= pointer.size() && !pointer.empty()) {
      const auto end = std::min(pointer.find('/', start), pointer.size());
      std::string tok = pointer.substr(start, end - start);
      for (std::size_t p = 0; (p = tok.find("~1", p)) != std::string::npos;) tok.replace(p, 2, "/");
      for (std::size_t p = 0; (p = tok.find("~0", p)) != std::string::npos;) tok.replace(p, 2, "~");
      tokens.push_back(std::move(tok));
      start = end + 1;
    }
    ws();
    for (const auto& tok : tokens) {
      const std::size_t here = i_;
      if (!step(tok)) return here;
    }
    return i_;
  }

 private:
  bool more() const { return i_ < s_.size(); }

  void ws() {
    while (more() && (s_[i_] == ' ' || s_[i_] == '\n' || s_[i_] == '\r' || s_[i_] == '\t')) ++i_;
  }

  std::string string() {
    std::string out;
    ++i_;
    while (more() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) {
        ++i_;
        const char c = s_[i_];
        out += c == 'n' ? '\n' : c == 't' ? '\t' : c == 'r' ? '\r' : c == 'b' ? '\b' : c == 'f' ? '\f' : c;
        if (c == 'u') i_ += 4;
      } else {
        out += s_[i_];
      }
      ++i_;
    }
    ++i_;
    return out;
  }

  void skip() {
    ws();
    if (!more()) return;
    const char c = s_[i_];
    if (c == '"') {
      string();
    } else if (c == '{' || c == '[') {
      int depth = 0;
      while (more()) {
        const char d = s_[i_];
        if (d == '"') {
          string();
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') --depth;
        ++i_;
        if (depth == 0) break;
      }
    } else {
      while (more() && s_[i_] != ',' && s_[i_] != '}' && s_[i_] != ']' && s_[i_] != ' ' && s_[i_] != '\n') ++i_;
    }
  }

  bool step(const std::string& tok) {
    if (!more()) return false;
    if (s_[i_] == '{') {
      ++i_;
      for (;;) {
        ws();
        if (!more() || s_[i_] != '"') return false;
        const auto key = string();
        ws();
        ++i_;  // ':'
        ws();
        if (key == tok) return true;
        skip();
        ws();
        if (!more() || s_[i_] != ',') return false;
        ++i_;
      }
    }
    if (s_[i_] == '[') {
      std::size_t n = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') return false;
        n = n * 10 + static_cast<std::size_t>(c - '0');
      }
      ++i_;
      for (std::size_t k = 0;; ++k) {
        ws();
        if (!more() || s_[i_] == ']') return false;
        if (k == n) return true;
        skip();
        ws();
        if (!more() || s_[i_] != ',') return false;
        ++i_;
      }
    }
    return false;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

[[noreturn]] void throw_schema(std::string_view text, const SchemaError& e) {
  const auto lc = line_col(text, Locator(text).find(e.pointer));
  throw ParseError((e.pointer.empty() ? std::string("document") : e.pointer) + ": " + e.message, lc.line, lc.column);
}

/// Parses JSON text, rejecting duplicate keys. Syntax errors become ParseError.
json parse_strict(std::string_view text) {
  struct Frame {
    bool object;
    std::set<std::string> keys;
    std::string key;
    long index = -1;
  };
  std::vector<Frame> stack;
  auto pointer = [&]() {
    std::string p;
    for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
      p += "/" + (stack[i].object ? escape_token(stack[i].key) : std::to_string(stack[i].index));
    }
    return p;
  };
  auto child = [&]() {
    if (!stack.empty() && !stack.back().object) ++stack.back().index;
  };
  json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
    using E = json::parse_event_t;
    switch (ev) {
      case E::object_start: child(); stack.push_back({true, {}, {}, -1}); break;
      case E::array_start: child(); stack.push_back({false, {}, {}, -1}); break;
      case E::object_end:
      case E::array_end: stack.pop_back(); break;
      case E::key: {
        auto k = parsed.get<std::string>();
        if (!stack.back().keys.insert(k).second) {
          stack.back().key = k;
          stack.push_back({true, {}, {}, -1});
          throw SchemaError{pointer(), "duplicate key \"" + k + "\""};
        }
        stack.back().key = std::move(k);
        break;
      }
      case E::value: child(); break;
    }
    return true;
  };
  try {
    return json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    const auto lc = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    const auto colon = what.find(": ");
    throw ParseError("malformed JSON: " + (colon == std::string::npos ? what : what.substr(colon + 2)), lc.line,
                     lc.column);
  } catch (const SchemaError& e) {
    throw_schema(text, e);
  }
}

std::string dump(const ojson& doc) {
  try {
    return doc.dump(2) + "\n";
  } catch (const ojson::type_error&) {
    throw SaveRefused({{"", "Encoding", "text fields must be valid UTF-8"}});
  }
}

template <std::size_t... I>
Command make_command(const std::string& name, const json& payload, std::index_sequence<I...>) {
  std::optional<Command> out;
  const bool found = ((name == std::variant_alternative_t<I, Command>::kName
                           ? (out.emplace(std::in_place_index<I>), dec_fields(payload, std::get<I>(*out), "/payload", true), true)
                           : false) ||
                      ...);
  if (!found) throw SchemaError{"/kind", "unknown command \"" + name + "\""};
  return std::move(*out);
}

}  // namespace

// ---------------------------------------------------------------------------

nlohmann::ordered_json project_to_json(const Project& p) { return enc(p); }
nlohmann::ordered_json settings_to_json(const GeneralSettings& g) { return enc(g); }
nlohmann::ordered_json defaults_to_json(const DefaultSettings& d) { return enc(d); }

std::string save(const Project& p) {
  if (auto vs = validate(p); !vs.empty()) throw SaveRefused(std::move(vs));
  ojson doc = ojson::object();
  doc["format_version"] = kFormatVersion;
  doc["formula_table_checksum"] = FormulaTable::standard().checksum();
  doc["project"] = enc(p);
  return dump(doc);
}

Project load(std::string_view text, std::vector<std::string>* warnings) {
  const json doc = parse_strict(text);
  Project p;
  try {
    if (!doc.is_object()) throw SchemaError{"", "expected an object"};
    auto v = doc.find("format_version");
    if (v == doc.end()) throw SchemaError{"", "missing key \"format_version\""};
    if (!v->is_number_integer()) throw SchemaError{"/format_version", "expected an integer"};
    if (v->get<std::int64_t>() != kFormatVersion) {
      throw VersionError("unsupported format_version " + std::to_string(v->get<std::int64_t>()) + " (this build reads " +
                         std::to_string(kFormatVersion) + ")");
    }
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (it.key() != "format_version" && it.key() != "formula_table_checksum" && it.key() != "project") {
        throw SchemaError{"/" + escape_token(it.key()), "unknown key \"" + it.key() + "\""};
      }
    }
    auto sum = doc.find("formula_table_checksum");
    if (sum == doc.end()) throw SchemaError{"", "missing key \"formula_table_checksum\""};
    if (!sum->is_string()) throw SchemaError{"/formula_table_checksum", "expected a string"};
    if (sum->get<std::string>() != FormulaTable::standard().checksum() && warnings) {
      warnings->push_back("formula table checksum differs from the bundled table; zones are computed with the bundled one");
    }
    auto body = doc.find("project");
    if (body == doc.end()) throw SchemaError{"", "missing key \"project\""};
    dec(*body, p, "/project", false);
  } catch (const SchemaError& e) {
    throw_schema(text, e);
  }
  if (auto vs = validate(p); !vs.empty()) throw IntegrityError(std::move(vs));
  return p;
}

nlohmann::ordered_json command_to_json(const Command& c) {
  ojson o = ojson::object();
  o["kind"] = command_name(c);
  o["payload"] = std::visit([](const auto& v) { return enc(v); }, c);
  return o;
}

std::string encode_command(const Command& c) { return dump(command_to_json(c)); }

Command decode_command(std::string_view text) {
  const json doc = parse_strict(text);
  try {
    if (!doc.is_object()) throw SchemaError{"", "expected an object"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (it.key() != "kind" && it.key() != "payload") {
        throw SchemaError{"/" + escape_token(it.key()), "unknown key \"" + it.key() + "\""};
      }
    }
    auto kind = doc.find("kind");
    if (kind == doc.end() || !kind->is_string()) throw SchemaError{"", "missing command kind"};
    static const json empty = json::object();
    auto payload = doc.find("payload");
    return make_command(kind->get<std::string>(), payload == doc.end() ? empty : *payload,
                        std::make_index_sequence<std::variant_size_v<Command>>{});
  } catch (const SchemaError& e) {
    throw_schema(text, e);
  }
}

void save_file(const std::string& path, const Project& p) {
  const std::string text = save(p);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out << text;
    out.flush();
    if (!out) throw Error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Project load_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(ss.str(), warnings);
}

}  // namespace lpz

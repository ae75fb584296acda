#pragma once

// Parametric representation of a lightning-protection project.
//
// All Nature lengths are millimetres in the internal right-handed frame whose
// origin (the base point) sits at the zero elevation mark. Paper lengths are
// millimetres on the printed sheet. Every object carries a project-unique id;
// section references use id 0 for the plan view.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpz/errors.hpp"

namespace lpz {

using Id = std::uint64_t;

/// Section reference value meaning "the plan view".
inline constexpr Id kPlan = 0;

/// Maximum terminal height the zone formulas are valid for (150 m).
inline constexpr double kMaxTerminalHeight = 150'000.0;

struct Point2 {
  double x = 0;
  double y = 0;
  bool operator==(const Point2&) const = default;
};

struct Point3 {
  double x = 0;
  double y = 0;
  double z = 0;
  bool operator==(const Point3&) const = default;
  Point2 xy() const { return {x, y}; }
};

struct PaperVec {
  double dx = 0;
  double dy = 0;
  bool operator==(const PaperVec&) const = default;
};

enum class ZoneType { A, B };
enum class Color { Black, Red, Green, Blue, Cyan, Magenta, Yellow, Gray };
enum class Linetype { Solid, Dashed, DashDot, ThickSolid };
enum class TickStyle { ArrowIn, ArrowOut, Tick };
enum class LeaderMode { None, Mid, Start, End };
enum class ScalePlacement { Inline, OwnLine };
enum class Side { Left, Right };
enum class LengthUnit { Mm, Cm, M };
enum class SortMode { None, Alphabetical, Grouped };
enum class ConstructionKind { Rod, Mesh, Wire, DoubleWire };

struct FontSettings {
  double size = 3.5;
  double slant = 0.0;
  double compression = 1.0;
  bool operator==(const FontSettings&) const = default;
};

// ---------------------------------------------------------------------------
// Air terminals

struct Rod {
  Point3 apex;
  bool freestanding = true;
  bool operator==(const Rod&) const = default;
};

/// Horizontal mesh bounded by a counter-clockwise ring.
struct Mesh {
  std::vector<Point3> ring;
  bool operator==(const Mesh&) const = default;
};

struct Wire {
  Point3 support1;
  Point3 support2;
  bool operator==(const Wire&) const = default;
};

/// Wire 2 runs parallel to wire 1, shifted by `offset2` along the left normal
/// of support1->support2, with its supports at elevation `height2`.
struct DoubleWire {
  Point3 support1;
  Point3 support2;
  double offset2 = 0;
  double height2 = 0;
  bool operator==(const DoubleWire&) const = default;
};

using Construction = std::variant<Rod, Mesh, Wire, DoubleWire>;

ConstructionKind kind_of(const Construction& c);

struct AirTerminal {
  Id id = 0;
  std::string label;
  std::string type_text;
  Construction construction;
  std::optional<double> height;
  Color color = Color::Black;
  Linetype linetype = Linetype::Solid;
  bool operator==(const AirTerminal&) const = default;
};

// ---------------------------------------------------------------------------
// Drawing sections and zone sections

struct PlanLabelLayout {
  double dash_len = 8.0;
  double arrow_offset = 2.0;
  double label_offset = 4.0;
  bool operator==(const PlanLabelLayout&) const = default;
};

struct OwnLabelLayout {
  PaperVec shelf_mid_offset;
  double above_gap = 1.0;
  double below_gap = 1.0;
  ScalePlacement scale_placement = ScalePlacement::Inline;
  FontSettings font{5.0, 0.0, 1.0};
  bool operator==(const OwnLabelLayout&) const = default;
};

/// A displaced vertical section. The viewer looks toward `label_side` of the
/// cut segment (taken in the direction cut_segment[0] -> cut_segment[1]).
struct DrawingSection {
  Id id = 0;
  std::string letter;
  bool rotated = false;
  double scale = 0.01;
  Point2 base_projection;
  Point2 cut_a;
  Point2 cut_b;
  Side label_side = Side::Left;
  PlanLabelLayout plan_label_layout;
  OwnLabelLayout own_label_layout;
  bool operator==(const DrawingSection&) const = default;
};

struct ZoneSection {
  Id id = 0;
  Id section_ref = kPlan;
  std::vector<Id> terminal_refs;
  std::optional<double> cut_height;
  Color color = Color::Red;
  Linetype linetype = Linetype::Dashed;
  bool operator==(const ZoneSection&) const = default;
};

// ---------------------------------------------------------------------------
// Annotations

struct TerminalText {
  Id id = 0;
  Id terminal_ref = 0;
  Id section_ref = kPlan;
  PaperVec start_offset;
  PaperVec leader_point_offset;
  bool leader_to_shelf_end = false;
  bool operator==(const TerminalText&) const = default;
};

struct ZoneLevelText {
  Id id = 0;
  Id zone_section_ref = 0;
  PaperVec start_offset;
  double leader_angle = 0;
  bool leader_to_shelf_end = false;
  bool two_lines = false;
  bool operator==(const ZoneLevelText&) const = default;
};

struct DistanceDim {
  Id id = 0;
  Id terminal_a = 0;
  Id terminal_b = 0;
  Id section_ref = kPlan;
  PaperVec line_offset;
  double text_offset = 1.0;
  TickStyle tick_style = TickStyle::Tick;
  bool operator==(const DistanceDim&) const = default;
};

struct RadiusDimPlan {
  Id id = 0;
  std::string param_text;
  Id terminal_ref = 0;
  Id zone_section_ref = 0;
  double angle = 0;
  bool auto_text_pos = true;
  double text_offset = 1.0;
  PaperVec manual_text_pos;
  LeaderMode leader = LeaderMode::None;
  bool leader_to_shelf_end = false;
  TickStyle tick_style = TickStyle::ArrowIn;
  bool include_height_in_text = false;
  bool operator==(const RadiusDimPlan&) const = default;
};

struct RadiusDimVert {
  Id id = 0;
  std::string param_text;
  Id terminal_ref = 0;
  Id section_ref = 0;
  PaperVec line_offset;
  double text_offset = 1.0;
  TickStyle tick_style = TickStyle::ArrowIn;
  Side direction = Side::Right;
  bool operator==(const RadiusDimVert&) const = default;
};

/// Minimum-width dimension of a double terminal. For a double wire both refs
/// name the same terminal.
struct MinWidthDim {
  Id id = 0;
  std::string param_text;
  Id terminal_a = 0;
  Id terminal_b = 0;
  Id zone_section_ref = 0;
  bool auto_text_pos = true;
  double text_offset = 1.0;
  PaperVec manual_text_pos;
  LeaderMode leader = LeaderMode::None;
  bool leader_to_shelf_end = false;
  TickStyle tick_style = TickStyle::ArrowIn;
  bool operator==(const MinWidthDim&) const = default;
};

struct TableEntry {
  Id id = 0;
  Id terminal_ref = 0;
  std::optional<Id> terminal_ref2;
  double protected_level = 0;
  bool operator==(const TableEntry&) const = default;
};

struct GroundingElectrode {
  Id id = 0;
  Point2 center_offset;
  Linetype linetype = Linetype::Solid;
  int rod_count = 3;
  double angle = 0;
  double rod_spacing = 5000;
  double rod_diameter = 16;
  bool operator==(const GroundingElectrode&) const = default;
};

// ---------------------------------------------------------------------------
// Settings

struct PlanViewSettings {
  std::string label = "План";
  PaperVec shelf_mid_offset{0.0, -20.0};
  double above_gap = 1.0;
  double below_gap = 1.0;
  double scale = 0.005;
  ScalePlacement scale_placement = ScalePlacement::Inline;
  FontSettings font{5.0, 0.0, 1.0};
  bool operator==(const PlanViewSettings&) const = default;
};

struct TableSettings {
  PaperVec corner_offset{0.0, -40.0};
  LengthUnit unit = LengthUnit::M;
  int precision = 2;
  double row_height = 8.0;
  Linetype header_linetype = Linetype::ThickSolid;
  Linetype border_linetype = Linetype::ThickSolid;
  Linetype separator_linetype = Linetype::Solid;
  FontSettings font{2.5, 0.0, 1.0};
  SortMode sort_mode = SortMode::None;
  bool merge_identical_singles = true;
  bool operator==(const TableSettings&) const = default;
};

struct TerminalSymbolSettings {
  double square_side = 3.0;
  double dot_diameter_plan = 1.5;
  double dot_diameter_section = 1.5;
  double triangle_base = 2.0;
  bool operator==(const TerminalSymbolSettings&) const = default;
};

struct SectionMarkSettings {
  FontSettings plan_font{5.0, 0.0, 1.0};
  FontSettings own_font{5.0, 0.0, 1.0};
  double arrow_tail_len = 6.0;
  double arrow_len = 3.0;
  Color plan_color = Color::Black;
  Color own_color = Color::Black;
  bool operator==(const SectionMarkSettings&) const = default;
};

struct TextStyle {
  FontSettings font;
  Color color = Color::Black;
  bool operator==(const TextStyle&) const = default;
};

struct ZoneTextStyle {
  FontSettings font;
  int precision = 2;
  Color color = Color::Red;
  bool operator==(const ZoneTextStyle&) const = default;
};

struct DimsCommon {
  FontSettings font{2.5, 0.0, 1.0};
  double extension_overrun = 2.0;
  double tick_size = 2.5;
  bool operator==(const DimsCommon&) const = default;
};

struct DimKindStyle {
  int precision = 2;
  Color color = Color::Black;
  bool operator==(const DimKindStyle&) const = default;
};

struct PerDimKind {
  DimKindStyle distance;
  DimKindStyle radius_plan;
  DimKindStyle radius_vert;
  DimKindStyle min_width;
  bool operator==(const PerDimKind&) const = default;
};

/// Working hatch drawn over meshes: two families at +45 and -45 degrees.
struct HatchSettings {
  double spacing = 3.0;
  Color color = Color::Gray;
  bool operator==(const HatchSettings&) const = default;
};

/// Changing any of these re-styles every existing element.
struct GeneralSettings {
  Point2 base_point_paper{100.0, 150.0};
  ZoneType zone_type = ZoneType::B;
  PlanViewSettings plan_view;
  TableSettings table;
  TerminalSymbolSettings terminal_symbols;
  SectionMarkSettings section_marks;
  TextStyle terminal_text_style;
  ZoneTextStyle zone_text_style;
  DimsCommon dims_common;
  PerDimKind per_dim_kind;
  Color grounding_color = Color::Blue;
  HatchSettings mesh_hatch;
  bool operator==(const GeneralSettings&) const = default;
};

struct TerminalDefaults {
  ConstructionKind construction_variant = ConstructionKind::Rod;
  bool freestanding = true;
  Color color = Color::Black;
  Linetype linetype = Linetype::Solid;
  bool operator==(const TerminalDefaults&) const = default;
};

struct SectionMarkDefaults {
  double dash_len = 8.0;
  double arrow_offset = 2.0;
  double label_offset = 4.0;
  double above_gap = 1.0;
  double below_gap = 1.0;
  ScalePlacement scale_placement = ScalePlacement::Inline;
  bool operator==(const SectionMarkDefaults&) const = default;
};

struct ZoneSectionDefaults {
  Color color = Color::Red;
  Linetype linetype = Linetype::Dashed;
  bool operator==(const ZoneSectionDefaults&) const = default;
};

struct DimDefaults {
  double text_offset = 1.0;
  bool auto_text_pos = true;
  LeaderMode leader = LeaderMode::None;
  bool leader_to_shelf_end = false;
  TickStyle tick_style = TickStyle::ArrowIn;
  bool operator==(const DimDefaults&) const = default;
};

struct GroundingDefaults {
  Linetype linetype = Linetype::Solid;
  int rod_count = 3;
  double angle = 0;
  double rod_spacing = 5000;
  double rod_diameter = 16;
  bool operator==(const GroundingDefaults&) const = default;
};

/// Only consulted when new objects are created.
struct DefaultSettings {
  TerminalDefaults terminal;
  SectionMarkDefaults section_mark;
  ZoneSectionDefaults zone_section;
  bool text_leader_to_shelf_end = false;
  bool zone_text_two_lines = false;
  DimDefaults dims;
  bool plan_radius_include_height = false;
  GroundingDefaults grounding;
  bool operator==(const DefaultSettings&) const = default;
};

// ---------------------------------------------------------------------------

struct Project {
  GeneralSettings general;
  DefaultSettings defaults;
  std::vector<AirTerminal> terminals;
  std::vector<DrawingSection> drawing_sections;
  std::vector<ZoneSection> zone_sections;
  std::vector<TerminalText> terminal_texts;
  std::vector<ZoneLevelText> zone_texts;
  std::vector<DistanceDim> distance_dims;
  std::vector<RadiusDimPlan> radius_dims_plan;
  std::vector<RadiusDimVert> radius_dims_vert;
  std::vector<MinWidthDim> min_width_dims;
  std::vector<TableEntry> table_entries;
  std::vector<GroundingElectrode> grounding;
  Id next_id = 1;

  bool operator==(const Project&) const = default;

  const AirTerminal* find_terminal(Id id) const;
  const DrawingSection* find_drawing_section(Id id) const;
  const ZoneSection* find_zone_section(Id id) const;
  /// The zone section placed on drawing section `section_id`, if any.
  const ZoneSection* zone_section_of(Id section_id) const;
};

/// Creates an empty project; throws ValidationError when a settings field is
/// out of range.
Project new_project(const GeneralSettings& general = {}, const DefaultSettings& defaults = {});

/// Every violated invariant, in path order. Empty means the project is valid.
std::vector<Violation> validate(const Project& p);

/// Range checks for settings blocks alone (used by new_project and by the
/// settings-update commands).
std::vector<Violation> validate_settings(const GeneralSettings& g, const DefaultSettings& d);

/// Shoelace signed area of a horizontal ring in mm^2, positive iff CCW.
/// Throws GeometryError when the vertices do not share one elevation.
double mesh_ring_area(const std::vector<Point3>& ring);

/// True when two segments of the ring cross. Segments sharing an endpoint
/// (adjacent edges) only count when they overlap collinearly.
bool ring_self_intersects(const std::vector<Point2>& ring);

/// Rod mounting elevation: apex.z - height.
double rod_mount_z(const AirTerminal& t);

/// Elevation of the top of the terminal: apex, support or ring height.
double top_elevation(const AirTerminal& t);

/// Plan points of a terminal in construction order (apex; ring; supports;
/// for double wires the two wire-1 supports then the two wire-2 supports).
std::vector<Point3> terminal_points(const AirTerminal& t);

/// Wire-2 supports of a double wire.
std::pair<Point3, Point3> second_wire(const DoubleWire& w);

/// Label-aware ordering: digit runs compare numerically ("МА-2" < "МА-10").
bool natural_less(const std::string& a, const std::string& b);

const char* to_string(ZoneType v);
const char* to_string(Color v);
const char* to_string(Linetype v);
const char* to_string(TickStyle v);
const char* to_string(LeaderMode v);
const char* to_string(ScalePlacement v);
const char* to_string(Side v);
const char* to_string(LengthUnit v);
const char* to_string(SortMode v);
const char* to_string(ConstructionKind v);

}  // namespace lpz

#pragma once

// Editing commands. apply() is the single-step kernel behind every menu
// operation: it mutates a copy of the project, resolves the fallout through
// the reference graph, and either returns a valid project or throws with the
// input untouched.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lpz/model.hpp"

namespace lpz {

/// The command was understood but would leave the project invalid.
class CommandRejected : public ViolationError {
 public:
  CommandRejected(const std::string& what, std::vector<Violation> vs) : ViolationError(what, std::move(vs)) {}
};

// ---------------------------------------------------------------------------
// Terminals. Unset optionals take their value from the project defaults.

struct AddTerminal {
  static constexpr const char* kName = "AddTerminal";
  std::string label;
  std::string type_text;
  Construction construction;
  /// Rods default to apex.z when freestanding; wires to the support elevation.
  std::optional<double> height;
  std::optional<bool> freestanding;
  std::optional<Color> color;
  std::optional<Linetype> linetype;
};

/// In a drawing-section context only that section's zone section loses the
/// terminal.
struct DeleteTerminal {
  static constexpr const char* kName = "DeleteTerminal";
  Id id = 0;
  Id section_ref = kPlan;
};

/// Plan moves are horizontal; section moves are vertical and change the
/// terminal height with its mounting point fixed.
struct MoveTerminal {
  static constexpr const char* kName = "MoveTerminal";
  Id id = 0;
  Point3 delta;
  Id section_ref = kPlan;
};

struct CopyTerminal {
  static constexpr const char* kName = "CopyTerminal";
  Id id = 0;
  Point3 delta;
};

struct SetTerminalProps {
  static constexpr const char* kName = "SetTerminalProps";
  Id id = 0;
  std::optional<std::string> label;
  std::optional<std::string> type_text;
  std::optional<double> height;
  std::optional<bool> freestanding;
  std::optional<Color> color;
  std::optional<Linetype> linetype;
};

struct AddMeshVertex {
  static constexpr const char* kName = "AddMeshVertex";
  Id terminal = 0;
  /// Insert before this ring position; ring.size() appends.
  std::size_t index = 0;
  Point2 point;
};

struct MoveMeshVertex {
  static constexpr const char* kName = "MoveMeshVertex";
  Id terminal = 0;
  std::size_t index = 0;
  Point2 point;
};

struct DeleteMeshVertex {
  static constexpr const char* kName = "DeleteMeshVertex";
  Id terminal = 0;
  std::size_t index = 0;
};

// ---------------------------------------------------------------------------
// Sections

struct AddDrawingSection {
  static constexpr const char* kName = "AddDrawingSection";
  std::string letter;
  Point2 cut_a;
  Point2 cut_b;
  Point2 base_projection;
  std::optional<double> scale;
  bool rotated = false;
  Side label_side = Side::Left;
  PaperVec shelf_mid_offset{0.0, -20.0};
};

struct DeleteDrawingSection {
  static constexpr const char* kName = "DeleteDrawingSection";
  Id id = 0;
};

struct MoveDrawingSectionMark {
  static constexpr const char* kName = "MoveDrawingSectionMark";
  Id id = 0;
  std::optional<Point2> cut_a;
  std::optional<Point2> cut_b;
  std::optional<Point2> base_projection;
  std::optional<Side> label_side;
  std::optional<bool> rotated;
  std::optional<double> scale;
  std::optional<std::string> letter;
  std::optional<PaperVec> shelf_mid_offset;
};

struct AddZoneSection {
  static constexpr const char* kName = "AddZoneSection";
  Id section_ref = kPlan;
  std::vector<Id> terminal_refs;
  std::optional<double> cut_height;
  std::optional<Color> color;
  std::optional<Linetype> linetype;
};

struct DeleteZoneSection {
  static constexpr const char* kName = "DeleteZoneSection";
  Id id = 0;
};

struct SetZoneSectionProps {
  static constexpr const char* kName = "SetZoneSectionProps";
  Id id = 0;
  std::optional<double> cut_height;
  std::optional<Color> color;
  std::optional<Linetype> linetype;
};

struct AddTerminalToZoneSection {
  static constexpr const char* kName = "AddTerminalToZoneSection";
  Id zone_section = 0;
  Id terminal = 0;
};

struct RemoveTerminalFromZoneSection {
  static constexpr const char* kName = "RemoveTerminalFromZoneSection";
  Id zone_section = 0;
  Id terminal = 0;
};

// ---------------------------------------------------------------------------
// Annotations

struct AddTerminalText {
  static constexpr const char* kName = "AddTerminalText";
  Id terminal_ref = 0;
  Id section_ref = kPlan;
  PaperVec start_offset;
  PaperVec leader_point_offset;
  std::optional<bool> leader_to_shelf_end;
};

struct DeleteTerminalText {
  static constexpr const char* kName = "DeleteTerminalText";
  Id id = 0;
};

struct MoveTerminalText {
  static constexpr const char* kName = "MoveTerminalText";
  Id id = 0;
  PaperVec delta;
  std::optional<PaperVec> leader_point_offset;
};

struct AddZoneLevelText {
  static constexpr const char* kName = "AddZoneLevelText";
  Id zone_section_ref = 0;
  PaperVec start_offset;
  double leader_angle = 0;
  std::optional<bool> leader_to_shelf_end;
  std::optional<bool> two_lines;
};

struct DeleteZoneLevelText {
  static constexpr const char* kName = "DeleteZoneLevelText";
  Id id = 0;
};

struct MoveZoneLevelText {
  static constexpr const char* kName = "MoveZoneLevelText";
  Id id = 0;
  PaperVec delta;
  std::optional<double> leader_angle;
};

struct AddDistanceDim {
  static constexpr const char* kName = "AddDistanceDim";
  Id terminal_a = 0;
  Id terminal_b = 0;
  Id section_ref = kPlan;
  PaperVec line_offset;
  std::optional<double> text_offset;
  std::optional<TickStyle> tick_style;
};

struct DeleteDistanceDim {
  static constexpr const char* kName = "DeleteDistanceDim";
  Id id = 0;
};

struct MoveDistanceDim {
  static constexpr const char* kName = "MoveDistanceDim";
  Id id = 0;
  PaperVec delta;
};

struct AddRadiusDimPlan {
  static constexpr const char* kName = "AddRadiusDimPlan";
  std::string param_text;
  Id terminal_ref = 0;
  Id zone_section_ref = 0;
  double angle = 0;
  PaperVec manual_text_pos;
  std::optional<bool> auto_text_pos;
  std::optional<double> text_offset;
  std::optional<LeaderMode> leader;
  std::optional<bool> leader_to_shelf_end;
  std::optional<TickStyle> tick_style;
  std::optional<bool> include_height_in_text;
};

struct DeleteRadiusDimPlan {
  static constexpr const char* kName = "DeleteRadiusDimPlan";
  Id id = 0;
};

/// Shifts the manual text position and optionally turns the radius.
struct MoveRadiusDimPlan {
  static constexpr const char* kName = "MoveRadiusDimPlan";
  Id id = 0;
  PaperVec delta;
  std::optional<double> angle;
};

struct AddRadiusDimVert {
  static constexpr const char* kName = "AddRadiusDimVert";
  std::string param_text;
  Id terminal_ref = 0;
  Id section_ref = 0;
  PaperVec line_offset;
  Side direction = Side::Right;
  std::optional<double> text_offset;
  std::optional<TickStyle> tick_style;
};

struct DeleteRadiusDimVert {
  static constexpr const char* kName = "DeleteRadiusDimVert";
  Id id = 0;
};

struct MoveRadiusDimVert {
  static constexpr const char* kName = "MoveRadiusDimVert";
  Id id = 0;
  PaperVec delta;
  std::optional<Side> direction;
};

struct AddMinWidthDim {
  static constexpr const char* kName = "AddMinWidthDim";
  std::string param_text;
  Id terminal_a = 0;
  Id terminal_b = 0;
  Id zone_section_ref = 0;
  PaperVec manual_text_pos;
  std::optional<bool> auto_text_pos;
  std::optional<double> text_offset;
  std::optional<LeaderMode> leader;
  std::optional<bool> leader_to_shelf_end;
  std::optional<TickStyle> tick_style;
};

struct DeleteMinWidthDim {
  static constexpr const char* kName = "DeleteMinWidthDim";
  Id id = 0;
};

struct MoveMinWidthDim {
  static constexpr const char* kName = "MoveMinWidthDim";
  Id id = 0;
  PaperVec delta;
};

// ---------------------------------------------------------------------------
// Table and grounding

struct AddTableEntry {
  static constexpr const char* kName = "AddTableEntry";
  Id terminal_ref = 0;
  std::optional<Id> terminal_ref2;
  double protected_level = 0;
};

struct DeleteTableEntry {
  static constexpr const char* kName = "DeleteTableEntry";
  Id id = 0;
};

struct EditTableEntry {
  static constexpr const char* kName = "EditTableEntry";
  Id id = 0;
  std::optional<double> protected_level;
  std::optional<Id> terminal_ref;
  std::optional<Id> terminal_ref2;
  /// Turns a double entry back into a single one.
  bool clear_ref2 = false;
};

struct AddGroundingElectrode {
  static constexpr const char* kName = "AddGroundingElectrode";
  Point2 center_offset;
  std::optional<Linetype> linetype;
  std::optional<int> rod_count;
  std::optional<double> angle;
  std::optional<double> rod_spacing;
  std::optional<double> rod_diameter;
};

struct DeleteGroundingElectrode {
  static constexpr const char* kName = "DeleteGroundingElectrode";
  Id id = 0;
};

struct MoveGroundingElectrode {
  static constexpr const char* kName = "MoveGroundingElectrode";
  Id id = 0;
  Point2 delta;
  std::optional<double> angle;
};

struct CopyGroundingElectrode {
  static constexpr const char* kName = "CopyGroundingElectrode";
  Id id = 0;
  Point2 delta;
};

// ---------------------------------------------------------------------------
// Project-wide

struct MoveProject {
  static constexpr const char* kName = "MoveProject";
  PaperVec delta;
};

struct UpdateGeneralSettings {
  static constexpr const char* kName = "UpdateGeneralSettings";
  GeneralSettings general;
};

struct UpdateDefaults {
  static constexpr const char* kName = "UpdateDefaults";
  DefaultSettings defaults;
};

using Command = std::variant<
    AddTerminal, DeleteTerminal, MoveTerminal, CopyTerminal, SetTerminalProps, AddMeshVertex, MoveMeshVertex,
    DeleteMeshVertex, AddDrawingSection, DeleteDrawingSection, MoveDrawingSectionMark, AddZoneSection,
    DeleteZoneSection, SetZoneSectionProps, AddTerminalToZoneSection, RemoveTerminalFromZoneSection,
    AddTerminalText, DeleteTerminalText, MoveTerminalText, AddZoneLevelText, DeleteZoneLevelText, MoveZoneLevelText,
    AddDistanceDim, DeleteDistanceDim, MoveDistanceDim, AddRadiusDimPlan, DeleteRadiusDimPlan, MoveRadiusDimPlan,
    AddRadiusDimVert, DeleteRadiusDimVert, MoveRadiusDimVert, AddMinWidthDim, DeleteMinWidthDim, MoveMinWidthDim,
    AddTableEntry, DeleteTableEntry, EditTableEntry, AddGroundingElectrode, DeleteGroundingElectrode,
    MoveGroundingElectrode, CopyGroundingElectrode, MoveProject, UpdateGeneralSettings, UpdateDefaults>;

const char* command_name(const Command& c);

// ---------------------------------------------------------------------------

enum class ActionKind {
  Delete,      ///< owner removed because its anchor is gone or changed kind
  Detach,      ///< a list reference dropped, owner kept
  Regenerate,  ///< derived geometry of the object must be recomputed
  Touch,       ///< restyled by a settings or placement change
};

const char* to_string(ActionKind k);

struct CascadeAction {
  ActionKind kind = ActionKind::Regenerate;
  Id target = 0;
  /// For Detach: the id removed from the target's list.
  Id detached = 0;
  std::string reason;

  bool operator==(const CascadeAction&) const = default;
};

struct ChangeSet {
  std::vector<Id> created;
  std::vector<Id> deleted;
  std::vector<Id> modified;
  std::vector<std::string> diagnostics;

  bool operator==(const ChangeSet&) const = default;
};

/// Throws RefError for ids that do not resolve, GeometryError for broken
/// construction geometry, KindError for an operation on the wrong kind of
/// terminal, DomainError for moves along a forbidden axis, ValidationError
/// for out-of-range settings and CommandRejected for anything else that
/// would make the project invalid. `p` itself is never modified.
std::pair<Project, ChangeSet> apply(const Project& p, const Command& c);

/// The dependent actions `c` triggers on `p`, in execution order: cascade
/// deletions and detaches first, then regenerations or touches.
std::vector<CascadeAction> cascade_rules(const Command& c, const Project& p);

/// Copies a terminal (translated by `delta`, label with the next free numeric
/// suffix) or a grounding electrode (translated in plan). Annotations are not
/// copied. Other kinds throw KindError.
std::pair<Project, Id> copy_object(const Project& p, Id id, const Point3& delta);

}  // namespace lpz

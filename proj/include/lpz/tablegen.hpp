#pragma once

// Lightning-protection calculation table: rows from the project's table
// entries, printed in the table unit and precision.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lpz/display.hpp"
#include "lpz/model.hpp"

namespace lpz {

inline constexpr int kTableColumns = 9;

/// Values are already converted to the table unit and rounded.
struct CalcRow {
  std::string labels;
  std::optional<double> h, h0, hx, rx, L, hc, rcx;
  std::string type_text;
  bool is_double = false;
  std::vector<Id> entry_ids;  ///< table entries folded into this row
  bool operator==(const CalcRow&) const = default;
};

struct TableDiagnostic {
  Id entry = 0;
  std::string message;
  bool operator==(const TableDiagnostic&) const = default;
};

struct CalcTable {
  std::vector<CalcRow> rows;
  TableSettings settings;
  std::vector<TableDiagnostic> warnings;
  bool operator==(const CalcTable&) const = default;
};

/// Column captions: long names and the symbol row.
struct TableHeader {
  std::array<std::string, kTableColumns> names;
  std::array<std::string, kTableColumns> symbols;

  static const TableHeader& standard();
  /// JSON object {"names": [9 strings], "symbols": [9 strings]}; either key
  /// may be omitted to keep the standard captions. Throws ParseError.
  static TableHeader parse_override(const std::string& json_text);
};

/// Throws RenderError when the project does not validate.
CalcTable build_table(const Project& p);

/// Printed cell texts of a row, in column order.
std::array<std::string, kTableColumns> row_cells(const CalcTable& t, const CalcRow& r);

/// Table drawing with its top-left corner at `corner` (mm Paper).
DisplayList layout_table(const CalcTable& t, Point2 corner, const TableHeader& header = TableHeader::standard());

/// UTF-8 CSV: the symbol row, then one line per row; absent values empty.
std::string table_csv(const CalcTable& t, const TableHeader& header = TableHeader::standard());

/// Fixed-width plain text for terminals.
std::string table_text(const CalcTable& t, const TableHeader& header = TableHeader::standard());

/// Nature mm to the table unit.
double to_table_unit(double mm, LengthUnit unit);

}  // namespace lpz

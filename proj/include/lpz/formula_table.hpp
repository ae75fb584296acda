#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpz/model.hpp"

namespace lpz {

enum class TerminalKind { Rod, Wire };

struct SingleCoeffs {
  double h0_factor = 0;
  double r0_factor = 0;
  double r0_h_coeff = 0;
};

/// One piece of the equal-height pair formulas, valid up to L = l_max * h.
struct PairPiece {
  double l_max = 0;
  double hc_k0 = 0;
  double hc_k1 = 0;
  double rc_k = 0;
  double rc_ref = 0;
};

struct SagRule {
  double span_max = 0;
  double sag = 0;
};

/// Coefficients of the zone formulas, loaded from the line-oriented
/// `key = value` data file in data/formula_table.txt.
class FormulaTable {
 public:
  /// The table compiled into the library from data/formula_table.txt.
  static const FormulaTable& standard();

  /// Throws ParseError on malformed text, unknown keys or missing entries.
  static FormulaTable parse(std::string_view text);

  int version() const noexcept { return version_; }
  double max_height() const noexcept { return max_height_; }

  const SingleCoeffs& single(ZoneType zone, TerminalKind kind) const;
  const std::vector<PairPiece>& pair(ZoneType zone, TerminalKind kind) const;
  const std::vector<SagRule>& sag_rules() const noexcept { return sag_; }

  /// Sag to subtract for a wire span, or nullopt if the span is beyond the
  /// longest tabulated span.
  std::optional<double> wire_sag(double span) const;

  /// Lowercase hex SHA-256 of the source text.
  const std::string& checksum() const noexcept { return checksum_; }

 private:
  static std::size_t slot(ZoneType zone, TerminalKind kind);

  int version_ = 0;
  double max_height_ = 0;
  std::array<SingleCoeffs, 4> single_{};
  std::array<std::vector<PairPiece>, 4> pair_{};
  std::vector<SagRule> sag_;
  std::string checksum_;
};

/// Raw text of the bundled table.
std::string_view standard_formula_text();

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

}  // namespace lpz

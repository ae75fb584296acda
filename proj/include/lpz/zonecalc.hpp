#pragma once

// Protection zones of single, double and multiple terminals.
//
// Single rods and wires use the cone/tent formulas, equal-height pairs add a
// saddle between them, meshes protect the prism below their ring. The full
// zone is the union of all contributors; height_at() and
// horizontal_section() are two views of that same union.

#include <span>
#include <vector>

#include "lpz/contour.hpp"
#include "lpz/formula_table.hpp"
#include "lpz/model.hpp"

namespace lpz {

struct ConeParams {
  double h0 = 0;  ///< zone apex height
  double r0 = 0;  ///< zone radius at the zero mark
};

struct PairParams {
  double hc = 0;  ///< lowest point of the zone between the two terminals
  double rc = 0;  ///< half-width of the common zone at the zero mark
};

/// Throws DomainError unless 0 < h <= 150 m.
ConeParams cone_params(double h, ZoneType zone, TerminalKind kind,
                       const FormulaTable& table = FormulaTable::standard());

/// Zone radius at elevation hx; 0 above the zone apex.
double radius_at(double h, ZoneType zone, TerminalKind kind, double hx,
                 const FormulaTable& table = FormulaTable::standard());

/// Saddle of two equal-height terminals `L` apart. hc == 0 when L is beyond
/// the tabulated range (the two then act as independent singles).
PairParams pair_params(double h, double L, ZoneType zone, TerminalKind kind = TerminalKind::Rod,
                       const FormulaTable& table = FormulaTable::standard());

/// Half-width of the common zone at elevation hx.
double min_width_at(const PairParams& pair, double hx);

/// Height a wire's zone is computed from: support elevation minus sag.
double effective_wire_height(double support_z, double span, const FormulaTable& table = FormulaTable::standard());

/// Height of the circular arc through (0, end), (span/2, mid), (span, end)
/// at abscissa u. Used for both the waist outline and the saddle top.
double three_point_arc(double span, double end, double mid, double u);

struct ProfileChain {
  /// (s, z) in mm Nature; s is the signed distance along the view axis.
  std::vector<Point2> points;
};

struct ReliefLevel {
  double level = 0;
  std::vector<Contour> contours;
};

/// Precomputed zone contributors of a terminal set; reusable for many
/// queries on the same snapshot.
class ZoneField {
 public:
  ZoneField(std::span<const AirTerminal> terminals, ZoneType zone,
            const FormulaTable& table = FormulaTable::standard());

  double height_at(Point2 p) const;
  std::vector<Contour> horizontal_section(double hx) const;

  /// Zone profile in the vertical plane through segment a-b; `sense` is +1
  /// when the view axis runs a -> b and -1 for the reverse.
  std::vector<ProfileChain> vertical_profile(Point2 a, Point2 b, int sense) const;

  std::vector<ReliefLevel> relief() const;

  /// Largest top elevation over all terminals.
  double max_top() const noexcept { return max_top_; }
  bool empty() const noexcept { return tents_.empty() && prisms_.empty(); }

  struct Tent {
    Point2 a, b;  // a == b for a rod
    double h0 = 0, r0 = 0;
  };
  struct Prism {
    std::vector<Point2> ring;
    double z = 0;
  };
  /// Saddle between two ends p and q. `half` != 0 keeps only the side of the
  /// p->q axis whose left normal has that sign.
  struct Saddle {
    Point2 p, q;
    double h0 = 0, r0 = 0;
    PairParams pair;
    int half = 0;
  };
  /// Strip between the two wires of a double wire.
  struct Strip {
    Point2 origin;   // wire-1 support 1
    Point2 along;    // unit vector along the wires
    Point2 across;   // unit vector from wire 1 toward wire 2
    double span = 0, width = 0;
    double h0 = 0, hc = 0;
  };

  const std::vector<Tent>& tents() const noexcept { return tents_; }
  const std::vector<Saddle>& saddles() const noexcept { return saddles_; }

 private:
  std::vector<Tent> tents_;
  std::vector<Prism> prisms_;
  std::vector<Saddle> saddles_;
  std::vector<Strip> strips_;
  double max_top_ = 0;
};

/// Full-zone height at a plan point; 0 where unprotected.
double height_at(std::span<const AirTerminal> terminals, ZoneType zone, Point2 p);

/// Outline of the full zone at elevation hx; empty if there is none.
std::vector<Contour> horizontal_section(std::span<const AirTerminal> terminals, ZoneType zone, double hx);

std::vector<ProfileChain> vertical_profile(std::span<const AirTerminal> terminals, ZoneType zone, Point2 a,
                                           Point2 b, int sense);

/// 21 levels from 0 to the largest terminal top elevation at 5% steps.
/// Throws NoTerminals on an empty set.
std::vector<ReliefLevel> relief(std::span<const AirTerminal> terminals, ZoneType zone);

/// Terminals of `p` listed by a zone section, in list order.
std::vector<AirTerminal> section_terminals(const Project& p, const ZoneSection& zs);

/// Zone height a terminal's formulas use (rod apex, wire effective height).
double zone_height(const AirTerminal& t, const FormulaTable& table = FormulaTable::standard());

}  // namespace lpz

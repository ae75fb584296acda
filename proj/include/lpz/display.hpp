#pragma once

// Paper-space drawing primitives and their canonical SVG form.

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lpz/contour.hpp"
#include "lpz/model.hpp"

namespace lpz {

struct Style {
  Color color = Color::Black;
  Linetype linetype = Linetype::Solid;
  bool operator==(const Style&) const = default;
};

struct LinePrim {
  Point2 a, b;
  bool operator==(const LinePrim&) const = default;
};

struct PolylinePrim {
  std::vector<Point2> points;
  bool closed = false;
  bool filled = false;
  bool operator==(const PolylinePrim&) const = default;
};

struct ArcPrim {
  ArcSeg arc;
  bool operator==(const ArcPrim&) const = default;
};

struct CirclePrim {
  Point2 center;
  double radius = 0;
  bool operator==(const CirclePrim&) const = default;
};

struct DotPrim {
  Point2 center;
  double diameter = 0;
  bool operator==(const DotPrim&) const = default;
};

/// Hatch lines already clipped to their boundary.
struct HatchPrim {
  std::vector<Point2> boundary;
  std::vector<std::pair<Point2, Point2>> lines;
  bool operator==(const HatchPrim&) const = default;
};

enum class TextAnchor { Start, Middle, End };

/// Single-line text; `pos` is on the baseline, `angle` in radians CCW.
struct TextPrim {
  Point2 pos;
  std::string text;
  FontSettings font;
  double angle = 0;
  TextAnchor anchor = TextAnchor::Start;
  bool operator==(const TextPrim&) const = default;
};

struct PathPrim {
  Contour contour;
  bool operator==(const PathPrim&) const = default;
};

using Shape2D = std::variant<LinePrim, PolylinePrim, ArcPrim, CirclePrim, DotPrim, HatchPrim, TextPrim, PathPrim>;

struct Primitive {
  Shape2D shape;
  Style style;
  Id source_id = 0;  ///< model object drawn; 0 for view furniture
  bool operator==(const Primitive&) const = default;
};

/// Ordered primitives in mm Paper; list order is z-order.
struct DisplayList {
  std::vector<Primitive> items;

  void add(Shape2D s, Style st, Id source = 0) { items.push_back({std::move(s), st, source}); }
  void append(const DisplayList& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }
  bool operator==(const DisplayList&) const = default;
};

struct TextMetrics {
  double width = 0;
  double height = 0;
};

/// Width from the bundled advance table, height = font size.
TextMetrics measure_text(std::string_view utf8, const FontSettings& f);

/// Advance of one code point as a fraction of the font size.
double glyph_advance(char32_t cp);

/// Stroke width in mm Paper for a line type.
double stroke_width(Linetype lt);

struct SvgOptions {
  /// Adds element ids and a <metadata> block mapping source ids to them.
  bool index = false;
  /// Blank border around the drawing extent, mm Paper.
  double margin = 10.0;
};

/// Canonical SVG 1.1. Paper Y points up; the document flips it.
std::string emit_svg(const DisplayList& dl, const SvgOptions& opt = {});

/// Source id -> element ids, as written into the metadata block.
std::map<Id, std::vector<std::string>> svg_index(const DisplayList& dl);

}  // namespace lpz

#include "lpz/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "lpz/refgraph.hpp"

namespace lpz {

ConstructionKind kind_of(const Construction& c) {
  switch (c.index()) {
    case 0: return ConstructionKind::Rod;
    case 1: return ConstructionKind::Mesh;
    case 2: return ConstructionKind::Wire;
    default: return ConstructionKind::DoubleWire;
  }
}

namespace {

template <class T>
const T* find_by_id(const std::vector<T>& v, Id id) {
  auto it = std::find_if(v.begin(), v.end(), [id](const T& t) { return t.id == id; });
  return it == v.end() ? nullptr : &*it;
}

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool on_segment(Point2 p, Point2 a, Point2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

int sign(double v) { return (v > 0) - (v < 0); }

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  int d1 = sign(cross(c, d, a));
  int d2 = sign(cross(c, d, b));
  int d3 = sign(cross(a, b, c));
  int d4 = sign(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(a, c, d)) return true;
  if (d2 == 0 && on_segment(b, c, d)) return true;
  if (d3 == 0 && on_segment(c, a, b)) return true;
  if (d4 == 0 && on_segment(d, a, b)) return true;
  return false;
}

}  // namespace

const AirTerminal* Project::find_terminal(Id id) const { return find_by_id(terminals, id); }
const DrawingSection* Project::find_drawing_section(Id id) const { return find_by_id(drawing_sections, id); }
const ZoneSection* Project::find_zone_section(Id id) const { return find_by_id(zone_sections, id); }

const ZoneSection* Project::zone_section_of(Id section_id) const {
  auto it = std::find_if(zone_sections.begin(), zone_sections.end(),
                         [section_id](const ZoneSection& z) { return z.section_ref == section_id; });
  return it == zone_sections.end() ? nullptr : &*it;
}

Project new_project(const GeneralSettings& general, const DefaultSettings& defaults) {
  auto vs = validate_settings(general, defaults);
  if (!vs.empty()) throw ValidationError(std::move(vs));
  Project p;
  p.general = general;
  p.defaults = defaults;
  return p;
}

std::vector<Violation> validate(const Project& p) {
  std::vector<Violation> out;
  for (auto& f : check(p)) out.push_back(std::move(f.violation));
  return out;
}

double mesh_ring_area(const std::vector<Point3>& ring) {
  if (ring.size() < 3) throw GeometryError("mesh ring needs at least 3 vertices");
  for (const auto& v : ring) {
    if (v.z != ring.front().z) throw GeometryError("mesh ring vertices must share one elevation");
  }
  double twice = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& a = ring[i];
    const auto& b = ring[(i + 1) % ring.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2.0;
}

bool ring_self_intersects(const std::vector<Point2>& ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Point2 a = ring[i], b = ring[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      Point2 c = ring[j], d = ring[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Adjacent edges share one vertex; they only conflict when they fold
        // back over each other.
        Point2 shared = j == i + 1 ? b : a;
        Point2 p = j == i + 1 ? a : b;
        Point2 q = j == i + 1 ? d : c;
        if (cross(shared, p, q) == 0) {
          double dot = (p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y);
          if (dot > 0) return true;
        }
        continue;
      }
      if (segments_intersect(a, b, c, d)) return true;
    }
  }
  return false;
}

double rod_mount_z(const AirTerminal& t) {
  const auto& rod = std::get<Rod>(t.construction);
  return rod.apex.z - t.height.value_or(0.0);
}

double top_elevation(const AirTerminal& t) {
  return std::visit(
      [&](const auto& c) -> double {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Rod>) {
          return c.apex.z;
        } else if constexpr (std::is_same_v<T, Mesh>) {
          return c.ring.empty() ? 0.0 : c.ring.front().z;
        } else if constexpr (std::is_same_v<T, Wire>) {
          return c.support1.z;
        } else {
          return std::max(c.support1.z, c.height2);
        }
      },
      t.construction);
}

std::pair<Point3, Point3> second_wire(const DoubleWire& w) {
  const double dx = w.support2.x - w.support1.x;
  const double dy = w.support2.y - w.support1.y;
  const double len = std::hypot(dx, dy);
  const double nx = len > 0 ? -dy / len : 0.0;
  const double ny = len > 0 ? dx / len : 0.0;
  return {Point3{w.support1.x + nx * w.offset2, w.support1.y + ny * w.offset2, w.height2},
          Point3{w.support2.x + nx * w.offset2, w.support2.y + ny * w.offset2, w.height2}};
}

std::vector<Point3> terminal_points(const AirTerminal& t) {
  return std::visit(
      [](const auto& c) -> std::vector<Point3> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Rod>) {
          return {c.apex};
        } else if constexpr (std::is_same_v<T, Mesh>) {
          return c.ring;
        } else if constexpr (std::is_same_v<T, Wire>) {
          return {c.support1, c.support2};
        } else {
          auto [a, b] = second_wire(c);
          return {c.support1, c.support2, a, b};
        }
      },
      t.construction);
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string_view na(a.data() + i, ie - i), nb(b.data() + j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
    ++i;
    ++j;
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

const char* to_string(ZoneType v) { return v == ZoneType::A ? "A" : "B"; }

const char* to_string(Color v) {
  switch (v) {
    case Color::Black: return "black";
    case Color::Red: return "red";
    case Color::Green: return "green";
    case Color::Blue: return "blue";
    case Color::Cyan: return "cyan";
    case Color::Magenta: return "magenta";
    case Color::Yellow: return "yellow";
    case Color::Gray: return "gray";
  }
  return "black";
}

const char* to_string(Linetype v) {
  switch (v) {
    case Linetype::Solid: return "solid";
    case Linetype::Dashed: return "dashed";
    case Linetype::DashDot: return "dash-dot";
    case Linetype::ThickSolid: return "thick-solid";
  }
  return "solid";
}

const char* to_string(TickStyle v) {
  switch (v) {
    case TickStyle::ArrowIn: return "arrow-in";
    case TickStyle::ArrowOut: return "arrow-out";
    case TickStyle::Tick: return "tick";
  }
  return "tick";
}

const char* to_string(LeaderMode v) {
  switch (v) {
    case LeaderMode::None: return "none";
    case LeaderMode::Mid: return "mid";
    case LeaderMode::Start: return "start";
    case LeaderMode::End: return "end";
  }
  return "none";
}

const char* to_string(ScalePlacement v) { return v == ScalePlacement::Inline ? "inline" : "own-line"; }
const char* to_string(Side v) { return v == Side::Left ? "left" : "right"; }

const char* to_string(LengthUnit v) {
  switch (v) {
    case LengthUnit::Mm: return "mm";
    case LengthUnit::Cm: return "cm";
    case LengthUnit::M: return "m";
  }
  return "mm";
}

const char* to_string(SortMode v) {
  switch (v) {
    case SortMode::None: return "none";
    case SortMode::Alphabetical: return "alphabetical";
    case SortMode::Grouped: return "grouped";
  }
  return "none";
}

const char* to_string(ConstructionKind v) {
  switch (v) {
    case ConstructionKind::Rod: return "rod";
    case ConstructionKind::Mesh: return "mesh";
    case ConstructionKind::Wire: return "wire";
    case ConstructionKind::DoubleWire: return "double-wire";
  }
  return "rod";
}

}  // namespace lpz

#include "lpz/zonecalc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

namespace bg = boost::geometry;

namespace lpz {

namespace {

using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint, false, true>;
using BgMulti = bg::model::multi_polygon<BgPolygon>;
using BgBox = bg::model::box<BgPoint>;

constexpr double kPi = std::numbers::pi;
constexpr double kEqualHeightTol = 1e-6;
constexpr double kBisectTol = 0.1;
constexpr int kBisectMaxIter = 60;
constexpr int kCircleSegments = 720;
constexpr int kWaistSamples = 96;

Point2 sub(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
Point2 add(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
Point2 mul(Point2 a, double k) { return {a.x * k, a.y * k}; }
double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double norm(Point2 a) { return std::hypot(a.x, a.y); }
Point2 left_normal(Point2 d) { return {-d.y, d.x}; }

double dist_to_segment(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = sub(b, a);
  const double len2 = dot(ab, ab);
  if (len2 == 0) return norm(sub(p, a));
  const double t = std::clamp(dot(sub(p, a), ab) / len2, 0.0, 1.0);
  return norm(sub(p, add(a, mul(ab, t))));
}

double polygon_area(const std::vector<Point2>& poly) {
  double twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

void ensure_ccw(std::vector<Point2>& poly) {
  if (polygon_area(poly) < 0) std::reverse(poly.begin(), poly.end());
}

/// Half-distance from the middle of the span at which the saddle-top arc
/// drops to `level` (level in (mid, end]).
double arc_crossing(double span, double end, double mid, double level) {
  const double depth = end - mid;
  if (depth <= 0) return span / 2;
  const double radius = (span * span / 4 + depth * depth) / (2 * depth);
  const double rise = level - mid;
  return std::sqrt(std::max(0.0, 2 * radius * rise - rise * rise));
}

/// u-intervals of [0, span] where the saddle top reaches `hx`.
std::vector<std::pair<double, double>> top_intervals(double span, double h0, double hc, double hx) {
  if (hx <= hc) return {{0.0, span}};
  const double t1 = arc_crossing(span, h0, hc, hx);
  const double cut = span / 2 - t1;
  if (cut <= 0) return {};
  return {{0.0, cut}, {span - cut, span}};
}

struct Shape {
  std::vector<Point2> polygon;          // CCW approximation used for union
  std::optional<Contour> exact;         // emitted when the shape stays alone
};

Shape tent_shape(const ZoneField::Tent& t, double rx) {
  Shape s;
  if (t.a == t.b) {
    s.exact = circle_contour(t.a, rx);
    for (int i = 0; i < kCircleSegments; ++i) {
      const double ang = 2 * kPi * i / kCircleSegments;
      s.polygon.push_back({t.a.x + rx * std::cos(ang), t.a.y + rx * std::sin(ang)});
    }
    return s;
  }
  const Point2 d = mul(sub(t.b, t.a), 1.0 / norm(sub(t.b, t.a)));
  const Point2 n = left_normal(d);
  const double an = std::atan2(n.y, n.x);
  const double am = std::atan2(-n.y, -n.x);
  Contour c;
  c.segments.push_back(LineSeg{sub(t.a, mul(n, rx)), sub(t.b, mul(n, rx))});
  c.segments.push_back(ArcSeg{t.b, rx, am, kPi});
  c.segments.push_back(LineSeg{add(t.b, mul(n, rx)), add(t.a, mul(n, rx))});
  c.segments.push_back(ArcSeg{t.a, rx, an, kPi});
  s.exact = c;
  s.polygon = c.flatten(kCircleSegments);
  return s;
}

std::vector<Shape> saddle_shapes(const ZoneField::Saddle& s, double hx) {
  std::vector<Shape> out;
  const double rx = hx >= s.h0 ? 0.0 : s.r0 * (1 - hx / s.h0);
  if (rx <= 0) return out;
  const double rcx = min_width_at(s.pair, hx);
  const Point2 axis = sub(s.q, s.p);
  const double L = norm(axis);
  const Point2 e = mul(axis, 1.0 / L);
  const Point2 n = left_normal(e);
  auto at = [&](double u, double v) { return add(s.p, add(mul(e, u), mul(n, v))); };

  for (auto [u0, u1] : top_intervals(L, s.h0, s.pair.hc, hx)) {
    if (u1 <= u0) continue;
    std::vector<double> us(kWaistSamples + 1);
    std::vector<double> ws(kWaistSamples + 1);
    for (int i = 0; i <= kWaistSamples; ++i) {
      us[i] = u0 + (u1 - u0) * i / kWaistSamples;
      ws[i] = three_point_arc(L, rx, rcx, us[i]);
    }
    Shape sh;
    if (s.half >= 0) {
      // lower edge: the axis itself for the upper half
      if (s.half == 0) {
        for (int i = 0; i <= kWaistSamples; ++i) sh.polygon.push_back(at(us[i], -ws[i]));
      } else {
        sh.polygon.push_back(at(u0, 0));
        sh.polygon.push_back(at(u1, 0));
      }
      for (int i = kWaistSamples; i >= 0; --i) sh.polygon.push_back(at(us[i], ws[i]));
    } else {
      for (int i = 0; i <= kWaistSamples; ++i) sh.polygon.push_back(at(us[i], -ws[i]));
      sh.polygon.push_back(at(u1, 0));
      sh.polygon.push_back(at(u0, 0));
    }
    ensure_ccw(sh.polygon);
    out.push_back(std::move(sh));
  }
  return out;
}

std::vector<Shape> strip_shapes(const ZoneField::Strip& s, double hx) {
  std::vector<Shape> out;
  if (hx >= s.h0) return out;
  auto at = [&](double u, double v) { return add(s.origin, add(mul(s.along, u), mul(s.across, v))); };
  for (auto [v0, v1] : top_intervals(s.width, s.h0, s.hc, hx)) {
    if (v1 <= v0) continue;
    Shape sh;
    sh.polygon = {at(0, v0), at(s.span, v0), at(s.span, v1), at(0, v1)};
    ensure_ccw(sh.polygon);
    sh.exact = polygon_contour(sh.polygon);
    out.push_back(std::move(sh));
  }
  return out;
}

BgPolygon to_bg(const std::vector<Point2>& poly) {
  BgPolygon out;
  for (const auto& p : poly) out.outer().push_back({p.x, p.y});
  out.outer().push_back({poly.front().x, poly.front().y});
  bg::correct(out);
  return out;
}

std::vector<Point2> from_bg_ring(const BgPolygon::ring_type& ring) {
  std::vector<Point2> out;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) out.push_back({ring[i].x(), ring[i].y()});
  return out;
}

BgMulti union_all(std::vector<BgMulti> parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<BgMulti> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      BgMulti merged;
      bg::union_(parts[i], parts[i + 1], merged);
      next.push_back(std::move(merged));
    }
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

Point2 contour_key(const Contour& c) {
  Point2 best{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (const auto& p : c.flatten(64)) {
    if (p.x < best.x || (p.x == best.x && p.y < best.y)) best = p;
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Formulas

ConeParams cone_params(double h, ZoneType zone, TerminalKind kind, const FormulaTable& table) {
  if (!(h > 0) || h > table.max_height()) {
    throw DomainError("terminal height " + std::to_string(h) + " mm outside (0, 150000]");
  }
  const auto& c = table.single(zone, kind);
  const double h_m = h / 1000.0;
  return {c.h0_factor * h, (c.r0_factor - c.r0_h_coeff * h_m) * h};
}

double radius_at(double h, ZoneType zone, TerminalKind kind, double hx, const FormulaTable& table) {
  const auto cp = cone_params(h, zone, kind, table);
  if (hx >= cp.h0) return 0.0;
  if (hx <= 0) return cp.r0;
  return cp.r0 * (1 - hx / cp.h0);
}

PairParams pair_params(double h, double L, ZoneType zone, TerminalKind kind, const FormulaTable& table) {
  if (!(L > 0)) throw DomainError("pair spacing must be > 0");
  const auto cp = cone_params(h, zone, kind, table);
  const double h_m = h / 1000.0;
  for (const auto& piece : table.pair(zone, kind)) {
    if (L <= piece.l_max * h) {
      const double hc = cp.h0 - (piece.hc_k0 + piece.hc_k1 * h_m) * std::max(0.0, L - h);
      const double rc = cp.r0 * (1 - piece.rc_k * std::max(0.0, L - piece.rc_ref * h) / h);
      return {std::clamp(hc, 0.0, cp.h0), std::clamp(rc, 0.0, cp.r0)};
    }
  }
  return {0.0, 0.0};
}

double min_width_at(const PairParams& pair, double hx) {
  if (pair.hc <= 0 || hx >= pair.hc) return 0.0;
  if (hx <= 0) return pair.rc;
  return pair.rc * (pair.hc - hx) / pair.hc;
}

double effective_wire_height(double support_z, double span, const FormulaTable& table) {
  const auto sag = table.wire_sag(span);
  if (!sag) throw DomainError("wire span beyond the tabulated range");
  return support_z - *sag;
}

double three_point_arc(double span, double end, double mid, double u) {
  const double depth = end - mid;
  if (depth <= 0) return mid;
  const double radius = (span * span / 4 + depth * depth) / (2 * depth);
  const double t = u - span / 2;
  const double t2 = std::min(t * t, radius * radius);
  return mid + t2 / (radius + std::sqrt(radius * radius - t2));
}

double zone_height(const AirTerminal& t, const FormulaTable& table) {
  return std::visit(
      [&](const auto& c) -> double {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Rod>) {
          return c.apex.z;
        } else if constexpr (std::is_same_v<T, Mesh>) {
          return c.ring.empty() ? 0.0 : c.ring.front().z;
        } else {
          const double span = std::hypot(c.support2.x - c.support1.x, c.support2.y - c.support1.y);
          return effective_wire_height(c.support1.z, span, table);
        }
      },
      t.construction);
}

// ---------------------------------------------------------------------------
// ZoneField

ZoneField::ZoneField(std::span<const AirTerminal> terminals, ZoneType zone, const FormulaTable& table) {
  std::vector<std::pair<Point2, double>> rods;  // plan position, zone height

  for (const auto& t : terminals) {
    max_top_ = std::max(max_top_, top_elevation(t));
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Rod>) {
            const auto cp = cone_params(c.apex.z, zone, TerminalKind::Rod, table);
            tents_.push_back({c.apex.xy(), c.apex.xy(), cp.h0, cp.r0});
            rods.emplace_back(c.apex.xy(), c.apex.z);
          } else if constexpr (std::is_same_v<T, Mesh>) {
            Prism pr;
            for (const auto& v : c.ring) pr.ring.push_back(v.xy());
            ensure_ccw(pr.ring);
            pr.z = c.ring.front().z;
            prisms_.push_back(std::move(pr));
          } else {
            const Point2 a = c.support1.xy();
            const Point2 b = c.support2.xy();
            const double span = norm(sub(b, a));
            const double h1 = effective_wire_height(c.support1.z, span, table);
            const auto cp1 = cone_params(h1, zone, TerminalKind::Wire, table);
            tents_.push_back({a, b, cp1.h0, cp1.r0});
            if constexpr (std::is_same_v<T, DoubleWire>) {
              const auto [a2, b2] = second_wire(c);
              const double h2 = effective_wire_height(c.height2, span, table);
              const auto cp2 = cone_params(h2, zone, TerminalKind::Wire, table);
              tents_.push_back({a2.xy(), b2.xy(), cp2.h0, cp2.r0});
              const double width = std::abs(c.offset2);
              if (std::abs(h1 - h2) <= kEqualHeightTol && width > 0) {
                const auto pp = pair_params(h1, width, zone, TerminalKind::Wire, table);
                if (pp.hc > 0) {
                  const Point2 along = mul(sub(b, a), 1.0 / span);
                  const Point2 across = mul(left_normal(along), c.offset2 > 0 ? 1.0 : -1.0);
                  strips_.push_back({a, along, across, span, width, cp1.h0, pp.hc});
                  // End caps: the saddle between facing supports, kept only
                  // outside the span.
                  Saddle start{a, a2.xy(), cp1.h0, cp1.r0, pp, 0};
                  Saddle finish{b, b2.xy(), cp1.h0, cp1.r0, pp, 0};
                  const Point2 n_start = left_normal(mul(sub(a2.xy(), a), 1.0 / width));
                  start.half = dot(n_start, along) > 0 ? -1 : 1;
                  finish.half = -start.half;
                  saddles_.push_back(start);
                  saddles_.push_back(finish);
                }
              }
            }
          }
        },
        t.construction);
  }

  for (std::size_t i = 0; i < rods.size(); ++i) {
    for (std::size_t j = i + 1; j < rods.size(); ++j) {
      if (std::abs(rods[i].second - rods[j].second) > kEqualHeightTol) continue;
      const double L = norm(sub(rods[j].first, rods[i].first));
      if (L <= 0) continue;
      const auto pp = pair_params(rods[i].second, L, zone, TerminalKind::Rod, table);
      if (pp.hc <= 0) continue;
      const auto cp = cone_params(rods[i].second, zone, TerminalKind::Rod, table);
      saddles_.push_back({rods[i].first, rods[j].first, cp.h0, cp.r0, pp, 0});
    }
  }
}

namespace {

double saddle_height(const ZoneField::Saddle& s, Point2 x, double floor) {
  const Point2 axis = sub(s.q, s.p);
  const double L = norm(axis);
  const Point2 e = mul(axis, 1.0 / L);
  const Point2 rel = sub(x, s.p);
  const double u = dot(rel, e);
  if (u < 0 || u > L) return 0;
  const double v = dot(rel, left_normal(e));
  if (s.half != 0 && v * s.half < 0) return 0;
  const double av = std::abs(v);
  if (av > s.r0) return 0;

  const double top = three_point_arc(L, s.h0, s.pair.hc, u);
  if (top <= floor) return 0;
  auto inside = [&](double hx) {
    const double rx = hx >= s.h0 ? 0.0 : s.r0 * (1 - hx / s.h0);
    return av <= three_point_arc(L, rx, min_width_at(s.pair, hx), u);
  };
  if (!inside(0)) return 0;
  if (inside(top)) return top;
  double lo = std::max(0.0, floor), hi = top;
  if (!inside(lo)) return 0;
  for (int i = 0; i < kBisectMaxIter && hi - lo > kBisectTol; ++i) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

double ZoneField::height_at(Point2 p) const {
  double best = 0;
  for (const auto& t : tents_) {
    const double d = t.a == t.b ? norm(sub(p, t.a)) : dist_to_segment(p, t.a, t.b);
    if (d < t.r0) best = std::max(best, t.h0 * (1 - d / t.r0));
  }
  for (const auto& pr : prisms_) {
    if (pr.z > best && winding_number(pr.ring, p) != 0) best = pr.z;
  }
  for (const auto& s : strips_) {
    const Point2 rel = sub(p, s.origin);
    const double u = dot(rel, s.along);
    const double v = dot(rel, s.across);
    if (u >= 0 && u <= s.span && v >= 0 && v <= s.width) {
      best = std::max(best, three_point_arc(s.width, s.h0, s.hc, v));
    }
  }
  for (const auto& s : saddles_) best = std::max(best, saddle_height(s, p, best));
  return best;
}

std::vector<Contour> ZoneField::horizontal_section(double hx) const {
  std::vector<Shape> shapes;
  for (const auto& t : tents_) {
    if (hx >= t.h0) continue;
    const double rx = hx <= 0 ? t.r0 : t.r0 * (1 - hx / t.h0);
    shapes.push_back(tent_shape(t, rx));
  }
  for (const auto& pr : prisms_) {
    if (hx > pr.z) continue;
    Shape s;
    s.polygon = pr.ring;
    s.exact = polygon_contour(pr.ring);
    shapes.push_back(std::move(s));
  }
  for (const auto& st : strips_) {
    for (auto& s : strip_shapes(st, hx)) shapes.push_back(std::move(s));
  }
  for (const auto& sd : saddles_) {
    for (auto& s : saddle_shapes(sd, hx)) shapes.push_back(std::move(s));
  }
  if (shapes.empty()) return {};

  std::vector<BgPolygon> polys;
  std::vector<BgBox> boxes;
  for (const auto& s : shapes) {
    polys.push_back(to_bg(s.polygon));
    boxes.push_back(bg::return_envelope<BgBox>(polys.back()));
  }

  std::vector<std::size_t> parent(shapes.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (std::size_t j = i + 1; j < shapes.size(); ++j) {
      if (find_root(parent, i) == find_root(parent, j)) continue;
      if (bg::disjoint(boxes[i], boxes[j])) continue;
      if (bg::intersects(polys[i], polys[j])) parent[find_root(parent, j)] = find_root(parent, i);
    }
  }

  std::vector<std::vector<std::size_t>> groups(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) groups[find_root(parent, i)].push_back(i);

  std::vector<Contour> out;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    if (g.size() == 1 && shapes[g.front()].exact) {
      out.push_back(*shapes[g.front()].exact);
      continue;
    }
    std::vector<BgMulti> parts;
    for (std::size_t i : g) parts.push_back(BgMulti{polys[i]});
    const BgMulti merged = union_all(std::move(parts));
    for (const auto& poly : merged) {
      auto outer = from_bg_ring(poly.outer());
      ensure_ccw(outer);
      out.push_back(polygon_contour(outer));
      for (const auto& inner : poly.inners()) {
        auto hole = from_bg_ring(inner);
        ensure_ccw(hole);
        std::reverse(hole.begin(), hole.end());
        out.push_back(polygon_contour(hole));
      }
    }
  }

  std::vector<std::pair<Point2, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(contour_key(out[i]), i);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.x != b.first.x) return a.first.x < b.first.x;
    if (a.first.y != b.first.y) return a.first.y < b.first.y;
    return a.second < b.second;
  });
  std::vector<Contour> sorted;
  sorted.reserve(out.size());
  for (const auto& k : keys) sorted.push_back(std::move(out[k.second]));
  return sorted;
}

std::vector<ProfileChain> ZoneField::vertical_profile(Point2 a, Point2 b, int sense) const {
  const Point2 ab = sub(b, a);
  const double len = norm(ab);
  if (len <= 0) throw GeometryError("cut segment has zero length");
  const Point2 dir = mul(ab, 1.0 / len);
  const Point2 view_axis = mul(dir, sense >= 0 ? 1.0 : -1.0);
  auto point = [&](double t) { return add(a, mul(dir, t)); };
  auto h = [&](double t) { return height_at(point(t)); };

  // Parameters where the profile has kinks or jumps.
  std::vector<double> ts{0.0, len};
  auto add_t = [&](double t) {
    if (t > 0 && t < len) ts.push_back(t);
  };
  for (const auto& t : tents_) {
    for (Point2 c : {t.a, t.b}) {
      const double along = dot(sub(c, a), dir);
      add_t(along);
      const double off = std::abs(dot(sub(c, a), left_normal(dir)));
      if (off < t.r0) {
        const double half = std::sqrt(t.r0 * t.r0 - off * off);
        add_t(along - half);
        add_t(along + half);
      }
    }
  }
  for (const auto& pr : prisms_) {
    for (std::size_t i = 0; i < pr.ring.size(); ++i) {
      const Point2 p = pr.ring[i];
      const Point2 q = pr.ring[(i + 1) % pr.ring.size()];
      const Point2 pq = sub(q, p);
      const double denom = dir.x * pq.y - dir.y * pq.x;
      if (denom == 0) continue;
      const Point2 ap = sub(p, a);
      const double t = (ap.x * pq.y - ap.y * pq.x) / denom;
      const double s = (ap.x * dir.y - ap.y * dir.x) / denom;
      if (s >= 0 && s <= 1) add_t(t);
    }
  }
  const double step = std::min(len / 512, 100.0);
  for (double t = step; t < len; t += step) add_t(t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end(), [](double x, double y) { return std::abs(x - y) < 1e-9; }),
           ts.end());

  // Corner refinement where adjacent slopes disagree by more than 1%.
  std::vector<double> hs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) hs[i] = h(ts[i]);
  for (int pass = 0; pass < 4; ++pass) {
    std::vector<double> nt{ts.front()}, nh{hs.front()};
    bool changed = false;
    for (std::size_t i = 1; i < ts.size(); ++i) {
      if (i >= 1 && i + 1 < ts.size()) {
        const double s1 = (hs[i] - hs[i - 1]) / (ts[i] - ts[i - 1]);
        const double s2 = (hs[i + 1] - hs[i]) / (ts[i + 1] - ts[i]);
        const double scale = std::max({std::abs(s1), std::abs(s2), 1e-12});
        if (std::abs(s1 - s2) > 0.01 * scale && ts[i] - ts[i - 1] > 1.0) {
          const double tm = 0.5 * (ts[i - 1] + ts[i]);
          nt.push_back(tm);
          nh.push_back(h(tm));
          changed = true;
        }
      }
      nt.push_back(ts[i]);
      nh.push_back(hs[i]);
    }
    ts.swap(nt);
    hs.swap(nh);
    if (!changed) break;
  }

  // Assemble chains; discontinuities (mesh walls) become vertical steps.
  const double eps = 1e-7 * len;
  const double s0 = dot(a, view_axis);
  const double sdir = sense >= 0 ? 1.0 : -1.0;
  auto to_s = [&](double t) { return s0 + sdir * t; };

  std::vector<ProfileChain> chains;
  ProfileChain cur;
  auto flush = [&]() {
    if (cur.points.size() >= 2) chains.push_back(std::move(cur));
    cur = {};
  };
  auto emit = [&](double t, double z) {
    const Point2 q{to_s(t), z};
    if (!cur.points.empty() && cur.points.back() == q) return;
    cur.points.push_back(q);
  };
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    const double left = i > 0 ? h(std::max(0.0, t - eps)) : hs[i];
    const double right = i + 1 < ts.size() ? h(std::min(len, t + eps)) : hs[i];
    const double here = hs[i];
    const double lo = std::min({left, right, here});
    const double hi = std::max({left, right, here});
    if (hi <= 0) {
      if (!cur.points.empty()) {
        if (cur.points.back().y != 0) emit(t, 0);
        flush();
      }
      continue;
    }
    if (cur.points.empty()) {
      emit(t, 0);
    }
    if (hi - lo > 1.0) {
      // Step: approach from the left value, leave at the right value.
      emit(t, left);
      emit(t, right);
      if (right <= 0) flush();
    } else {
      emit(t, here);
    }
  }
  if (!cur.points.empty()) {
    if (cur.points.back().y != 0) emit(ts.back(), 0);
    flush();
  }

  // Drop interior points that sit on a straight run.
  for (auto& c : chains) {
    std::vector<Point2> kept{c.points.front()};
    for (std::size_t i = 1; i + 1 < c.points.size(); ++i) {
      const Point2 p = kept.back(), q = c.points[i], r = c.points[i + 1];
      const Point2 d1 = sub(q, p), d2 = sub(r, q);
      const double cr = d1.x * d2.y - d1.y * d2.x;
      if (std::abs(cr) <= 1e-9 * norm(d1) * norm(d2) && dot(d1, d2) > 0) continue;
      kept.push_back(q);
    }
    kept.push_back(c.points.back());
    c.points = std::move(kept);
  }
  return chains;
}

std::vector<ReliefLevel> ZoneField::relief() const {
  if (empty()) throw NoTerminals();
  std::vector<ReliefLevel> out;
  for (int k = 0; k <= 20; ++k) {
    const double level = max_top_ * k / 20.0;
    out.push_back({level, horizontal_section(level)});
  }
  return out;
}

// ---------------------------------------------------------------------------

double height_at(std::span<const AirTerminal> terminals, ZoneType zone, Point2 p) {
  return ZoneField(terminals, zone).height_at(p);
}

std::vector<Contour> horizontal_section(std::span<const AirTerminal> terminals, ZoneType zone, double hx) {
  if (hx < 0) throw DomainError("section height must be >= 0");
  return ZoneField(terminals, zone).horizontal_section(hx);
}

std::vector<ProfileChain> vertical_profile(std::span<const AirTerminal> terminals, ZoneType zone, Point2 a,
                                           Point2 b, int sense) {
  return ZoneField(terminals, zone).vertical_profile(a, b, sense);
}

std::vector<ReliefLevel> relief(std::span<const AirTerminal> terminals, ZoneType zone) {
  if (terminals.empty()) throw NoTerminals();
  return ZoneField(terminals, zone).relief();
}

std::vector<AirTerminal> section_terminals(const Project& p, const ZoneSection& zs) {
  std::vector<AirTerminal> out;
  for (Id id : zs.terminal_refs) {
    if (const auto* t = p.find_terminal(id)) out.push_back(*t);
  }
  return out;
}

}  // namespace lpz

#include "lpz/display.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "json.hpp"

#include "lpz/numfmt.hpp"

namespace lpz {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    int len = 1;
    char32_t cp = c;
    if (c >= 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else if (c >= 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if (c >= 0xC0) {
      len = 2;
      cp = c & 0x1F;
    }
    for (int k = 1; k < len && i + k < s.size(); ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    out.push_back(cp);
    i += len;
  }
  return out;
}

const char* color_hex(Color c) {
  switch (c) {
    case Color::Black: return "#000000";
    case Color::Red: return "#ff0000";
    case Color::Green: return "#008000";
    case Color::Blue: return "#0000ff";
    case Color::Cyan: return "#00a0a0";
    case Color::Magenta: return "#c000c0";
    case Color::Yellow: return "#c0a000";
    case Color::Gray: return "#808080";
  }
  return "#000000";
}

const char* dash_array(Linetype lt) {
  switch (lt) {
    case Linetype::Dashed: return "3 1.5";
    case Linetype::DashDot: return "5 1.5 0.5 1.5";
    default: return nullptr;
  }
}

std::string num(double v) { return format_sig6(v); }
std::string pt(Point2 p) { return num(p.x) + " " + num(-p.y); }

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Arc as SVG commands in pieces of at most half a turn.
std::string arc_commands(const ArcSeg& a) {
  std::string d;
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(a.sweep) / kPi - 1e-12)));
  for (int i = 1; i <= pieces; ++i) {
    const Point2 end = a.point_at(a.start + a.sweep * i / pieces);
    d += " A " + num(a.radius) + " " + num(a.radius) + " 0 0 " + (a.sweep > 0 ? "1 " : "0 ") + pt(end);
  }
  return d;
}

std::string contour_path(const Contour& c) {
  if (c.segments.empty()) return "";
  std::string d;
  bool first = true;
  for (const auto& s : c.segments) {
    if (const auto* l = std::get_if<LineSeg>(&s)) {
      if (first) d += "M " + pt(l->a);
      d += " L " + pt(l->b);
    } else {
      const auto& a = std::get<ArcSeg>(s);
      if (first) d += "M " + pt(a.start_point());
      d += arc_commands(a);
    }
    first = false;
  }
  return d + " Z";
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  void add(Point2 p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  void add_circle(Point2 c, double r) {
    add({c.x - r, c.y - r});
    add({c.x + r, c.y + r});
  }
  bool empty() const { return x0 > x1; }
};

void extend(Box& b, const Primitive& p) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LinePrim>) {
          b.add(s.a);
          b.add(s.b);
        } else if constexpr (std::is_same_v<T, PolylinePrim>) {
          for (const auto& q : s.points) b.add(q);
        } else if constexpr (std::is_same_v<T, ArcPrim>) {
          Contour c{{s.arc}};
          for (const auto& q : c.flatten(72)) b.add(q);
          b.add(s.arc.end_point());
        } else if constexpr (std::is_same_v<T, CirclePrim>) {
          b.add_circle(s.center, s.radius);
        } else if constexpr (std::is_same_v<T, DotPrim>) {
          b.add_circle(s.center, s.diameter / 2);
        } else if constexpr (std::is_same_v<T, HatchPrim>) {
          for (const auto& q : s.boundary) b.add(q);
        } else if constexpr (std::is_same_v<T, TextPrim>) {
          const double w = measure_text(s.text, s.font).width;
          const double shift = s.anchor == TextAnchor::Start ? 0 : s.anchor == TextAnchor::Middle ? -w / 2 : -w;
          const Point2 u{std::cos(s.angle), std::sin(s.angle)};
          const Point2 v{-u.y, u.x};
          for (double a : {shift, shift + w}) {
            for (double h : {0.0, s.font.size}) b.add({s.pos.x + u.x * a + v.x * h, s.pos.y + u.y * a + v.y * h});
          }
        } else {
          for (const auto& q : s.contour.flatten(72)) b.add(q);
        }
      },
      p.shape);
}

std::string stroke_attrs(const Style& st) {
  std::string out = " fill=\"none\" stroke=\"" + std::string(color_hex(st.color)) + "\" stroke-width=\"" +
                    num(stroke_width(st.linetype)) + "\"";
  if (const char* dash = dash_array(st.linetype)) out += " stroke-dasharray=\"" + std::string(dash) + "\"";
  return out;
}

std::string element(const Primitive& p, const std::string& id_attr) {
  const Style& st = p.style;
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LinePrim>) {
          return "<path" + id_attr + " d=\"M " + pt(s.a) + " L " + pt(s.b) + "\"" + stroke_attrs(st) + "/>";
        } else if constexpr (std::is_same_v<T, PolylinePrim>) {
          std::string d;
          for (std::size_t i = 0; i < s.points.size(); ++i) d += (i ? " L " : "M ") + pt(s.points[i]);
          if (s.closed) d += " Z";
          if (s.filled) {
            return "<path" + id_attr + " d=\"" + d + "\" fill=\"" + color_hex(st.color) + "\" stroke=\"none\"/>";
          }
          return "<path" + id_attr + " d=\"" + d + "\"" + stroke_attrs(st) + "/>";
        } else if constexpr (std::is_same_v<T, ArcPrim>) {
          return "<path" + id_attr + " d=\"M " + pt(s.arc.start_point()) + arc_commands(s.arc) + "\"" +
                 stroke_attrs(st) + "/>";
        } else if constexpr (std::is_same_v<T, CirclePrim>) {
          return "<circle" + id_attr + " cx=\"" + num(s.center.x) + "\" cy=\"" + num(-s.center.y) + "\" r=\"" +
                 num(s.radius) + "\"" + stroke_attrs(st) + "/>";
        } else if constexpr (std::is_same_v<T, DotPrim>) {
          return "<circle" + id_attr + " cx=\"" + num(s.center.x) + "\" cy=\"" + num(-s.center.y) + "\" r=\"" +
                 num(s.diameter / 2) + "\" fill=\"" + color_hex(st.color) + "\" stroke=\"none\"/>";
        } else if constexpr (std::is_same_v<T, HatchPrim>) {
          std::string d;
          for (const auto& [a, b] : s.lines) d += (d.empty() ? "M " : " M ") + pt(a) + " L " + pt(b);
          Style thin = st;
          thin.linetype = Linetype::Solid;
          return "<path" + id_attr + " d=\"" + d + "\"" + stroke_attrs(thin) + "/>";
        } else if constexpr (std::is_same_v<T, TextPrim>) {
          std::string tf = "translate(" + pt(s.pos) + ")";
          if (s.angle != 0) tf += " rotate(" + num(-s.angle * 180 / kPi) + ")";
          if (s.font.slant != 0) tf += " skewX(" + num(-s.font.slant) + ")";
          if (s.font.compression != 1) tf += " scale(" + num(s.font.compression) + " 1)";
          const char* anchor = s.anchor == TextAnchor::Start ? "start" : s.anchor == TextAnchor::Middle ? "middle" : "end";
          return "<text" + id_attr + " x=\"0\" y=\"0\" transform=\"" + tf + "\" font-family=\"sans-serif\" font-size=\"" +
                 num(s.font.size) + "\" text-anchor=\"" + anchor + "\" fill=\"" + color_hex(st.color) + "\">" +
                 xml_escape(s.text) + "</text>";
        } else {
          return "<path" + id_attr + " d=\"" + contour_path(s.contour) + "\"" + stroke_attrs(st) + "/>";
        }
      },
      p.shape);
}

}  // namespace

double glyph_advance(char32_t cp) {
  switch (cp) {
    case U' ': return 0.45;
    case U'.': case U',': case U':': case U';': case U'\'': case U'!': case U'|': return 0.3;
    case U'(': case U')': case U'[': case U']': return 0.4;
    case U'-': case U'/': case U'\\': return 0.5;
    case U'+': case U'=': case U'<': case U'>': return 0.65;
    case U'–': return 0.75;
    case U'—': return 1.0;
    case U'№': return 1.1;
    case U'I': case U'i': case U'l': case U'j': return 0.3;
    case U'M': case U'W': case U'm': case U'w': return 0.85;
    case U'Ж': case U'Ш': case U'Щ': case U'Ы': case U'Ю': case U'Ф': case U'М': return 0.9;
    case U'ж': case U'ш': case U'щ': case U'ы': case U'ю': case U'ф': case U'м': return 0.8;
    case U'Г': case U'г': case U'т': case U'r': case U't': case U'f': return 0.55;
    default: break;
  }
  if (cp >= U'0' && cp <= U'9') return 0.6;
  if (cp >= U'A' && cp <= U'Z') return 0.7;
  if (cp >= U'a' && cp <= U'z') return 0.6;
  if (cp >= 0x0410 && cp <= 0x042F) return 0.7;  // Cyrillic capitals
  if (cp >= 0x0430 && cp <= 0x044F) return 0.6;  // Cyrillic small letters
  if (cp == 0x0401) return 0.7;                   // Ё
  if (cp == 0x0451) return 0.6;                   // ё
  if (cp >= 0x2080 && cp <= 0x2089) return 0.45;  // subscript digits
  return 0.7;
}

TextMetrics measure_text(std::string_view utf8, const FontSettings& f) {
  double units = 0;
  for (char32_t cp : decode_utf8(utf8)) units += glyph_advance(cp);
  return {units * f.size * f.compression, f.size};
}

double stroke_width(Linetype lt) { return lt == Linetype::ThickSolid ? 0.5 : 0.25; }

std::map<Id, std::vector<std::string>> svg_index(const DisplayList& dl) {
  std::map<Id, std::vector<std::string>> out;
  for (std::size_t i = 0; i < dl.items.size(); ++i) {
    if (dl.items[i].source_id != 0) out[dl.items[i].source_id].push_back("e" + std::to_string(i));
  }
  return out;
}

std::string emit_svg(const DisplayList& dl, const SvgOptions& opt) {
  Box box;
  for (const auto& p : dl.items) extend(box, p);
  if (box.empty()) box = {0, 0, 0, 0};
  const double m = opt.margin;
  const double w = box.x1 - box.x0 + 2 * m;
  const double h = box.y1 - box.y0 + 2 * m;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(w) + "mm\" height=\"" + num(h) +
         "mm\" viewBox=\"" + num(box.x0 - m) + " " + num(-(box.y1 + m)) + " " + num(w) + " " + num(h) + "\">\n";
  if (opt.index) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [id, elems] : svg_index(dl)) j[std::to_string(id)] = elems;
    out += "<metadata id=\"lpz-index\">" + xml_escape(j.dump()) + "</metadata>\n";
  }
  for (std::size_t i = 0; i < dl.items.size(); ++i) {
    const auto& p = dl.items[i];
    const std::string id_attr = opt.index && p.source_id != 0 ? " id=\"e" + std::to_string(i) + "\"" : "";
    out += element(p, id_attr) + "\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace lpz

#include "lpz/tablegen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "lpz/numfmt.hpp"
#include "lpz/zonecalc.hpp"

namespace lpz {

namespace {

constexpr double kEqualHeightTol = 1e-6;
constexpr double kCellPadding = 2.0;
constexpr double kMinColumnWidth = 8.0;

double plan_distance(Point3 a, Point3 b) { return std::hypot(b.x - a.x, b.y - a.y); }

TerminalKind formula_kind(const AirTerminal& t) {
  return std::holds_alternative<Rod>(t.construction) ? TerminalKind::Rod : TerminalKind::Wire;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<std::string> wrap(const std::string& text, double width, const FontSettings& f) {
  std::vector<std::string> lines;
  std::string cur;
  for (const auto& w : split_words(text)) {
    const std::string trial = cur.empty() ? w : cur + " " + w;
    if (!cur.empty() && measure_text(trial, f).width > width) {
      lines.push_back(cur);
      cur = w;
    } else {
      cur = trial;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::string drawn_symbol(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

double to_table_unit(double mm, LengthUnit unit) {
  switch (unit) {
    case LengthUnit::Mm: return mm;
    case LengthUnit::Cm: return mm / 10;
    case LengthUnit::M: return mm / 1000;
  }
  return mm;
}

const TableHeader& TableHeader::standard() {
  static const TableHeader h{
      {"№№ Молниеприемников", "Высота молниеприемника", "Активная высота молниеприемника",
       "Высота защищаемого уровня", "Радиус зоны защиты одиночного молниеприемника",
       "Расстояние между молниеприемниками", "Минимальная высота зоны защиты двух молниеприемников",
       "Минимальная ширина защиты двух молниеприемников", "Тип молниеприемника"},
      {"№№", "h", "h₀", "h_з", "r_з", "L", "h_с", "r_сх", "Тип"}};
  return h;
}

TableHeader TableHeader::parse_override(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(json_text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed header override", line, col);
  }
  TableHeader h = standard();
  if (!j.is_object()) throw ParseError("header override must be an object", 1, 1);
  for (const auto& [key, value] : j.items()) {
    std::array<std::string, kTableColumns>* target = nullptr;
    if (key == "names") target = &h.names;
    else if (key == "symbols") target = &h.symbols;
    else throw ParseError("unknown key \"" + key + "\" in header override", 1, 1);
    if (!value.is_array() || value.size() != kTableColumns) {
      throw ParseError("\"" + key + "\" must list 9 strings", 1, 1);
    }
    for (int i = 0; i < kTableColumns; ++i) {
      if (!value[i].is_string()) throw ParseError("\"" + key + "\" must list 9 strings", 1, 1);
      (*target)[i] = value[i].get<std::string>();
    }
  }
  return h;
}

CalcTable build_table(const Project& p) {
  if (auto v = validate(p); !v.empty()) throw RenderError(std::move(v));
  const auto zone = p.general.zone_type;
  const auto& ts = p.general.table;
  CalcTable table;
  table.settings = ts;
  auto conv = [&](double mm) { return round_half_away(to_table_unit(mm, ts.unit), ts.precision); };

  for (const auto& e : p.table_entries) {
    const AirTerminal& t1 = *p.find_terminal(e.terminal_ref);
    CalcRow row;
    row.entry_ids = {e.id};
    row.type_text = t1.type_text;
    const TerminalKind kind = formula_kind(t1);
    const double h = zone_height(t1);
    const auto cp = cone_params(h, zone, kind);
    const double hx = e.protected_level;
    row.h = conv(h);
    row.h0 = conv(cp.h0);
    row.hx = conv(hx);
    row.rx = conv(radius_at(h, zone, kind, hx));

    std::optional<double> pair_h2;
    double L = 0;
    if (e.terminal_ref2) {
      const AirTerminal& t2 = *p.find_terminal(*e.terminal_ref2);
      row.labels = t1.label + ", " + t2.label;
      pair_h2 = zone_height(t2);
      L = plan_distance(terminal_points(t1).front(), terminal_points(t2).front());
    } else if (const auto* dw = std::get_if<DoubleWire>(&t1.construction)) {
      row.labels = t1.label;
      const double span = plan_distance(dw->support1, dw->support2);
      pair_h2 = effective_wire_height(dw->height2, span);
      L = std::abs(dw->offset2);
    } else {
      row.labels = t1.label;
    }

    if (pair_h2) {
      row.is_double = true;
      PairParams pp;
      if (std::abs(h - *pair_h2) > kEqualHeightTol) {
        table.warnings.push_back({e.id, "terminals of a double entry differ in height; pair values set to 0"});
      } else if (L > 0) {
        pp = pair_params(h, L, zone, kind);
        if (pp.hc <= 0) table.warnings.push_back({e.id, "terminals too far apart to form a double zone"});
      }
      row.L = conv(L);
      row.hc = conv(pp.hc);
      row.rcx = conv(min_width_at(pp, hx));
    }
    table.rows.push_back(std::move(row));
  }

  if (ts.merge_identical_singles) {
    std::vector<CalcRow> merged;
    for (auto& r : table.rows) {
      auto same = [&](const CalcRow& m) {
        return !m.is_double && !r.is_double && m.h == r.h && m.h0 == r.h0 && m.hx == r.hx && m.rx == r.rx &&
               m.type_text == r.type_text;
      };
      auto it = std::find_if(merged.begin(), merged.end(), same);
      if (it == merged.end()) {
        merged.push_back(std::move(r));
      } else {
        it->labels += ", " + r.labels;
        it->entry_ids.insert(it->entry_ids.end(), r.entry_ids.begin(), r.entry_ids.end());
      }
    }
    table.rows = std::move(merged);
  }

  auto by_label = [](const CalcRow& a, const CalcRow& b) { return natural_less(a.labels, b.labels); };
  switch (ts.sort_mode) {
    case SortMode::None: break;
    case SortMode::Alphabetical: std::stable_sort(table.rows.begin(), table.rows.end(), by_label); break;
    case SortMode::Grouped:
      std::stable_sort(table.rows.begin(), table.rows.end(), [&](const CalcRow& a, const CalcRow& b) {
        if (a.is_double != b.is_double) return !a.is_double;
        return by_label(a, b);
      });
      break;
  }
  return table;
}

std::array<std::string, kTableColumns> row_cells(const CalcTable& t, const CalcRow& r) {
  auto f = [&](const std::optional<double>& v) { return v ? format_fixed(*v, t.settings.precision) : std::string(); };
  return {r.labels, f(r.h), f(r.h0), f(r.hx), f(r.rx), f(r.L), f(r.hc), f(r.rcx), r.type_text};
}

DisplayList layout_table(const CalcTable& t, Point2 corner, const TableHeader& header) {
  const auto& s = t.settings;
  const FontSettings& font = s.font;
  std::vector<std::array<std::string, kTableColumns>> cells;
  for (const auto& r : t.rows) cells.push_back(row_cells(t, r));

  std::array<double, kTableColumns> widths{};
  for (int c = 0; c < kTableColumns; ++c) {
    double w = measure_text(drawn_symbol(header.symbols[c]), font).width;
    for (const auto& word : split_words(header.names[c])) w = std::max(w, measure_text(word, font).width);
    for (const auto& row : cells) w = std::max(w, measure_text(row[c], font).width);
    widths[c] = std::max(w + kCellPadding, kMinColumnWidth);
  }

  const double line_h = font.size * 1.4;
  std::array<std::vector<std::string>, kTableColumns> name_lines;
  std::size_t max_lines = 1;
  for (int c = 0; c < kTableColumns; ++c) {
    name_lines[c] = wrap(header.names[c], widths[c] - kCellPadding, font);
    max_lines = std::max(max_lines, name_lines[c].size());
  }
  const double names_h = std::max(s.row_height, max_lines * line_h + font.size * 0.6);
  const double symbols_h = s.row_height;
  const double header_h = names_h + symbols_h;
  const double total_h = header_h + s.row_height * cells.size();
  double total_w = 0;
  for (double w : widths) total_w += w;

  DisplayList dl;
  const Style header_style{Color::Black, s.header_linetype};
  const Style border_style{Color::Black, s.border_linetype};
  const Style sep_style{Color::Black, s.separator_linetype};
  const Style text_style{Color::Black, Linetype::Solid};
  const double x0 = corner.x, y0 = corner.y;

  // Header grid, then data separators, then the border on top.
  double x = x0;
  for (int c = 0; c + 1 < kTableColumns; ++c) {
    x += widths[c];
    dl.add(LinePrim{{x, y0}, {x, y0 - header_h}}, header_style);
  }
  dl.add(LinePrim{{x0, y0 - names_h}, {x0 + total_w, y0 - names_h}}, header_style);
  dl.add(LinePrim{{x0, y0 - header_h}, {x0 + total_w, y0 - header_h}}, header_style);
  if (!cells.empty()) {
    x = x0;
    for (int c = 0; c + 1 < kTableColumns; ++c) {
      x += widths[c];
      dl.add(LinePrim{{x, y0 - header_h}, {x, y0 - total_h}}, sep_style);
    }
    for (std::size_t r = 1; r < cells.size(); ++r) {
      const double y = y0 - header_h - s.row_height * r;
      dl.add(LinePrim{{x0, y}, {x0 + total_w, y}}, sep_style);
    }
  }
  dl.add(PolylinePrim{{{x0, y0}, {x0 + total_w, y0}, {x0 + total_w, y0 - total_h}, {x0, y0 - total_h}}, true},
         border_style);

  x = x0;
  for (int c = 0; c < kTableColumns; ++c) {
    const double cx = x + widths[c] / 2;
    const auto& lines = name_lines[c];
    const double block = lines.size() * line_h;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      const double baseline = y0 - names_h / 2 + block / 2 - line_h * (k + 1) + (line_h - font.size) / 2;
      dl.add(TextPrim{{cx, baseline}, lines[k], font, 0, TextAnchor::Middle}, text_style);
    }
    if (c > 0 && c + 1 < kTableColumns) {
      dl.add(TextPrim{{cx, y0 - names_h - symbols_h / 2 - font.size / 2}, drawn_symbol(header.symbols[c]), font, 0,
                      TextAnchor::Middle},
             text_style);
    }
    for (std::size_t r = 0; r < cells.size(); ++r) {
      if (cells[r][c].empty()) continue;
      const double cy = y0 - header_h - s.row_height * (r + 0.5);
      dl.add(TextPrim{{cx, cy - font.size / 2}, cells[r][c], font, 0, TextAnchor::Middle}, text_style,
             t.rows[r].entry_ids.front());
    }
    x += widths[c];
  }
  return dl;
}

std::string table_csv(const CalcTable& t, const TableHeader& header) {
  std::string out;
  for (int c = 0; c < kTableColumns; ++c) out += (c ? "," : "") + csv_field(header.symbols[c]);
  out += "\n";
  for (const auto& r : t.rows) {
    const auto cells = row_cells(t, r);
    for (int c = 0; c < kTableColumns; ++c) out += (c ? "," : "") + csv_field(cells[c]);
    out += "\n";
  }
  return out;
}

std::string table_text(const CalcTable& t, const TableHeader& header) {
  std::vector<std::array<std::string, kTableColumns>> lines{header.symbols};
  for (const auto& r : t.rows) lines.push_back(row_cells(t, r));
  std::array<std::size_t, kTableColumns> w{};
  for (const auto& l : lines) {
    for (int c = 0; c < kTableColumns; ++c) w[c] = std::max(w[c], display_width(l[c]));
  }
  std::string out;
  for (const auto& l : lines) {
    std::string line;
    for (int c = 0; c < kTableColumns; ++c) {
      line += l[c];
      if (c + 1 < kTableColumns) line += std::string(w[c] - display_width(l[c]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace lpz

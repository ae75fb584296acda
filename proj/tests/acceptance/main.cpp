// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Tolerances and sample sizes are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "httplib.h"
#include "lpz/drafting.hpp"
#include "lpz/editops.hpp"
#include "lpz/refgraph.hpp"
#include "lpz/service.hpp"
#include "lpz/store.hpp"
#include "lpz/tablegen.hpp"
#include "lpz/zonecalc.hpp"
#include "support/fixtures.hpp"
#include "support/golden.hpp"
#include "support/grid_oracle.hpp"
#include "support/random_commands.hpp"
#include "support/random_project.hpp"

using namespace lpz;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double p95(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[static_cast<std::size_t>(std::ceil(0.95 * v.size())) - 1];
}

AirTerminal rod(Id id, const std::string& label, double x, double y, double h) {
  return testkit::make_rod(id, label, {x, y, h});
}

// ---------------------------------------------------------------------------

Outcome formula_oracle() {
  // Frozen from tools/spotcheck_formulas.py, metres.
  struct Case {
    ZoneType zone;
    double h0, r0, rx5;
  };
  constexpr double kTolM = 1e-4;
  const Case cases[] = {{ZoneType::B, 9.2, 15.0, 6.8478}, {ZoneType::A, 8.5, 10.8, 4.4471}};
  Outcome o;
  double worst = 0;
  for (const auto& c : cases) {
    const auto cp = cone_params(10'000, c.zone, TerminalKind::Rod);
    const double rx = radius_at(10'000, c.zone, TerminalKind::Rod, 5'000);
    for (double err : {cp.h0 / 1000 - c.h0, cp.r0 / 1000 - c.r0, rx / 1000 - c.rx5}) {
      worst = std::max(worst, std::abs(err));
    }
  }
  o.pass = worst < kTolM;
  o.detail = fmt("max |error| %.3g m (tol 1e-4 m)", worst);
  return o;
}

Outcome exact_ends() {
  constexpr double kRelTol = 1e-9;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> hd(100, 150'000);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double h = hd(rng);
    const auto zone = rng() % 2 ? ZoneType::A : ZoneType::B;
    const auto kind = rng() % 2 ? TerminalKind::Rod : TerminalKind::Wire;
    const auto c = cone_params(h, zone, kind);
    worst = std::max(worst, std::abs(radius_at(h, zone, kind, 0) - c.r0) / c.r0);
    worst = std::max(worst, std::abs(radius_at(h, zone, kind, c.h0)) / c.r0);
  }
  return {worst < kRelTol, fmt("1000 cases, max relative error %.3g (tol 1e-9)", worst)};
}

Outcome pair_continuity() {
  constexpr double kTolMm = 1e-6;
  const auto& table = FormulaTable::standard();
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> hd(1'000, 150'000);
  std::vector<double> heights{1'000, 10'000, 20'000, 100'000, 150'000};
  for (int i = 0; i < 20; ++i) heights.push_back(hd(rng));
  double worst = 0;
  int boundaries = 0;
  for (auto kind : {TerminalKind::Rod, TerminalKind::Wire}) {
    for (auto zone : {ZoneType::A, ZoneType::B}) {
      const auto& pieces = table.pair(zone, kind);
      for (double h : heights) {
        for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
          const double L = pieces[i].l_max * h;
          const auto lo = pair_params(h, std::nextafter(L, 0.0), zone, kind);
          const auto hi = pair_params(h, std::nextafter(L, 1e300), zone, kind);
          worst = std::max({worst, std::abs(lo.hc - hi.hc), std::abs(lo.rc - hi.rc)});
          ++boundaries;
        }
      }
    }
  }
  return {worst < kTolMm && boundaries > 0, fmt("%d boundaries, max jump %.3g mm (tol 1e-6 mm)", boundaries, worst)};
}

Outcome grid_consistency() {
  constexpr int kProjects = 50, kHeights = 5, kCells = 200;
  constexpr double kBudgetS = 10.0;
  std::mt19937_64 rng(303);
  const auto t0 = Clock::now();
  long cells = 0, bad = 0;
  for (int i = 0; i < kProjects; ++i) {
    const auto ts = testkit::random_terminals(rng, 6);
    const auto zone = i % 2 ? ZoneType::A : ZoneType::B;
    const ZoneField f(ts, zone);
    std::uniform_real_distribution<double> hd(0.02 * f.max_top(), 0.98 * f.max_top());
    for (int k = 0; k < kHeights; ++k) {
      const double hx = hd(rng);
      const auto r = testkit::rasterize(f.horizontal_section(hx), {-100'000, -100'000}, 300'000, kCells);
      for (int j = 0; j < r.n; ++j) {
        for (int c = 0; c < r.n; ++c) {
          const auto idx = static_cast<std::size_t>(j) * r.n + c;
          if (r.band[idx]) continue;
          ++cells;
          if ((f.height_at(r.centre(c, j)) >= hx) != (r.inside[idx] != 0)) ++bad;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < kBudgetS,
          fmt("%ld cells outside band, %ld disagree, %.2f s (budget 10 s)", cells, bad, secs)};
}

Outcome relief_levels() {
  const std::vector<AirTerminal> ts{rod(1, "МА-1", 0, 0, 20'000)};
  const ZoneField f(ts, ZoneType::B);
  const double h0 = cone_params(20'000, ZoneType::B, TerminalKind::Rod).h0;
  const auto levels = f.relief();
  if (levels.size() != 21) return {false, fmt("%zu levels", levels.size())};
  std::vector<testkit::Raster> rasters;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (std::abs(levels[k].level - 1'000.0 * k) > 1e-9) return {false, fmt("level %zu at %g mm", k, levels[k].level)};
    if (levels[k].contours.empty() != (levels[k].level >= h0)) {
      return {false, fmt("level %zu: contours %s", k, levels[k].contours.empty() ? "missing" : "above apex")};
    }
    rasters.push_back(testkit::rasterize(levels[k].contours, {-35'000, -35'000}, 70'000, 140));
  }
  long violations = 0;
  for (std::size_t k = 0; k + 1 < rasters.size(); ++k) {
    const auto& lo = rasters[k];
    const auto& hi = rasters[k + 1];
    for (std::size_t i = 0; i < lo.inside.size(); ++i) {
      if (lo.band[i] || hi.band[i]) continue;
      if (hi.inside[i] && !lo.inside[i]) ++violations;
    }
  }
  return {violations == 0, fmt("21 levels at 0..20 m, empty from h0 = %.1f m, %ld nesting violations", h0 / 1000, violations)};
}

bool referenced(const Project& p, Id id) {
  for (const auto& e : reference_edges(p)) {
    if (e.target == id) return true;
  }
  return false;
}

Outcome cascade_soundness() {
  constexpr int kSequences = 10'000, kSteps = 20;
  std::mt19937_64 rng(404);
  long applied = 0, rejected = 0, deletes = 0;
  for (int s = 0; s < kSequences; ++s) {
    Project p = testkit::random_project(rng);
    for (int k = 0; k < kSteps; ++k) {
      const auto c = testkit::random_command(rng, p);
      try {
        auto [q, cs] = lpz::apply(p, c);
        if (!validate(q).empty()) return {false, fmt("sequence %d: %s left an invalid project", s, command_name(c))};
        for (Id id : cs.deleted) {
          if (contains_object(q, id) || referenced(q, id)) {
            return {false, fmt("sequence %d: %s left deleted id %llu", s, command_name(c), (unsigned long long)id)};
          }
        }
        if (const auto* d = std::get_if<DeleteTerminal>(&c); d && d->section_ref == kPlan) {
          ++deletes;
          if (contains_object(q, d->id) || referenced(q, d->id)) {
            return {false, fmt("sequence %d: annotations of terminal %llu survived", s, (unsigned long long)d->id)};
          }
        }
        p = std::move(q);
        ++applied;
      } catch (const Error&) {
        ++rejected;
      }
    }
  }
  return {deletes > 0, fmt("%d sequences, %ld applied, %ld rejected, %ld plan deletes", kSequences, applied, rejected, deletes)};
}

bool is_numeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return (c >= '0' && c <= '9') || c == '.' || c == '-'; });
}

Outcome defaults_vs_general() {
  std::mt19937_64 rng(505);
  int projects = 0;
  long numerics = 0;
  for (int i = 0; i < 200; ++i) {
    const Project p = i == 0 ? testkit::golden_project() : testkit::random_project(rng);
    DefaultSettings d = p.defaults;
    d.terminal.color = d.terminal.color == Color::Red ? Color::Blue : Color::Red;
    d.dims.text_offset += 1.5;
    d.grounding.rod_count += 1;
    d.zone_section.linetype = Linetype::DashDot;
    d.text_leader_to_shelf_end = !d.text_leader_to_shelf_end;
    auto after = lpz::apply(p, UpdateDefaults{d}).first;
    auto a = project_to_json(p), b = project_to_json(after);
    a.erase("defaults");
    b.erase("defaults");
    if (a != b) return {false, fmt("project %d: UpdateDefaults changed an existing object", i)};

    if (p.table_entries.empty()) continue;
    // Merging compares rounded values, so precision may regroup rows; compare unmerged.
    Project unmerged = p;
    unmerged.general.table.merge_identical_singles = false;
    GeneralSettings g = unmerged.general;
    g.table.precision = p.general.table.precision == 3 ? 1 : 3;
    const auto before_t = build_table(unmerged);
    const auto after_t = build_table(lpz::apply(unmerged, UpdateGeneralSettings{g}).first);
    if (before_t.rows.size() != after_t.rows.size()) return {false, fmt("project %d: row count changed", i)};
    for (std::size_t r = 0; r < before_t.rows.size(); ++r) {
      const auto x = row_cells(before_t, before_t.rows[r]);
      const auto y = row_cells(after_t, after_t.rows[r]);
      for (std::size_t c = 1; c < x.size(); ++c) {
        if (!is_numeric(x[c])) continue;
        ++numerics;
        if (x[c] == y[c]) return {false, fmt("project %d: cell '%s' ignored the precision change", i, x[c].c_str())};
      }
    }
    ++projects;
  }
  return {numerics > 0, fmt("200 projects unchanged by UpdateDefaults; %ld numerics in %d tables follow precision", numerics, projects)};
}

Outcome table_behavior() {
  std::mt19937_64 rng(606);
  long merged_rows = 0;
  for (int i = 0; i < 300; ++i) {
    Project p = i == 0 ? testkit::golden_project() : testkit::random_project(rng);
    if (i % 2 && !p.table_entries.empty()) {
      // Copies tabulated at the same level produce identical rows.
      const auto e = p.table_entries[rng() % p.table_entries.size()];
      if (!e.terminal_ref2) {
        auto [q, copy] = copy_object(p, e.terminal_ref, {5'000.0 * (1 + rng() % 5), 0, 0});
        p = lpz::apply(q, AddTableEntry{copy, std::nullopt, e.protected_level}).first;
      }
    }
    p.general.table.sort_mode = SortMode::Grouped;
    p.general.table.merge_identical_singles = true;
    const auto t = build_table(p);
    bool seen_double = false;
    for (const auto& r : t.rows) {
      if (seen_double && !r.is_double) return {false, fmt("project %d: single after double", i)};
      seen_double = seen_double || r.is_double;
    }

    p.general.table.merge_identical_singles = false;
    p.general.table.sort_mode = SortMode::None;
    const auto raw = build_table(p);
    std::map<Id, const CalcRow*> by_entry;
    for (const auto& r : raw.rows) by_entry[r.entry_ids.at(0)] = &r;
    auto key = [](const CalcRow& r) { return std::make_tuple(r.h, r.h0, r.hx, r.rx, r.type_text); };
    std::set<decltype(key(t.rows[0]))> single_keys;
    for (const auto& r : t.rows) {
      if (r.entry_ids.size() > 1) {
        ++merged_rows;
        if (r.is_double) return {false, fmt("project %d: doubles merged", i)};
        std::string joined;
        for (Id e : r.entry_ids) {
          const auto& part = *by_entry.at(e);
          if (part.is_double || key(part) != key(r)) return {false, fmt("project %d: merged unequal rows", i)};
          joined += (joined.empty() ? "" : ", ") + part.labels;
        }
        if (joined != r.labels) return {false, fmt("project %d: label '%s'", i, r.labels.c_str())};
      }
      if (!r.is_double && !single_keys.insert(key(r)).second) return {false, fmt("project %d: equal singles left apart", i)};
    }
  }

  const auto golden = build_table(testkit::golden_project());
  const bool label_format = std::any_of(golden.rows.begin(), golden.rows.end(), [](const CalcRow& r) { return r.labels == "МА-1, МА-2"; });
  const auto csv = table_csv(golden);
  const auto golden_msg = testkit::check_golden(LPZ_GOLDEN_DIR, "table.csv", csv);
  const bool stable = csv == table_csv(build_table(testkit::golden_project()));
  return {label_format && golden_msg.empty() && stable && merged_rows > 0,
          fmt("grouped order and merge checked on 300 tables (%ld merged rows); label join %s; csv golden %s",
              merged_rows, label_format ? "ok" : "wrong", golden_msg.empty() && stable ? "stable" : golden_msg.c_str())};
}

Outcome round_trip() {
  constexpr int kProjects = 1200;
  std::mt19937_64 rng(707);
  for (int i = 0; i < kProjects; ++i) {
    Project p = testkit::random_project(rng);
    if (i % 4 == 0) {
      for (int k = 0; k < 10; ++k) {
        try {
          p = lpz::apply(p, testkit::random_command(rng, p)).first;
        } catch (const Error&) {
        }
      }
    }
    const auto text = save(p);
    if (text != save(p)) return {false, fmt("project %d: save not deterministic", i)};
    const auto back = load(text);
    if (!(back == p)) return {false, fmt("project %d: load(save(p)) != p", i)};
    if (save(back) != text) return {false, fmt("project %d: bytes changed on second save", i)};
  }
  return {true, fmt("%d projects, equal after reload, byte-identical saves", kProjects)};
}

template <class T>
int count_of(const DisplayList& dl, Id source) {
  return static_cast<int>(std::count_if(dl.items.begin(), dl.items.end(), [&](const Primitive& it) {
    return it.source_id == source && std::holds_alternative<T>(it.shape);
  }));
}

bool has_text_like(const DisplayList& dl, const std::string& prefix, std::size_t decimals) {
  for (const auto& it : dl.items) {
    const auto* t = std::get_if<TextPrim>(&it.shape);
    if (!t || !t->text.starts_with(prefix)) continue;
    const auto dot = t->text.rfind('.');
    if (dot != std::string::npos && t->text.size() - dot - 1 == decimals) return true;
  }
  return false;
}

Outcome render_goldens() {
  const auto p = testkit::golden_project();
  const auto sid = p.drawing_sections.at(0).id;
  const auto plan_dl = render_plan(p);
  const auto sec_dl = render_section(p, sid);
  const auto plan = emit_svg(plan_dl);
  const auto sec = emit_svg(sec_dl);
  std::vector<std::string> missing;
  for (int run = 0; run < 5; ++run) {
    if (emit_svg(render_plan(p)) != plan || emit_svg(render_section(p, sid)) != sec) {
      return {false, "output differs between runs"};
    }
  }
  auto need = [&](bool ok, const char* what) {
    if (!ok) missing.push_back(what);
  };
  const auto& t = p.terminals;
  need(count_of<PolylinePrim>(plan_dl, t[0].id) == 1 && count_of<LinePrim>(plan_dl, t[0].id) == 2, "freestanding rod");
  need(count_of<DotPrim>(plan_dl, t[2].id) == 1, "mounted rod");
  need(count_of<HatchPrim>(plan_dl, t[3].id) == 1, "mesh hatch");
  need(count_of<PathPrim>(plan_dl, t[4].id) + count_of<LinePrim>(plan_dl, t[4].id) > 0, "wire");
  need(count_of<PathPrim>(plan_dl, t[5].id) + count_of<LinePrim>(plan_dl, t[5].id) >= 2, "double wire");
  need(count_of<PolylinePrim>(plan_dl, sid) >= 2, "section mark arrows");
  need(has_text_like(plan_dl, "Rx1 = ", 2), "plan radius text");
  need(has_text_like(sec_dl, "R1 = ", 2), "vertical radius text");
  need(has_text_like(plan_dl, "Rcx = ", 2), "min width text");
  need(!p.distance_dims.empty() && count_of<TextPrim>(plan_dl, p.distance_dims[0].id) == 1, "distance dimension");
  need(count_of<CirclePrim>(plan_dl, p.grounding.at(0).id) == 4, "grounding electrode with 4 rods");
  for (const auto& r : build_table(p).rows) need(count_of<TextPrim>(plan_dl, r.entry_ids.front()) > 0, "table row");
  const auto g1 = testkit::check_golden(LPZ_GOLDEN_DIR, "plan.svg", plan);
  const auto g2 = testkit::check_golden(LPZ_GOLDEN_DIR, "section.svg", sec);
  if (!g1.empty()) missing.push_back(g1.c_str());
  if (!g2.empty()) missing.push_back(g2.c_str());
  std::string list;
  for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
  return {missing.empty(), missing.empty() ? "plan and section byte-stable over 5 runs, goldens match, coverage complete"
                                           : "missing: " + list};
}

Project perf_project() {
  Project p;
  p.general.zone_type = ZoneType::B;
  std::vector<Id> ids;
  for (int i = 0; i < 16; ++i) {
    const double h = i % 3 == 0 ? 25'000 : 20'000;
    ids.push_back(p.next_id);
    p.terminals.push_back(rod(p.next_id++, "МА-" + std::to_string(i + 1), (i % 4) * 18'000, (i / 4) * 18'000, h));
  }
  AirTerminal w;
  w.label = "Т-1";
  w.type_text = "ТМ-1";
  w.height = 18'000;
  w.construction = Wire{{90'000, 0, 18'000}, {90'000, 50'000, 18'000}};
  AirTerminal dw = w;
  dw.label = "Т-2";
  dw.construction = DoubleWire{{110'000, 0, 18'000}, {110'000, 50'000, 18'000}, 8'000, 18'000};
  AirTerminal mesh;
  mesh.label = "С-1";
  mesh.construction = Mesh{{{-30'000, -30'000, 9'000}, {-10'000, -30'000, 9'000}, {-10'000, -10'000, 9'000}, {-30'000, -10'000, 9'000}}};
  AirTerminal w2 = w;
  w2.label = "Т-3";
  w2.construction = Wire{{0, 80'000, 18'000}, {54'000, 80'000, 18'000}};
  for (AirTerminal t : {w, dw, mesh, w2}) {
    t.id = p.next_id++;
    ids.push_back(t.id);
    p.terminals.push_back(t);
  }

  DrawingSection sec;
  sec.id = p.next_id++;
  sec.letter = "А";
  sec.cut_a = {-40'000, 0};
  sec.cut_b = {140'000, 0};
  sec.base_projection = {0, -120};
  p.drawing_sections.push_back(sec);

  ZoneSection plan;
  plan.id = p.next_id++;
  plan.section_ref = kPlan;
  plan.terminal_refs = ids;
  plan.cut_height = 8'000;
  p.zone_sections.push_back(plan);
  ZoneSection onsec;
  onsec.id = p.next_id++;
  onsec.section_ref = sec.id;
  onsec.terminal_refs = {ids[0], ids[1], ids[2], ids[3], ids[16], ids[17]};
  p.zone_sections.push_back(onsec);

  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (std::holds_alternative<Mesh>(p.terminals[i].construction)) continue;
    TableEntry e;
    e.id = p.next_id++;
    e.terminal_ref = ids[i];
    e.protected_level = 8'000;
    p.table_entries.push_back(e);
  }
  for (std::size_t i = 1; i < 4; ++i) {
    TableEntry e;
    e.id = p.next_id++;
    e.terminal_ref = ids[i];
    e.terminal_ref2 = ids[i + 4 < 16 ? i + 4 : i];
    e.protected_level = 8'000;
    p.table_entries.push_back(e);
  }
  return p;
}

/// Everything derived from the model: zone sections of every view and the table.
std::size_t full_recompute(const Project& p) {
  std::size_t n = 0;
  for (const auto& zs : p.zone_sections) {
    const auto ts = section_terminals(p, zs);
    const ZoneField f(ts, p.general.zone_type);
    if (zs.section_ref == kPlan) {
      n += f.horizontal_section(zs.cut_height.value_or(0)).size();
    } else {
      const auto* ds = p.find_drawing_section(zs.section_ref);
      n += f.vertical_profile(ds->cut_a, ds->cut_b, view_sense(*ds)).size();
    }
  }
  return n + build_table(p).rows.size();
}

Outcome recalc_budget() {
  constexpr double kRecomputeP95Ms = 50, kQueryP95Ms = 10;
  const auto p = perf_project();
  if (const auto vs = validate(p); !vs.empty()) {
    return {false, "performance fixture does not validate: " + vs[0].path + " " + vs[0].message};
  }

  std::vector<double> recompute;
  std::size_t sink = 0;
  for (int i = 0; i < 60; ++i) {
    const auto t0 = Clock::now();
    sink += full_recompute(p);
    recompute.push_back(seconds_since(t0) * 1000);
  }

  Service svc;
  HttpServer server(svc);
  const int port = server.bind("127.0.0.1", 0);
  std::thread th([&] { server.listen(); });
  httplib::Client cli("127.0.0.1", port);
  cli.set_keep_alive(true);
  cli.set_tcp_nodelay(true);
  std::vector<double> query;
  std::string failure;
  if (auto r = cli.Post("/v1/projects", save(p), "application/json"); r && r->status == 201) {
    const std::string id = nlohmann::json::parse(r->body)["id"];
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> xy(-40'000, 140'000);
    for (int i = 0; i < 300 && failure.empty(); ++i) {
      const auto path = fmt("/v1/projects/%s/query/height?x=%.1f&y=%.1f", id.c_str(), xy(rng), xy(rng));
      const auto t0 = Clock::now();
      auto q = cli.Get(path);
      query.push_back(seconds_since(t0) * 1000);
      if (!q || q->status != 200) failure = "query failed";
    }
  } else {
    failure = "upload failed";
  }
  server.stop();
  th.join();
  if (!failure.empty()) return {false, failure};

  const double rp = p95(recompute), qp = p95(query);
  return {rp < kRecomputeP95Ms && qp < kQueryP95Ms && sink > 0,
          fmt("20 terminals: recompute p95 %.2f ms (budget 50), /query/height p95 %.3f ms (budget 10)", rp, qp)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"zone formula oracle", formula_oracle},
      {"exactness at ends", exact_ends},
      {"pair continuity", pair_continuity},
      {"grid consistency", grid_consistency},
      {"relief", relief_levels},
      {"cascade soundness", cascade_soundness},
      {"defaults vs general", defaults_vs_general},
      {"table behavior", table_behavior},
      {"round-trip", round_trip},
      {"render determinism and goldens", render_goldens},
      {"instant-recalc budget", recalc_budget},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %-32s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed ? 1 : 0;
}

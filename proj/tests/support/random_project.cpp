#include "support/random_project.hpp"

#include <algorithm>

namespace lpz::testkit {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

double shared_height(std::mt19937_64& rng) {
  static constexpr double kHeights[] = {10'000, 15'000, 20'000, 30'000};
  return kHeights[pick(rng, 0, 3)];
}

// Coordinates on a 1 mm grid survive any text round trip exactly.
double coord(std::mt19937_64& rng, double lo, double hi) { return std::round(uniform(rng, lo, hi)); }

AirTerminal make_terminal(std::mt19937_64& rng, int kind) {
  AirTerminal t;
  const double x = coord(rng, 0, 100'000);
  const double y = coord(rng, 0, 100'000);
  switch (kind) {
    case 0: {
      const double z = shared_height(rng);
      if (coin(rng, 0.7)) {
        t.construction = Rod{{x, y, z}, true};
        t.height = z;
      } else {
        t.construction = Rod{{x, y, z}, false};
        t.height = z - coord(rng, 1'000, 5'000);
      }
      t.type_text = "Стержень";
      break;
    }
    case 1: {
      const double w = coord(rng, 5'000, 20'000);
      const double h = coord(rng, 5'000, 20'000);
      const double z = shared_height(rng);
      t.construction = Mesh{{{x, y, z}, {x + w, y, z}, {x + w, y + h, z}, {x, y + h, z}}};
      t.type_text = "Сетка";
      break;
    }
    default: {
      const double z = shared_height(rng);
      const double ang = uniform(rng, 0, 6.283185307179586);
      const double span = uniform(rng, 10'000, 60'000);
      const Point3 a{x, y, z};
      const Point3 b{std::round(x + span * std::cos(ang)), std::round(y + span * std::sin(ang)), z};
      t.height = z;
      if (kind == 2) {
        t.construction = Wire{a, b};
        t.type_text = "Трос";
      } else {
        const double off = coord(rng, 3'000, 15'000) * (coin(rng) ? 1 : -1);
        const double z2 = coin(rng, 0.7) ? z : shared_height(rng);
        t.construction = DoubleWire{a, b, off, z2};
        t.type_text = "Двойной трос";
      }
      break;
    }
  }
  return t;
}

}  // namespace

std::vector<AirTerminal> random_terminals(std::mt19937_64& rng, int max_count) {
  const int n = pick(rng, 1, max_count);
  std::vector<AirTerminal> out;
  for (int i = 0; i < n; ++i) {
    const int r = pick(rng, 0, 9);
    const int kind = r < 5 ? 0 : r < 7 ? 1 : r < 9 ? 2 : 3;
    auto t = make_terminal(rng, kind);
    t.id = static_cast<Id>(i + 1);
    t.label = "МА-" + std::to_string(i + 1);
    out.push_back(std::move(t));
  }
  return out;
}

Project random_project(std::mt19937_64& rng) {
  Project p;
  p.general.zone_type = coin(rng) ? ZoneType::A : ZoneType::B;
  p.general.table.precision = pick(rng, 0, 3);
  p.general.table.unit = static_cast<LengthUnit>(pick(rng, 0, 2));
  p.general.table.sort_mode = static_cast<SortMode>(pick(rng, 0, 2));
  p.general.table.merge_identical_singles = coin(rng);
  p.general.plan_view.scale = coin(rng) ? 0.005 : 0.002;
  p.defaults.grounding.rod_count = pick(rng, 1, 8);
  p.defaults.dims.tick_style = static_cast<TickStyle>(pick(rng, 0, 2));

  auto next = [&]() { return p.next_id++; };

  p.terminals = random_terminals(rng, 6);
  for (auto& t : p.terminals) t.id = next();
  if (coin(rng, 0.2)) p.terminals[0].color = Color::Blue;

  auto is_rod = [](const AirTerminal& t) { return std::holds_alternative<Rod>(t.construction); };
  std::vector<Id> all;
  std::vector<const AirTerminal*> rods;
  for (const auto& t : p.terminals) {
    all.push_back(t.id);
    if (is_rod(t)) rods.push_back(&t);
  }

  ZoneSection plan;
  plan.id = next();
  plan.section_ref = kPlan;
  plan.terminal_refs = all;
  plan.cut_height = std::round(uniform(rng, 0, 8'000));
  p.zone_sections.push_back(plan);

  const int sections = pick(rng, 0, 2);
  for (int i = 0; i < sections; ++i) {
    DrawingSection s;
    s.id = next();
    s.letter = i == 0 ? "1" : "2";
    s.rotated = coin(rng, 0.3);
    s.scale = 0.005;
    s.base_projection = {coord(rng, 0, 100'000), coord(rng, -150'000, -60'000)};
    s.cut_a = {coord(rng, -10'000, 0), coord(rng, 0, 100'000)};
    s.cut_b = {coord(rng, 100'000, 110'000), coord(rng, 0, 100'000)};
    s.label_side = coin(rng) ? Side::Left : Side::Right;
    p.drawing_sections.push_back(s);

    ZoneSection zs;
    zs.id = next();
    zs.section_ref = s.id;
    zs.terminal_refs = all;
    p.zone_sections.push_back(zs);

    if (!p.terminals.empty() && !std::holds_alternative<Mesh>(p.terminals[0].construction)) {
      RadiusDimVert rv;
      rv.id = next();
      rv.param_text = "R1";
      rv.terminal_ref = p.terminals[0].id;
      rv.section_ref = s.id;
      rv.line_offset = {0, 5};
      p.radius_dims_vert.push_back(rv);
    }
  }

  for (const auto& t : p.terminals) {
    TerminalText tt;
    tt.id = next();
    tt.terminal_ref = t.id;
    tt.start_offset = {5, 5};
    tt.leader_point_offset = {1, 1};
    p.terminal_texts.push_back(tt);
    if (!std::holds_alternative<Mesh>(t.construction)) {
      TableEntry e;
      e.id = next();
      e.terminal_ref = t.id;
      e.protected_level = std::round(uniform(rng, 0, 10'000));
      p.table_entries.push_back(e);
    }
  }

  ZoneLevelText zt;
  zt.id = next();
  zt.zone_section_ref = plan.id;
  zt.start_offset = {10, -10};
  zt.leader_angle = 0.5;
  p.zone_texts.push_back(zt);

  for (std::size_t i = 0; i < rods.size(); ++i) {
    RadiusDimPlan rp;
    rp.id = next();
    rp.param_text = "Rx" + std::to_string(i + 1);
    rp.terminal_ref = rods[i]->id;
    rp.zone_section_ref = plan.id;
    rp.angle = uniform(rng, 0, 6.28);
    p.radius_dims_plan.push_back(rp);
  }
  if (rods.size() >= 2) {
    DistanceDim d;
    d.id = next();
    d.terminal_a = rods[0]->id;
    d.terminal_b = rods[1]->id;
    d.line_offset = {0, 8};
    p.distance_dims.push_back(d);

    TableEntry e;
    e.id = next();
    e.terminal_ref = rods[0]->id;
    e.terminal_ref2 = rods[1]->id;
    e.protected_level = 3'000;
    p.table_entries.push_back(e);

    if (top_elevation(*rods[0]) == top_elevation(*rods[1])) {
      MinWidthDim m;
      m.id = next();
      m.param_text = "Rcx";
      m.terminal_a = rods[0]->id;
      m.terminal_b = rods[1]->id;
      m.zone_section_ref = plan.id;
      p.min_width_dims.push_back(m);
    }
  }
  for (const auto& t : p.terminals) {
    if (std::holds_alternative<DoubleWire>(t.construction)) {
      MinWidthDim m;
      m.id = next();
      m.param_text = "Rcx";
      m.terminal_a = t.id;
      m.terminal_b = t.id;
      m.zone_section_ref = plan.id;
      p.min_width_dims.push_back(m);
    }
  }

  const int ground = pick(rng, 0, 2);
  for (int i = 0; i < ground; ++i) {
    GroundingElectrode g;
    g.id = next();
    g.center_offset = {coord(rng, 0, 100'000), coord(rng, 0, 100'000)};
    g.rod_count = pick(rng, 1, 6);
    g.angle = uniform(rng, 0, 3.14);
    g.rod_spacing = coord(rng, 3'000, 5'000);
    p.grounding.push_back(g);
  }
  return p;
}

}  // namespace lpz::testkit

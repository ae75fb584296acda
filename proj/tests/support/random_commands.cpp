#include "support/random_commands.hpp"

#include <cmath>
#include <variant>

#include "support/random_project.hpp"

namespace lpz::testkit {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
double grid(std::mt19937_64& rng, double lo, double hi) {
  return std::round(std::uniform_real_distribution<double>(lo, hi)(rng));
}

template <class T>
Id some_id(std::mt19937_64& rng, const Project& p, const std::vector<T>& list) {
  if (list.empty() || coin(rng, 0.05)) return p.next_id + static_cast<Id>(pick(rng, 0, 3));
  return list[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(list.size()) - 1))].id;
}

Id some_section(std::mt19937_64& rng, const Project& p) {
  if (p.drawing_sections.empty() || coin(rng, 0.4)) return kPlan;
  return some_id(rng, p, p.drawing_sections);
}

Id some_mesh(std::mt19937_64& rng, const Project& p) {
  for (const auto& t : p.terminals) {
    if (std::holds_alternative<Mesh>(t.construction) && coin(rng, 0.7)) return t.id;
  }
  return some_id(rng, p, p.terminals);
}

std::size_t ring_index(std::mt19937_64& rng, const Project& p, Id mesh, int extra) {
  const auto* t = p.find_terminal(mesh);
  const auto* m = t ? std::get_if<Mesh>(&t->construction) : nullptr;
  const int n = m ? static_cast<int>(m->ring.size()) : 4;
  return static_cast<std::size_t>(pick(rng, 0, n - 1 + extra));
}

PaperVec paper(std::mt19937_64& rng) { return {grid(rng, -20, 20), grid(rng, -20, 20)}; }

}  // namespace

Command random_command(std::mt19937_64& rng, const Project& p) {
  switch (pick(rng, 0, 43)) {
    case 0: {
      auto t = random_terminals(rng, 1).front();
      AddTerminal c{"МА-" + std::to_string(pick(rng, 1, 30)), t.type_text, t.construction, t.height, {}, {}, {}};
      if (const auto* r = std::get_if<Rod>(&t.construction)) c.freestanding = r->freestanding;
      return c;
    }
    case 1: return DeleteTerminal{some_id(rng, p, p.terminals), coin(rng, 0.7) ? kPlan : some_section(rng, p)};
    case 2:
      if (coin(rng)) return MoveTerminal{some_id(rng, p, p.terminals), {grid(rng, -5e3, 5e3), grid(rng, -5e3, 5e3), 0}};
      return MoveTerminal{some_id(rng, p, p.terminals), {0, 0, grid(rng, -4e3, 4e3)}, some_section(rng, p)};
    case 3: return CopyTerminal{some_id(rng, p, p.terminals), {grid(rng, -2e4, 2e4), grid(rng, -2e4, 2e4), 0}};
    case 4: {
      SetTerminalProps c{some_id(rng, p, p.terminals)};
      if (coin(rng)) c.label = "Т-" + std::to_string(pick(rng, 1, 9));
      if (coin(rng)) c.height = grid(rng, 2e3, 40e3);
      if (coin(rng, 0.3)) c.freestanding = coin(rng);
      if (coin(rng, 0.3)) c.color = Color::Green;
      return c;
    }
    case 5: {
      const Id m = some_mesh(rng, p);
      return AddMeshVertex{m, ring_index(rng, p, m, 1), {grid(rng, 0, 1e5), grid(rng, 0, 1e5)}};
    }
    case 6: {
      const Id m = some_mesh(rng, p);
      return MoveMeshVertex{m, ring_index(rng, p, m, 0), {grid(rng, 0, 1e5), grid(rng, 0, 1e5)}};
    }
    case 7: {
      const Id m = some_mesh(rng, p);
      return DeleteMeshVertex{m, ring_index(rng, p, m, 0)};
    }
    case 8:
      return AddDrawingSection{coin(rng) ? "Б" : "", {grid(rng, -1e4, 0), grid(rng, 0, 1e5)},
                               {grid(rng, 1e5, 1.1e5), grid(rng, 0, 1e5)}, {grid(rng, 0, 1e5), grid(rng, -2e5, -1e5)},
                               {}, coin(rng), coin(rng) ? Side::Left : Side::Right, {0, -20}};
    case 9: return DeleteDrawingSection{some_id(rng, p, p.drawing_sections)};
    case 10: {
      MoveDrawingSectionMark c{some_id(rng, p, p.drawing_sections)};
      if (coin(rng)) c.cut_a = Point2{grid(rng, -1e4, 0), grid(rng, 0, 1e5)};
      if (coin(rng)) c.base_projection = Point2{grid(rng, 0, 1e5), grid(rng, -2e5, -1e5)};
      if (coin(rng, 0.2)) c.scale = coin(rng) ? 0.01 : -1.0;
      return c;
    }
    case 11: {
      AddZoneSection c{some_section(rng, p)};
      for (const auto& t : p.terminals) {
        if (coin(rng)) c.terminal_refs.push_back(t.id);
      }
      if (c.section_ref == kPlan) c.cut_height = grid(rng, 0, 1e4);
      return c;
    }
    case 12: return DeleteZoneSection{some_id(rng, p, p.zone_sections)};
    case 13: {
      SetZoneSectionProps c{some_id(rng, p, p.zone_sections)};
      if (coin(rng)) c.cut_height = grid(rng, 0, 1e4);
      if (coin(rng)) c.color = Color::Magenta;
      return c;
    }
    case 14: return AddTerminalToZoneSection{some_id(rng, p, p.zone_sections), some_id(rng, p, p.terminals)};
    case 15: return RemoveTerminalFromZoneSection{some_id(rng, p, p.zone_sections), some_id(rng, p, p.terminals)};
    case 16: return AddTerminalText{some_id(rng, p, p.terminals), some_section(rng, p), paper(rng), paper(rng), {}};
    case 17: return DeleteTerminalText{some_id(rng, p, p.terminal_texts)};
    case 18: return MoveTerminalText{some_id(rng, p, p.terminal_texts), paper(rng), {}};
    case 19: return AddZoneLevelText{some_id(rng, p, p.zone_sections), paper(rng), 0.25, {}, {}};
    case 20: return DeleteZoneLevelText{some_id(rng, p, p.zone_texts)};
    case 21: return MoveZoneLevelText{some_id(rng, p, p.zone_texts), paper(rng), {}};
    case 22:
      return AddDistanceDim{some_id(rng, p, p.terminals), some_id(rng, p, p.terminals), some_section(rng, p),
                            paper(rng), {}, {}};
    case 23: return DeleteDistanceDim{some_id(rng, p, p.distance_dims)};
    case 24: return MoveDistanceDim{some_id(rng, p, p.distance_dims), paper(rng)};
    case 25: {
      AddRadiusDimPlan c;
      c.param_text = "Rx";
      c.terminal_ref = some_id(rng, p, p.terminals);
      c.zone_section_ref = some_id(rng, p, p.zone_sections);
      c.angle = 1.0;
      return c;
    }
    case 26: return DeleteRadiusDimPlan{some_id(rng, p, p.radius_dims_plan)};
    case 27: return MoveRadiusDimPlan{some_id(rng, p, p.radius_dims_plan), paper(rng), {}};
    case 28: {
      AddRadiusDimVert c;
      c.param_text = "R";
      c.terminal_ref = some_id(rng, p, p.terminals);
      c.section_ref = some_id(rng, p, p.drawing_sections);
      c.line_offset = paper(rng);
      return c;
    }
    case 29: return DeleteRadiusDimVert{some_id(rng, p, p.radius_dims_vert)};
    case 30: return MoveRadiusDimVert{some_id(rng, p, p.radius_dims_vert), paper(rng), {}};
    case 31: {
      AddMinWidthDim c;
      c.param_text = "Rcx";
      c.terminal_a = some_id(rng, p, p.terminals);
      c.terminal_b = coin(rng, 0.3) ? c.terminal_a : some_id(rng, p, p.terminals);
      c.zone_section_ref = some_id(rng, p, p.zone_sections);
      return c;
    }
    case 32: return DeleteMinWidthDim{some_id(rng, p, p.min_width_dims)};
    case 33: return MoveMinWidthDim{some_id(rng, p, p.min_width_dims), paper(rng)};
    case 34: {
      AddTableEntry c{some_id(rng, p, p.terminals), {}, grid(rng, 0, 8e3)};
      if (coin(rng, 0.3)) c.terminal_ref2 = some_id(rng, p, p.terminals);
      return c;
    }
    case 35: return DeleteTableEntry{some_id(rng, p, p.table_entries)};
    case 36: {
      EditTableEntry c{some_id(rng, p, p.table_entries)};
      if (coin(rng)) c.protected_level = grid(rng, -1e3, 8e3);
      if (coin(rng, 0.3)) c.terminal_ref = some_id(rng, p, p.terminals);
      if (coin(rng, 0.2)) c.clear_ref2 = true;
      return c;
    }
    case 37: {
      AddGroundingElectrode c{{grid(rng, 0, 1e5), grid(rng, -1e5, 0)}};
      if (coin(rng, 0.3)) c.rod_count = pick(rng, 0, 6);
      return c;
    }
    case 38: return DeleteGroundingElectrode{some_id(rng, p, p.grounding)};
    case 39: return MoveGroundingElectrode{some_id(rng, p, p.grounding), {grid(rng, -5e3, 5e3), 0}, {}};
    case 40: return CopyGroundingElectrode{some_id(rng, p, p.grounding), {grid(rng, -5e3, 5e3), 1000}};
    case 41: return MoveProject{paper(rng)};
    case 42: {
      auto g = p.general;
      g.zone_type = coin(rng) ? ZoneType::A : ZoneType::B;
      if (coin(rng, 0.1)) g.table.row_height = 1.0;
      return UpdateGeneralSettings{g};
    }
    default: {
      auto d = p.defaults;
      d.terminal.color = coin(rng) ? Color::Red : Color::Black;
      d.grounding.rod_count = pick(rng, 1, 5);
      return UpdateDefaults{d};
    }
  }
}

}  // namespace lpz::testkit

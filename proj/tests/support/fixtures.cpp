#include "support/fixtures.hpp"

#include <numbers>

namespace lpz::testkit {

AirTerminal make_rod(Id id, const std::string& label, Point3 apex, std::optional<double> height) {
  AirTerminal t;
  t.id = id;
  t.label = label;
  t.type_text = "СМ-1";
  t.height = height.value_or(apex.z);
  t.construction = Rod{apex, !height || *height == apex.z};
  return t;
}

Project golden_project() {
  Project p;
  p.general.zone_type = ZoneType::B;
  auto next = [&]() { return p.next_id++; };

  const Id t1 = next(), t2 = next(), t3 = next(), t4 = next(), t5 = next(), t6 = next();
  p.terminals.push_back(make_rod(t1, "МА-1", {0, 0, 20'000}));
  p.terminals.push_back(make_rod(t2, "МА-2", {47'883, 0, 20'000}));
  auto mounted = make_rod(t3, "МА-3", {20'000, 30'000, 16'667}, 6'667);
  mounted.type_text = "СМ-2";
  p.terminals.push_back(mounted);

  AirTerminal mesh;
  mesh.id = t4;
  mesh.label = "С-1";
  mesh.type_text = "Сетка";
  mesh.construction =
      Mesh{{{-30'000, -30'000, 8'000}, {-10'000, -30'000, 8'000}, {-10'000, -15'000, 8'000}, {-30'000, -15'000, 8'000}}};
  p.terminals.push_back(mesh);

  AirTerminal wire;
  wire.id = t5;
  wire.label = "Т-1";
  wire.type_text = "ТМ-1";
  wire.height = 15'000;
  wire.construction = Wire{{60'000, 30'000, 15'000}, {100'000, 30'000, 15'000}};
  p.terminals.push_back(wire);

  AirTerminal dwire;
  dwire.id = t6;
  dwire.label = "Т-2";
  dwire.type_text = "ТМ-2";
  dwire.height = 14'000;
  dwire.construction = DoubleWire{{60'000, -40'000, 14'000}, {100'000, -40'000, 14'000}, 10'000, 14'000};
  p.terminals.push_back(dwire);

  DrawingSection sec;
  sec.id = next();
  sec.letter = "А";
  sec.scale = 0.005;
  sec.base_projection = {100, -80};
  sec.cut_a = {-40'000, 0};
  sec.cut_b = {110'000, 0};
  sec.label_side = Side::Left;
  sec.own_label_layout.shelf_mid_offset = {0, -25};
  p.drawing_sections.push_back(sec);

  ZoneSection plan;
  plan.id = next();
  plan.section_ref = kPlan;
  plan.terminal_refs = {t1, t2, t3, t4, t5, t6};
  plan.cut_height = 7'973;
  p.zone_sections.push_back(plan);

  ZoneSection onsec;
  onsec.id = next();
  onsec.section_ref = sec.id;
  onsec.terminal_refs = {t1, t2, t3};
  p.zone_sections.push_back(onsec);

  for (Id t : {t1, t2, t3, t4, t5, t6}) {
    TerminalText tt;
    tt.id = next();
    tt.terminal_ref = t;
    tt.start_offset = {static_cast<double>(t) * 12.0 - 40, 60};
    p.terminal_texts.push_back(tt);
  }
  TerminalText st;
  st.id = next();
  st.terminal_ref = t1;
  st.section_ref = sec.id;
  st.start_offset = {-20, 130};
  st.leader_to_shelf_end = true;
  p.terminal_texts.push_back(st);

  ZoneLevelText zt;
  zt.id = next();
  zt.zone_section_ref = plan.id;
  zt.start_offset = {-60, 40};
  zt.leader_angle = -std::numbers::pi / 4;
  p.zone_texts.push_back(zt);

  DistanceDim dd;
  dd.id = next();
  dd.terminal_a = t1;
  dd.terminal_b = t2;
  dd.line_offset = {0, -20};
  p.distance_dims.push_back(dd);
  DistanceDim ds = dd;
  ds.id = next();
  ds.section_ref = sec.id;
  ds.line_offset = {0, -8};
  p.distance_dims.push_back(ds);

  RadiusDimPlan rp;
  rp.id = next();
  rp.param_text = "Rx1";
  rp.terminal_ref = t1;
  rp.zone_section_ref = plan.id;
  rp.angle = std::numbers::pi;
  p.radius_dims_plan.push_back(rp);

  RadiusDimVert rv;
  rv.id = next();
  rv.param_text = "R1";
  rv.terminal_ref = t3;
  rv.section_ref = sec.id;
  rv.line_offset = {0, -4};
  p.radius_dims_vert.push_back(rv);

  MinWidthDim mw;
  mw.id = next();
  mw.param_text = "Rcx";
  mw.terminal_a = t1;
  mw.terminal_b = t2;
  mw.zone_section_ref = plan.id;
  p.min_width_dims.push_back(mw);
  MinWidthDim mw2 = mw;
  mw2.id = next();
  mw2.param_text = "Rcx2";
  mw2.terminal_a = t6;
  mw2.terminal_b = t6;
  mw2.auto_text_pos = false;
  mw2.manual_text_pos = {120, -30};
  mw2.leader = LeaderMode::End;
  p.min_width_dims.push_back(mw2);

  auto entry = [&](Id a, std::optional<Id> b, double level) {
    TableEntry e;
    e.id = next();
    e.terminal_ref = a;
    e.terminal_ref2 = b;
    e.protected_level = level;
    p.table_entries.push_back(e);
  };
  entry(t1, std::nullopt, 7'973);
  entry(t2, std::nullopt, 7'973);
  entry(t3, std::nullopt, 7'973);
  entry(t1, t2, 7'973);
  entry(t5, std::nullopt, 5'000);
  entry(t6, std::nullopt, 5'000);

  GroundingElectrode ge;
  ge.id = next();
  ge.center_offset = {20'000, -50'000};
  ge.rod_count = 4;
  ge.rod_spacing = 5'000;
  p.grounding.push_back(ge);
  return p;
}

}  // namespace lpz::testkit

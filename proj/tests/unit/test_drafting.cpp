#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "lpz/drafting.hpp"
#include "lpz/refgraph.hpp"
#include "support/fixtures.hpp"
#include "support/golden.hpp"

using namespace lpz;

namespace {

std::vector<std::string> texts(const DisplayList& dl) {
  std::vector<std::string> out;
  for (const auto& p : dl.items) {
    if (const auto* t = std::get_if<TextPrim>(&p.shape)) out.push_back(t->text);
  }
  return out;
}

bool has_text(const DisplayList& dl, const std::string& s) {
  const auto t = texts(dl);
  return std::find(t.begin(), t.end(), s) != t.end();
}

template <class T>
std::vector<const Primitive*> of_source(const DisplayList& dl, Id id) {
  std::vector<const Primitive*> out;
  for (const auto& p : dl.items) {
    if (p.source_id == id && std::holds_alternative<T>(p.shape)) out.push_back(&p);
  }
  return out;
}

}  // namespace

TEST(ViewTransform, PlanMapsBasePointToOrigin) {
  Project p;
  p.general.base_point_paper = {50, 60};
  p.general.plan_view.scale = 0.01;
  const auto vt = plan_transform(p);
  EXPECT_EQ(to_paper(vt, {0, 0, 0}), (Point2{50, 60}));
  EXPECT_EQ(to_paper(vt, {1000, 2000, 0}), (Point2{60, 80}));
}

TEST(ViewTransform, SectionHeightScales) {
  DrawingSection s;
  s.scale = 0.01;
  s.base_projection = {10, 20};
  s.cut_a = {0, 0};
  s.cut_b = {10'000, 0};
  s.id = 5;
  const auto vt = section_transform(s);
  const Point2 q = to_paper(vt, {3'000, 0, 5'000});
  EXPECT_DOUBLE_EQ(q.y, 20 + 50);
  EXPECT_DOUBLE_EQ(q.x, 10 + 30);
  s.label_side = Side::Right;
  EXPECT_DOUBLE_EQ(to_paper(section_transform(s), {3'000, 0, 0}).x, 10 - 30);
}

TEST(MeasureText, UsesAdvanceTable) {
  const FontSettings f{5, 0, 1};
  EXPECT_EQ(measure_text("", f).width, 0);
  EXPECT_EQ(measure_text("", f).height, 5);
  EXPECT_DOUBLE_EQ(measure_text("АА", f).width, 2 * glyph_advance(U'А') * 5);
  const FontSettings narrow{5, 0, 0.5};
  EXPECT_DOUBLE_EQ(measure_text("МА-10", narrow).width, measure_text("МА-10", f).width / 2);
}

TEST(DimensionText, Formats) {
  EXPECT_EQ(dimension_text("Rx1", 17'000.5434783, 2), "Rx1 = 17.00");
  EXPECT_EQ(dimension_text("R1", 25'000.5, 2), "R1 = 25.00");
  EXPECT_EQ(scale_text(0.01), "М 1: 100");
  EXPECT_EQ(scale_text(0.005), "М 1: 200");
}

TEST(RenderPlan, EmptyProjectHasOnlyViewLabel) {
  const auto dl = render_plan(Project{});
  ASSERT_FALSE(dl.items.empty());
  for (const auto& p : dl.items) EXPECT_EQ(p.source_id, 0u);
  EXPECT_EQ(texts(dl), std::vector<std::string>{"План М 1: 200"});
}

TEST(RenderPlan, OwnLineScale) {
  Project p;
  p.general.plan_view.scale_placement = ScalePlacement::OwnLine;
  EXPECT_EQ(texts(render_plan(p)), (std::vector<std::string>{"План", "М 1: 200"}));
}

TEST(RenderPlan, TerminalSymbols) {
  const auto p = testkit::golden_project();
  const auto dl = render_plan(p);
  // Freestanding rod: square plus two diagonals.
  EXPECT_EQ(of_source<PolylinePrim>(dl, p.terminals[0].id).size(), 1u);
  EXPECT_EQ(of_source<LinePrim>(dl, p.terminals[0].id).size(), 2u);
  // Mounted rod: a dot.
  ASSERT_EQ(of_source<DotPrim>(dl, p.terminals[2].id).size(), 1u);
  EXPECT_EQ(std::get<DotPrim>(of_source<DotPrim>(dl, p.terminals[2].id)[0]->shape).diameter,
            p.general.terminal_symbols.dot_diameter_plan);
  // Mesh: hatch with both 45 degree families at 3 mm spacing.
  const auto hatch = of_source<HatchPrim>(dl, p.terminals[3].id);
  ASSERT_EQ(hatch.size(), 1u);
  int plus = 0, minus = 0;
  for (const auto& [a, b] : std::get<HatchPrim>(hatch[0]->shape).lines) {
    const double slope = (b.y - a.y) / (b.x - a.x);
    if (std::abs(slope - 1) < 1e-9) ++plus;
    if (std::abs(slope + 1) < 1e-9) ++minus;
  }
  EXPECT_GT(plus, 5);
  EXPECT_EQ(plus + minus, static_cast<int>(std::get<HatchPrim>(hatch[0]->shape).lines.size()));
  // Grounding electrode with four rods.
  EXPECT_EQ(of_source<CirclePrim>(dl, p.grounding[0].id).size(), 4u);
  EXPECT_EQ(of_source<LinePrim>(dl, p.grounding[0].id).size(), 3u);
}

TEST(RenderPlan, DimensionTexts) {
  const auto p = testkit::golden_project();
  const auto dl = render_plan(p);
  EXPECT_TRUE(has_text(dl, "Rx1 = 17.00"));
  EXPECT_TRUE(has_text(dl, "Rcx = 13.50"));
  EXPECT_TRUE(has_text(dl, "47.88"));
  EXPECT_TRUE(has_text(dl, "А"));
}

TEST(RenderSection, ContentsAndLabel) {
  const auto p = testkit::golden_project();
  const auto dl = render_section(p, p.drawing_sections[0].id);
  EXPECT_TRUE(has_text(dl, "R1 = 25.00"));
  EXPECT_TRUE(has_text(dl, "А – А М 1: 200"));
  // Rod h = 20 m at 1:200 -> triangle 100 mm tall.
  const auto tri = of_source<PolylinePrim>(dl, p.terminals[0].id);
  ASSERT_EQ(tri.size(), 1u);
  const auto& pts = std::get<PolylinePrim>(tri[0]->shape).points;
  EXPECT_NEAR(pts[0].y - pts[1].y, 100, 1e-9);
  // Terminals missing from the section's zone section are not drawn.
  EXPECT_TRUE(of_source<LinePrim>(dl, p.terminals[4].id).empty());
  EXPECT_THROW(render_section(p, 999), NotFound);
}

TEST(RenderSection, OwnLineAndRotated) {
  auto p = testkit::golden_project();
  p.drawing_sections[0].rotated = true;
  p.drawing_sections[0].own_label_layout.scale_placement = ScalePlacement::OwnLine;
  const auto t = texts(render_section(p, p.drawing_sections[0].id));
  EXPECT_NE(std::find(t.begin(), t.end(), "А – А повернуто"), t.end());
  EXPECT_NE(std::find(t.begin(), t.end(), "М 1: 200"), t.end());
}

TEST(RenderSection, EmptyZoneSectionDrawsNoProfile) {
  auto p = testkit::golden_project();
  p.zone_sections[1].terminal_refs.clear();
  p.radius_dims_vert.clear();
  p.distance_dims.pop_back();
  p.terminal_texts.pop_back();
  const auto dl = render_section(p, p.drawing_sections[0].id);
  EXPECT_TRUE(of_source<PolylinePrim>(dl, p.zone_sections[1].id).empty());
}

TEST(Render, ObjectsBoundToOneView) {
  const auto p = testkit::golden_project();
  const auto plan = render_plan(p);
  const auto sec = render_section(p, p.drawing_sections[0].id);
  std::set<Id> in_plan, in_sec;
  for (const auto& i : plan.items) in_plan.insert(i.source_id);
  for (const auto& i : sec.items) in_sec.insert(i.source_id);
  const Id sid = p.drawing_sections[0].id;
  for (const auto& e : reference_edges(p)) {
    if (e.target != sid) continue;
    EXPECT_TRUE(in_sec.count(e.owner) || e.kind == TargetKind::SectionOrPlan) << e.path;
    EXPECT_FALSE(in_plan.count(e.owner)) << e.path;
  }
  EXPECT_TRUE(in_plan.count(p.zone_sections[0].id));
  EXPECT_FALSE(in_sec.count(p.zone_sections[0].id));
}

TEST(Render, ScaleCovariance) {
  auto p = testkit::golden_project();
  p.table_entries.clear();
  const auto a = render_plan(p);
  p.general.plan_view.scale *= 2;
  const auto b = render_plan(p);
  const Id zs = p.zone_sections[0].id;
  const auto ca = of_source<PathPrim>(a, zs);
  const auto cb = of_source<PathPrim>(b, zs);
  ASSERT_EQ(ca.size(), cb.size());
  const Point2 o = p.general.base_point_paper;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const auto pa = std::get<PathPrim>(ca[i]->shape).contour.flatten(64);
    const auto pb = std::get<PathPrim>(cb[i]->shape).contour.flatten(64);
    ASSERT_EQ(pa.size(), pb.size());
    for (std::size_t k = 0; k < pa.size(); ++k) {
      EXPECT_NEAR(pb[k].x - o.x, 2 * (pa[k].x - o.x), 1e-9);
      EXPECT_NEAR(pb[k].y - o.y, 2 * (pa[k].y - o.y), 1e-9);
    }
  }
  // Pure paper furniture (the view label) does not move.
  EXPECT_EQ(std::get<TextPrim>(of_source<TextPrim>(a, 0).back()->shape).pos,
            std::get<TextPrim>(of_source<TextPrim>(b, 0).back()->shape).pos);
}

TEST(Render, InvalidProjectRejected) {
  auto p = testkit::golden_project();
  p.terminals[0].height = -1;
  EXPECT_THROW(render_plan(p), RenderError);
}

TEST(EmitSvg, EmptyDocument) {
  EXPECT_EQ(emit_svg(DisplayList{}),
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"20mm\" height=\"20mm\" "
            "viewBox=\"-10 -10 20 20\">\n</svg>\n");
}

TEST(EmitSvg, OneLineIsOnePath) {
  DisplayList dl;
  dl.add(LinePrim{{0, 0}, {10, 5}}, {Color::Red, Linetype::Dashed}, 7);
  const auto svg = emit_svg(dl, {true, 10});
  EXPECT_NE(svg.find("<path id=\"e0\" d=\"M 0 0 L 10 -5\" fill=\"none\" stroke=\"#ff0000\" stroke-width=\"0.25\" "
                     "stroke-dasharray=\"3 1.5\"/>"),
            std::string::npos);
  EXPECT_NE(svg.find("<metadata id=\"lpz-index\">{&quot;7&quot;:[&quot;e0&quot;]}</metadata>"), std::string::npos);
}

TEST(EmitSvg, GoldenPlanAndSection) {
  const auto p = testkit::golden_project();
  const auto plan = emit_svg(render_plan(p));
  const auto sec = emit_svg(render_section(p, p.drawing_sections[0].id));
  EXPECT_EQ(plan, emit_svg(render_plan(p)));
  EXPECT_EQ(testkit::check_golden(LPZ_GOLDEN_DIR, "plan.svg", plan), "");
  EXPECT_EQ(testkit::check_golden(LPZ_GOLDEN_DIR, "section.svg", sec), "");
}

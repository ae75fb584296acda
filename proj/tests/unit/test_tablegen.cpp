#include <gtest/gtest.h>

#include "lpz/tablegen.hpp"
#include "support/fixtures.hpp"
#include "support/golden.hpp"

using namespace lpz;
using testkit::make_rod;

namespace {

Project with_rods(std::initializer_list<std::pair<std::string, double>> rods) {
  Project p;
  double x = 0;
  for (const auto& [label, h] : rods) {
    p.terminals.push_back(make_rod(p.next_id++, label, {x, 0, h}));
    x += 100'000;
  }
  return p;
}

void add_entry(Project& p, Id a, std::optional<Id> b, double level) {
  TableEntry e;
  e.id = p.next_id++;
  e.terminal_ref = a;
  e.terminal_ref2 = b;
  e.protected_level = level;
  p.table_entries.push_back(e);
}

}  // namespace

TEST(BuildTable, SingleRodRow) {
  auto p = with_rods({{"МА-1", 10'000}});
  add_entry(p, 1, std::nullopt, 5'000);
  const auto t = build_table(p);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(row_cells(t, t.rows[0]),
            (std::array<std::string, kTableColumns>{"МА-1", "10.00", "9.20", "5.00", "6.85", "", "", "", "СМ-1"}));
}

TEST(BuildTable, MergeIdenticalSingles) {
  auto p = with_rods({{"МА-1", 10'000}, {"МА-2", 12'000}, {"МА-3", 12'000}});
  add_entry(p, 1, std::nullopt, 5'000);
  add_entry(p, 2, std::nullopt, 5'000);
  add_entry(p, 3, std::nullopt, 5'000);
  auto t = build_table(p);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[1].labels, "МА-2, МА-3");
  p.general.table.merge_identical_singles = false;
  EXPECT_EQ(build_table(p).rows.size(), 3u);
}

TEST(BuildTable, MergeComparesRoundedValues) {
  auto p = with_rods({{"МА-1", 10'001}, {"МА-2", 10'002}});
  add_entry(p, 1, std::nullopt, 5'000);
  add_entry(p, 2, std::nullopt, 5'000);
  EXPECT_EQ(build_table(p).rows.size(), 1u);
  p.general.table.unit = LengthUnit::Mm;
  EXPECT_EQ(build_table(p).rows.size(), 2u);
}

TEST(BuildTable, GroupedSortPutsSinglesFirst) {
  auto p = with_rods({{"МА-10", 10'000}, {"МА-2", 10'000}, {"МА-3", 10'000}, {"МА-1", 11'000}});
  p.terminals[1].construction = Rod{{10'000, 0, 10'000}, true};
  add_entry(p, 2, 3, 1'000);
  add_entry(p, 1, std::nullopt, 1'000);
  add_entry(p, 4, std::nullopt, 1'000);
  p.general.table.sort_mode = SortMode::Grouped;
  p.general.table.merge_identical_singles = false;
  auto t = build_table(p);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0].labels, "МА-1");
  EXPECT_EQ(t.rows[1].labels, "МА-10");
  EXPECT_TRUE(t.rows[2].is_double);
  p.general.table.sort_mode = SortMode::Alphabetical;
  t = build_table(p);
  EXPECT_EQ(t.rows[0].labels, "МА-1");
  EXPECT_EQ(t.rows[1].labels, "МА-2, МА-3");
  EXPECT_EQ(t.rows[2].labels, "МА-10");
}

TEST(BuildTable, DoubleRowValues) {
  auto p = with_rods({{"МА-1", 10'000}, {"МА-2", 10'000}});
  p.terminals[1].construction = Rod{{20'000, 0, 10'000}, true};
  add_entry(p, 1, 2, 3'900);
  const auto t = build_table(p);
  const auto& r = t.rows[0];
  EXPECT_EQ(r.L, 20.0);
  EXPECT_EQ(r.hc, 7.8);
  EXPECT_EQ(r.rcx, 7.5);
  EXPECT_TRUE(t.warnings.empty());
}

TEST(BuildTable, FarPairWarns) {
  auto p = with_rods({{"МА-1", 10'000}, {"МА-2", 10'000}});
  add_entry(p, 1, 2, 1'000);
  const auto t = build_table(p);
  EXPECT_EQ(t.rows[0].hc, 0.0);
  EXPECT_EQ(t.warnings.size(), 1u);
}

TEST(BuildTable, UnitCovariance) {
  auto p = testkit::golden_project();
  p.general.table.precision = 6;
  p.general.table.unit = LengthUnit::Mm;
  const auto mm = build_table(p);
  p.general.table.unit = LengthUnit::M;
  const auto m = build_table(p);
  ASSERT_EQ(mm.rows.size(), m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    EXPECT_EQ(m.rows[i].labels, mm.rows[i].labels);
    EXPECT_NEAR(*m.rows[i].rx, *mm.rows[i].rx / 1000, 1e-6);
  }
}

TEST(BuildTable, Idempotent) {
  const auto p = testkit::golden_project();
  EXPECT_EQ(build_table(p), build_table(p));
}

TEST(LayoutTable, HeaderOnlyAndRowHeight) {
  CalcTable t;
  t.settings.row_height = 3;
  const auto empty = layout_table(t, {0, 0});
  EXPECT_FALSE(empty.items.empty());

  auto p = testkit::golden_project();
  p.general.table.row_height = 3;
  const auto full = build_table(p);
  const auto dl = layout_table(full, {0, 0});
  // Data row separators are exactly row_height apart.
  std::vector<double> ys;
  for (const auto& it : dl.items) {
    if (const auto* l = std::get_if<LinePrim>(&it.shape); l && l->a.y == l->b.y &&
                                                           it.style.linetype == p.general.table.separator_linetype) {
      ys.push_back(l->a.y);
    }
  }
  ASSERT_GE(ys.size(), 2u);
  EXPECT_NEAR(ys[0] - ys[1], 3, 1e-9);
}

TEST(LayoutTable, WideLabelWidensOnlyItsColumn) {
  auto p = testkit::golden_project();
  auto widths = [](const DisplayList& dl) {
    std::vector<double> xs;
    for (const auto& it : dl.items) {
      if (const auto* l = std::get_if<LinePrim>(&it.shape); l && l->a.x == l->b.x && l->a.y == 0) xs.push_back(l->a.x);
    }
    return xs;
  };
  const auto a = widths(layout_table(build_table(p), {0, 0}));
  p.terminals[2].label = "МА-3 очень длинная подпись молниеприемника";
  const auto b = widths(layout_table(build_table(p), {0, 0}));
  ASSERT_EQ(a.size(), b.size());
  const double shift = b[0] - a[0];
  EXPECT_GT(shift, 0);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_NEAR(b[i] - b[i - 1], a[i] - a[i - 1], 1e-9);
}

TEST(TableCsv, Golden) {
  const auto t = build_table(testkit::golden_project());
  const auto csv = table_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "№№,h,h₀,h_з,r_з,L,h_с,r_сх,Тип");
  EXPECT_NE(csv.find("\"МА-1, МА-2\",20.00,18.40,7.97,17.00,,,,СМ-1"), std::string::npos);
  EXPECT_EQ(testkit::check_golden(LPZ_GOLDEN_DIR, "table.csv", csv), "");
}

TEST(TableHeader, Override) {
  const auto h = TableHeader::parse_override(R"({"symbols": ["No","h","h0","hx","rx","L","hc","rcx","Type"]})");
  EXPECT_EQ(h.symbols[0], "No");
  EXPECT_EQ(h.names, TableHeader::standard().names);
  EXPECT_THROW(TableHeader::parse_override("{\"bogus\": 1}"), ParseError);
  EXPECT_THROW(TableHeader::parse_override("{\n  \"names\": [1,"), ParseError);
}

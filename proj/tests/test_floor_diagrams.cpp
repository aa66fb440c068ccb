#include <gtest/gtest.h>

#include <set>

#include "gwfloor/floor_diagrams.hpp"
#include "oracles.hpp"

using namespace gwfloor;

TEST(Kontsevich, Values) {
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(kontsevich_nd(d), CheckedInt{oracle::kontsevich_table(d)}) << d;
}

TEST(FloorDiagrams, MarkedCountsMatchBruteForce) {
  for (int d = 1; d <= 3; ++d)
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_diagrams(d).size()), oracle::marked_count(d)) << d;
  EXPECT_EQ(enumerate_diagrams(3).size(), 9u);
  EXPECT_EQ(enumerate_diagrams(4).size(), 303u);
}

TEST(FloorDiagrams, UnderlyingDiagramsMatchBruteForce) {
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(enumerate_floor_diagrams(d).size(), oracle::diagrams(d).size()) << d;
}

TEST(FloorDiagrams, AllValidAndDistinct) {
  for (int d = 1; d <= 4; ++d) {
    std::set<std::vector<std::int64_t>> codes;
    for (const auto& M : enumerate_diagrams(d)) {
      EXPECT_TRUE(is_valid(M));
      EXPECT_TRUE(codes.insert(encode(M.diagram, M.marking)).second);
    }
  }
}

TEST(FloorDiagrams, WeightedSumIsKontsevich) {
  for (int d = 1; d <= 4; ++d) {
    std::int64_t total = 0;
    for (const auto& M : enumerate_diagrams(d)) {
      std::int64_t p = 1;
      for (const auto& e : M.diagram.elevators) p *= e.w * e.w;
      total += p;
    }
    EXPECT_EQ(total, oracle::kontsevich_table(d));
  }
}

TEST(FloorDiagrams, InvalidDiagramsRejected) {
  FloorDiagram bad{2, {{0, 1, 2}}, {1, 1}};
  EXPECT_FALSE(is_valid(bad));
  FloorDiagram cyc{3, {{0, 1, 1}, {0, 1, 1}}, {0, 1, 2}};
  EXPECT_FALSE(is_valid(cyc));
}

TEST(FloorDiagrams, MarkingMustOrderFloors) {
  auto M = enumerate_diagrams(2).front();
  ASSERT_TRUE(is_valid(M));
  std::reverse(M.marking.begin(), M.marking.end());
  EXPECT_FALSE(is_valid(M));
}

TEST(MergeConfigs, CountsMatchBitmaskOracle) {
  for (int n = 1; n <= 12; ++n)
    for (int s = 0; 2 * s <= n; ++s)
      EXPECT_EQ(static_cast<int>(enumerate_merge_configs(n, s).size()), oracle::count_configs(n, s)) << n << "," << s;
  EXPECT_EQ(enumerate_merge_configs(8, 2).size(), 15u);
}

TEST(MergeConfigs, ValidityAndFormatting) {
  EXPECT_TRUE(is_valid(MergeConfiguration{8, {1, 4}}));
  EXPECT_FALSE(is_valid(MergeConfiguration{8, {1, 2}}));
  EXPECT_FALSE(is_valid(MergeConfiguration{8, {8}}));
  EXPECT_EQ(to_string(MergeConfiguration{8, {1, 4}}), "{1,4}");
}

TEST(MergeConfigs, Dissolve) {
  auto c = dissolve(MergeConfiguration{8, {1, 4, 7}}, 2);
  EXPECT_EQ(c, (MergeConfiguration{8, {1, 7}}));
}

TEST(MergeConfigs, UnitShiftGraphConnected) {
  for (int n = 1; n <= 12; ++n)
    for (int s = 0; 2 * s <= n; ++s) EXPECT_TRUE(is_connected(unit_shift_graph(enumerate_merge_configs(n, s))));
}

TEST(Merged, RankMatchesKontsevichSmall) {
  for (int d = 1; d <= 3; ++d) {
    const int n = marked_points(d);
    for (int s = 0; 2 * s <= n; ++s)
      for (const auto& c : enumerate_merge_configs(n, s))
        EXPECT_EQ(floor_count(d, c).rank(), kontsevich_nd(d)) << d << " " << to_string(c);
  }
}

TEST(Merged, EnrichedCubicCount) {
  EXPECT_EQ(floor_count(3, {8, {}}), TildeElement::constant({8, 2, 0}, 0));
}

TEST(Merged, WelschingerSignatures) {
  for (int d = 1; d <= 3; ++d) {
    const int n = marked_points(d);
    for (int s = 0; 2 * s <= n; ++s)
      for (const auto& c : enumerate_merge_configs(n, s)) {
        auto v = specialize_field(floor_count(d, c), RealField{}, Assignment(static_cast<std::size_t>(s), 1));
        EXPECT_EQ(v.signature, CheckedInt{oracle::welschinger(d, s)}) << d << " " << to_string(c);
      }
  }
}

TEST(Merged, BudgetExceededThrows) {
  EXPECT_THROW(floor_count(4, {11, {}}, 5), BudgetExceeded);
}

TEST(Merged, TagsCoverEveryPair) {
  for (const auto& md : enumerate_merged_diagrams(3, {8, {2, 5}})) {
    EXPECT_EQ(md.tags.size(), 2u);
    for (std::size_t i = 0; i < md.tags.size(); ++i) EXPECT_EQ(md.tags[i].label, static_cast<int>(i) + 1);
  }
}

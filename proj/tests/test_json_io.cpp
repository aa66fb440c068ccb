#include <gtest/gtest.h>

#include "gwfloor/json_io.hpp"

using namespace gwfloor;

TEST(Json, UnivRoundTrip) {
  UnivElement u{8, 2, -3};
  EXPECT_EQ(univ_from_json(to_json(u)), u);
}

TEST(Json, TildeRoundTrip) {
  auto t = type_a_factor(5, 2, 3) * type_r_factor(1, 3);
  EXPECT_EQ(tilde_from_json(to_json(t), 3), t);
  EXPECT_THROW(tilde_from_json(to_json(t), 1), std::invalid_argument);
}

TEST(Json, SchemaVersionFirst) {
  auto j = with_schema({{"a", 1}});
  EXPECT_EQ(j.begin().key(), "schema_version");
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
}

TEST(Json, MergedDiagramObjects) {
  auto mds = enumerate_merged_diagrams(2, {5, {4}});
  ASSERT_FALSE(mds.empty());
  auto j = to_json(mds.front());
  EXPECT_EQ(j["merges"].size(), 1u);
  EXPECT_EQ(j["marking"].size(), 5u);
}

TEST(Json, DiagonalFormBits) {
  auto j = to_json(pfister_concrete(1), 1);
  EXPECT_EQ(j.dump(), "[[1,[0]],[-2,[0]],[-1,[1]],[2,[1]]]");
}

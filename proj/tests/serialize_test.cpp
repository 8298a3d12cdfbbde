#include <gtest/gtest.h>

#include "nestgen/errors.hpp"
#include "nestgen/gentree.hpp"
#include "nestgen/refdata.hpp"
#include "nestgen/serialize.hpp"

using namespace nestgen;

TEST(Serialize, PartitionRoundTrip) {
  OpenPartitionDiagram d(9, {{1, 3}, {4, 6}, {8, 9}}, {3, 5, 7});
  Json j = to_json(d);
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["open_arcs"], Json::parse("[3,5,7]"));
  EXPECT_FALSE(j.contains("blocks"));
  EXPECT_EQ(partition_diagram_from_json(j), d);
  EXPECT_EQ(partition_diagram_from_json(Json::parse(j.dump())), d);
}

TEST(Serialize, ClosedPartitionHasBlocks) {
  OpenPartitionDiagram d(5, {{1, 3}, {3, 5}}, {});
  Json j = to_json(d);
  EXPECT_EQ(j["blocks"], Json::parse("[[1,3,5],[2],[4]]"));
  EXPECT_FALSE(to_json(d, false).contains("blocks"));
  EXPECT_EQ(partition_diagram_from_json(j), d);
}

TEST(Serialize, PermutationRoundTrip) {
  std::vector<int> sigma{11, 6, 1, 5, 2, 4, 9, 8, 7, 10, 3};
  auto d = perm_to_diagram(sigma);
  Json j = to_json(d);
  EXPECT_EQ(j["permutation"], Json(sigma));
  EXPECT_EQ(j["fixed_points"], Json::parse("[8,10]"));
  EXPECT_EQ(permutation_diagram_from_json(j), d);

  PermutationDiagramStream stream(3, 3, false);
  std::optional<OpenPermutationDiagram> open;
  while ((open = stream.next()) && open->upper_open().size() < 2) {
  }
  ASSERT_TRUE(open.has_value());
  Json k = to_json(*open);
  EXPECT_FALSE(k.contains("permutation"));
  EXPECT_EQ(permutation_diagram_from_json(k), *open);
}

TEST(Serialize, Malformed) {
  EXPECT_THROW(partition_diagram_from_json(Json::parse("{}")), InvalidInput);
  EXPECT_THROW(partition_diagram_from_json(Json::parse(R"({"n":2,"closed_arcs":[[1]],"open_arcs":[]})")),
               InvalidInput);
  EXPECT_THROW(partition_diagram_from_json(Json::parse(R"({"n":2,"closed_arcs":[[1,2],[1,2]],"open_arcs":[]})")),
               InvalidInput);
  EXPECT_THROW(permutation_diagram_from_json(Json::parse("[1,2]")), InvalidInput);
  EXPECT_THROW(big_ints_from_json(Json::parse(R"(["12x"])")), InvalidInput);
}

TEST(Serialize, LevelRoundTrip) {
  auto levels = count_levels({Family::Permutation, 3}, 6);
  for (const auto& level : levels) {
    Json j = to_json(level);
    auto back = level_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.level, level.level);
    EXPECT_EQ(back.entries, level.entries);
  }
}

TEST(Serialize, BigIntsAreStrings) {
  std::vector<BigInt> v{BigInt(0), BigInt("123456789012345678901234567890")};
  Json j = to_json(v);
  EXPECT_EQ(j.dump(), R"(["0","123456789012345678901234567890"])");
  EXPECT_EQ(big_ints_from_json(j), v);
}

TEST(Serialize, Reference) {
  Json j = to_json(lookup({Family::Permutation, 3}));
  EXPECT_EQ(j["oeis"], "A193938");
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["terms"].size(), 18u);
}

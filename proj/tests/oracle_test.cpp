#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "nestgen/closedform.hpp"
#include "nestgen/errors.hpp"
#include "nestgen/oracle.hpp"

using namespace nestgen;

namespace {

const std::vector<int> kTwoNestings{11, 6, 1, 5, 2, 4, 9, 8, 7, 10, 3};

}  // namespace

TEST(Oracle, PartitionToArcs) {
  Blocks b{{1, 3, 5}, {2}, {4, 6}, {7, 8, 9}};
  EXPECT_EQ(partition_to_arcs(b), (std::vector<Arc>{{1, 3}, {3, 5}, {4, 6}, {7, 8}, {8, 9}}));
  EXPECT_EQ(partition_fixed_points(b), (std::vector<Arc>{{2, 2}}));
  EXPECT_TRUE(partition_to_arcs({{1}, {2}, {3}}).empty());
  EXPECT_THROW(partition_to_arcs({{1, 2}, {2, 3}}), InvalidInput);
  EXPECT_THROW(partition_to_arcs({{1}, {3}}), InvalidInput);
}

TEST(Oracle, ArcCountIsSizeMinusBlocks) {
  for (int n = 0; n <= 8; ++n) {
    RgsIterator it(n);
    do {
      auto b = it.blocks();
      EXPECT_EQ(partition_to_arcs(b).size(), static_cast<std::size_t>(n) - b.size());
    } while (it.next());
  }
}

TEST(Oracle, RgsCountsAreBell) {
  for (int n = 0; n <= 9; ++n) {
    RgsIterator it(n);
    long count = 0;
    std::set<std::vector<int>> seen;
    do {
      const auto& a = it.current();
      if (n > 0) EXPECT_EQ(a[0], 1);
      int mx = 0;
      for (int x : a) {
        EXPECT_LE(x, mx + 1);
        mx = std::max(mx, x);
      }
      if (n <= 6) EXPECT_TRUE(seen.insert(a).second);
      ++count;
    } while (it.next());
    EXPECT_EQ(BigInt(count), bell(n)) << n;
  }
}

TEST(Oracle, PairwiseNesting) {
  EXPECT_TRUE(nests({1, 5}, {2, 4}, NestingMode::Plain));
  EXPECT_FALSE(nests({1, 5}, {2, 5}, NestingMode::Plain));
  EXPECT_FALSE(nests({1, 5}, {3, 3}, NestingMode::Plain));
  EXPECT_TRUE(nests({1, 5}, {3, 3}, NestingMode::Enhanced));
  EXPECT_FALSE(nests({3, 3}, {3, 3}, NestingMode::Enhanced));
  std::vector<Arc> chain{{1, 9}, {2, 8}, {3, 7}};
  EXPECT_TRUE(is_nesting(chain, NestingMode::Plain));
  EXPECT_EQ(max_nesting_by_subsets(chain, NestingMode::Plain), 3);
}

TEST(Oracle, Counts) {
  EXPECT_EQ(oracle_count(Family::Partition, 3, 6), 202);
  EXPECT_EQ(oracle_count(Family::PartitionEnhanced, 3, 5), 51);
  EXPECT_EQ(oracle_count(Family::Permutation, 3, 5), 118);
  const long cat[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(oracle_count(Family::Permutation, 2, n), cat[n - 1]);
}

TEST(Oracle, SmallSizesAreUnconstrained) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n < 2 * k && n <= 9; ++n) {
      EXPECT_EQ(oracle_count(Family::Partition, k, n), bell(n));
    }
    for (int n = 0; n < 2 * k - 1 && n <= 9; ++n) {
      EXPECT_EQ(oracle_count(Family::PartitionEnhanced, k, n), bell(n));
    }
  }
  EXPECT_EQ(oracle_count(Family::Partition, kUnbounded, 8), bell(8));
  EXPECT_EQ(oracle_count(Family::Permutation, kUnbounded, 7), factorial(7));
}

TEST(Oracle, Guard) {
  EXPECT_THROW(oracle_count(Family::Partition, 3, 15), ResourceExceeded);
  EXPECT_THROW(oracle_count(Family::Permutation, 3, 11), ResourceExceeded);
  EXPECT_THROW(oracle_count(Family::OpenPartition, 3, 3), InvalidInput);
}

TEST(Oracle, BothThreeNestingWitnesses) {
  auto one = contains_knesting(kTwoNestings, 3);
  ASSERT_TRUE(one.has_value());
  EXPECT_TRUE(is_nesting(one->arcs, one->upper ? NestingMode::Enhanced : NestingMode::Plain));
  EXPECT_EQ(one->arcs.size(), 3u);

  std::set<std::vector<Arc>> got;
  for (const auto& w : all_knestings(kTwoNestings, 3)) {
    EXPECT_TRUE(w.upper);
    got.insert(w.arcs);
  }
  EXPECT_EQ(got, (std::set<std::vector<Arc>>{{{1, 11}, {2, 6}, {4, 5}},
                                             {{1, 11}, {7, 9}, {8, 8}}}));
}

TEST(Oracle, NonnestingExamples) {
  std::vector<int> id{1, 2, 3, 4, 5};
  EXPECT_FALSE(contains_knesting(id, 2).has_value());
  EXPECT_TRUE(permutation_avoids(id, 2));
  std::vector<int> s{5, 6, 4, 3, 1, 2};
  EXPECT_FALSE(contains_knesting(s, 3).has_value());
  EXPECT_TRUE(contains_knesting(s, 2).has_value());
}

TEST(Oracle, ArcsOfPermutation) {
  EXPECT_EQ(upper_arcs(kTwoNestings),
            (std::vector<Arc>{{1, 11}, {2, 6}, {4, 5}, {7, 9}, {8, 8}, {10, 10}}));
  EXPECT_EQ(lower_arcs(kTwoNestings), (std::vector<Arc>{{1, 3}, {2, 5}, {3, 11}, {4, 6}, {7, 9}}));
}

TEST(Oracle, WitnessesAreGenuine) {
  std::mt19937 rng(7);
  std::vector<int> sigma(9);
  for (int trial = 0; trial < 200; ++trial) {
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    for (int k = 2; k <= 4; ++k) {
      auto w = contains_knesting(sigma, k);
      EXPECT_EQ(w.has_value(), !permutation_avoids(sigma, k));
      for (const auto& x : all_knestings(sigma, k)) {
        EXPECT_EQ(x.arcs.size(), static_cast<std::size_t>(k));
        EXPECT_TRUE(is_nesting(x.arcs, x.upper ? NestingMode::Enhanced : NestingMode::Plain));
      }
    }
  }
}

TEST(Oracle, AcceptedSetsMatchCounts) {
  EXPECT_EQ(accepted_partitions(3, NestingMode::Plain, 5).size(), 52u);
  EXPECT_EQ(accepted_partitions(3, NestingMode::Enhanced, 5).size(), 51u);
  EXPECT_EQ(accepted_permutations(3, 5).size(), 118u);
}

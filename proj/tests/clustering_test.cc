// Copyright 2026 The activecc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "activecc/clustering.h"

#include <algorithm>
#include <numeric>

#include "activecc/errors.h"
#include "activecc/random.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace activecc {
namespace {

using ::activecc::testing::EdgesOf;
using ::activecc::testing::NaiveCost;
using ::activecc::testing::NaiveDistance;
using ::activecc::testing::Permuted;

// Planted {{0,1,2},{3,4}} with exactly the within-cluster pairs as edges.
FullGraph TwoBlockGraph() {
  FullGraph g(5);
  g.AddEdge(0, 1);
  g.AddEdge(0, 2);
  g.AddEdge(1, 2);
  g.AddEdge(3, 4);
  return g;
}

std::vector<int> AsInts(const Clustering& c) {
  return std::vector<int>(c.labels().begin(), c.labels().end());
}

TEST(PairKeyTest, OrdersEndpointsAndRejectsSelfPairs) {
  EXPECT_EQ(PairKey::Make(3, 1), (PairKey{1, 3}));
  EXPECT_THROW(PairKey::Make(2, 2), InputError);
}

TEST(PairKeyTest, IndexIsABijectionOntoAllPairs) {
  const int32_t n = 9;
  std::vector<bool> seen(NumPairs(n), false);
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v) {
      const int64_t index = PairKey{u, v}.Index(n);
      ASSERT_GE(index, 0);
      ASSERT_LT(index, NumPairs(n));
      EXPECT_FALSE(seen[index]);
      seen[index] = true;
      EXPECT_EQ(PairKey::FromIndex(index, n), (PairKey{u, v}));
    }
  }
}

TEST(ClusteringTest, RejectsLabelsOutsideK) {
  EXPECT_THROW(Clustering({0, 2}, 2), InputError);
  EXPECT_THROW(Clustering({0, -1}, 2), InputError);
  EXPECT_THROW(Clustering({0}, 0), InputError);
}

TEST(ClusteringTest, EmptyClustersAreLegal) {
  const Clustering c({0, 0, 2}, 4);
  EXPECT_EQ(c.ClusterSizes(), (std::vector<int32_t>{2, 0, 1, 0}));
  EXPECT_TRUE(c.Members(1).empty());
}

TEST(ClusteringTest, CanonicalFormIgnoresLabelNames) {
  const Clustering a({2, 2, 0, 1}, 3);
  const Clustering b({0, 0, 1, 2}, 3);
  EXPECT_EQ(a.Canonical(), (std::vector<ClusterLabel>{0, 0, 1, 2}));
  EXPECT_TRUE(a.Equivalent(b));
  EXPECT_FALSE(a == b);
}

TEST(SameClusterTest, Examples) {
  const Clustering c = Clustering::FromGroups({{0, 1}, {2}}, 2);
  EXPECT_TRUE(SameCluster(c, 0, 1));
  EXPECT_FALSE(SameCluster(c, 1, 2));
  for (ElementId u = 0; u < 3; ++u) EXPECT_TRUE(SameCluster(c, u, u));
  EXPECT_EQ(SameCluster(c, 0, 1), SameCluster(c, 1, 0));
  EXPECT_THROW(SameCluster(c, 0, 3), InputError);
}

TEST(PairCostTest, Examples) {
  const FullGraph g = TwoBlockGraph();
  EXPECT_EQ(PairCost(Clustering::FromGroups({{0, 1, 2}, {3, 4}}, 2), g, 0, 1), 0);
  EXPECT_EQ(PairCost(Clustering::FromGroups({{0}, {1, 2, 3, 4}}, 2), g, 0, 1), 1);
  EXPECT_EQ(PairCost(Clustering::SingleCluster(5, 1), g, 0, 3), 1);
  EXPECT_THROW(PairCost(Clustering::SingleCluster(5, 1), g, 2, 2), InputError);
}

TEST(CostTest, Examples) {
  const FullGraph g = TwoBlockGraph();
  const Clustering truth = Clustering::FromGroups({{0, 1, 2}, {3, 4}}, 2);
  const Clustering other = Clustering::FromGroups({{0, 1}, {2, 3, 4}}, 2);
  EXPECT_EQ(Cost(truth, g), 0);
  // Enumerated independently over ordered pairs.
  ASSERT_EQ(NaiveCost(AsInts(other), EdgesOf(g)), 4);
  EXPECT_EQ(Cost(other, g), 4);
  EXPECT_EQ(Cost(Clustering::SingleCluster(4, 1), FullGraph(4)), 6);
}

TEST(CostTest, SizeMismatchIsAnInputError) {
  EXPECT_THROW(Cost(Clustering::SingleCluster(4, 1), FullGraph(5)), InputError);
  EXPECT_THROW(ClusteringDistance(Clustering::SingleCluster(4, 1),
                                  Clustering::SingleCluster(5, 1)),
               InputError);
}

TEST(DistanceTest, Examples) {
  const Clustering a = Clustering::FromGroups({{0, 1, 2}, {3, 4}}, 2);
  const Clustering b = Clustering::FromGroups({{0, 1}, {2, 3, 4}}, 2);
  EXPECT_EQ(ClusteringDistance(a, a), 0);
  ASSERT_EQ(NaiveDistance(AsInts(a), AsInts(b)), 4);
  EXPECT_EQ(ClusteringDistance(a, b), 4);
  EXPECT_EQ(ClusteringDistance(Clustering({0, 1, 2, 3}, 4),
                               Clustering::SingleCluster(4, 4)),
            6);
}

TEST(CorePropertyTest, MatchesNaiveDefinitionsOnRandomInputs) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int32_t n = std::uniform_int_distribution<int32_t>(1, 14)(rng);
    const int32_t k = std::uniform_int_distribution<int32_t>(1, 5)(rng);
    const Clustering a = RandomClustering(n, k, rng);
    const Clustering b = RandomClustering(n, k, rng);
    const FullGraph g = testing::RandomGraph(n, 0.4, rng);
    EXPECT_EQ(Cost(a, g), NaiveCost(AsInts(a), EdgesOf(g)));
    EXPECT_EQ(ClusteringDistance(a, b), NaiveDistance(AsInts(a), AsInts(b)));
    EXPECT_GE(Cost(a, g), 0);
    EXPECT_LE(Cost(a, g), NumPairs(n));
  }
}

TEST(CorePropertyTest, RelabelingChangesNeitherCostNorDistance) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int32_t n = std::uniform_int_distribution<int32_t>(2, 12)(rng);
    const int32_t k = std::uniform_int_distribution<int32_t>(1, 4)(rng);
    const Clustering a = RandomClustering(n, k, rng);
    const Clustering b = RandomClustering(n, k, rng);
    const FullGraph g = testing::RandomGraph(n, 0.5, rng);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Clustering a2 = Permuted(a, perm);
    EXPECT_EQ(Cost(a2, g), Cost(a, g));
    EXPECT_EQ(ClusteringDistance(a2, b), ClusteringDistance(a, b));
    EXPECT_EQ(ClusteringDistance(a2, a), 0);
  }
}

TEST(CorePropertyTest, CostIsOneLipschitzInDistance) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int32_t n = std::uniform_int_distribution<int32_t>(2, 12)(rng);
    const int32_t k = std::uniform_int_distribution<int32_t>(1, 4)(rng);
    const Clustering a = RandomClustering(n, k, rng);
    const Clustering b = RandomClustering(n, k, rng);
    const FullGraph g = testing::RandomGraph(n, 0.3, rng);
    EXPECT_LE(std::abs(Cost(a, g) - Cost(b, g)), ClusteringDistance(a, b));
  }
}

TEST(FullGraphTest, EdgesRoundTrip) {
  FullGraph g(6);
  g.AddEdge(4, 1);
  g.AddEdge(0, 5);
  EXPECT_TRUE(g.HasEdge(1, 4));
  EXPECT_EQ(g.NumEdges(), 2);
  EXPECT_EQ(g.Edges(), (std::vector<PairKey>{{0, 5}, {1, 4}}));
  g.RemoveEdge(1, 4);
  EXPECT_FALSE(g.HasEdge(4, 1));
  EXPECT_THROW(g.AddEdge(0, 6), InputError);
}

}  // namespace
}  // namespace activecc

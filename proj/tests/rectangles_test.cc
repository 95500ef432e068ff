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

#include "activecc/rectangles.h"

#include <set>

#include "activecc/errors.h"
#include "activecc/planted.h"
#include "activecc/smoothness.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace activecc {
namespace {

TEST(DecomposeRectanglesTest, WorkedExample) {
  const Clustering pivot = Clustering::FromGroups({{0, 1, 2}, {3, 4}}, 2);
  const Clustering candidate = Clustering::FromGroups({{0, 1}, {2, 3, 4}}, 2);
  const std::vector<Rectangle> rects = DecomposeRectangles(pivot, candidate);
  ASSERT_EQ(rects.size(), 3u);
  int intra = 0;
  for (const Rectangle& r : rects) {
    EXPECT_EQ(r.area(), 2);
    if (r.kind == RectangleKind::kIntra) {
      ++intra;
      EXPECT_EQ(r.first_rank, 0);
    } else {
      EXPECT_EQ(r.rows, (std::vector<ElementId>{2}));
      EXPECT_EQ(r.cols, (std::vector<ElementId>{3, 4}));
    }
  }
  EXPECT_EQ(intra, 2);
  EXPECT_EQ(RectangleDistance(rects), 4);
  EXPECT_EQ(ClusteringDistance(pivot, candidate), 4);
}

TEST(DecomposeRectanglesTest, IdenticalClusteringsHaveNoRectangles) {
  const Clustering pivot({0, 1, 1, 2, 0}, 3);
  EXPECT_TRUE(DecomposeRectangles(pivot, pivot).empty());
  EXPECT_TRUE(DecomposeRectangles(pivot, testing::Permuted(pivot, {2, 0, 1})).empty());
}

TEST(DecomposeRectanglesTest, SizeMismatchIsRejected) {
  EXPECT_THROW(DecomposeRectangles(Clustering::SingleCluster(3, 1),
                                   Clustering::SingleCluster(4, 1)),
               InputError);
}

// Every disagreeing pair lies in exactly one rectangle, counting intra
// rectangles from both sides.
TEST(DecomposeRectanglesTest, CoversDisagreeingPairsExactly) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int32_t n = 2 + static_cast<int32_t>(UniformIndex(rng, 15));
    const int32_t k = 1 + static_cast<int32_t>(UniformIndex(rng, 4));
    const Clustering pivot = RandomClustering(n, k, rng);
    const Clustering candidate = RandomClustering(n, k, rng);
    std::multiset<PairKey> covered_intra;
    std::multiset<PairKey> covered_cross;
    for (const Rectangle& r : DecomposeRectangles(pivot, candidate)) {
      for (ElementId u : r.rows) {
        for (ElementId v : r.cols) {
          auto& bag = r.kind == RectangleKind::kIntra ? covered_intra : covered_cross;
          bag.insert(PairKey::Make(u, v));
        }
      }
    }
    for (ElementId u = 0; u < n; ++u) {
      for (ElementId v = u + 1; v < n; ++v) {
        const PairKey key{u, v};
        const bool disagree =
            SameCluster(pivot, u, v) != SameCluster(candidate, u, v);
        const size_t expected_intra =
            disagree && SameCluster(pivot, u, v) ? 2 : 0;
        const size_t expected_cross =
            disagree && !SameCluster(pivot, u, v) ? 1 : 0;
        ASSERT_EQ(covered_intra.count(key), expected_intra);
        ASSERT_EQ(covered_cross.count(key), expected_cross);
      }
    }
  }
}

TEST(DecompositionRegretTest, MatchesExactRegretAndDistance) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int32_t n = 2 + static_cast<int32_t>(UniformIndex(rng, 20));
    const int32_t k = 1 + static_cast<int32_t>(UniformIndex(rng, 5));
    const FullGraph graph = testing::RandomGraph(n, 0.3, rng);
    const Clustering pivot = RandomClustering(n, k, rng);
    const Clustering candidate = RandomClustering(n, k, rng);
    const auto rects = DecomposeRectangles(pivot, candidate);
    EXPECT_EQ(RectangleDistance(rects), ClusteringDistance(pivot, candidate));
    EXPECT_EQ(DecompositionRegret(rects, pivot, candidate, graph),
              Rational(ExactRegret(pivot, candidate, graph)));
  }
}

TEST(DecompositionEstimateTest, MatchesSampleEstimate) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const PlantedInstance instance = GeneratePlanted({8, 5, 3}, 0.2, trial);
    PairOracle oracle = PairOracle::ForGraph(instance.graph);
    SrraParams params;
    params.q_override = 4;
    params.exhaustive = trial % 2 == 0;
    const SampleSet samples = DrawSamples(instance.truth, oracle, params, trial);
    const Clustering candidate = RandomCandidate(instance.truth, rng);
    EXPECT_EQ(DecompositionEstimate(DecomposeRectangles(instance.truth, candidate),
                                    samples, candidate),
              EstimateRegret(samples, candidate));
  }
}

}  // namespace
}  // namespace activecc

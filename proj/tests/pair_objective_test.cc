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

#include "activecc/pair_objective.h"

#include "activecc/errors.h"
#include "activecc/planted.h"
#include "activecc/sample_set.h"
#include "activecc/uniform_estimator.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace activecc {
namespace {

TEST(NormalizeTest, MergesDuplicatesAndDropsZeros) {
  const WeightedPairSample sample =
      Normalize(Clustering::SingleCluster(4, 1), 6,
                {{{1, 2}, 3}, {{0, 1}, 2}, {{1, 2}, -3}, {{0, 1}, 1}, {{2, 3}, 0}});
  ASSERT_EQ(sample.num_pairs(), 1);
  EXPECT_EQ(sample.weights[0].first, (PairKey{0, 1}));
  EXPECT_EQ(sample.weights[0].second, 3);
  EXPECT_EQ(sample.denominator, 6);
  EXPECT_THROW(Normalize(Clustering::SingleCluster(2, 1), 0, {}), InputError);
}

TEST(PairRegretObjectiveTest, ExactObjectiveIsTheTrueRegret) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const FullGraph graph = testing::RandomGraph(10, 0.35, rng);
    const Clustering pivot = RandomClustering(10, 3, rng);
    const PairRegretObjective objective = PairRegretObjective::Exact(pivot, graph);
    EXPECT_EQ(objective.Evaluate(pivot), Rational(0));
    const Clustering candidate = RandomClustering(10, 3, rng);
    EXPECT_EQ(objective.Evaluate(candidate),
              Rational(ExactRegret(pivot, candidate, graph)));
  }
}

TEST(PairRegretObjectiveTest, RevealChargesOnlySampledPairs) {
  const PlantedInstance instance = GeneratePlanted({4, 3}, 0.0, 1);
  PairOracle oracle = PairOracle::ForGraph(instance.graph);
  const WeightedPairSample sample =
      Normalize(instance.truth, 2, {{{0, 4}, 2}, {{0, 1}, 2}});
  const PairRegretObjective objective = PairRegretObjective::Reveal(sample, oracle);
  EXPECT_EQ(oracle.distinct_queries(), 2);
  // Joining 0 with 4 (a non-edge) costs 1, splitting 0 from 1 (an edge) costs 1.
  const Clustering moved({1, 0, 0, 0, 1, 1, 1}, 2);
  EXPECT_EQ(objective.Evaluate(moved), Rational(2));
  EXPECT_EQ(objective.Evaluate(instance.truth), Rational(0));
}

TEST(PairRegretObjectiveTest, SizeMismatchIsRejected) {
  const PairRegretObjective objective(Clustering::SingleCluster(3, 1), 1, {});
  EXPECT_THROW(objective.Evaluate(Clustering::SingleCluster(4, 1)), InputError);
}

TEST(IncrementalRegretTest, DeltasAgreeWithFullEvaluation) {
  const PlantedInstance instance = GeneratePlanted({9, 6, 4}, 0.15, 3);
  PairOracle oracle = PairOracle::ForGraph(instance.graph);
  SrraParams params;
  params.q_override = 4;
  const SampleSet samples = DrawSamples(instance.truth, oracle, params, 7);
  const PairRegretObjective objective = samples.Objective();
  Rng rng(12);
  IncrementalRegret state(objective, RandomClustering(19, 3, rng));
  for (int move = 0; move < 1000; ++move) {
    const auto u = static_cast<ElementId>(UniformIndex(rng, 19));
    const auto label = static_cast<ClusterLabel>(UniformIndex(rng, 3));
    const int64_t delta = state.MoveDelta(u, label);
    const int64_t before = state.numerator();
    state.Apply(u, label);
    ASSERT_EQ(state.numerator(), before + delta);
    ASSERT_EQ(state.value(), objective.Evaluate(state.current()));
    ASSERT_EQ(state.value(), EstimateRegret(samples, state.current()));
  }
}

TEST(IncrementalRegretTest, UniformEstimatorDeltasAgreeToo) {
  const PlantedInstance instance = GeneratePlanted({7, 5}, 0.2, 8);
  PairOracle oracle = PairOracle::ForGraph(instance.graph);
  const PairRegretObjective objective =
      UniformRegretEstimator(oracle, instance.truth, 30, 2);
  Rng rng(1);
  IncrementalRegret state(objective, instance.truth);
  EXPECT_EQ(state.numerator(), 0);
  for (int move = 0; move < 500; ++move) {
    const auto u = static_cast<ElementId>(UniformIndex(rng, 12));
    const auto label = static_cast<ClusterLabel>(UniformIndex(rng, 2));
    state.Apply(u, label);
    ASSERT_EQ(state.value(), objective.Evaluate(state.current()));
  }
}

TEST(IncrementalRegretTest, RejectsMismatchedStart) {
  const PairRegretObjective objective(Clustering::SingleCluster(3, 2), 1, {});
  EXPECT_THROW(IncrementalRegret(objective, Clustering::SingleCluster(4, 2)),
               InputError);
  EXPECT_THROW(IncrementalRegret(objective, Clustering::SingleCluster(3, 3)),
               InputError);
}

}  // namespace
}  // namespace activecc

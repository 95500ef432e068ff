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

#include "activecc/planted.h"

#include <cmath>
#include <sstream>

#include "activecc/errors.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace activecc {
namespace {

TEST(GeneratePlantedTest, NoiselessInstanceIsTheWithinClusterPairs) {
  const PlantedInstance instance = GeneratePlanted({3, 2}, 0.0, 1);
  EXPECT_EQ(instance.truth, Clustering::FromGroups({{0, 1, 2}, {3, 4}}, 2));
  EXPECT_EQ(instance.graph.Edges(),
            (std::vector<PairKey>{{0, 1}, {0, 2}, {1, 2}, {3, 4}}));
  EXPECT_EQ(Cost(instance.truth, instance.graph), 0);
  EXPECT_EQ(Cost(Clustering::FromGroups({{0, 1}, {2, 3, 4}}, 2), instance.graph), 4);
}

TEST(GeneratePlantedTest, DeterministicInSeed) {
  EXPECT_EQ(GeneratePlanted({10, 6}, 0.2, 42).graph,
            GeneratePlanted({10, 6}, 0.2, 42).graph);
  EXPECT_NE(GeneratePlanted({10, 6}, 0.2, 42).graph,
            GeneratePlanted({10, 6}, 0.2, 43).graph);
}

TEST(GeneratePlantedTest, RejectsBadArguments) {
  EXPECT_THROW(GeneratePlanted({3, 2}, 0.5, 1), InputError);
  EXPECT_THROW(GeneratePlanted({3, 2}, -0.1, 1), InputError);
  EXPECT_THROW(GeneratePlanted({}, 0.1, 1), InputError);
  EXPECT_THROW(GeneratePlanted({3, -1}, 0.1, 1), InputError);
}

TEST(GeneratePlantedTest, EmptyClustersAreAllowed) {
  const PlantedInstance instance = GeneratePlanted({4, 0, 2}, 0.0, 1);
  EXPECT_EQ(instance.truth.k(), 3);
  EXPECT_EQ(instance.truth.ClusterSizes(), (std::vector<int32_t>{4, 0, 2}));
}

// Each of the 1770 pairs disagrees with the truth with probability 0.05, so
// cost(truth) has mean 88.5.
TEST(GeneratePlantedTest, MeanNoiseMatchesFlipProbability) {
  const int kSeeds = 100;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const PlantedInstance instance = GeneratePlanted({40, 15, 5}, 0.05, seed);
    const double cost = static_cast<double>(Cost(instance.truth, instance.graph));
    sum += cost;
    sum_sq += cost * cost;
  }
  const double mean = sum / kSeeds;
  const double sd = std::sqrt((sum_sq - kSeeds * mean * mean) / (kSeeds - 1));
  EXPECT_NEAR(mean, 0.05 * (60 * 59 / 2.0), 3.0 * sd / std::sqrt(kSeeds));
}

TEST(PlantedSidecarTest, RecordsTruthNoiseAndSeed) {
  const PlantedInstance instance = GeneratePlanted({2, 1}, 0.25, 7);
  std::ostringstream out;
  WritePlantedSidecar(instance, out);
  const auto record = nlohmann::json::parse(out.str());
  EXPECT_EQ(record.at("truth").get<std::vector<int>>(), (std::vector<int>{0, 0, 1}));
  EXPECT_DOUBLE_EQ(record.at("p").get<double>(), 0.25);
  EXPECT_EQ(record.at("seed").get<uint64_t>(), 7u);
}

}  // namespace
}  // namespace activecc

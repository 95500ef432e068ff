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

#include "activecc/oracle.h"

#include <algorithm>
#include <random>
#include <thread>

#include "activecc/errors.h"
#include "activecc/planted.h"
#include "activecc/random.h"
#include "gtest/gtest.h"

namespace activecc {
namespace {

FullGraph Fixture() {
  FullGraph g(4);
  g.AddEdge(0, 1);
  return g;
}

TEST(PairOracleTest, CountsDistinctPairsOnly) {
  PairOracle oracle = PairOracle::ForGraph(Fixture());
  EXPECT_EQ(oracle.distinct_queries(), 0);
  EXPECT_EQ(oracle.Query(0, 1), PairLabel::kEdge);
  EXPECT_EQ(oracle.distinct_queries(), 1);
  EXPECT_EQ(oracle.Query(0, 1), PairLabel::kEdge);
  EXPECT_EQ(oracle.Query(1, 0), PairLabel::kEdge);
  EXPECT_EQ(oracle.distinct_queries(), 1);
  EXPECT_EQ(oracle.Query(2, 3), PairLabel::kNonEdge);
  EXPECT_EQ(oracle.distinct_queries(), 2);
  EXPECT_EQ(oracle.RevealedPairs().size(), 2u);
}

TEST(PairOracleTest, RejectsInvalidPairs) {
  PairOracle oracle = PairOracle::ForGraph(Fixture());
  EXPECT_THROW(oracle.Query(2, 2), InputError);
  EXPECT_THROW(oracle.Query(0, 4), InputError);
  EXPECT_THROW(oracle.Query(-1, 2), InputError);
  EXPECT_EQ(oracle.distinct_queries(), 0);
}

class FlakySource : public LabelSource {
 public:
  int32_t n() const override { return 3; }
  PairLabel Fetch(const PairKey&) override {
    throw OracleUnavailableError("nobody home");
  }
};

TEST(PairOracleTest, UnavailableSourceLeavesLedgerUnchanged) {
  PairOracle oracle(std::make_shared<FlakySource>());
  EXPECT_THROW(oracle.Query(0, 1), OracleUnavailableError);
  EXPECT_EQ(oracle.distinct_queries(), 0);
  EXPECT_FALSE(oracle.Revealed(PairKey{0, 1}).has_value());
}

TEST(PairOracleTest, RevealedDoesNotCharge) {
  PairOracle oracle = PairOracle::ForGraph(Fixture());
  EXPECT_FALSE(oracle.Revealed(PairKey{0, 1}).has_value());
  EXPECT_EQ(oracle.distinct_queries(), 0);
  oracle.Query(1, 0);
  EXPECT_EQ(oracle.Revealed(PairKey{0, 1}), PairLabel::kEdge);
}

TEST(PairOracleTest, LedgerMatchesRevealedMappingAndNeverExceedsAllPairs) {
  const PlantedInstance instance = GeneratePlanted({6, 4}, 0.2, 3);
  PairOracle oracle = PairOracle::ForGraph(instance.graph);
  Rng rng(5);
  std::uniform_int_distribution<ElementId> pick(0, 9);
  for (int i = 0; i < 500; ++i) {
    const ElementId u = pick(rng);
    const ElementId v = pick(rng);
    if (u == v) continue;
    oracle.Query(u, v);
    ASSERT_EQ(oracle.distinct_queries(),
              static_cast<int64_t>(oracle.RevealedPairs().size()));
  }
  EXPECT_EQ(oracle.distinct_queries(), NumPairs(10));
}

TEST(PairOracleTest, AnswersDoNotDependOnQueryOrder) {
  const PlantedInstance first = GeneratePlanted({5, 5, 2}, 0.3, 77);
  const PlantedInstance second = GeneratePlanted({5, 5, 2}, 0.3, 77);
  PairOracle a = PairOracle::ForGraph(first.graph);
  PairOracle b = PairOracle::ForGraph(second.graph);
  std::vector<PairKey> pairs;
  for (ElementId u = 0; u < 12; ++u) {
    for (ElementId v = u + 1; v < 12; ++v) pairs.push_back({u, v});
  }
  std::vector<PairKey> shuffled = pairs;
  std::shuffle(shuffled.begin(), shuffled.end(), Rng(1));
  for (const PairKey& p : pairs) a.Query(p);
  for (const PairKey& p : shuffled) b.Query(p);
  EXPECT_EQ(a.RevealedPairs(), b.RevealedPairs());
}

TEST(PairOracleTest, ConcurrentQueriesCountEachPairOnce) {
  const PlantedInstance instance = GeneratePlanted({20, 20}, 0.1, 8);
  PairOracle oracle = PairOracle::ForGraph(instance.graph);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&oracle] {
      for (ElementId u = 0; u < 40; ++u) {
        for (ElementId v = u + 1; v < 40; ++v) oracle.Query(u, v);
      }
    });
  }
  for (auto& worker : workers) worker.join();
  EXPECT_EQ(oracle.distinct_queries(), NumPairs(40));
}

TEST(PairLabelTest, NamesRoundTrip) {
  EXPECT_EQ(ParsePairLabel(PairLabelName(PairLabel::kEdge)), PairLabel::kEdge);
  EXPECT_EQ(ParsePairLabel("nonedge"), PairLabel::kNonEdge);
  EXPECT_THROW(ParsePairLabel("maybe"), InputError);
}

}  // namespace
}  // namespace activecc

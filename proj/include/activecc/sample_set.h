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

#ifndef ACTIVECC_SAMPLE_SET_H_
#define ACTIVECC_SAMPLE_SET_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "activecc/clustering.h"
#include "activecc/oracle.h"
#include "activecc/pair_objective.h"
#include "activecc/rational.h"

namespace activecc {

struct SrraParams {
  double epsilon = 0.5;
  double c2 = 1.0;
  std::optional<int64_t> q_override;
  // Test oracle: a cluster no larger than q is enumerated once (weight 1)
  // instead of sampled, which makes the estimator exact on that cluster.
  bool exhaustive = false;

  void Validate() const;  // throws InputError
};

// ceil(c2 * k^2 * ln(n) / epsilon^4), or q_override when set.
int64_t SampleSizeQ(int32_t n, int32_t k, const SrraParams& params);

// Pivot cluster labels ordered by size, largest first; equal sizes keep the
// lower label first. Empty clusters end up last.
std::vector<ClusterLabel> SizeDescendingOrder(const Clustering& pivot);

// S_{uj}: the draws for element u (pivot rank i) from the cluster of rank
// j >= i. Draws are kept as (element, multiplicity), sorted by element.
struct SampleRow {
  ElementId u = 0;
  int32_t pivot_rank = 0;
  int32_t target_rank = 0;
  ClusterLabel target_label = 0;
  // Members of C_j listed once with weight 1 rather than q draws.
  bool enumerated = false;
  std::vector<std::pair<ElementId, int32_t>> draws;

  bool intra() const { return pivot_rank == target_rank; }
};

// Sampled element ids for one round, before any label is revealed.
struct SampleDraw {
  Clustering pivot;
  std::vector<ClusterLabel> order;      // rank -> label
  std::vector<int32_t> rank_of_label;   // label -> rank
  std::vector<int32_t> cluster_sizes;   // by label
  int64_t q = 1;
  std::vector<SampleRow> rows;

  // Distinct pairs (u, v), v != u, appearing in any row.
  std::vector<PairKey> RequiredPairs() const;
  // Sum over i of |C_i| * (number of nonempty clusters of rank >= i) * q.
  int64_t DrawBudget() const;
  // All estimator terms over the common denominator 2q.
  WeightedPairSample Weights() const;
};

// Deterministic in seed. Only ids are drawn; nothing is queried.
SampleDraw DrawSampleIds(const Clustering& pivot, int64_t q, bool exhaustive,
                         uint64_t seed);

// A SampleDraw together with the labels of all its pairs.
class SampleSet {
 public:
  SampleSet(SampleDraw draw,
            std::unordered_map<PairKey, PairLabel, PairKeyHash> labels);

  const SampleDraw& draw() const { return draw_; }
  const Clustering& pivot() const { return draw_.pivot; }
  int64_t q() const { return draw_.q; }
  const std::vector<SampleRow>& rows() const { return draw_.rows; }

  PairLabel label(ElementId u, ElementId v) const;  // u != v
  // f_{u,v}(candidate): change of the pair's cost from pivot to candidate.
  int PairRegret(const Clustering& candidate, ElementId u, ElementId v) const;

  // The compiled form used by the optimizer; evaluates identically to
  // EstimateRegret.
  PairRegretObjective Objective() const;

  std::string ToJson() const;

 private:
  SampleDraw draw_;
  std::unordered_map<PairKey, PairLabel, PairKeyHash> labels_;
};

// Queries every required pair of `draw` once. If the oracle fails the
// exception propagates and nothing is returned.
SampleSet RevealSamples(SampleDraw draw, PairOracle& oracle);

SampleSet DrawSamples(const Clustering& pivot, PairOracle& oracle,
                      const SrraParams& params, uint64_t seed);

// The size-biased estimate of cost(candidate) - cost(pivot), evaluated row by
// row from the sample multisets.
Rational EstimateRegret(const SampleSet& samples, const Clustering& candidate);

// cost(candidate) - cost(pivot).
int64_t ExactRegret(const Clustering& pivot, const Clustering& candidate,
                    const FullGraph& graph);

}  // namespace activecc

#endif  // ACTIVECC_SAMPLE_SET_H_

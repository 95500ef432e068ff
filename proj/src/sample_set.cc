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

#include "activecc/sample_set.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "activecc/errors.h"
#include "activecc/random.h"
#include "json.hpp"

namespace activecc {

void SrraParams::Validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("epsilon must lie in (0, 1)");
  }
  if (!(c2 > 0.0)) throw InputError("c2 must be positive");
  if (q_override && *q_override < 1) {
    throw InputError("q override must be at least 1");
  }
}

int64_t SampleSizeQ(int32_t n, int32_t k, const SrraParams& params) {
  params.Validate();
  if (n < 2) throw InputError("sample size needs n >= 2");
  if (k < 1) throw InputError("sample size needs k >= 1");
  if (params.q_override) return *params.q_override;
  const double kk = static_cast<double>(k);
  const double q = params.c2 * kk * kk * std::log(static_cast<double>(n)) /
                   std::pow(params.epsilon, 4);
  return static_cast<int64_t>(std::ceil(q));
}

std::vector<ClusterLabel> SizeDescendingOrder(const Clustering& pivot) {
  const std::vector<int32_t> sizes = pivot.ClusterSizes();
  std::vector<ClusterLabel> order(pivot.k());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](ClusterLabel a, ClusterLabel b) {
                     return sizes[a] > sizes[b];
                   });
  return order;
}

std::vector<PairKey> SampleDraw::RequiredPairs() const {
  std::vector<PairKey> pairs;
  for (const SampleRow& row : rows) {
    for (const auto& [v, count] : row.draws) {
      if (v != row.u) pairs.push_back(PairKey::Make(row.u, v));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

int64_t SampleDraw::DrawBudget() const {
  int64_t total = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    int64_t later_nonempty = 0;
    for (size_t j = i; j < order.size(); ++j) {
      if (cluster_sizes[order[j]] > 0) ++later_nonempty;
    }
    total += cluster_sizes[order[i]] * later_nonempty * q;
  }
  return total;
}

// Row weights over the common denominator 2q:
//   sampled intra  (1/2) * |C_j| / q  ->  |C_j|
//   sampled cross          |C_j| / q  ->  2 |C_j|
//   enumerated intra       1/2        ->  q
//   enumerated cross       1          ->  2q
WeightedPairSample SampleDraw::Weights() const {
  std::vector<std::pair<PairKey, int64_t>> weights;
  for (const SampleRow& row : rows) {
    const int64_t size = cluster_sizes[row.target_label];
    int64_t per_draw = row.enumerated ? q : size;
    if (!row.intra()) per_draw *= 2;
    for (const auto& [v, count] : row.draws) {
      if (v == row.u) continue;
      weights.emplace_back(PairKey::Make(row.u, v), per_draw * count);
    }
  }
  return Normalize(pivot, 2 * q, std::move(weights));
}

SampleDraw DrawSampleIds(const Clustering& pivot, int64_t q, bool exhaustive,
                         uint64_t seed) {
  if (q < 1) throw InputError("q must be at least 1");
  SampleDraw draw;
  draw.pivot = pivot;
  draw.q = q;
  draw.order = SizeDescendingOrder(pivot);
  draw.cluster_sizes = pivot.ClusterSizes();
  draw.rank_of_label.assign(pivot.k(), 0);
  for (size_t rank = 0; rank < draw.order.size(); ++rank) {
    draw.rank_of_label[draw.order[rank]] = static_cast<int32_t>(rank);
  }
  std::vector<std::vector<ElementId>> members(pivot.k());
  for (ElementId u = 0; u < pivot.n(); ++u) {
    members[pivot.labels()[u]].push_back(u);
  }

  Rng rng(seed);
  std::map<ElementId, int32_t> counts;
  for (ElementId u = 0; u < pivot.n(); ++u) {
    const int32_t own_rank = draw.rank_of_label[pivot.labels()[u]];
    for (int32_t rank = own_rank; rank < pivot.k(); ++rank) {
      const ClusterLabel target = draw.order[rank];
      const auto& pool = members[target];
      if (pool.empty()) continue;
      SampleRow row;
      row.u = u;
      row.pivot_rank = own_rank;
      row.target_rank = rank;
      row.target_label = target;
      if (exhaustive && q >= static_cast<int64_t>(pool.size())) {
        row.enumerated = true;
        for (ElementId v : pool) row.draws.emplace_back(v, 1);
      } else {
        counts.clear();
        for (int64_t s = 0; s < q; ++s) {
          ++counts[pool[UniformIndex(rng, static_cast<int64_t>(pool.size()))]];
        }
        row.draws.assign(counts.begin(), counts.end());
      }
      draw.rows.push_back(std::move(row));
    }
  }
  return draw;
}

SampleSet::SampleSet(SampleDraw draw,
                     std::unordered_map<PairKey, PairLabel, PairKeyHash> labels)
    : draw_(std::move(draw)), labels_(std::move(labels)) {
  for (const PairKey& pair : draw_.RequiredPairs()) {
    if (!labels_.contains(pair)) {
      throw InputError("sample set is missing the label of a drawn pair");
    }
  }
}

PairLabel SampleSet::label(ElementId u, ElementId v) const {
  auto it = labels_.find(PairKey::Make(u, v));
  if (it == labels_.end()) throw InputError("pair not in sample set");
  return it->second;
}

int SampleSet::PairRegret(const Clustering& candidate, ElementId u,
                          ElementId v) const {
  const auto& pivot_labels = draw_.pivot.labels();
  const auto& candidate_labels = candidate.labels();
  const bool before = pivot_labels[u] == pivot_labels[v];
  const bool after = candidate_labels[u] == candidate_labels[v];
  if (before == after) return 0;
  const bool edge = label(u, v) == PairLabel::kEdge;
  // Joining an edge or splitting a non-edge removes a disagreement.
  return (after == edge) ? -1 : 1;
}

PairRegretObjective SampleSet::Objective() const {
  const WeightedPairSample sample = draw_.Weights();
  std::vector<PairRegretObjective::Term> terms;
  terms.reserve(sample.weights.size());
  for (const auto& [pair, weight] : sample.weights) {
    terms.push_back({pair, labels_.at(pair) == PairLabel::kEdge, weight});
  }
  return PairRegretObjective(sample.pivot, sample.denominator,
                             std::move(terms));
}

std::string SampleSet::ToJson() const {
  using nlohmann::json;
  json rows = json::array();
  for (const SampleRow& row : draw_.rows) {
    json draws = json::array();
    for (const auto& [v, count] : row.draws) {
      draws.push_back({{"v", v}, {"count", count}});
    }
    const int64_t size = draw_.cluster_sizes[row.target_label];
    json weight = row.enumerated
                      ? json{{"num", 1}, {"den", 1}}
                      : json{{"num", size}, {"den", draw_.q}};
    rows.push_back({{"u", row.u},
                    {"i", row.pivot_rank + 1},
                    {"j", row.target_rank + 1},
                    {"cluster_label", row.target_label},
                    {"intra", row.intra()},
                    {"enumerated", row.enumerated},
                    {"weight", weight},
                    {"draws", draws}});
  }
  std::vector<std::pair<PairKey, PairLabel>> sorted(labels_.begin(),
                                                    labels_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json revealed = json::array();
  for (const auto& [pair, pair_label] : sorted) {
    revealed.push_back(
        {{"u", pair.u}, {"v", pair.v}, {"label", PairLabelName(pair_label)}});
  }
  json record{{"pivot", draw_.pivot.labels()},
              {"k", draw_.pivot.k()},
              {"q", draw_.q},
              {"order", draw_.order},
              {"samples", rows},
              {"labels", revealed}};
  return record.dump();
}

SampleSet RevealSamples(SampleDraw draw, PairOracle& oracle) {
  if (oracle.n() != draw.pivot.n()) {
    throw InputError("oracle and pivot differ in element count");
  }
  std::unordered_map<PairKey, PairLabel, PairKeyHash> labels;
  for (const PairKey& pair : draw.RequiredPairs()) {
    labels.emplace(pair, oracle.Query(pair));
  }
  return SampleSet(std::move(draw), std::move(labels));
}

SampleSet DrawSamples(const Clustering& pivot, PairOracle& oracle,
                      const SrraParams& params, uint64_t seed) {
  const int64_t q = SampleSizeQ(pivot.n(), pivot.k(), params);
  return RevealSamples(DrawSampleIds(pivot, q, params.exhaustive, seed),
                       oracle);
}

Rational EstimateRegret(const SampleSet& samples, const Clustering& candidate) {
  const Clustering& pivot = samples.pivot();
  if (candidate.n() != pivot.n()) {
    throw InputError("candidate does not match the sample set's pivot");
  }
  const int64_t q = samples.q();
  const auto& sizes = samples.draw().cluster_sizes;
  // Accumulated over the denominator 2q, see SampleDraw::Weights.
  int64_t numerator = 0;
  for (const SampleRow& row : samples.rows()) {
    int64_t row_sum = 0;
    for (const auto& [v, count] : row.draws) {
      if (v == row.u) continue;
      row_sum += static_cast<int64_t>(count) *
                 samples.PairRegret(candidate, row.u, v);
    }
    if (row_sum == 0) continue;
    const int64_t scale = row.enumerated ? q : sizes[row.target_label];
    numerator += (row.intra() ? 1 : 2) * scale * row_sum;
  }
  return Rational(numerator, 2 * q);
}

int64_t ExactRegret(const Clustering& pivot, const Clustering& candidate,
                    const FullGraph& graph) {
  if (pivot.n() != candidate.n()) {
    throw InputError("pivot and candidate differ in element count");
  }
  return Cost(candidate, graph) - Cost(pivot, graph);
}

}  // namespace activecc

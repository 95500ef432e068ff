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

#include <algorithm>

#include "activecc/errors.h"

namespace activecc {
namespace {

void CheckSameN(const Clustering& pivot, const Clustering& candidate) {
  if (pivot.n() != candidate.n()) {
    throw InputError("candidate and pivot differ in element count");
  }
}

void CheckCompatible(const Clustering& pivot, const Clustering& candidate) {
  CheckSameN(pivot, candidate);
  if (pivot.k() != candidate.k()) {
    throw InputError("candidate and pivot differ in k");
  }
}

}  // namespace

std::vector<PairKey> WeightedPairSample::Pairs() const {
  std::vector<PairKey> pairs;
  pairs.reserve(weights.size());
  for (const auto& [pair, weight] : weights) pairs.push_back(pair);
  return pairs;
}

WeightedPairSample Normalize(Clustering pivot, int64_t denominator,
                             std::vector<std::pair<PairKey, int64_t>> weights) {
  if (denominator <= 0) throw InputError("denominator must be positive");
  std::sort(weights.begin(), weights.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  WeightedPairSample sample{std::move(pivot), denominator, {}};
  for (const auto& [pair, weight] : weights) {
    if (!sample.weights.empty() && sample.weights.back().first == pair) {
      sample.weights.back().second += weight;
    } else {
      sample.weights.emplace_back(pair, weight);
    }
  }
  std::erase_if(sample.weights,
                [](const auto& entry) { return entry.second == 0; });
  return sample;
}

PairRegretObjective::PairRegretObjective(Clustering pivot, int64_t denominator,
                                         std::vector<Term> terms)
    : pivot_(std::move(pivot)),
      denominator_(denominator),
      terms_(std::move(terms)),
      adjacency_(pivot_.n()) {
  if (denominator_ <= 0) throw InputError("denominator must be positive");
  const auto& labels = pivot_.labels();
  for (const Term& term : terms_) {
    const auto [u, v] = term.pair;
    if (u < 0 || u >= v || v >= pivot_.n()) {
      throw InputError("objective term with invalid pair");
    }
    const int64_t signed_weight = term.edge ? -term.weight : term.weight;
    adjacency_[u].emplace_back(v, signed_weight);
    adjacency_[v].emplace_back(u, signed_weight);
    const bool together = labels[u] == labels[v];
    const int pivot_cost = term.edge != together ? 1 : 0;
    offset_ += term.weight * ((term.edge ? 1 : 0) - pivot_cost);
  }
}

PairRegretObjective PairRegretObjective::Reveal(
    const WeightedPairSample& sample, PairOracle& oracle) {
  if (oracle.n() != sample.pivot.n()) {
    throw InputError("oracle and pivot differ in element count");
  }
  std::vector<Term> terms;
  terms.reserve(sample.weights.size());
  for (const auto& [pair, weight] : sample.weights) {
    terms.push_back(
        Term{pair, oracle.Query(pair) == PairLabel::kEdge, weight});
  }
  return PairRegretObjective(sample.pivot, sample.denominator,
                             std::move(terms));
}

PairRegretObjective PairRegretObjective::Exact(const Clustering& pivot,
                                               const FullGraph& graph) {
  if (pivot.n() != graph.n()) {
    throw InputError("pivot and graph differ in element count");
  }
  std::vector<Term> terms;
  terms.reserve(NumPairs(pivot.n()));
  for (ElementId u = 0; u < pivot.n(); ++u) {
    for (ElementId v = u + 1; v < pivot.n(); ++v) {
      terms.push_back(Term{PairKey{u, v}, graph.HasEdge(PairKey{u, v}), 1});
    }
  }
  return PairRegretObjective(pivot, 1, std::move(terms));
}

int64_t PairRegretObjective::EvaluateNumerator(
    const Clustering& candidate) const {
  CheckSameN(pivot_, candidate);
  const auto& labels = candidate.labels();
  int64_t total = offset_;
  for (const Term& term : terms_) {
    if (labels[term.pair.u] == labels[term.pair.v]) {
      total += term.edge ? -term.weight : term.weight;
    }
  }
  return total;
}

IncrementalRegret::IncrementalRegret(const PairRegretObjective& objective,
                                     Clustering start)
    : objective_(&objective),
      labels_(start.labels()),
      k_(start.k()),
      affinity_(static_cast<size_t>(start.n()) * start.k(), 0) {
  CheckCompatible(objective.pivot(), start);
  const auto& adjacency = objective.adjacency();
  int64_t joined = 0;
  for (ElementId u = 0; u < start.n(); ++u) {
    for (const auto& [v, signed_weight] : adjacency[u]) {
      affinity_[static_cast<size_t>(u) * k_ + labels_[v]] += signed_weight;
      if (u < v && labels_[u] == labels_[v]) joined += signed_weight;
    }
  }
  numerator_ = objective.offset() + joined;
}

int64_t IncrementalRegret::MoveDelta(ElementId u, ClusterLabel label) const {
  const size_t row = static_cast<size_t>(u) * k_;
  return affinity_[row + label] - affinity_[row + labels_[u]];
}

void IncrementalRegret::Apply(ElementId u, ClusterLabel label) {
  const ClusterLabel from = labels_[u];
  if (from == label) return;
  if (label < 0 || label >= k_) throw InputError("label out of range");
  numerator_ += MoveDelta(u, label);
  for (const auto& [v, signed_weight] : objective_->adjacency()[u]) {
    const size_t row = static_cast<size_t>(v) * k_;
    affinity_[row + from] -= signed_weight;
    affinity_[row + label] += signed_weight;
  }
  labels_[u] = label;
}

}  // namespace activecc

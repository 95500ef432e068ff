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

#ifndef ACTIVECC_PAIR_OBJECTIVE_H_
#define ACTIVECC_PAIR_OBJECTIVE_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "activecc/clustering.h"
#include "activecc/oracle.h"
#include "activecc/rational.h"

namespace activecc {

// Weights attached to pairs around a pivot, before any label is known:
//
//   regret(C') = (1 / denominator) * sum_p weight_p * (cost_p(C') - cost_p(pivot))
//
// Both the size-biased sampler and the uniform baseline reduce to this form,
// and so does the exact regret (all pairs, weight 1).
struct WeightedPairSample {
  Clustering pivot;
  int64_t denominator = 1;
  // Sorted by PairKey, one entry per distinct pair, weights > 0.
  std::vector<std::pair<PairKey, int64_t>> weights;

  std::vector<PairKey> Pairs() const;
  int64_t num_pairs() const { return static_cast<int64_t>(weights.size()); }
};

// Merges duplicate pairs and drops zero weights.
WeightedPairSample Normalize(Clustering pivot, int64_t denominator,
                             std::vector<std::pair<PairKey, int64_t>> weights);

// A WeightedPairSample with labels filled in. Evaluation is exact.
class PairRegretObjective {
 public:
  struct Term {
    PairKey pair;
    bool edge = false;
    int64_t weight = 0;
  };

  PairRegretObjective(Clustering pivot, int64_t denominator,
                      std::vector<Term> terms);

  // Queries every pair of `sample` through the oracle.
  static PairRegretObjective Reveal(const WeightedPairSample& sample,
                                    PairOracle& oracle);
  // Every pair with weight 1: the exact regret against a known graph.
  static PairRegretObjective Exact(const Clustering& pivot,
                                   const FullGraph& graph);

  const Clustering& pivot() const { return pivot_; }
  int64_t denominator() const { return denominator_; }
  const std::vector<Term>& terms() const { return terms_; }

  // Numerator of the regret over denominator(). Candidate must share n and k
  // with the pivot.
  int64_t EvaluateNumerator(const Clustering& candidate) const;
  Rational Evaluate(const Clustering& candidate) const {
    return Rational(EvaluateNumerator(candidate), denominator_);
  }

  // Signed adjacency: for each element, (neighbor, weight * s) with s = -1 on
  // edges and +1 on non-edges, so that the regret numerator equals
  // sum over joined pairs of weight * s, plus a constant.
  const std::vector<std::vector<std::pair<ElementId, int64_t>>>& adjacency()
      const {
    return adjacency_;
  }
  // The constant: sum_p weight_p * (edge_p - cost_p(pivot)).
  int64_t offset() const { return offset_; }

 private:
  Clustering pivot_;
  int64_t denominator_ = 1;
  std::vector<Term> terms_;
  std::vector<std::vector<std::pair<ElementId, int64_t>>> adjacency_;
  int64_t offset_ = 0;
};

// Running value of an objective under single-element relabels. Keeps, for
// every element and label, the signed weight towards that label's members, so
// a move is priced in O(1) and applied in O(degree).
class IncrementalRegret {
 public:
  IncrementalRegret(const PairRegretObjective& objective, Clustering start);

  Clustering current() const { return Clustering(labels_, k_); }
  const std::vector<ClusterLabel>& labels() const { return labels_; }
  int64_t numerator() const { return numerator_; }
  Rational value() const {
    return Rational(numerator_, objective_->denominator());
  }

  // Change of the numerator if u moved to `label`.
  int64_t MoveDelta(ElementId u, ClusterLabel label) const;
  void Apply(ElementId u, ClusterLabel label);

 private:
  const PairRegretObjective* objective_;
  std::vector<ClusterLabel> labels_;
  int32_t k_;
  std::vector<int64_t> affinity_;  // n x k, row-major
  int64_t numerator_ = 0;
};

}  // namespace activecc

#endif  // ACTIVECC_PAIR_OBJECTIVE_H_

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

#include "activecc/smoothness.h"

#include <algorithm>
#include <cmath>

#include "activecc/errors.h"
#include "activecc/pair_objective.h"

namespace activecc {

Clustering RandomCandidate(const Clustering& pivot, Rng& rng) {
  const int32_t n = pivot.n();
  const int32_t k = pivot.k();
  if (n < 2 || k < 2) {
    throw InputError("no clustering differs from the pivot when n < 2 or k < 2");
  }
  std::uniform_int_distribution<int32_t> count_dist(1, n);
  std::uniform_int_distribution<ElementId> element_dist(0, n - 1);
  std::uniform_int_distribution<ClusterLabel> label_dist(0, k - 1);
  while (true) {
    std::vector<ClusterLabel> labels = pivot.labels();
    const int32_t moves = count_dist(rng);
    for (int32_t m = 0; m < moves; ++m) labels[element_dist(rng)] = label_dist(rng);
    Clustering candidate(std::move(labels), k);
    if (!candidate.Equivalent(pivot)) return candidate;
  }
}

double MeasureSmoothness(const SampleSet& samples, const FullGraph& graph,
                         int32_t trials, uint64_t seed) {
  return MeasureSmoothness(samples.Objective(), graph, trials, seed);
}

double MeasureSmoothness(const PairRegretObjective& estimate,
                         const FullGraph& graph, int32_t trials, uint64_t seed) {
  if (trials <= 0) throw InputError("trials must be positive");
  const Clustering& pivot = estimate.pivot();
  const PairRegretObjective exact = PairRegretObjective::Exact(pivot, graph);
  Rng rng(seed);
  double worst = 0.0;
  for (int32_t trial = 0; trial < trials; ++trial) {
    const Clustering candidate = RandomCandidate(pivot, rng);
    const Rational error =
        estimate.Evaluate(candidate) - exact.Evaluate(candidate);
    const double ratio = std::abs(error.ToDouble()) /
                         static_cast<double>(ClusteringDistance(pivot, candidate));
    worst = std::max(worst, ratio);
  }
  return worst;
}

double MeasureSmoothness(const Clustering& pivot, PairOracle& oracle,
                         const FullGraph& graph, const SrraParams& params,
                         int32_t trials, uint64_t seed) {
  if (trials <= 0) throw InputError("trials must be positive");
  const SampleSet samples =
      DrawSamples(pivot, oracle, params, DeriveSeed(seed, 0));
  return MeasureSmoothness(samples, graph, trials, DeriveSeed(seed, 1));
}

}  // namespace activecc

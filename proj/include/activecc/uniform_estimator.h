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

#ifndef ACTIVECC_UNIFORM_ESTIMATOR_H_
#define ACTIVECC_UNIFORM_ESTIMATOR_H_

#include <cstdint>

#include "activecc/clustering.h"
#include "activecc/oracle.h"
#include "activecc/pair_objective.h"

namespace activecc {

enum class UniformMode {
  // m pairs drawn uniformly with repetition, each weighted n(n-1)/(2m).
  kWithReplacement,
  // Every pair once with weight 1; requires m = n(n-1)/2.
  kCensus,
};

// The unbiased baseline that ignores cluster sizes. Only pair ids are drawn.
WeightedPairSample UniformPairSample(const Clustering& pivot, int64_t m,
                                     uint64_t seed,
                                     UniformMode mode = UniformMode::kWithReplacement);

// Draws the sample and queries its pairs.
PairRegretObjective UniformRegretEstimator(
    PairOracle& oracle, const Clustering& pivot, int64_t m, uint64_t seed,
    UniformMode mode = UniformMode::kWithReplacement);

}  // namespace activecc

#endif  // ACTIVECC_UNIFORM_ESTIMATOR_H_

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

#ifndef ACTIVECC_SMOOTHNESS_H_
#define ACTIVECC_SMOOTHNESS_H_

#include <cstdint>

#include "activecc/clustering.h"
#include "activecc/oracle.h"
#include "activecc/pair_objective.h"
#include "activecc/random.h"
#include "activecc/sample_set.h"

namespace activecc {

// A clustering that differs from `pivot` in at least one pair: a uniformly
// chosen number m in [1, n] of random elements receive random labels. Mixing
// small and large m spreads candidates over near and far distances.
Clustering RandomCandidate(const Clustering& pivot, Rng& rng);

// Largest observed |estimate(C') - f(C')| / d(pivot, C') over `trials`
// random candidates, for any compiled regret estimate.
double MeasureSmoothness(const PairRegretObjective& estimate,
                         const FullGraph& graph, int32_t trials, uint64_t seed);

// Largest observed |f-hat(C') - f(C')| / d(pivot, C') over `trials` random
// candidates. Needs the full graph, so it is a test-side measurement.
double MeasureSmoothness(const SampleSet& samples, const FullGraph& graph,
                         int32_t trials, uint64_t seed);

// Draws a fresh sample set around `pivot` (through `oracle`) and measures it.
double MeasureSmoothness(const Clustering& pivot, PairOracle& oracle,
                         const FullGraph& graph, const SrraParams& params,
                         int32_t trials, uint64_t seed);

}  // namespace activecc

#endif  // ACTIVECC_SMOOTHNESS_H_

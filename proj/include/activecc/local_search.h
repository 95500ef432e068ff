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

#ifndef ACTIVECC_LOCAL_SEARCH_H_
#define ACTIVECC_LOCAL_SEARCH_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "activecc/clustering.h"
#include "activecc/errors.h"
#include "activecc/pair_objective.h"
#include "activecc/rational.h"

namespace activecc {

struct MinimizerResult {
  Clustering clustering;
  Rational value;
};

// True when a's canonical label vector is lexicographically smaller than b's.
bool CanonicallyBefore(const Clustering& a, const Clustering& b);

// Steepest descent over single-element relabels until no move lowers the
// objective. Ties between moves go to the smallest element, then the
// smallest label.
MinimizerResult SteepestDescent(const PairRegretObjective& objective,
                                const Clustering& start);

// Best of steepest descents from `start`, the pivot, and `restarts` uniformly
// random labelings. Equal values resolve to the canonically smallest result.
MinimizerResult LocalSearchMin(const PairRegretObjective& objective,
                               const Clustering& start, int32_t restarts,
                               uint64_t seed);

inline constexpr int64_t kBruteForceStateLimit = 10'000'000;

// k^n, or nullopt-like -1 when it exceeds `limit`.
int64_t LabelingCount(int32_t n, int32_t k, int64_t limit);

// Global minimizer over all k^n label vectors of `objective`, which maps a
// Clustering to any totally ordered value. Ties resolve to the
// lexicographically smallest canonical label vector. Throws
// SearchBudgetError when k^n exceeds `limit`.
template <typename Objective>
Clustering BruteForceMin(Objective&& objective, int32_t n, int32_t k,
                         int64_t limit = kBruteForceStateLimit) {
  if (n < 1 || k < 1) throw InputError("brute force needs n >= 1, k >= 1");
  if (LabelingCount(n, k, limit) < 0) {
    throw SearchBudgetError("k^n = " + std::to_string(k) + "^" +
                            std::to_string(n) + " exceeds the search budget");
  }
  std::vector<ClusterLabel> labels(n, 0);
  Clustering best(labels, k);
  auto best_value = objective(best);
  while (true) {
    // Odometer increment, last element fastest.
    int32_t pos = n - 1;
    while (pos >= 0 && labels[pos] == k - 1) labels[pos--] = 0;
    if (pos < 0) break;
    ++labels[pos];
    Clustering candidate(labels, k);
    auto value = objective(candidate);
    if (value < best_value ||
        (value == best_value && CanonicallyBefore(candidate, best))) {
      best = std::move(candidate);
      best_value = std::move(value);
    }
  }
  return best;
}

// BruteForceMin of a PairRegretObjective, priced incrementally.
MinimizerResult BruteForceMin(const PairRegretObjective& objective,
                              int64_t limit = kBruteForceStateLimit);

}  // namespace activecc

#endif  // ACTIVECC_LOCAL_SEARCH_H_

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

#include "activecc/local_search.h"

#include <algorithm>

#include "activecc/random.h"

namespace activecc {

bool CanonicallyBefore(const Clustering& a, const Clustering& b) {
  const auto ca = a.Canonical();
  const auto cb = b.Canonical();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(),
                                      cb.end());
}

MinimizerResult SteepestDescent(const PairRegretObjective& objective,
                                const Clustering& start) {
  IncrementalRegret state(objective, start);
  const int32_t n = start.n();
  const int32_t k = start.k();
  while (true) {
    int64_t best_delta = 0;
    ElementId best_element = -1;
    ClusterLabel best_label = -1;
    for (ElementId u = 0; u < n; ++u) {
      const ClusterLabel own = state.labels()[u];
      for (ClusterLabel label = 0; label < k; ++label) {
        if (label == own) continue;
        const int64_t delta = state.MoveDelta(u, label);
        if (delta < best_delta) {
          best_delta = delta;
          best_element = u;
          best_label = label;
        }
      }
    }
    if (best_element < 0) break;
    state.Apply(best_element, best_label);
  }
  return {state.current(), state.value()};
}

MinimizerResult LocalSearchMin(const PairRegretObjective& objective,
                               const Clustering& start, int32_t restarts,
                               uint64_t seed) {
  if (restarts < 0) throw InputError("restarts must be nonnegative");
  const Clustering& pivot = objective.pivot();
  if (start.n() != pivot.n() || start.k() != pivot.k()) {
    throw InputError("start must match the pivot's n and k");
  }
  std::vector<Clustering> starts{start};
  if (!start.Equivalent(pivot)) starts.push_back(pivot);
  for (int32_t r = 0; r < restarts; ++r) {
    Rng rng(DeriveSeed(seed, static_cast<uint64_t>(r)));
    starts.push_back(RandomClustering(pivot.n(), pivot.k(), rng));
  }

  MinimizerResult best = SteepestDescent(objective, starts.front());
  for (size_t s = 1; s < starts.size(); ++s) {
    MinimizerResult result = SteepestDescent(objective, starts[s]);
    if (result.value < best.value ||
        (result.value == best.value &&
         CanonicallyBefore(result.clustering, best.clustering))) {
      best = std::move(result);
    }
  }
  return best;
}

int64_t LabelingCount(int32_t n, int32_t k, int64_t limit) {
  int64_t count = 1;
  for (int32_t i = 0; i < n; ++i) {
    if (count > limit / k) return -1;
    count *= k;
  }
  return count <= limit ? count : -1;
}

MinimizerResult BruteForceMin(const PairRegretObjective& objective,
                              int64_t limit) {
  const int32_t n = objective.pivot().n();
  const int32_t k = objective.pivot().k();
  if (LabelingCount(n, k, limit) < 0) {
    throw SearchBudgetError("k^n = " + std::to_string(k) + "^" +
                            std::to_string(n) + " exceeds the search budget");
  }
  std::vector<ClusterLabel> labels(n, 0);
  IncrementalRegret state(objective, Clustering(labels, k));
  int64_t best_numerator = state.numerator();
  std::vector<ClusterLabel> best_labels = labels;
  std::vector<ClusterLabel> best_canonical =
      Clustering(best_labels, k).Canonical();
  while (true) {
    int32_t pos = n - 1;
    while (pos >= 0 && labels[pos] == k - 1) {
      labels[pos] = 0;
      state.Apply(pos, 0);
      --pos;
    }
    if (pos < 0) break;
    ++labels[pos];
    state.Apply(pos, labels[pos]);
    const int64_t numerator = state.numerator();
    if (numerator > best_numerator) continue;
    if (numerator == best_numerator) {
      std::vector<ClusterLabel> canonical = Clustering(labels, k).Canonical();
      if (!(canonical < best_canonical)) continue;
      best_canonical = std::move(canonical);
    } else {
      best_canonical = Clustering(labels, k).Canonical();
    }
    best_numerator = numerator;
    best_labels = labels;
  }
  return {Clustering(best_labels, k),
          Rational(best_numerator, objective.denominator())};
}

}  // namespace activecc

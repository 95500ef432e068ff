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

#include "activecc/uniform_estimator.h"

#include <utility>
#include <vector>

#include "activecc/errors.h"
#include "activecc/random.h"

namespace activecc {

WeightedPairSample UniformPairSample(const Clustering& pivot, int64_t m,
                                     uint64_t seed, UniformMode mode) {
  if (m < 1) throw InputError("pair budget m must be at least 1");
  const int32_t n = pivot.n();
  if (n < 2) throw InputError("uniform sampling needs n >= 2");
  const int64_t total_pairs = NumPairs(n);
  std::vector<std::pair<PairKey, int64_t>> weights;
  if (mode == UniformMode::kCensus) {
    if (m != total_pairs) {
      throw InputError("census mode requires m = n(n-1)/2");
    }
    for (int64_t index = 0; index < total_pairs; ++index) {
      weights.emplace_back(PairKey::FromIndex(index, n), 1);
    }
    return Normalize(pivot, 1, std::move(weights));
  }
  Rng rng(seed);
  std::vector<int64_t> counts(total_pairs, 0);
  for (int64_t s = 0; s < m; ++s) ++counts[UniformIndex(rng, total_pairs)];
  int64_t index = 0;
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v, ++index) {
      if (counts[index] > 0) {
        weights.emplace_back(PairKey{u, v}, total_pairs * counts[index]);
      }
    }
  }
  return Normalize(pivot, m, std::move(weights));
}

PairRegretObjective UniformRegretEstimator(PairOracle& oracle,
                                           const Clustering& pivot, int64_t m,
                                           uint64_t seed, UniformMode mode) {
  return PairRegretObjective::Reveal(UniformPairSample(pivot, m, seed, mode),
                                     oracle);
}

}  // namespace activecc

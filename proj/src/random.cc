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

#include "activecc/random.h"

#include <vector>

namespace activecc {

Clustering RandomClustering(int32_t n, int32_t k, Rng& rng) {
  std::uniform_int_distribution<ClusterLabel> pick(0, k - 1);
  std::vector<ClusterLabel> labels(n);
  for (auto& label : labels) label = pick(rng);
  return Clustering(std::move(labels), k);
}

}  // namespace activecc

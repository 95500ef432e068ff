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

#include "activecc/planted.h"

#include <ostream>
#include <random>

#include "activecc/errors.h"
#include "activecc/random.h"
#include "json.hpp"

namespace activecc {

PlantedInstance GeneratePlanted(const std::vector<int32_t>& sizes,
                                double flip_probability, uint64_t seed) {
  if (sizes.empty()) throw InputError("at least one cluster size required");
  if (!(flip_probability >= 0.0 && flip_probability < 0.5)) {
    throw InputError("flip probability must lie in [0, 1/2)");
  }
  std::vector<ClusterLabel> labels;
  for (size_t label = 0; label < sizes.size(); ++label) {
    if (sizes[label] < 0) throw InputError("negative cluster size");
    labels.insert(labels.end(), sizes[label],
                  static_cast<ClusterLabel>(label));
  }
  PlantedInstance instance;
  instance.truth =
      Clustering(std::move(labels), static_cast<int32_t>(sizes.size()));
  instance.flip_probability = flip_probability;
  instance.seed = seed;

  const int32_t n = instance.truth.n();
  instance.graph = FullGraph(n);
  Rng rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const auto& truth = instance.truth.labels();
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v) {
      const bool together = truth[u] == truth[v];
      const bool flipped = coin(rng) < flip_probability;
      if (together != flipped) instance.graph.AddEdge(u, v);
    }
  }
  return instance;
}

void WritePlantedSidecar(const PlantedInstance& instance, std::ostream& out) {
  nlohmann::json record{{"truth", instance.truth.labels()},
                        {"p", instance.flip_probability},
                        {"seed", instance.seed}};
  out << record.dump() << '\n';
}

}  // namespace activecc

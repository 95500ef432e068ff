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

#ifndef ACTIVECC_PLANTED_H_
#define ACTIVECC_PLANTED_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "activecc/clustering.h"

namespace activecc {

// Planted partition with independent pairwise label noise: every pair's
// "same cluster" bit is flipped with probability flip_probability.
struct PlantedInstance {
  Clustering truth;
  double flip_probability = 0.0;
  uint64_t seed = 0;
  FullGraph graph;
};

// Elements are assigned to clusters contiguously in the order of `sizes`, so
// sizes (3, 2) plants {0,1,2} and {3,4}. k is sizes.size().
PlantedInstance GeneratePlanted(const std::vector<int32_t>& sizes,
                                double flip_probability, uint64_t seed);

// Sidecar record {"truth": [labels], "p": .., "seed": ..}.
void WritePlantedSidecar(const PlantedInstance& instance, std::ostream& out);

}  // namespace activecc

#endif  // ACTIVECC_PLANTED_H_

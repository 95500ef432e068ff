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

#ifndef ACTIVECC_RANDOM_H_
#define ACTIVECC_RANDOM_H_

#include <cstdint>
#include <random>

#include "activecc/clustering.h"

namespace activecc {

using Rng = std::mt19937_64;

// Mixes a base seed with a stream tag so that independent consumers (restart
// r of iteration t, say) get decorrelated generators.
inline uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline int64_t UniformIndex(Rng& rng, int64_t size) {
  return std::uniform_int_distribution<int64_t>(0, size - 1)(rng);
}

// Every element gets an independent uniform label in [0, k).
Clustering RandomClustering(int32_t n, int32_t k, Rng& rng);

}  // namespace activecc

#endif  // ACTIVECC_RANDOM_H_

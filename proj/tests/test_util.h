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

#ifndef ACTIVECC_TESTS_TEST_UTIL_H_
#define ACTIVECC_TESTS_TEST_UTIL_H_

// Test-only oracles. They recompute quantities straight from definitions,
// over ordered pairs and without sharing code with the library, so that
// they stay independent of the implementation they check.

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "activecc/clustering.h"
#include "activecc/random.h"

namespace activecc {

inline void PrintTo(const Clustering& c, std::ostream* os) {
  *os << "[";
  for (size_t i = 0; i < c.labels().size(); ++i) {
    *os << (i ? "," : "") << c.labels()[i];
  }
  *os << "] k=" << c.k();
}

}  // namespace activecc

namespace activecc::testing {

// cost via the ordered-pair sum halved.
inline int64_t NaiveCost(const std::vector<int>& labels,
                         const std::function<bool(int, int)>& edge) {
  int64_t twice = 0;
  const int n = static_cast<int>(labels.size());
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool together = labels[u] == labels[v];
      const bool is_edge = edge(std::min(u, v), std::max(u, v));
      twice += (is_edge && !together) || (!is_edge && together);
    }
  }
  return twice / 2;
}

inline int64_t NaiveDistance(const std::vector<int>& a,
                             const std::vector<int>& b) {
  int64_t twice = 0;
  const int n = static_cast<int>(a.size());
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      twice += (a[u] == a[v]) != (b[u] == b[v]);
    }
  }
  return twice / 2;
}

inline std::function<bool(int, int)> EdgesOf(const FullGraph& g) {
  return [&g](int u, int v) { return g.HasEdge(u, v); };
}

// Visits every set partition of n elements into at most k blocks as a
// restricted growth string (first-occurrence labels), recursively. This is
// a different enumeration order from the odometer used by BruteForceMin.
inline void ForEachPartition(int n, int k,
                             const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> labels(n, 0);
  std::function<void(int, int)> recurse = [&](int pos, int used) {
    if (pos == n) {
      visit(labels);
      return;
    }
    for (int label = 0; label <= std::min(used, k - 1); ++label) {
      labels[pos] = label;
      recurse(pos + 1, std::max(used, label + 1));
    }
  };
  recurse(0, 0);
}

inline FullGraph RandomGraph(int32_t n, double density, Rng& rng) {
  FullGraph graph(n);
  std::bernoulli_distribution coin(density);
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v) {
      if (coin(rng)) graph.AddEdge(u, v);
    }
  }
  return graph;
}

inline Clustering Permuted(const Clustering& c, const std::vector<int>& perm) {
  std::vector<ClusterLabel> labels = c.labels();
  for (auto& label : labels) label = perm[label];
  return Clustering(std::move(labels), c.k());
}

}  // namespace activecc::testing

#endif  // ACTIVECC_TESTS_TEST_UTIL_H_

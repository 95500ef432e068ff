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

#ifndef ACTIVECC_CLUSTERING_H_
#define ACTIVECC_CLUSTERING_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace activecc {

using ElementId = int32_t;
using ClusterLabel = int32_t;

// Unordered pair of distinct elements, stored with u < v.
struct PairKey {
  ElementId u = 0;
  ElementId v = 0;

  // Orders the endpoints; throws InputError when a == b.
  static PairKey Make(ElementId a, ElementId b);

  // Position of the pair in the row-major enumeration of all n(n-1)/2 pairs.
  int64_t Index(int32_t n) const;
  static PairKey FromIndex(int64_t index, int32_t n);

  friend bool operator==(const PairKey&, const PairKey&) = default;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
  size_t operator()(const PairKey& key) const {
    return std::hash<uint64_t>()((static_cast<uint64_t>(key.u) << 32) ^
                                 static_cast<uint32_t>(key.v));
  }
};

inline int64_t NumPairs(int32_t n) {
  return static_cast<int64_t>(n) * (n - 1) / 2;
}

// Assignment of n elements to labels in [0, k). Clusters may be empty.
// Two clusterings are equivalent when they induce the same pair relation,
// whatever the labels.
class Clustering {
 public:
  Clustering() = default;
  Clustering(std::vector<ClusterLabel> labels, int32_t k);

  // Builds from explicit groups; elements not listed are an error.
  static Clustering FromGroups(
      std::initializer_list<std::initializer_list<ElementId>> groups,
      int32_t k);
  static Clustering FromGroups(const std::vector<std::vector<ElementId>>& groups,
                               int32_t k);
  static Clustering SingleCluster(int32_t n, int32_t k);

  int32_t n() const { return static_cast<int32_t>(labels_.size()); }
  int32_t k() const { return k_; }
  ClusterLabel label(ElementId u) const;
  const std::vector<ClusterLabel>& labels() const { return labels_; }

  std::vector<int32_t> ClusterSizes() const;
  std::vector<ElementId> Members(ClusterLabel label) const;

  // Labels renumbered in order of first appearance; equal for two
  // clusterings iff their pair relations coincide.
  std::vector<ClusterLabel> Canonical() const;
  bool Equivalent(const Clustering& other) const;

  Clustering WithLabel(ElementId u, ClusterLabel label) const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<ClusterLabel> labels_;
  int32_t k_ = 0;
};

// Known graph of "must be clustered together" edges over elements 0..n-1.
class FullGraph {
 public:
  FullGraph() = default;
  explicit FullGraph(int32_t n);

  int32_t n() const { return n_; }
  void AddEdge(ElementId a, ElementId b);
  void RemoveEdge(ElementId a, ElementId b);
  bool HasEdge(ElementId a, ElementId b) const;
  bool HasEdge(const PairKey& key) const;
  int64_t NumEdges() const;
  // Edges in increasing PairKey order.
  std::vector<PairKey> Edges() const;

  friend bool operator==(const FullGraph&, const FullGraph&) = default;

 private:
  int32_t n_ = 0;
  std::vector<uint8_t> adjacency_;
};

bool SameCluster(const Clustering& c, ElementId u, ElementId v);

// 1 iff the clustering disagrees with the graph on (u, v).
int PairCost(const Clustering& c, const FullGraph& g, ElementId u, ElementId v);

// Disagreements summed over unordered pairs (each pair counted once).
int64_t Cost(const Clustering& c, const FullGraph& g);

// Number of unordered pairs joined by exactly one of the two clusterings.
int64_t ClusteringDistance(const Clustering& a, const Clustering& b);

}  // namespace activecc

#endif  // ACTIVECC_CLUSTERING_H_

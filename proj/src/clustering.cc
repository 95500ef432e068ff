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

#include "activecc/clustering.h"

#include <string>

#include "activecc/errors.h"

namespace activecc {
namespace {

void CheckElement(ElementId u, int32_t n) {
  if (u < 0 || u >= n) {
    throw InputError("element id " + std::to_string(u) + " out of range [0, " +
                     std::to_string(n) + ")");
  }
}

void CheckSameSize(int32_t a, int32_t b) {
  if (a != b) {
    throw InputError("size mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b));
  }
}

}  // namespace

PairKey PairKey::Make(ElementId a, ElementId b) {
  if (a == b) {
    throw InputError("self-pair (" + std::to_string(a) + ", " +
                     std::to_string(b) + ")");
  }
  return a < b ? PairKey{a, b} : PairKey{b, a};
}

int64_t PairKey::Index(int32_t n) const {
  const int64_t row = u;
  return row * (2 * static_cast<int64_t>(n) - row - 1) / 2 + (v - u - 1);
}

PairKey PairKey::FromIndex(int64_t index, int32_t n) {
  ElementId u = 0;
  int64_t row_length = n - 1;
  while (index >= row_length) {
    index -= row_length;
    ++u;
    --row_length;
  }
  return PairKey{u, static_cast<ElementId>(u + 1 + index)};
}

Clustering::Clustering(std::vector<ClusterLabel> labels, int32_t k)
    : labels_(std::move(labels)), k_(k) {
  if (k_ < 1) throw InputError("k must be at least 1");
  for (ClusterLabel label : labels_) {
    if (label < 0 || label >= k_) {
      throw InputError("label " + std::to_string(label) +
                       " outside [0, " + std::to_string(k_) + ")");
    }
  }
}

Clustering Clustering::FromGroups(
    std::initializer_list<std::initializer_list<ElementId>> groups,
    int32_t k) {
  std::vector<std::vector<ElementId>> copy;
  for (const auto& group : groups) copy.emplace_back(group);
  return FromGroups(copy, k);
}

Clustering Clustering::FromGroups(
    const std::vector<std::vector<ElementId>>& groups, int32_t k) {
  if (static_cast<int32_t>(groups.size()) > k) {
    throw InputError("more groups than k");
  }
  int32_t n = 0;
  for (const auto& group : groups) n += static_cast<int32_t>(group.size());
  std::vector<ClusterLabel> labels(n, -1);
  for (size_t label = 0; label < groups.size(); ++label) {
    for (ElementId u : groups[label]) {
      CheckElement(u, n);
      if (labels[u] != -1) throw InputError("element listed twice");
      labels[u] = static_cast<ClusterLabel>(label);
    }
  }
  return Clustering(std::move(labels), k);
}

Clustering Clustering::SingleCluster(int32_t n, int32_t k) {
  return Clustering(std::vector<ClusterLabel>(n, 0), k);
}

ClusterLabel Clustering::label(ElementId u) const {
  CheckElement(u, n());
  return labels_[u];
}

std::vector<int32_t> Clustering::ClusterSizes() const {
  std::vector<int32_t> sizes(k_, 0);
  for (ClusterLabel label : labels_) ++sizes[label];
  return sizes;
}

std::vector<ElementId> Clustering::Members(ClusterLabel label) const {
  std::vector<ElementId> members;
  for (ElementId u = 0; u < n(); ++u) {
    if (labels_[u] == label) members.push_back(u);
  }
  return members;
}

std::vector<ClusterLabel> Clustering::Canonical() const {
  std::vector<ClusterLabel> remap(k_, -1);
  std::vector<ClusterLabel> canonical(labels_.size());
  ClusterLabel next = 0;
  for (size_t u = 0; u < labels_.size(); ++u) {
    ClusterLabel& mapped = remap[labels_[u]];
    if (mapped == -1) mapped = next++;
    canonical[u] = mapped;
  }
  return canonical;
}

bool Clustering::Equivalent(const Clustering& other) const {
  return n() == other.n() && Canonical() == other.Canonical();
}

Clustering Clustering::WithLabel(ElementId u, ClusterLabel label) const {
  CheckElement(u, n());
  std::vector<ClusterLabel> labels = labels_;
  labels[u] = label;
  return Clustering(std::move(labels), k_);
}

FullGraph::FullGraph(int32_t n) : n_(n), adjacency_(NumPairs(n), 0) {
  if (n < 0) throw InputError("negative element count");
}

void FullGraph::AddEdge(ElementId a, ElementId b) {
  CheckElement(a, n_);
  CheckElement(b, n_);
  adjacency_[PairKey::Make(a, b).Index(n_)] = 1;
}

void FullGraph::RemoveEdge(ElementId a, ElementId b) {
  CheckElement(a, n_);
  CheckElement(b, n_);
  adjacency_[PairKey::Make(a, b).Index(n_)] = 0;
}

bool FullGraph::HasEdge(ElementId a, ElementId b) const {
  CheckElement(a, n_);
  CheckElement(b, n_);
  return adjacency_[PairKey::Make(a, b).Index(n_)] != 0;
}

bool FullGraph::HasEdge(const PairKey& key) const {
  CheckElement(key.u, n_);
  CheckElement(key.v, n_);
  if (key.u >= key.v) throw InputError("PairKey must satisfy u < v");
  return adjacency_[key.Index(n_)] != 0;
}

int64_t FullGraph::NumEdges() const {
  int64_t count = 0;
  for (uint8_t bit : adjacency_) count += bit;
  return count;
}

std::vector<PairKey> FullGraph::Edges() const {
  std::vector<PairKey> edges;
  for (int64_t index = 0; index < static_cast<int64_t>(adjacency_.size());
       ++index) {
    if (adjacency_[index]) edges.push_back(PairKey::FromIndex(index, n_));
  }
  return edges;
}

bool SameCluster(const Clustering& c, ElementId u, ElementId v) {
  return c.label(u) == c.label(v);
}

int PairCost(const Clustering& c, const FullGraph& g, ElementId u,
             ElementId v) {
  CheckSameSize(c.n(), g.n());
  const bool edge = g.HasEdge(u, v);  // throws on u == v
  return edge != SameCluster(c, u, v) ? 1 : 0;
}

int64_t Cost(const Clustering& c, const FullGraph& g) {
  CheckSameSize(c.n(), g.n());
  const auto& labels = c.labels();
  int64_t total = 0;
  for (ElementId u = 0; u < c.n(); ++u) {
    for (ElementId v = u + 1; v < c.n(); ++v) {
      const bool together = labels[u] == labels[v];
      if (together != g.HasEdge(PairKey{u, v})) ++total;
    }
  }
  return total;
}

int64_t ClusteringDistance(const Clustering& a, const Clustering& b) {
  CheckSameSize(a.n(), b.n());
  const auto& la = a.labels();
  const auto& lb = b.labels();
  int64_t total = 0;
  for (ElementId u = 0; u < a.n(); ++u) {
    for (ElementId v = u + 1; v < a.n(); ++v) {
      if ((la[u] == la[v]) != (lb[u] == lb[v])) ++total;
    }
  }
  return total;
}

}  // namespace activecc

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

#include "activecc/rectangles.h"

#include <map>
#include <utility>

#include "activecc/errors.h"

namespace activecc {
namespace {

void CheckSameN(const Clustering& a, const Clustering& b) {
  if (a.n() != b.n()) throw InputError("clusterings differ in element count");
}

int PairRegretFromGraph(const Clustering& pivot, const Clustering& candidate,
                        const FullGraph& graph, ElementId u, ElementId v) {
  return PairCost(candidate, graph, u, v) - PairCost(pivot, graph, u, v);
}

}  // namespace

std::vector<Rectangle> DecomposeRectangles(const Clustering& pivot,
                                           const Clustering& candidate) {
  CheckSameN(pivot, candidate);
  const std::vector<ClusterLabel> order = SizeDescendingOrder(pivot);
  const int32_t pivot_k = pivot.k();
  const int32_t candidate_k = candidate.k();

  // cells[i][j] = C_{ij} with i a pivot rank.
  std::vector<std::vector<std::vector<ElementId>>> cells(
      pivot_k, std::vector<std::vector<ElementId>>(candidate_k));
  std::vector<std::vector<ElementId>> pivot_members(pivot_k);
  std::vector<int32_t> rank_of_label(pivot_k);
  for (int32_t rank = 0; rank < pivot_k; ++rank) {
    rank_of_label[order[rank]] = rank;
  }
  for (ElementId u = 0; u < pivot.n(); ++u) {
    const int32_t rank = rank_of_label[pivot.labels()[u]];
    cells[rank][candidate.labels()[u]].push_back(u);
    pivot_members[rank].push_back(u);
  }

  std::vector<Rectangle> rectangles;
  for (int32_t i = 0; i < pivot_k; ++i) {
    for (ClusterLabel j = 0; j < candidate_k; ++j) {
      if (cells[i][j].empty() ||
          cells[i][j].size() == pivot_members[i].size()) {
        continue;
      }
      Rectangle rectangle;
      rectangle.kind = RectangleKind::kIntra;
      rectangle.first_rank = i;
      rectangle.second_rank = i;
      rectangle.candidate_label = j;
      rectangle.rows = cells[i][j];
      for (ElementId v : pivot_members[i]) {
        if (candidate.labels()[v] != j) rectangle.cols.push_back(v);
      }
      rectangles.push_back(std::move(rectangle));
    }
  }
  for (ClusterLabel j = 0; j < candidate_k; ++j) {
    for (int32_t i1 = 0; i1 < pivot_k; ++i1) {
      if (cells[i1][j].empty()) continue;
      for (int32_t i2 = i1 + 1; i2 < pivot_k; ++i2) {
        if (cells[i2][j].empty()) continue;
        Rectangle rectangle;
        rectangle.kind = RectangleKind::kCross;
        rectangle.first_rank = i1;
        rectangle.second_rank = i2;
        rectangle.candidate_label = j;
        rectangle.rows = cells[i1][j];
        rectangle.cols = cells[i2][j];
        rectangles.push_back(std::move(rectangle));
      }
    }
  }
  return rectangles;
}

int64_t RectangleDistance(const std::vector<Rectangle>& rectangles) {
  int64_t intra = 0;
  int64_t cross = 0;
  for (const Rectangle& rectangle : rectangles) {
    (rectangle.kind == RectangleKind::kIntra ? intra : cross) +=
        rectangle.area();
  }
  return intra / 2 + cross;
}

int64_t RectangleRegret(const Rectangle& rectangle, const Clustering& pivot,
                        const Clustering& candidate, const FullGraph& graph) {
  int64_t total = 0;
  for (ElementId u : rectangle.rows) {
    for (ElementId v : rectangle.cols) {
      total += PairRegretFromGraph(pivot, candidate, graph, u, v);
    }
  }
  return total;
}

Rational DecompositionRegret(const std::vector<Rectangle>& rectangles,
                             const Clustering& pivot,
                             const Clustering& candidate,
                             const FullGraph& graph) {
  int64_t intra = 0;
  int64_t cross = 0;
  for (const Rectangle& rectangle : rectangles) {
    (rectangle.kind == RectangleKind::kIntra ? intra : cross) +=
        RectangleRegret(rectangle, pivot, candidate, graph);
  }
  return Rational(intra, 2) + Rational(cross);
}

Rational RectangleEstimate(const Rectangle& rectangle,
                           const SampleSet& samples,
                           const Clustering& candidate) {
  const SampleDraw& draw = samples.draw();
  const int32_t target_rank = rectangle.second_rank;
  const ClusterLabel target_label = draw.order.at(target_rank);
  const int64_t size = draw.cluster_sizes[target_label];

  std::map<ElementId, const SampleRow*> row_of;
  for (const SampleRow& row : draw.rows) {
    if (row.target_rank == target_rank) row_of[row.u] = &row;
  }
  std::vector<bool> in_cols(samples.pivot().n(), false);
  for (ElementId v : rectangle.cols) in_cols[v] = true;

  // Numerator over q; enumerated rows weigh 1 = q / q per member.
  int64_t numerator = 0;
  for (ElementId u : rectangle.rows) {
    auto it = row_of.find(u);
    if (it == row_of.end()) continue;
    const SampleRow& row = *it->second;
    int64_t row_sum = 0;
    for (const auto& [v, count] : row.draws) {
      if (v == u || !in_cols[v]) continue;
      row_sum += static_cast<int64_t>(count) *
                 samples.PairRegret(candidate, u, v);
    }
    numerator += (row.enumerated ? samples.q() : size) * row_sum;
  }
  return Rational(numerator, samples.q());
}

Rational DecompositionEstimate(const std::vector<Rectangle>& rectangles,
                               const SampleSet& samples,
                               const Clustering& candidate) {
  Rational intra;
  Rational cross;
  for (const Rectangle& rectangle : rectangles) {
    const Rational value = RectangleEstimate(rectangle, samples, candidate);
    if (rectangle.kind == RectangleKind::kIntra) {
      intra = intra + value;
    } else {
      cross = cross + value;
    }
  }
  return Rational(intra.numerator(), 2 * intra.denominator()) + cross;
}

}  // namespace activecc

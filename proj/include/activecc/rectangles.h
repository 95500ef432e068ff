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

#ifndef ACTIVECC_RECTANGLES_H_
#define ACTIVECC_RECTANGLES_H_

#include <cstdint>
#include <vector>

#include "activecc/clustering.h"
#include "activecc/rational.h"
#include "activecc/sample_set.h"

namespace activecc {

// Pivot clusters are addressed by rank in SizeDescendingOrder (0-based), and
// C_{ij} is the set of members of the rank-i pivot cluster that the candidate
// labels j.
//
//   kIntra (i, j):      C_{ij} x (C_i \ C_{ij})    pairs the candidate splits
//   kCross (i1, i2, j): C_{i1 j} x C_{i2 j}, i1 < i2    pairs it joins
//
// Intra rectangles list every split pair twice (once from each side), which
// is why they carry a factor 1/2 in the sums below.
enum class RectangleKind { kIntra, kCross };

struct Rectangle {
  RectangleKind kind = RectangleKind::kIntra;
  int32_t first_rank = 0;   // i, or i1
  int32_t second_rank = 0;  // i again for kIntra, i2 for kCross
  ClusterLabel candidate_label = 0;
  std::vector<ElementId> rows;
  std::vector<ElementId> cols;

  int64_t area() const {
    return static_cast<int64_t>(rows.size()) *
           static_cast<int64_t>(cols.size());
  }
};

// Rectangles with nonzero area only; identical clusterings give none.
std::vector<Rectangle> DecomposeRectangles(const Clustering& pivot,
                                           const Clustering& candidate);

// 1/2 * (intra areas) + (cross areas).
int64_t RectangleDistance(const std::vector<Rectangle>& rectangles);

// F over one rectangle: sum of f_{u,v} over its (ordered) member pairs.
int64_t RectangleRegret(const Rectangle& rectangle, const Clustering& pivot,
                        const Clustering& candidate, const FullGraph& graph);
// 1/2 * sum of intra F + sum of cross F.
Rational DecompositionRegret(const std::vector<Rectangle>& rectangles,
                             const Clustering& pivot,
                             const Clustering& candidate,
                             const FullGraph& graph);

// F-hat over one rectangle, read from the sample multisets: the intra
// rectangle (i, j) uses S_{u,i} for its rows, the cross rectangle
// (i1, i2, j) uses S_{u,i2}.
Rational RectangleEstimate(const Rectangle& rectangle,
                           const SampleSet& samples,
                           const Clustering& candidate);
Rational DecompositionEstimate(const std::vector<Rectangle>& rectangles,
                               const SampleSet& samples,
                               const Clustering& candidate);

}  // namespace activecc

#endif  // ACTIVECC_RECTANGLES_H_

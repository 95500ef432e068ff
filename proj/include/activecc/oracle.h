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

#ifndef ACTIVECC_ORACLE_H_
#define ACTIVECC_ORACLE_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "activecc/clustering.h"

namespace activecc {

enum class PairLabel { kEdge, kNonEdge };

const char* PairLabelName(PairLabel label);  // "edge" / "nonedge"
PairLabel ParsePairLabel(const std::string& name);

// Where pair labels ultimately come from: a stored graph, or a human.
// Fetch may throw OracleUnavailableError when no answer exists yet.
class LabelSource {
 public:
  virtual ~LabelSource() = default;
  virtual int32_t n() const = 0;
  virtual PairLabel Fetch(const PairKey& key) = 0;
};

class GraphLabelSource : public LabelSource {
 public:
  explicit GraphLabelSource(FullGraph graph) : graph_(std::move(graph)) {}
  int32_t n() const override { return graph_.n(); }
  PairLabel Fetch(const PairKey& key) override {
    return graph_.HasEdge(key) ? PairLabel::kEdge : PairLabel::kNonEdge;
  }

 private:
  FullGraph graph_;
};

// Caching front end over a LabelSource that meters query cost. Only the first
// query of a pair is charged; later queries are answered from the cache.
// Thread-safe: concurrent queries behave as if serialized.
class PairOracle {
 public:
  explicit PairOracle(std::shared_ptr<LabelSource> source);
  static PairOracle ForGraph(FullGraph graph);

  int32_t n() const { return n_; }

  PairLabel Query(ElementId u, ElementId v);
  PairLabel Query(const PairKey& key);

  // Cached answer, if any. Never charges and never consults the source.
  std::optional<PairLabel> Revealed(const PairKey& key) const;

  int64_t distinct_queries() const;
  // Revealed pairs in increasing PairKey order.
  std::vector<std::pair<PairKey, PairLabel>> RevealedPairs() const;

 private:
  std::shared_ptr<LabelSource> source_;
  int32_t n_ = 0;
  mutable std::mutex mu_;
  std::unordered_map<PairKey, PairLabel, PairKeyHash> revealed_;
};

}  // namespace activecc

#endif  // ACTIVECC_ORACLE_H_

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

#include "activecc/oracle.h"

#include <algorithm>
#include <string>

#include "activecc/errors.h"

namespace activecc {

const char* PairLabelName(PairLabel label) {
  return label == PairLabel::kEdge ? "edge" : "nonedge";
}

PairLabel ParsePairLabel(const std::string& name) {
  if (name == "edge") return PairLabel::kEdge;
  if (name == "nonedge") return PairLabel::kNonEdge;
  throw InputError("unknown pair label '" + name + "'");
}

PairOracle::PairOracle(std::shared_ptr<LabelSource> source)
    : source_(std::move(source)) {
  if (!source_) throw InputError("null label source");
  n_ = source_->n();
}

PairOracle PairOracle::ForGraph(FullGraph graph) {
  return PairOracle(std::make_shared<GraphLabelSource>(std::move(graph)));
}

PairLabel PairOracle::Query(ElementId u, ElementId v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") out of range");
  }
  return Query(PairKey::Make(u, v));
}

PairLabel PairOracle::Query(const PairKey& key) {
  if (key.u < 0 || key.v >= n_ || key.u >= key.v) {
    throw InputError("invalid pair key");
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = revealed_.find(key); it != revealed_.end()) return it->second;
  const PairLabel label = source_->Fetch(key);
  revealed_.emplace(key, label);
  return label;
}

std::optional<PairLabel> PairOracle::Revealed(const PairKey& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = revealed_.find(key); it != revealed_.end()) return it->second;
  return std::nullopt;
}

int64_t PairOracle::distinct_queries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<int64_t>(revealed_.size());
}

std::vector<std::pair<PairKey, PairLabel>> PairOracle::RevealedPairs() const {
  std::vector<std::pair<PairKey, PairLabel>> pairs;
  {
    std::lock_guard<std::mutex> lock(mu_);
    pairs.assign(revealed_.begin(), revealed_.end());
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return pairs;
}

}  // namespace activecc

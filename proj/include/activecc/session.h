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

#ifndef ACTIVECC_SESSION_H_
#define ACTIVECC_SESSION_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "activecc/clustering.h"
#include "activecc/oracle.h"
#include "activecc/regret_loop.h"
#include "json.hpp"

namespace activecc {

// Labels typed in by a person. Unanswered pairs are unavailable, which
// blocks the round that needs them.
class HumanLabelSource : public LabelSource {
 public:
  explicit HumanLabelSource(int32_t n) : n_(n) {}
  int32_t n() const override { return n_; }
  PairLabel Fetch(const PairKey& key) override;

  void Record(const PairKey& key, PairLabel label) { answered_[key] = label; }
  bool Has(const PairKey& key) const { return answered_.count(key) > 0; }
  int64_t size() const { return static_cast<int64_t>(answered_.size()); }
  const std::map<PairKey, PairLabel>& answered() const { return answered_; }

 private:
  int32_t n_;
  std::map<PairKey, PairLabel> answered_;
};

// POST /sessions body:
//   {"n": 5, "k": 2, "q": 2, "epsilon": 0.5, "c2": 1.0, "exhaustive": false,
//    "t_max": 10, "improvement_floor": 0, "restarts": 4,
//    "brute_force": false, "seed": 0, "initial": [labels]}
// Everything but n and k is optional. Without "initial" the run starts from
// InitialClustering(n, k, seed), the same start RunExperiment uses.
struct SessionConfig {
  int32_t n = 0;
  LoopConfig loop;
  std::optional<std::vector<ClusterLabel>> initial;

  static SessionConfig FromJson(const nlohmann::json& record);
  nlohmann::json ToJson() const;
  Clustering InitialClusteringFor() const;
};

struct SessionState {
  int32_t iteration = 0;
  int64_t labels_collected = 0;
  Clustering current_clustering;
  bool done = false;
  StopReason stop = StopReason::kRunning;
};

// One human-driven run of the regret loop. Pairs are handed out one sampling
// round at a time, in shuffled order and without any hint of why they were
// chosen. When the last pending pair is answered the loop completes the
// round and exposes the next one.
class LabelSession {
 public:
  LabelSession(std::string id, SessionConfig config);

  const std::string& id() const { return id_; }
  const std::vector<PairKey>& NextBatch() const { return pending_; }
  // Returns the number of pairs still pending. Throws ProtocolError, with no
  // state change, if the pair is not pending.
  int64_t Submit(const PairKey& key, PairLabel label);
  SessionState State() const;
  const ExperimentTrace& trace() const { return loop_.trace(); }
  int64_t distinct_queries() const { return oracle_.distinct_queries(); }

  // In-memory state as JSON: config, answered labels, trace.
  nlohmann::json Snapshot() const;

 private:
  void Refill();

  std::string id_;
  SessionConfig config_;
  std::shared_ptr<HumanLabelSource> source_;
  PairOracle oracle_;
  RegretLoop loop_;
  std::vector<PairKey> pending_;
};

// Thread-safe registry of sessions; every call is serialized, so of two
// submits for the same pair the first wins and the second is rejected.
class SessionManager {
 public:
  std::string Create(const SessionConfig& config);
  std::vector<PairKey> NextBatch(const std::string& id) const;
  int64_t Submit(const std::string& id, const PairKey& key, PairLabel label);
  SessionState State(const std::string& id) const;
  nlohmann::json Snapshot(const std::string& id) const;

 private:
  LabelSession& Find(const std::string& id) const;

  mutable std::mutex mu_;
  int64_t next_id_ = 1;
  std::map<std::string, std::unique_ptr<LabelSession>> sessions_;
};

}  // namespace activecc

#endif  // ACTIVECC_SESSION_H_

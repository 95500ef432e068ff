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

#include "activecc/session.h"

#include <algorithm>

#include "activecc/errors.h"
#include "activecc/experiment.h"
#include "activecc/random.h"

namespace activecc {
namespace {

using nlohmann::json;

constexpr uint64_t kShuffleStream = 0x5e55;

template <typename T>
T ValueOr(const json& record, const char* key, T fallback) {
  if (!record.contains(key) || record.at(key).is_null()) return fallback;
  return record.at(key).get<T>();
}

}  // namespace

PairLabel HumanLabelSource::Fetch(const PairKey& key) {
  auto it = answered_.find(key);
  if (it == answered_.end()) {
    throw OracleUnavailableError("pair (" + std::to_string(key.u) + ", " +
                                 std::to_string(key.v) +
                                 ") has not been labeled");
  }
  return it->second;
}

SessionConfig SessionConfig::FromJson(const json& record) {
  if (!record.is_object()) throw InputError("session config must be an object");
  SessionConfig config;
  try {
    config.n = record.at("n").get<int32_t>();
    LoopConfig& loop = config.loop;
    loop.k = record.at("k").get<int32_t>();
    if (record.contains("q")) loop.srra.q_override = record.at("q").get<int64_t>();
    loop.srra.epsilon = ValueOr<double>(record, "epsilon", loop.srra.epsilon);
    loop.srra.c2 = ValueOr<double>(record, "c2", loop.srra.c2);
    loop.srra.exhaustive = ValueOr<bool>(record, "exhaustive", false);
    loop.t_max = ValueOr<int32_t>(record, "t_max", loop.t_max);
    loop.improvement_floor =
        ValueOr<double>(record, "improvement_floor", loop.improvement_floor);
    loop.restarts = ValueOr<int32_t>(record, "restarts", loop.restarts);
    loop.brute_force = ValueOr<bool>(record, "brute_force", false);
    loop.seed = ValueOr<uint64_t>(record, "seed", 0);
    if (record.contains("initial")) {
      config.initial = record.at("initial").get<std::vector<ClusterLabel>>();
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("bad session config: ") + e.what());
  }
  if (config.n < 2) throw InputError("session needs n >= 2");
  config.loop.Validate();
  if (config.initial && static_cast<int32_t>(config.initial->size()) != config.n) {
    throw InputError("initial clustering must have n labels");
  }
  config.InitialClusteringFor();  // validates labels
  return config;
}

json SessionConfig::ToJson() const {
  json record{{"n", n},
              {"k", loop.k},
              {"epsilon", loop.srra.epsilon},
              {"c2", loop.srra.c2},
              {"exhaustive", loop.srra.exhaustive},
              {"t_max", loop.t_max},
              {"improvement_floor", loop.improvement_floor},
              {"restarts", loop.restarts},
              {"brute_force", loop.brute_force},
              {"seed", loop.seed}};
  if (loop.srra.q_override) record["q"] = *loop.srra.q_override;
  if (initial) record["initial"] = *initial;
  return record;
}

Clustering SessionConfig::InitialClusteringFor() const {
  if (initial) return Clustering(*initial, loop.k);
  return InitialClustering(n, loop.k, loop.seed);
}

LabelSession::LabelSession(std::string id, SessionConfig config)
    : id_(std::move(id)),
      config_(std::move(config)),
      source_(std::make_shared<HumanLabelSource>(config_.n)),
      oracle_(source_),
      loop_(config_.loop, config_.InitialClusteringFor()) {
  Refill();
}

void LabelSession::Refill() {
  pending_.clear();
  while (auto pairs = loop_.PrepareRound(oracle_)) {
    for (const PairKey& pair : *pairs) {
      if (!oracle_.Revealed(pair) && !source_->Has(pair)) {
        pending_.push_back(pair);
      }
    }
    if (!pending_.empty()) {
      Rng rng(DeriveSeed(DeriveSeed(config_.loop.seed, kShuffleStream),
                         static_cast<uint64_t>(loop_.round())));
      std::shuffle(pending_.begin(), pending_.end(), rng);
      return;
    }
    loop_.CompleteRound(oracle_);
  }
}

int64_t LabelSession::Submit(const PairKey& key, PairLabel label) {
  if (key.u < 0 || key.u >= key.v || key.v >= config_.n) {
    throw InputError("pair must satisfy 0 <= u < v < n");
  }
  auto it = std::find(pending_.begin(), pending_.end(), key);
  if (it == pending_.end()) {
    throw ProtocolError("pair (" + std::to_string(key.u) + ", " +
                        std::to_string(key.v) + ") is not pending");
  }
  source_->Record(key, label);
  pending_.erase(it);
  if (pending_.empty()) {
    loop_.CompleteRound(oracle_);
    Refill();
  }
  return static_cast<int64_t>(pending_.size());
}

SessionState LabelSession::State() const {
  SessionState state;
  state.iteration = loop_.trace().iterations();
  state.labels_collected = source_->size();
  state.current_clustering = loop_.pivot();
  state.done = loop_.done();
  state.stop = loop_.trace().stop;
  return state;
}

json LabelSession::Snapshot() const {
  json labels = json::array();
  for (const auto& [pair, label] : source_->answered()) {
    labels.push_back({{"u", pair.u}, {"v", pair.v}, {"label", PairLabelName(label)}});
  }
  json trace = json::array();
  for (const TraceRow& row : loop_.trace().rows) {
    trace.push_back({{"t", row.t},
                     {"pivot", row.pivot.labels()},
                     {"fhat_min", row.fhat_min.ToDouble()},
                     {"distinct_queries", row.distinct_queries}});
  }
  json pending = json::array();
  for (const PairKey& pair : pending_) pending.push_back({{"u", pair.u}, {"v", pair.v}});
  return json{{"id", id_},
              {"config", config_.ToJson()},
              {"labels", labels},
              {"pending", pending},
              {"trace", trace},
              {"stop", StopReasonName(loop_.trace().stop)}};
}

std::string SessionManager::Create(const SessionConfig& config) {
  std::lock_guard<std::mutex> lock(mu_);
  std::string id = "s" + std::to_string(next_id_++);
  sessions_.emplace(id, std::make_unique<LabelSession>(id, config));
  return id;
}

LabelSession& SessionManager::Find(const std::string& id) const {
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFoundError("unknown session '" + id + "'");
  return *it->second;
}

std::vector<PairKey> SessionManager::NextBatch(const std::string& id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return Find(id).NextBatch();
}

int64_t SessionManager::Submit(const std::string& id, const PairKey& key,
                               PairLabel label) {
  std::lock_guard<std::mutex> lock(mu_);
  return Find(id).Submit(key, label);
}

SessionState SessionManager::State(const std::string& id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return Find(id).State();
}

json SessionManager::Snapshot(const std::string& id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return Find(id).Snapshot();
}

}  // namespace activecc

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

#ifndef ACTIVECC_REGRET_LOOP_H_
#define ACTIVECC_REGRET_LOOP_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "activecc/clustering.h"
#include "activecc/oracle.h"
#include "activecc/pair_objective.h"
#include "activecc/rational.h"
#include "activecc/sample_set.h"

namespace activecc {

enum class EstimatorKind { kSrra, kUniform };

struct LoopConfig {
  int32_t k = 2;
  SrraParams srra;
  int32_t t_max = 10;
  double improvement_floor = 0.0;
  int32_t restarts = 4;
  uint64_t seed = 0;
  // Minimize exactly when k^n is within kBruteForceStateLimit, otherwise
  // fall back to local search.
  bool brute_force = false;
  // No new round starts once the ledger holds this many pairs.
  std::optional<int64_t> query_budget;

  EstimatorKind estimator = EstimatorKind::kSrra;
  // Uniform pairs drawn in round t (1-based) is entry t-1; the last entry is
  // reused for later rounds.
  std::vector<int64_t> uniform_pairs_per_round;

  void Validate() const;
};

struct TraceRow {
  int32_t t = 0;
  Clustering pivot;
  std::optional<int64_t> cost;  // when the full graph is known
  Rational fhat_min;            // estimated regret of the adopted pivot
  int64_t distinct_queries = 0; // ledger after the round
  int64_t round_pairs = 0;      // distinct pairs the round's sample touched
};

enum class StopReason {
  kRunning,
  kIterationCap,
  kFixedPoint,
  kSmallImprovement,
  kBudget,
  kOracleUnavailable,
};

const char* StopReasonName(StopReason reason);

// Row t = 0 holds the initial clustering; row t >= 1 the pivot adopted by
// round t.
struct ExperimentTrace {
  std::vector<TraceRow> rows;
  StopReason stop = StopReason::kRunning;
  bool truncated = false;  // an oracle failure cut the last round short

  const Clustering& final_clustering() const { return rows.back().pivot; }
  int32_t iterations() const { return static_cast<int32_t>(rows.size()) - 1; }
};

// CSV with header t,cost,fhat_min,distinct_queries. Unknown costs are empty.
std::string TraceToCsv(const ExperimentTrace& trace);

// The iterative pivot-update algorithm as a resumable state machine:
//
//   while (auto pairs = loop.PrepareRound(oracle)) {
//     ... make sure the oracle can answer `pairs` ...
//     loop.CompleteRound(oracle);
//   }
//
// Each round draws a sample around the current pivot (ids only, so the pairs
// it needs are known before any label), reveals the labels, minimizes the
// estimated regret and adopts the minimizer when it is strictly negative.
// All randomness is derived from config.seed and the round index.
class RegretLoop {
 public:
  RegretLoop(LoopConfig config, Clustering initial,
             const FullGraph* graph = nullptr);

  bool done() const { return trace_.stop != StopReason::kRunning; }
  const ExperimentTrace& trace() const { return trace_; }
  const Clustering& pivot() const { return trace_.rows.back().pivot; }
  int32_t round() const { return static_cast<int32_t>(trace_.rows.size()); }

  // Starts the next round unless a stopping rule applies; returns the pairs
  // it needs, or nullopt when the loop is done. Idempotent until
  // CompleteRound.
  std::optional<std::vector<PairKey>> PrepareRound(const PairOracle& oracle);

  // Called with each round's revealed estimator before it is minimized.
  using RoundObserver =
      std::function<void(int32_t t, const PairRegretObjective& estimate)>;
  void set_round_observer(RoundObserver observer) {
    observer_ = std::move(observer);
  }

  // Queries the round's pairs, minimizes and records the round. An
  // OracleUnavailableError ends the loop with a truncated trace.
  void CompleteRound(PairOracle& oracle);

 private:
  WeightedPairSample DrawRound() const;

  LoopConfig config_;
  const FullGraph* graph_;
  ExperimentTrace trace_;
  std::optional<WeightedPairSample> pending_;
  RoundObserver observer_;
};

ExperimentTrace RunRegretLoop(PairOracle& oracle, const LoopConfig& config,
                              const Clustering& initial,
                              const FullGraph* graph = nullptr);

// RunRegretLoop with the size-biased estimator.
ExperimentTrace SrraLoop(PairOracle& oracle, LoopConfig config,
                         const Clustering& initial,
                         const FullGraph* graph = nullptr);

}  // namespace activecc

#endif  // ACTIVECC_REGRET_LOOP_H_

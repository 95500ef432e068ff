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

#include "activecc/regret_loop.h"

#include <algorithm>
#include <sstream>

#include "activecc/errors.h"
#include "activecc/local_search.h"
#include "activecc/random.h"
#include "activecc/uniform_estimator.h"

namespace activecc {
namespace {

constexpr uint64_t kDrawStream = 0;
constexpr uint64_t kMinimizeStream = 1;

uint64_t RoundSeed(uint64_t seed, int32_t round, uint64_t stream) {
  return DeriveSeed(DeriveSeed(seed, static_cast<uint64_t>(round)), stream);
}

}  // namespace

void LoopConfig::Validate() const {
  if (k < 1) throw InputError("k must be at least 1");
  if (t_max < 1) throw InputError("t_max must be at least 1");
  if (restarts < 1) throw InputError("restarts must be at least 1");
  if (!(improvement_floor >= 0.0)) {
    throw InputError("improvement floor must be nonnegative");
  }
  if (query_budget && *query_budget < 0) {
    throw InputError("query budget must be nonnegative");
  }
  srra.Validate();
  if (estimator == EstimatorKind::kUniform) {
    if (uniform_pairs_per_round.empty()) {
      throw InputError("uniform estimator needs a per-round pair budget");
    }
    for (int64_t m : uniform_pairs_per_round) {
      if (m < 1) throw InputError("per-round pair budget must be positive");
    }
  }
}

const char* StopReasonName(StopReason reason) {
  switch (reason) {
    case StopReason::kRunning: return "running";
    case StopReason::kIterationCap: return "iteration_cap";
    case StopReason::kFixedPoint: return "fixed_point";
    case StopReason::kSmallImprovement: return "small_improvement";
    case StopReason::kBudget: return "budget";
    case StopReason::kOracleUnavailable: return "oracle_unavailable";
  }
  return "unknown";
}

std::string TraceToCsv(const ExperimentTrace& trace) {
  std::ostringstream out;
  out << "t,cost,fhat_min,distinct_queries\n";
  out.precision(17);
  for (const TraceRow& row : trace.rows) {
    out << row.t << ',';
    if (row.cost) out << *row.cost;
    out << ',' << row.fhat_min.ToDouble() << ',' << row.distinct_queries
        << '\n';
  }
  return out.str();
}

RegretLoop::RegretLoop(LoopConfig config, Clustering initial,
                       const FullGraph* graph)
    : config_(std::move(config)), graph_(graph) {
  config_.Validate();
  if (initial.k() != config_.k) {
    throw InputError("initial clustering must use the configured k");
  }
  if (graph_ && graph_->n() != initial.n()) {
    throw InputError("graph and initial clustering differ in element count");
  }
  TraceRow row;
  row.t = 0;
  row.pivot = std::move(initial);
  if (graph_) row.cost = Cost(row.pivot, *graph_);
  trace_.rows.push_back(std::move(row));
}

WeightedPairSample RegretLoop::DrawRound() const {
  const int32_t t = round();
  const uint64_t seed = RoundSeed(config_.seed, t, kDrawStream);
  if (config_.estimator == EstimatorKind::kUniform) {
    const auto& schedule = config_.uniform_pairs_per_round;
    const int64_t m = schedule[std::min<size_t>(t - 1, schedule.size() - 1)];
    return UniformPairSample(pivot(), m, seed);
  }
  const int64_t q = SampleSizeQ(pivot().n(), config_.k, config_.srra);
  return DrawSampleIds(pivot(), q, config_.srra.exhaustive, seed).Weights();
}

std::optional<std::vector<PairKey>> RegretLoop::PrepareRound(
    const PairOracle& oracle) {
  if (done()) return std::nullopt;
  if (!pending_) {
    if (round() > config_.t_max) {
      trace_.stop = StopReason::kIterationCap;
      return std::nullopt;
    }
    if (config_.query_budget &&
        oracle.distinct_queries() >= *config_.query_budget) {
      trace_.stop = StopReason::kBudget;
      return std::nullopt;
    }
    if (round() == 1) trace_.rows[0].distinct_queries = oracle.distinct_queries();
    pending_ = DrawRound();
  }
  return pending_->Pairs();
}

void RegretLoop::CompleteRound(PairOracle& oracle) {
  if (!pending_) {
    if (!PrepareRound(oracle)) return;
  }
  const int32_t t = round();
  std::optional<PairRegretObjective> objective;
  try {
    objective = PairRegretObjective::Reveal(*pending_, oracle);
  } catch (const OracleUnavailableError&) {
    pending_.reset();
    trace_.stop = StopReason::kOracleUnavailable;
    trace_.truncated = true;
    return;
  }
  const int64_t round_pairs = pending_->num_pairs();
  pending_.reset();
  if (observer_) observer_(t, *objective);

  const Clustering& current = pivot();
  MinimizerResult best;
  if (config_.brute_force &&
      LabelingCount(current.n(), config_.k, kBruteForceStateLimit) > 0) {
    best = BruteForceMin(*objective);
  } else {
    best = LocalSearchMin(*objective, current, config_.restarts,
                          RoundSeed(config_.seed, t, kMinimizeStream));
  }

  const bool improves = best.value < Rational(0);
  TraceRow row;
  row.t = t;
  row.pivot = improves ? best.clustering : current;
  row.fhat_min = improves ? best.value : Rational(0);
  if (graph_) row.cost = Cost(row.pivot, *graph_);
  row.distinct_queries = oracle.distinct_queries();
  row.round_pairs = round_pairs;
  trace_.rows.push_back(std::move(row));

  if (!improves) {
    trace_.stop = StopReason::kFixedPoint;
  } else if (-best.value.ToDouble() < config_.improvement_floor) {
    trace_.stop = StopReason::kSmallImprovement;
  } else if (t >= config_.t_max) {
    trace_.stop = StopReason::kIterationCap;
  }
}

ExperimentTrace RunRegretLoop(PairOracle& oracle, const LoopConfig& config,
                              const Clustering& initial,
                              const FullGraph* graph) {
  if (oracle.n() != initial.n()) {
    throw InputError("oracle and initial clustering differ in element count");
  }
  RegretLoop loop(config, initial, graph);
  while (loop.PrepareRound(oracle)) loop.CompleteRound(oracle);
  return loop.trace();
}

ExperimentTrace SrraLoop(PairOracle& oracle, LoopConfig config,
                         const Clustering& initial, const FullGraph* graph) {
  config.estimator = EstimatorKind::kSrra;
  return RunRegretLoop(oracle, config, initial, graph);
}

}  // namespace activecc

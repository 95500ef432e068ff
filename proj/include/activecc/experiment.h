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

#ifndef ACTIVECC_EXPERIMENT_H_
#define ACTIVECC_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "activecc/clustering.h"
#include "activecc/regret_loop.h"
#include "json.hpp"

namespace activecc {

enum class Method { kSrra, kUniform };

const char* MethodName(Method method);  // "SRRA" / "UNIFORM"
Method ParseMethod(const std::string& name);

struct InstanceSpec {
  std::vector<int32_t> sizes;
  double p = 0.0;
  // Fixed instance seed; when absent each run seed plants its own instance.
  std::optional<uint64_t> seed;
};

// Experiment description, usually read from JSON:
//
//   {"instance": {"sizes": [40, 15, 5], "p": 0.05},   or "graph": "g.jsonl"
//    "method": "SRRA", "budgets": [400, 800], "seeds": [1, 2, 3],
//    "k": 3, "q": 60, "epsilon": 0.5, "c2": 1.0, "exhaustive": false,
//    "t_max": 5, "improvement_floor": 0, "restarts": 4,
//    "brute_force": false, "output": "runs.csv"}
struct ExperimentConfig {
  std::optional<InstanceSpec> instance;
  std::string graph_path;
  Method method = Method::kSrra;
  std::vector<int64_t> budgets;
  std::vector<uint64_t> seeds{0};
  // k, srra, t_max, improvement_floor, restarts, brute_force. k = 0 means
  // "take it from the instance or graph header".
  LoopConfig loop;
  std::string output_path;

  static ExperimentConfig FromJson(const nlohmann::json& record);
  static ExperimentConfig FromJsonFile(const std::string& path);
  void Validate() const;
};

struct ExperimentRow {
  Method method = Method::kSrra;
  int64_t budget = 0;
  uint64_t seed = 0;
  int32_t iterations = 0;
  int64_t final_cost = 0;
  int64_t distinct_queries = 0;  // as reported
  int64_t ledger = 0;            // read back from the oracle after the run
  int64_t max_pairs = 0;         // n(n-1)/2
  // Even the first round went past the budget.
  bool insufficient = false;
};

// Runs `method` once per (seed, budget) against a simulated oracle, each run
// from a fresh ledger. The loop stops starting rounds once the ledger reaches
// the budget; a round in progress always completes. UNIFORM runs match the
// per-round distinct-pair usage of an SRRA run with the same seed and budget.
std::vector<ExperimentRow> RunExperiment(const ExperimentConfig& config);

// Header: method,budget,seed,iterations,final_cost,distinct_queries.
// Insufficient rows report INSUFFICIENT in the final_cost column.
std::string RowsToCsv(const std::vector<ExperimentRow>& rows);

// The starting clustering every method uses for a given run seed.
Clustering InitialClustering(int32_t n, int32_t k, uint64_t seed);

}  // namespace activecc

#endif  // ACTIVECC_EXPERIMENT_H_

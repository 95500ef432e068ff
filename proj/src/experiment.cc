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

#include "activecc/experiment.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "activecc/errors.h"
#include "activecc/io.h"
#include "activecc/oracle.h"
#include "activecc/planted.h"
#include "activecc/random.h"

namespace activecc {
namespace {

using nlohmann::json;

constexpr uint64_t kInitialStream = 0x1417;

template <typename T>
T ValueOr(const json& record, const char* key, T fallback) {
  if (!record.contains(key) || record.at(key).is_null()) return fallback;
  return record.at(key).get<T>();
}

struct Problem {
  FullGraph graph;
  int32_t k = 1;
};

Problem LoadProblem(const ExperimentConfig& config, uint64_t run_seed) {
  if (config.instance) {
    const InstanceSpec& spec = *config.instance;
    PlantedInstance instance = GeneratePlanted(
        spec.sizes, spec.p, spec.seed ? *spec.seed : run_seed);
    return {std::move(instance.graph),
            static_cast<int32_t>(spec.sizes.size())};
  }
  GraphFile file = ReadGraphJsonlFile(config.graph_path);
  return {std::move(file.graph), file.k};
}

}  // namespace

const char* MethodName(Method method) {
  return method == Method::kSrra ? "SRRA" : "UNIFORM";
}

Method ParseMethod(const std::string& name) {
  if (name == "SRRA") return Method::kSrra;
  if (name == "UNIFORM") return Method::kUniform;
  throw InputError("unknown method '" + name + "' (expected SRRA or UNIFORM)");
}

ExperimentConfig ExperimentConfig::FromJson(const json& record) {
  if (!record.is_object()) throw InputError("config must be a JSON object");
  ExperimentConfig config;
  try {
    if (record.contains("instance")) {
      const json& instance = record.at("instance");
      InstanceSpec spec;
      spec.sizes = instance.at("sizes").get<std::vector<int32_t>>();
      spec.p = ValueOr<double>(instance, "p", 0.0);
      if (instance.contains("seed")) {
        spec.seed = instance.at("seed").get<uint64_t>();
      }
      config.instance = std::move(spec);
    }
    config.graph_path = ValueOr<std::string>(record, "graph", "");
    config.method = ParseMethod(ValueOr<std::string>(record, "method", "SRRA"));
    config.budgets = record.at("budgets").get<std::vector<int64_t>>();
    if (record.contains("seeds")) {
      config.seeds = record.at("seeds").get<std::vector<uint64_t>>();
    }
    LoopConfig& loop = config.loop;
    loop.k = ValueOr<int32_t>(record, "k", 0);
    loop.srra.epsilon = ValueOr<double>(record, "epsilon", loop.srra.epsilon);
    loop.srra.c2 = ValueOr<double>(record, "c2", loop.srra.c2);
    if (record.contains("q")) loop.srra.q_override = record.at("q").get<int64_t>();
    loop.srra.exhaustive = ValueOr<bool>(record, "exhaustive", false);
    loop.t_max = ValueOr<int32_t>(record, "t_max", loop.t_max);
    loop.improvement_floor =
        ValueOr<double>(record, "improvement_floor", loop.improvement_floor);
    loop.restarts = ValueOr<int32_t>(record, "restarts", loop.restarts);
    loop.brute_force = ValueOr<bool>(record, "brute_force", false);
    config.output_path = ValueOr<std::string>(record, "output", "");
  } catch (const json::exception& e) {
    throw InputError(std::string("bad experiment config: ") + e.what());
  }
  config.Validate();
  return config;
}

ExperimentConfig ExperimentConfig::FromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config '" + path + "'");
  json record;
  try {
    record = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("config '" + path + "': " + e.what());
  }
  return FromJson(record);
}

void ExperimentConfig::Validate() const {
  if (instance.has_value() == !graph_path.empty()) {
    throw InputError("config needs exactly one of instance or graph");
  }
  if (budgets.empty()) throw InputError("at least one budget required");
  for (size_t i = 0; i < budgets.size(); ++i) {
    if (budgets[i] < 0) throw InputError("budgets must be nonnegative");
    if (i > 0 && budgets[i] <= budgets[i - 1]) {
      throw InputError("budgets must be strictly increasing");
    }
  }
  if (seeds.empty()) throw InputError("at least one seed required");
  if (loop.k < 0) throw InputError("k must be positive");
  LoopConfig probe = loop;
  if (probe.k == 0) probe.k = 1;
  probe.Validate();
}

Clustering InitialClustering(int32_t n, int32_t k, uint64_t seed) {
  Rng rng(DeriveSeed(seed, kInitialStream));
  return RandomClustering(n, k, rng);
}

std::vector<ExperimentRow> RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  std::vector<ExperimentRow> rows;
  for (uint64_t seed : config.seeds) {
    const Problem problem = LoadProblem(config, seed);
    const int32_t n = problem.graph.n();
    LoopConfig loop = config.loop;
    if (loop.k == 0) loop.k = problem.k;
    loop.seed = seed;
    const Clustering initial = InitialClustering(n, loop.k, seed);

    for (int64_t budget : config.budgets) {
      loop.query_budget = budget;
      loop.estimator = EstimatorKind::kSrra;
      loop.uniform_pairs_per_round.clear();
      if (config.method == Method::kUniform) {
        PairOracle reference = PairOracle::ForGraph(problem.graph);
        const ExperimentTrace srra =
            RunRegretLoop(reference, loop, initial, &problem.graph);
        for (size_t t = 1; t < srra.rows.size(); ++t) {
          loop.uniform_pairs_per_round.push_back(
              std::max<int64_t>(1, srra.rows[t].round_pairs));
        }
        if (loop.uniform_pairs_per_round.empty()) {
          loop.uniform_pairs_per_round.push_back(1);
        }
        loop.estimator = EstimatorKind::kUniform;
      }

      PairOracle oracle = PairOracle::ForGraph(problem.graph);
      const ExperimentTrace trace =
          RunRegretLoop(oracle, loop, initial, &problem.graph);

      ExperimentRow row;
      row.method = config.method;
      row.budget = budget;
      row.seed = seed;
      row.iterations = trace.iterations();
      row.final_cost = *trace.rows.back().cost;
      row.distinct_queries = trace.rows.back().distinct_queries;
      row.ledger = oracle.distinct_queries();
      row.max_pairs = NumPairs(n);
      row.insufficient =
          trace.rows.size() < 2 || trace.rows[1].distinct_queries > budget;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string RowsToCsv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "method,budget,seed,iterations,final_cost,distinct_queries\n";
  for (const ExperimentRow& row : rows) {
    out << MethodName(row.method) << ',' << row.budget << ',' << row.seed
        << ',' << row.iterations << ',';
    if (row.insufficient) {
      out << "INSUFFICIENT";
    } else {
      out << row.final_cost;
    }
    out << ',' << row.distinct_queries << '\n';
  }
  return out.str();
}

}  // namespace activecc

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

#include "activecc/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "activecc/clustering.h"
#include "activecc/convergence_check.h"
#include "activecc/experiment.h"
#include "activecc/local_search.h"
#include "activecc/oracle.h"
#include "activecc/planted.h"
#include "activecc/random.h"
#include "activecc/rectangles.h"
#include "activecc/regret_loop.h"
#include "activecc/sample_set.h"
#include "activecc/smoothness.h"

namespace activecc::acceptance {
namespace {

// Reference instance for the estimator statistics.
const std::vector<int32_t> kReferenceSizes = {12, 8, 4};
constexpr double kReferenceNoise = 0.1;
constexpr uint64_t kReferenceSeed = 2024;

// Desk-scale instance for the loop-level criteria.
const std::vector<int32_t> kDeskSizes = {40, 15, 5};
constexpr double kDeskNoise = 0.05;

// Size-biased vs uniform comparison: q per round and the shared budget of
// distinct queries (about a third of the 1770 pairs).
constexpr int64_t kComparisonQ = 5;
constexpr int64_t kComparisonBudget = 600;

// Sample size for the convergence-bound runs.
constexpr int64_t kBoundCheckQ = 1000;
constexpr int32_t kSmoothnessTrials = 100;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CriterionResult Finish(std::string name, bool ok, std::string detail,
                       const Stopwatch& watch, double limit) {
  CriterionResult result;
  result.name = std::move(name);
  result.seconds = watch.Seconds();
  result.time_limit_seconds = limit;
  result.passed = ok && result.seconds < limit;
  result.detail = std::move(detail);
  if (ok && !result.passed) result.detail += " [over time limit]";
  return result;
}

FullGraph RandomGraph(int32_t n, double density, Rng& rng) {
  FullGraph graph(n);
  std::bernoulli_distribution coin(density);
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v) {
      if (coin(rng)) graph.AddEdge(u, v);
    }
  }
  return graph;
}

int32_t UniformInt(Rng& rng, int32_t lo, int32_t hi) {
  return std::uniform_int_distribution<int32_t>(lo, hi)(rng);
}

// Chooses a k x k contingency table with the pivot's cluster sizes as row
// sums whose pair disagreement equals the target, uniformly among all such
// tables, then deals shuffled members of each pivot cluster accordingly.
std::optional<Clustering> CandidateAtDistance(const Clustering& pivot,
                                              int64_t target, Rng& rng) {
  const int32_t k = pivot.k();
  const std::vector<int32_t> sizes = pivot.ClusterSizes();
  auto pairs = [](int64_t x) { return x * (x - 1) / 2; };
  int64_t pivot_pairs = 0;
  for (int32_t size : sizes) pivot_pairs += pairs(size);

  std::vector<std::vector<int32_t>> table(k, std::vector<int32_t>(k, 0));
  std::vector<std::vector<int32_t>> chosen;
  int64_t solutions = 0;
  std::vector<int32_t> column(k, 0);
  std::function<void(int32_t, int32_t, int32_t, int64_t)> fill =
      [&](int32_t row, int32_t col, int32_t left, int64_t within) {
        if (row == k) {
          int64_t column_pairs = 0;
          for (int32_t c : column) column_pairs += pairs(c);
          if (pivot_pairs + column_pairs - 2 * within != target) return;
          ++solutions;
          if (UniformIndex(rng, solutions) == 0) chosen = table;
          return;
        }
        if (col == k - 1) {
          table[row][col] = left;
          column[col] += left;
          const int32_t next_left = row + 1 < k ? sizes[row + 1] : 0;
          fill(row + 1, 0, next_left, within + pairs(left));
          column[col] -= left;
          return;
        }
        for (int32_t count = 0; count <= left; ++count) {
          table[row][col] = count;
          column[col] += count;
          fill(row, col + 1, left - count, within + pairs(count));
          column[col] -= count;
        }
      };
  fill(0, 0, sizes[0], 0);
  if (solutions == 0) return std::nullopt;

  std::vector<ClusterLabel> labels(pivot.n(), 0);
  for (ClusterLabel i = 0; i < k; ++i) {
    std::vector<ElementId> members = pivot.Members(i);
    std::shuffle(members.begin(), members.end(), rng);
    size_t next = 0;
    for (ClusterLabel j = 0; j < k; ++j) {
      for (int32_t c = 0; c < chosen[i][j]; ++c) labels[members[next++]] = j;
    }
  }
  return Clustering(std::move(labels), k);
}

double Median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid]
                           : 0.5 * (values[mid - 1] + values[mid]);
}

std::string Fmt(double value) {
  std::ostringstream out;
  out << std::setprecision(6) << value;
  return out.str();
}

// Optimal cost by exhaustive search over all labelings.
int64_t BruteForceOpt(const FullGraph& graph, int32_t k) {
  const Clustering reference = Clustering::SingleCluster(graph.n(), k);
  const PairRegretObjective regret =
      PairRegretObjective::Exact(reference, graph);
  const MinimizerResult best = BruteForceMin(regret);
  return Cost(best.clustering, graph);
}

}  // namespace

std::string FormatResult(const CriterionResult& result) {
  std::ostringstream out;
  out << (result.passed ? "PASS  " : "FAIL  ") << result.name << "  ("
      << std::fixed << std::setprecision(2) << result.seconds << " s / "
      << std::setprecision(0) << result.time_limit_seconds << " s)  "
      << result.detail;
  return out.str();
}

CriterionResult AcceptanceSuite::MetricAxioms() {
  Stopwatch watch;
  Rng rng(101);
  int64_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int32_t n = UniformInt(rng, 1, 12);
    const int32_t k = UniformInt(rng, 1, n);
    const Clustering a = RandomClustering(n, k, rng);
    const Clustering b = RandomClustering(n, k, rng);
    const Clustering c = RandomClustering(n, k, rng);
    const int64_t ab = ClusteringDistance(a, b);
    const int64_t ba = ClusteringDistance(b, a);
    const int64_t bc = ClusteringDistance(b, c);
    const int64_t ac = ClusteringDistance(a, c);
    if (ab != ba) ++violations;
    if ((ab == 0) != a.Equivalent(b)) ++violations;
    if (ClusteringDistance(a, a) != 0) ++violations;
    if (ac > ab + bc) ++violations;
  }
  return Finish("metric axioms (1000 triples, n <= 12)", violations == 0,
                std::to_string(violations) + " violations", watch, 5.0);
}

CriterionResult AcceptanceSuite::DecompositionIdentities() {
  Stopwatch watch;
  Rng rng(202);
  int exact = 0;
  const int kTrials = 500;
  for (int trial = 0; trial < kTrials; ++trial) {
    const int32_t n = UniformInt(rng, 2, 30);
    const int32_t k = UniformInt(rng, 1, 6);
    const Clustering pivot = RandomClustering(n, k, rng);
    const Clustering candidate = (trial % 2 == 0 && k > 1)
                                     ? RandomCandidate(pivot, rng)
                                     : RandomClustering(n, k, rng);
    const FullGraph graph =
        RandomGraph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
    const auto rectangles = DecomposeRectangles(pivot, candidate);
    const bool distance_ok =
        RectangleDistance(rectangles) == ClusteringDistance(pivot, candidate);
    const bool regret_ok =
        DecompositionRegret(rectangles, pivot, candidate, graph) ==
        Rational(ExactRegret(pivot, candidate, graph));
    if (distance_ok && regret_ok) ++exact;
  }
  return Finish("rectangle decomposition identities (500 pairs, n <= 30)",
                exact == kTrials,
                std::to_string(exact) + "/" + std::to_string(kTrials) +
                    " exact",
                watch, 10.0);
}

CriterionResult AcceptanceSuite::ExhaustiveExactness() {
  Stopwatch watch;
  Rng rng(303);
  int matches = 0;
  int total = 0;
  for (int instance = 0; instance < 20; ++instance) {
    const int32_t k = UniformInt(rng, 2, 4);
    std::vector<int32_t> sizes(k);
    for (auto& size : sizes) size = UniformInt(rng, 1, 30 / k);
    const PlantedInstance planted =
        GeneratePlanted(sizes, 0.1, DeriveSeed(303, instance));
    const int32_t n = planted.truth.n();
    if (n < 2) continue;
    PairOracle oracle = PairOracle::ForGraph(planted.graph);
    const Clustering pivot = RandomClustering(n, k, rng);
    const auto pivot_sizes = pivot.ClusterSizes();
    SrraParams params;
    params.exhaustive = true;
    params.q_override =
        std::max<int64_t>(1, *std::max_element(pivot_sizes.begin(),
                                               pivot_sizes.end()));
    const SampleSet samples =
        DrawSamples(pivot, oracle, params, DeriveSeed(304, instance));
    for (int c = 0; c < 20; ++c) {
      const Clustering candidate = RandomClustering(n, k, rng);
      ++total;
      if (EstimateRegret(samples, candidate) ==
          Rational(ExactRegret(pivot, candidate, planted.graph))) {
        ++matches;
      }
    }
    audits_.push_back({"exhaustive#" + std::to_string(instance),
                       oracle.distinct_queries(), oracle.distinct_queries(),
                       NumPairs(n)});
  }
  return Finish("exhaustive-mode exactness (20 instances x 20 candidates)",
                matches == total && total == 400,
                std::to_string(matches) + "/" + std::to_string(total) +
                    " exact",
                watch, 10.0);
}

CriterionResult AcceptanceSuite::Unbiasedness() {
  Stopwatch watch;
  const PlantedInstance planted =
      GeneratePlanted(kReferenceSizes, kReferenceNoise, kReferenceSeed);
  Rng rng(404);
  Clustering pivot = planted.truth;
  std::optional<Clustering> found;
  while (!found) {
    pivot = RandomClustering(planted.truth.n(), planted.truth.k(), rng);
    found = CandidateAtDistance(pivot, 40, rng);
  }
  const Clustering candidate = *found;
  const double exact =
      static_cast<double>(ExactRegret(pivot, candidate, planted.graph));

  PairOracle oracle = PairOracle::ForGraph(planted.graph);
  SrraParams params;
  params.q_override = 20;
  const int kDraws = 2000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int draw = 0; draw < kDraws; ++draw) {
    const SampleSet samples =
        DrawSamples(pivot, oracle, params, DeriveSeed(405, draw));
    const double value = EstimateRegret(samples, candidate).ToDouble();
    sum += value;
    sum_sq += value * value;
  }
  const double mean = sum / kDraws;
  const double variance = (sum_sq - kDraws * mean * mean) / (kDraws - 1);
  const double standard_error = std::sqrt(std::max(0.0, variance) / kDraws);
  const double gap = std::abs(mean - exact);
  audits_.push_back({"unbiasedness", oracle.distinct_queries(),
                     oracle.distinct_queries(), NumPairs(pivot.n())});
  return Finish("unbiasedness (n=24, q=20, 2000 draws)",
                gap <= 3.0 * standard_error,
                "f=" + Fmt(exact) + " mean=" + Fmt(mean) + " |gap|=" +
                    Fmt(gap) + " 3se=" + Fmt(3.0 * standard_error),
                watch, 60.0);
}

CriterionResult AcceptanceSuite::SmoothnessTrend() {
  Stopwatch watch;
  const PlantedInstance planted =
      GeneratePlanted(kReferenceSizes, kReferenceNoise, kReferenceSeed);
  std::vector<double> small_q;
  std::vector<double> large_q;
  for (int seed = 0; seed < 20; ++seed) {
    for (int64_t q : {int64_t{10}, int64_t{200}}) {
      PairOracle oracle = PairOracle::ForGraph(planted.graph);
      SrraParams params;
      params.q_override = q;
      const double epsilon = MeasureSmoothness(
          planted.truth, oracle, planted.graph, params, kSmoothnessTrials,
          DeriveSeed(505, seed));
      (q == 10 ? small_q : large_q).push_back(epsilon);
      audits_.push_back({"smoothness", oracle.distinct_queries(),
                         oracle.distinct_queries(), NumPairs(planted.truth.n())});
    }
  }
  const double small_median = Median(small_q);
  const double large_median = Median(large_q);
  return Finish("smoothness trend (median eps_emp, q=200 < q=10)",
                large_median < small_median,
                "median q=10: " + Fmt(small_median) +
                    ", q=200: " + Fmt(large_median),
                watch, 60.0);
}

CriterionResult AcceptanceSuite::ExactEstimatorLoop() {
  Stopwatch watch;
  int good = 0;
  int total = 0;
  for (int32_t k : {2, 3}) {
    const std::vector<int32_t> sizes =
        k == 2 ? std::vector<int32_t>{6, 4} : std::vector<int32_t>{4, 3, 3};
    for (double p : {0.0, 0.1}) {
      for (uint64_t seed = 0; seed < 20; ++seed) {
        const PlantedInstance planted = GeneratePlanted(sizes, p, 600 + seed);
        const int64_t opt = BruteForceOpt(planted.graph, k);
        LoopConfig config;
        config.k = k;
        config.srra.exhaustive = true;
        config.srra.q_override = 10;
        config.brute_force = true;
        config.t_max = 5;
        config.seed = seed;
        PairOracle oracle = PairOracle::ForGraph(planted.graph);
        const ExperimentTrace trace =
            RunRegretLoop(oracle, config, InitialClustering(10, k, seed),
                          &planted.graph);
        bool ok = trace.rows.size() >= 2;
        for (size_t t = 1; ok && t < trace.rows.size(); ++t) {
          ok = *trace.rows[t].cost == opt;
        }
        const auto bound =
            CheckConvergenceBound(trace, opt, 0.0, *trace.rows[0].cost);
        ok = ok && std::all_of(bound.begin(), bound.end(), [](bool b) { return b; });
        ++total;
        if (ok) ++good;
        audits_.push_back({"exact-loop", trace.rows.back().distinct_queries,
                           oracle.distinct_queries(), NumPairs(10)});
      }
    }
  }
  return Finish("exact-estimator loop reaches OPT at t=1 (n=10)",
                good == total,
                std::to_string(good) + "/" + std::to_string(total) + " runs",
                watch, 60.0);
}

CriterionResult AcceptanceSuite::ConvergenceBoundCheck() {
  Stopwatch watch;
  const std::vector<int32_t> sizes = {6, 4};
  const int kRuns = 100;
  int holds = 0;
  double worst_epsilon = 0.0;
  for (int run = 0; run < kRuns; ++run) {
    const uint64_t seed = 700 + static_cast<uint64_t>(run);
    const PlantedInstance planted = GeneratePlanted(sizes, 0.1, seed);
    const int64_t opt = BruteForceOpt(planted.graph, 2);
    LoopConfig config;
    config.k = 2;
    config.srra.q_override = kBoundCheckQ;
    config.brute_force = true;
    config.t_max = 5;
    config.seed = seed;
    const Clustering initial = InitialClustering(10, 2, seed);
    PairOracle oracle = PairOracle::ForGraph(planted.graph);
    RegretLoop loop(config, initial, &planted.graph);
    double epsilon_used = 0.0;
    loop.set_round_observer([&](int32_t t, const PairRegretObjective& estimate) {
      epsilon_used = std::max(
          epsilon_used, MeasureSmoothness(estimate, planted.graph,
                                          kSmoothnessTrials, DeriveSeed(seed, t)));
    });
    while (loop.PrepareRound(oracle)) loop.CompleteRound(oracle);
    const ExperimentTrace& trace = loop.trace();
    worst_epsilon = std::max(worst_epsilon, epsilon_used);
    audits_.push_back({"bound-check", trace.rows.back().distinct_queries,
                       oracle.distinct_queries(), NumPairs(10)});
    if (epsilon_used >= 0.2) continue;  // outside the bound's hypothesis
    const auto bound = CheckConvergenceBound(trace, opt, epsilon_used,
                                             *trace.rows[0].cost);
    if (std::all_of(bound.begin(), bound.end(), [](bool b) { return b; })) {
      ++holds;
    }
  }
  return Finish("convergence bound with measured eps (100 runs)",
                holds >= 95,
                std::to_string(holds) + "/" + std::to_string(kRuns) +
                    " runs hold, max eps_emp " + Fmt(worst_epsilon),
                watch, 300.0);
}

CriterionResult AcceptanceSuite::DeskScaleConvergence() {
  Stopwatch watch;
  int good = 0;
  std::ostringstream detail;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const PlantedInstance planted = GeneratePlanted(kDeskSizes, kDeskNoise, seed);
    LoopConfig config;
    config.k = 3;
    config.srra.q_override = 60;
    config.t_max = 5;
    config.seed = seed;
    PairOracle oracle = PairOracle::ForGraph(planted.graph);
    const ExperimentTrace trace = RunRegretLoop(
        oracle, config, InitialClustering(planted.truth.n(), 3, seed),
        &planted.graph);
    const int64_t truth_cost = Cost(planted.truth, planted.graph);
    const int64_t final_cost = *trace.rows.back().cost;
    if (static_cast<double>(final_cost) <= 1.2 * static_cast<double>(truth_cost)) {
      ++good;
    }
    detail << final_cost << "/" << truth_cost << " ";
    audits_.push_back({"desk-scale", trace.rows.back().distinct_queries,
                       oracle.distinct_queries(), NumPairs(planted.truth.n())});
  }
  return Finish("desk-scale convergence (40,15,5), q=60, T_max=5", good >= 8,
                std::to_string(good) + "/10 within 1.2x truth; final/truth: " +
                    detail.str(),
                watch, 60.0);
}

CriterionResult AcceptanceSuite::SizeBiasBeatsUniform() {
  Stopwatch watch;
  ExperimentConfig config;
  config.instance = InstanceSpec{kDeskSizes, kDeskNoise, std::nullopt};
  config.budgets = {kComparisonBudget};
  config.seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  config.loop.k = 3;
  config.loop.srra.q_override = kComparisonQ;
  config.loop.t_max = 50;

  config.method = Method::kSrra;
  const auto srra = RunExperiment(config);
  config.method = Method::kUniform;
  const auto uniform = RunExperiment(config);

  int wins = 0;
  std::ostringstream detail;
  for (size_t i = 0; i < srra.size(); ++i) {
    const bool comparable = !srra[i].insufficient && !uniform[i].insufficient;
    if (comparable && srra[i].final_cost <= uniform[i].final_cost) ++wins;
    detail << srra[i].final_cost << ":" << uniform[i].final_cost << " ";
  }
  for (const auto* rows : {&srra, &uniform}) {
    // Audit the CSV as emitted, not the in-memory rows.
    std::istringstream csv(RowsToCsv(*rows));
    std::string line;
    std::getline(csv, line);  // header
    for (const ExperimentRow& row : *rows) {
      std::getline(csv, line);
      const int64_t reported = std::stoll(line.substr(line.rfind(',') + 1));
      audits_.push_back({std::string("csv-") + MethodName(row.method),
                         reported, row.ledger, row.max_pairs});
    }
  }
  return Finish("size-biased beats uniform at equal budget (" +
                    std::to_string(kComparisonBudget) + " queries)",
                wins >= 7,
                std::to_string(wins) + "/10 seeds SRRA <= UNIFORM; srra:uniform " +
                    detail.str(),
                watch, 120.0);
}

CriterionResult AcceptanceSuite::QueryAccounting() {
  Stopwatch watch;
  int64_t bad = 0;
  std::string first_bad;
  for (const LedgerAudit& audit : audits_) {
    if (audit.reported != audit.ledger || audit.ledger > audit.max_pairs) {
      if (bad++ == 0) first_bad = audit.run;
    }
  }
  return Finish("query accounting (reported == ledger <= n(n-1)/2)",
                bad == 0 && !audits_.empty(),
                std::to_string(audits_.size()) + " runs audited, " +
                    std::to_string(bad) + " mismatches" +
                    (bad ? " (first: " + first_bad + ")" : ""),
                watch, 5.0);
}

std::vector<CriterionResult> AcceptanceSuite::RunAll() {
  return {MetricAxioms(),        DecompositionIdentities(),
          ExhaustiveExactness(), Unbiasedness(),
          SmoothnessTrend(),     ExactEstimatorLoop(),
          ConvergenceBoundCheck(), DeskScaleConvergence(),
          SizeBiasBeatsUniform(), QueryAccounting()};
}

}  // namespace activecc::acceptance

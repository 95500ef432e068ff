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

// Command-line front end: generate planted instances, run experiments, serve
// labeling sessions and run the acceptance suite.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "activecc/acceptance.h"
#include "activecc/errors.h"
#include "activecc/experiment.h"
#include "activecc/http_service.h"
#include "activecc/io.h"
#include "activecc/planted.h"
#include "activecc/session.h"

namespace {

int Generate(const std::vector<int32_t>& sizes, double p, uint64_t seed,
             const std::string& out_path, const std::string& truth_path) {
  const activecc::PlantedInstance instance =
      activecc::GeneratePlanted(sizes, p, seed);
  const int32_t k = static_cast<int32_t>(sizes.size());
  if (out_path.empty() || out_path == "-") {
    activecc::WriteGraphJsonl(instance.graph, k, std::cout);
  } else {
    activecc::WriteGraphJsonlFile(instance.graph, k, out_path);
  }
  if (!truth_path.empty()) {
    std::ofstream truth(truth_path);
    if (!truth) throw activecc::InputError("cannot write '" + truth_path + "'");
    activecc::WritePlantedSidecar(instance, truth);
  }
  return 0;
}

int Run(const std::string& config_path, const std::string& out_override) {
  activecc::ExperimentConfig config =
      activecc::ExperimentConfig::FromJsonFile(config_path);
  if (!out_override.empty()) config.output_path = out_override;
  const std::string csv = activecc::RowsToCsv(activecc::RunExperiment(config));
  if (config.output_path.empty() || config.output_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(config.output_path);
    if (!out) {
      throw activecc::InputError("cannot write '" + config.output_path + "'");
    }
    out << csv;
  }
  return 0;
}

int Serve(const std::string& host, int port) {
  activecc::SessionManager sessions;
  activecc::HttpService service(sessions);
  const int bound = service.Bind(host, port);
  if (bound < 0) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return 1;
  }
  std::cerr << "serving labeling sessions on http://" << host << ":" << bound
            << "\n";
  return service.ListenAfterBind() ? 0 : 1;
}

int Check() {
  activecc::acceptance::AcceptanceSuite suite;
  bool all = true;
  for (const auto& result : suite.RunAll()) {
    std::cout << activecc::acceptance::FormatResult(result) << std::endl;
    all = all && result.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Active correlation clustering with size-biased pair sampling"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Write a planted instance as JSONL");
  std::vector<int32_t> sizes;
  double p = 0.0;
  uint64_t seed = 0;
  std::string out_path;
  std::string truth_path;
  generate->add_option("--sizes", sizes, "Cluster sizes")->required()->delimiter(',');
  generate->add_option("--p", p, "Pair flip probability in [0, 0.5)");
  generate->add_option("--seed", seed, "Generator seed");
  generate->add_option("--out", out_path, "Graph file (default stdout)");
  generate->add_option("--truth", truth_path, "Sidecar with truth labels, p and seed");

  auto* run = app.add_subcommand("run", "Run an experiment config, emit CSV");
  std::string config_path;
  std::string run_out;
  run->add_option("config", config_path, "Experiment config JSON")->required();
  run->add_option("--out", run_out, "CSV path (overrides the config)");

  auto* serve = app.add_subcommand("serve", "Serve the labeling-session API");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port (0 picks a free one)");

  app.add_subcommand("check", "Run the acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return Generate(sizes, p, seed, out_path, truth_path);
    if (run->parsed()) return Run(config_path, run_out);
    if (serve->parsed()) return Serve(host, port);
    return Check();
  } catch (const activecc::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

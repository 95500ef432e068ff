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

#include "activecc/io.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "activecc/errors.h"
#include "json.hpp"

namespace activecc {

using nlohmann::json;

void WriteGraphJsonl(const FullGraph& graph, int32_t k, std::ostream& out) {
  out << json{{"n", graph.n()}, {"k", k}}.dump() << '\n';
  for (const PairKey& edge : graph.Edges()) {
    out << json{{"u", edge.u}, {"v", edge.v}}.dump() << '\n';
  }
}

GraphFile ReadGraphJsonl(std::istream& in) {
  std::string line;
  int64_t line_number = 0;
  bool have_header = false;
  GraphFile result;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError("line " + std::to_string(line_number) + ": " +
                       e.what());
    }
    if (!record.is_object()) {
      throw InputError("line " + std::to_string(line_number) +
                       ": expected a JSON object");
    }
    if (!have_header) {
      if (!record.contains("n") || !record.contains("k")) {
        throw InputError("first record must be the {\"n\", \"k\"} header");
      }
      const int64_t n = record.at("n").get<int64_t>();
      const int64_t k = record.at("k").get<int64_t>();
      if (n < 0 || k < 1) throw InputError("invalid header values");
      result.graph = FullGraph(static_cast<int32_t>(n));
      result.k = static_cast<int32_t>(k);
      have_header = true;
      continue;
    }
    if (!record.contains("u") || !record.contains("v")) {
      throw InputError("line " + std::to_string(line_number) +
                       ": edge record needs u and v");
    }
    result.graph.AddEdge(record.at("u").get<ElementId>(),
                         record.at("v").get<ElementId>());
  }
  if (!have_header) throw InputError("graph file has no header record");
  return result;
}

GraphFile ReadGraphJsonlFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return ReadGraphJsonl(in);
}

void WriteGraphJsonlFile(const FullGraph& graph, int32_t k,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  WriteGraphJsonl(graph, k, out);
}

std::string ClusteringToJson(const Clustering& c) {
  return json{{"labels", c.labels()}}.dump();
}

Clustering ClusteringFromJson(const std::string& text, int32_t k) {
  json record;
  try {
    record = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(e.what());
  }
  if (!record.is_object() || !record.contains("labels")) {
    throw InputError("clustering record needs a labels array");
  }
  return Clustering(record.at("labels").get<std::vector<ClusterLabel>>(), k);
}

}  // namespace activecc

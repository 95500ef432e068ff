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

#include <sstream>

#include "activecc/errors.h"
#include "activecc/planted.h"
#include "gtest/gtest.h"

namespace activecc {
namespace {

TEST(GraphJsonlTest, WritesHeaderThenEdges) {
  FullGraph g(3);
  g.AddEdge(2, 0);
  std::ostringstream out;
  WriteGraphJsonl(g, 2, out);
  EXPECT_EQ(out.str(), "{\"k\":2,\"n\":3}\n{\"u\":0,\"v\":2}\n");
}

TEST(GraphJsonlTest, RoundTripsAPlantedGraph) {
  const PlantedInstance instance = GeneratePlanted({7, 5, 3}, 0.2, 9);
  std::stringstream buffer;
  WriteGraphJsonl(instance.graph, 3, buffer);
  const GraphFile file = ReadGraphJsonl(buffer);
  EXPECT_EQ(file.k, 3);
  EXPECT_EQ(file.graph, instance.graph);
}

TEST(GraphJsonlTest, RejectsMalformedInput) {
  std::istringstream no_header("{\"u\":0,\"v\":1}\n");
  EXPECT_THROW(ReadGraphJsonl(no_header), InputError);
  std::istringstream bad_json("{\"n\":3,\"k\":1}\n{oops\n");
  EXPECT_THROW(ReadGraphJsonl(bad_json), InputError);
  std::istringstream out_of_range("{\"n\":3,\"k\":1}\n{\"u\":0,\"v\":3}\n");
  EXPECT_THROW(ReadGraphJsonl(out_of_range), InputError);
  std::istringstream self_loop("{\"n\":3,\"k\":1}\n{\"u\":1,\"v\":1}\n");
  EXPECT_THROW(ReadGraphJsonl(self_loop), InputError);
  EXPECT_THROW(ReadGraphJsonlFile("/nonexistent/graph.jsonl"), InputError);
}

TEST(ClusteringJsonTest, RoundTrip) {
  const Clustering c({1, 0, 1, 2}, 3);
  EXPECT_EQ(ClusteringToJson(c), "{\"labels\":[1,0,1,2]}");
  EXPECT_EQ(ClusteringFromJson(ClusteringToJson(c), 3), c);
  EXPECT_THROW(ClusteringFromJson("{\"labels\":[0,3]}", 3), InputError);
  EXPECT_THROW(ClusteringFromJson("[]", 3), InputError);
}

}  // namespace
}  // namespace activecc

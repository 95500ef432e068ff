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

#ifndef ACTIVECC_IO_H_
#define ACTIVECC_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "activecc/clustering.h"

namespace activecc {

// A graph as stored on disk: the JSON Lines header {"n": .., "k": ..}
// followed by one {"u": .., "v": ..} record per edge.
struct GraphFile {
  FullGraph graph;
  int32_t k = 1;
};

void WriteGraphJsonl(const FullGraph& graph, int32_t k, std::ostream& out);
GraphFile ReadGraphJsonl(std::istream& in);
GraphFile ReadGraphJsonlFile(const std::string& path);
void WriteGraphJsonlFile(const FullGraph& graph, int32_t k,
                         const std::string& path);

// {"labels": [..]}; k is not part of the record and is supplied by the
// caller.
std::string ClusteringToJson(const Clustering& c);
Clustering ClusteringFromJson(const std::string& text, int32_t k);

}  // namespace activecc

#endif  // ACTIVECC_IO_H_

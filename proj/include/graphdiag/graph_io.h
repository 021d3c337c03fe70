// Copyright 2026 The graphdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHDIAG_GRAPH_IO_H
#define GRAPHDIAG_GRAPH_IO_H

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "graphdiag/graph.h"

namespace graphdiag {

/// Named families "chain:N", "ring:N", "star:N", "lattice:MxK",
/// "tree:p0,p1,..." (parent array, -1 marks the root), or a path to a JSON
/// document {"n": int, "edges": [[i, j], ...]}.
Graph parse_graph_spec(const std::string &spec);

/// Parses the JSON schema above from text.
Graph graph_from_json(const std::string &text);
std::string graph_to_json(const Graph &g);

/// 12 significant digits, "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double v);

/// Comment lines "# key=value" that prefix every CSV the tools emit.
void write_config_header(std::ostream &out, const std::vector<std::pair<std::string, std::string>> &config);

}  // namespace graphdiag

#endif

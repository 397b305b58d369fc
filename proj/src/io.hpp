// Copyright 2026 the pathhom authors
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

#pragma once

#include <iosfwd>
#include <string>

#include "chains.hpp"
#include "graph.hpp"
#include "persistence.hpp"

#include <json.hpp>

namespace pathhom {

using Json = nlohmann::ordered_json;

// Edge-list text format, one record per line: "u v" (edge), "u v w"
// (weighted edge, w parsed exactly from a decimal or num/den literal) or a
// single token declaring an isolated vertex.  '#' starts a comment.  Weights
// must be given for all edges or none.
Digraph read_edge_list(std::istream& in, const std::string& source_name);
Digraph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Digraph& g);

// Layers file: line i lists the members of layer i, whitespace-separated.
// Blank trailing lines are ignored; a '#' comment line does not count as a
// layer.
std::vector<std::vector<VertexId>> read_layers(std::istream& in, const Digraph& g,
                                               const std::string& source_name);
std::vector<std::vector<VertexId>> read_layers_file(const std::string& path, const Digraph& g);
std::string format_layers(const StratifiedDigraph& g);

Json chain_to_json(const Chain& c, const VertexTable& table);

// CSV with a "threshold,betti" header; the baseline row (when present) comes
// first.  Thresholds render exactly.
std::string curve_to_csv(const PersistenceCurve& curve);
Json curve_to_json(const PersistenceCurve& curve);

std::string read_file(const std::string& path);         // Error{Io}
void write_file(const std::string& path, const std::string& content);

}  // namespace pathhom

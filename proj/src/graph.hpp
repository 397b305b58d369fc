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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace pathhom {

using VertexId = int;
using EdgeKey = std::pair<VertexId, VertexId>;

// Immutable sorted name table.  A graph and everything derived from it
// (subgraphs, components, trims) share one table, so vertex ids and chains
// stay comparable across the whole derivation.
class VertexTable {
public:
  explicit VertexTable(std::vector<std::string> sorted_names) : names_(std::move(sorted_names)) {}
  std::size_t size() const { return names_.size(); }
  const std::string& name(VertexId v) const { return names_[static_cast<std::size_t>(v)]; }
  std::optional<VertexId> find(const std::string& name) const;

private:
  std::vector<std::string> names_;
};

using TableRef = std::shared_ptr<const VertexTable>;

// Finite digraph without self-loops or duplicate edges.  Vertices are ids
// into the shared table, kept ascending; edges kept in lexicographic order.
// Optionally every edge carries a rational weight (all or none).
class Digraph {
public:
  Digraph() = default;

  // Builds a fresh table from the given names unioned with all edge
  // endpoints; throws Error{SelfLoop} or Error{DuplicateEdge} on bad edges.
  static Digraph build(const std::vector<std::string>& vertex_names,
                       const std::vector<std::pair<std::string, std::string>>& edges,
                       const std::map<std::pair<std::string, std::string>, Rational>* weights = nullptr);

  // Derived graph over an existing table.  Vertex and edge vectors may be in
  // any order; they are sorted and checked.
  Digraph(TableRef table, std::vector<VertexId> vertices, std::vector<EdgeKey> edges,
          std::map<EdgeKey, Rational> weights = {});

  const TableRef& table() const { return table_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<EdgeKey>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  const std::vector<VertexId>& succ(VertexId v) const;  // ascending
  const std::vector<VertexId>& pred(VertexId v) const;  // ascending

  bool weighted() const { return !weights_.empty(); }
  const std::map<EdgeKey, Rational>& weights() const { return weights_; }
  const Rational& weight(VertexId u, VertexId v) const;

  const std::string& name(VertexId v) const { return table_->name(v); }

  // Subgraph induced on a vertex subset (same table; weights restricted).
  Digraph induced(const std::vector<VertexId>& keep) const;
  // Same vertices, restricted edge set.
  Digraph with_edges(const std::vector<EdgeKey>& keep) const;

private:
  TableRef table_;
  std::vector<VertexId> vertices_;
  std::vector<EdgeKey> edges_;
  std::map<EdgeKey, Rational> weights_;
  std::vector<std::vector<VertexId>> succ_, pred_;  // indexed by table id
  std::vector<bool> member_;                        // indexed by table id

  void finish();  // sorts, validates, builds adjacency
};

// Digraph with an ordered partition of the vertices into layers such that
// every edge runs from one layer to the next.  Layers may become empty in
// graphs derived by trimming or component restriction; validate() rejects
// empty layers on fresh input.
class StratifiedDigraph {
public:
  StratifiedDigraph() = default;

  // Full validation: layers partition the vertex set, none empty, every edge
  // steps one layer down.  Errors: NotAPartition, EdgeSkipsLayer.
  static StratifiedDigraph validate(Digraph g, std::vector<std::vector<VertexId>> layers);
  // Used by internal derivations whose layer structure is correct by
  // construction (empty layers allowed).
  static StratifiedDigraph unchecked(Digraph g, std::vector<std::vector<VertexId>> layers);

  const Digraph& graph() const { return graph_; }
  int depth() const { return static_cast<int>(layers_.size()) - 1; }
  const std::vector<std::vector<VertexId>>& layers() const { return layers_; }
  int layer_of(VertexId v) const;  // -1 if absent

  StratifiedDigraph induced(const std::vector<VertexId>& keep) const;
  StratifiedDigraph with_edges(const std::vector<EdgeKey>& keep) const;

private:
  Digraph graph_;
  std::vector<std::vector<VertexId>> layers_;
  std::vector<int> layer_of_;  // indexed by table id, -1 if absent

  void index_layers();
};

// Longest-path positions: top[v] = longest path ending at v, bottom[v] =
// longest path starting at v, both as edge counts; length = max over v.
// Vectors are indexed by table id with -1 for absent vertices.
struct LayerProfile {
  std::vector<int> top, bottom;
  int length = 0;
};

// Deterministic topological order, ties broken by vertex order.
// Throws Error{CycleDetected} on a directed cycle.
std::vector<VertexId> topological_order(const Digraph& g);

LayerProfile layer_profile(const Digraph& g);
int longest_path_length(const Digraph& g);

// Components ordered by smallest contained vertex.
std::vector<Digraph> weakly_connected_components(const Digraph& g);
// Same split with the layer lists restricted (restricted layers may be empty).
std::vector<StratifiedDigraph> weakly_connected_components(const StratifiedDigraph& g);

// Subgraph of all edges lying on some longest path, stratified by top level.
// Throws Error{DepthZero} when the graph has no edges on any path (length 0).
StratifiedDigraph extract_longest_subgraph(const Digraph& g);

// Stratifies by top level; throws Error{NotStratifiable} if some edge skips.
StratifiedDigraph infer_layers(const Digraph& g);

struct TrimResult {
  StratifiedDigraph graph;
  // Set when some layer came out empty, which forces a trivial top cycle
  // space.
  bool trivial_full_depth = false;
};

// Repeatedly deletes vertices that cannot lie on a full-depth cycle pair:
// outside the first layer with at most one predecessor, or outside the last
// layer with at most one successor.  Runs to a fixpoint.
TrimResult trim_removable(const StratifiedDigraph& g);

// Additionally deletes any vertex having at most one vertex of some other
// layer connected to it by a directed path, cascading with trim_removable
// until neither rule fires.
TrimResult trim_connected_count(const StratifiedDigraph& g);

}  // namespace pathhom

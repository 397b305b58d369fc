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

#include <utility>
#include <vector>

#include "graph.hpp"
#include "homology.hpp"
#include "matrix.hpp"

namespace pathhom {

// Layer-by-layer recursion over a stratified digraph.  Level p keeps, for
// every admitted vertex x of layer p, a basis A_x of the cycle-space
// coordinates compatible with x's predecessors, and a basis V of the joint
// null space of the stacked A blocks; the column count b_p is the dimension
// of the cycle space spanned by allowed p-paths ending in layer p.  The
// recursion stops early as soon as some b_p vanishes.

struct LayerState {
  int p = 0;
  std::vector<VertexId> k_plus;            // admitted vertices, ascending
  std::vector<RationalMatrix> a_matrices;  // one block per admitted vertex
  RationalMatrix v_matrix;                 // block rows follow k_plus order
  std::size_t b_p = 0;
};

// Dimension of the top cycle space (the full-depth Betti number; top
// boundaries vanish).  With track set, returns a basis of representative
// cycles built alongside the recursion.
HomologyResult full_depth(const StratifiedDigraph& g, bool track);

// (p, b_p) for every p up to the depth, zeros after the recursion stops.
std::vector<std::pair<int, long long>> betti_profile(const StratifiedDigraph& g);

// Runs the recursion keeping every per-layer state; diagnostic helper.
std::vector<LayerState> full_depth_trace(const StratifiedDigraph& g);

// Homology in the maximal dimension of a DAG: restrict to the longest-path
// subgraph, split into weakly connected components, trim each, and add up
// full_depth per component.  Edgeless graphs get |V| - 1 with a difference
// basis.  Throws Error{CycleDetected} on directed cycles.
HomologyResult maximal(const Digraph& g, bool track);

}  // namespace pathhom

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

#include "graph.hpp"
#include "homology.hpp"
#include "matrix.hpp"

namespace pathhom {

// Reduced path homology of an arbitrary digraph, computed degree by degree
// from boundary matrices over the allowed paths.  Works on any digraph,
// directed cycles included; cost grows quickly with the dimension.

struct GeneralOptions {
  // Refuse to enumerate an allowed-path level larger than this.
  long long dimension_guard = 2'000'000;
};

// Boundary of the degree-p allowed paths, split by row kind.  Column labels
// are the space-joined vertex names of the paths; d_star keeps only the
// disallowed face rows that actually occur, e keeps every allowed (p-1)-path
// row.  p must be >= 1.
struct BoundaryMatrix {
  RationalMatrix d_star;
  RationalMatrix e;
};
BoundaryMatrix boundary_matrix(const Digraph& g, int p, const GeneralOptions& opt = {});

// Basis of the degree-p chains with allowed boundary, as the kernel of the
// disallowed-row block.  Row labels are the allowed p-paths; chains are
// materialized when track is set.
struct OmegaBasis {
  int p = 0;
  RationalMatrix n;  // |allowed p-paths| x dim
  std::vector<Chain> chains;
};
OmegaBasis omega_basis(const Digraph& g, int p, bool track, const GeneralOptions& opt = {});

HomologyResult betti_general(const Digraph& g, int p, const GeneralOptions& opt = {});

// Full run of the pipeline up to degree pmax + 1, keeping the intermediate
// data for diagnostics and property checks: level dimensions m_q, kernel
// bases n_q and transported boundary matrices b_q, with b_0 the all-ones
// row.  The Betti number at degree q <= pmax is (m_q - rank b_q) -
// rank b_{q+1}, and consecutive b matrices multiply to zero.
struct GeneralTrace {
  std::vector<std::size_t> m;
  std::vector<RationalMatrix> n;
  std::vector<RationalMatrix> b;
};
GeneralTrace general_trace(const Digraph& g, int pmax, const GeneralOptions& opt = {});

// Structural cross-check: the dimension found by omega_basis at degree p
// must equal the sum over endpoint pairs (x, y) in layers i, i+p of the
// dimension of top cycles of the in-between subgraph.  The right-hand side
// is computed by the layered recursion, so this ties the two engines
// together on stratified input.
bool omega_structure_check(const StratifiedDigraph& g, int p, const GeneralOptions& opt = {});

}  // namespace pathhom

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

#include <optional>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace pathhom {

// Persistence of the full-depth Betti number over the decreasing filtration
// G_t = edges of weight strictly greater than t, evaluated at the distinct
// edge weights in increasing order.  The curve is non-increasing; once a
// value hits zero the larger thresholds are filled without recomputation.

struct PersistencePoint {
  Rational threshold;
  long long betti = 0;
};

struct PersistenceCurve {
  std::vector<PersistencePoint> points;          // thresholds ascending
  std::optional<PersistencePoint> baseline;      // below the minimum weight
};

// Sorted distinct edge weights.  Throws Error{MissingWeights} when the graph
// has edges but no weights.
std::vector<Rational> filtration_thresholds(const Digraph& g);

// Same vertices and layers, only the edges with weight > t.
StratifiedDigraph subgraph_above(const StratifiedDigraph& g, const Rational& t);

PersistenceCurve persistence_curve(const StratifiedDigraph& g, bool include_baseline);

}  // namespace pathhom

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

#include "persistence.hpp"

#include <algorithm>

#include "error.hpp"
#include "recursive.hpp"

namespace pathhom {

std::vector<Rational> filtration_thresholds(const Digraph& g) {
  if (g.edge_count() > 0 && !g.weighted())
    throw Error(Code::MissingWeights, "filtration needs edge weights");
  std::vector<Rational> out;
  for (const auto& [edge, w] : g.weights()) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StratifiedDigraph subgraph_above(const StratifiedDigraph& g, const Rational& t) {
  if (g.graph().edge_count() > 0 && !g.graph().weighted())
    throw Error(Code::MissingWeights, "filtration needs edge weights");
  std::vector<EdgeKey> keep;
  for (const auto& [edge, w] : g.graph().weights())
    if (w > t) keep.push_back(edge);
  return g.with_edges(keep);
}

PersistenceCurve persistence_curve(const StratifiedDigraph& g, bool include_baseline) {
  std::vector<Rational> thresholds = filtration_thresholds(g.graph());
  PersistenceCurve curve;
  if (include_baseline) {
    Rational below = thresholds.empty() ? Rational(-1) : thresholds.front() - 1;
    curve.baseline = PersistencePoint{below, full_depth(g, false).betti};
  }
  bool dead = false;
  for (const auto& t : thresholds) {
    long long betti = 0;
    if (!dead) {
      betti = full_depth(subgraph_above(g, t), false).betti;
      if (betti == 0) dead = true;  // the filtration only loses edges from here on
    }
    curve.points.push_back(PersistencePoint{t, betti});
  }
  return curve;
}

}  // namespace pathhom

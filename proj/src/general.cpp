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

#include "general.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"
#include "recursive.hpp"

namespace pathhom {

namespace {

std::string path_key(const Path& p, const VertexTable& t) {
  std::string key;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) key += ' ';
    key += t.name(p[i]);
  }
  return key;
}

std::vector<std::string> path_keys(const std::vector<Path>& paths, const VertexTable& t) {
  std::vector<std::string> keys;
  keys.reserve(paths.size());
  for (const auto& p : paths) keys.push_back(path_key(p, t));
  return keys;
}

bool no_repeated_step(const Path& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i - 1] == p[i]) return false;
  return true;
}

BoundaryMatrix boundary_blocks(const Digraph& g, const std::vector<Path>& lower,
                               const std::vector<Path>& upper) {
  const VertexTable& table = *g.table();
  std::map<Path, std::size_t> lower_index;
  for (std::size_t i = 0; i < lower.size(); ++i) lower_index.emplace(lower[i], i);

  BoundaryMatrix bm;
  bm.e = RationalMatrix(path_keys(lower, table), path_keys(upper, table));

  // Disallowed faces are collected sparsely and materialized afterwards in
  // lexicographic row order.
  std::map<Path, std::vector<std::pair<std::size_t, Rational>>> star;
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const Path& p = upper[j];
    Rational sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Path face;
      face.reserve(p.size() - 1);
      face.insert(face.end(), p.begin(), p.begin() + i);
      face.insert(face.end(), p.begin() + i + 1, p.end());
      if (no_repeated_step(face)) {
        auto it = lower_index.find(face);
        if (it != lower_index.end())
          bm.e.at(it->second, j) += sign;
        else
          star[face].emplace_back(j, sign);
      }
      sign = -sign;
    }
  }

  std::vector<std::string> star_labels;
  star_labels.reserve(star.size());
  for (const auto& [face, entries] : star) star_labels.push_back(path_key(face, table));
  bm.d_star = RationalMatrix(star_labels, bm.e.col_labels());
  std::size_t r = 0;
  for (const auto& [face, entries] : star) {
    for (const auto& [j, v] : entries) bm.d_star.at(r, j) += v;
    ++r;
  }
  return bm;
}

}  // namespace

BoundaryMatrix boundary_matrix(const Digraph& g, int p, const GeneralOptions& opt) {
  if (p < 1) throw Error(Code::Argument, "boundary matrix needs degree >= 1");
  auto levels = allowed_paths_up_to(g, p, opt.dimension_guard);
  std::vector<Path> empty;
  const std::vector<Path>& lower = levels.size() > static_cast<std::size_t>(p - 1)
                                       ? levels[static_cast<std::size_t>(p - 1)]
                                       : empty;
  const std::vector<Path>& upper =
      levels.size() > static_cast<std::size_t>(p) ? levels[static_cast<std::size_t>(p)] : empty;
  return boundary_blocks(g, lower, upper);
}

OmegaBasis omega_basis(const Digraph& g, int p, bool track, const GeneralOptions& opt) {
  if (p < 0) throw Error(Code::Argument, "omega basis needs degree >= 0");
  OmegaBasis out;
  out.p = p;
  auto levels = allowed_paths_up_to(g, p, opt.dimension_guard);
  if (levels.size() <= static_cast<std::size_t>(p)) {
    out.n = RationalMatrix();
    return out;
  }
  const auto& paths = levels[static_cast<std::size_t>(p)];
  if (p == 0) {
    out.n = RationalMatrix::identity(paths.size());
    out.n.set_row_labels(path_keys(paths, *g.table()));
  } else {
    BoundaryMatrix bm = boundary_blocks(g, levels[static_cast<std::size_t>(p - 1)], paths);
    out.n = null_space_basis(bm.d_star);
  }
  if (track) {
    for (std::size_t j = 0; j < out.n.cols(); ++j) {
      Chain c(p);
      for (std::size_t i = 0; i < paths.size(); ++i)
        if (out.n.at(i, j) != 0) c.add(paths[i], out.n.at(i, j));
      out.chains.push_back(std::move(c));
    }
  }
  return out;
}

GeneralTrace general_trace(const Digraph& g, int pmax, const GeneralOptions& opt) {
  if (pmax < 0) throw Error(Code::Argument, "trace needs degree >= 0");
  auto levels = allowed_paths_up_to(g, pmax + 1, opt.dimension_guard);

  GeneralTrace t;
  t.m.assign(static_cast<std::size_t>(pmax) + 2, 0);
  t.n.resize(static_cast<std::size_t>(pmax) + 2);
  t.b.resize(static_cast<std::size_t>(pmax) + 2);

  t.m[0] = g.vertex_count();
  t.n[0] = RationalMatrix::identity(t.m[0]);
  t.b[0] = RationalMatrix::ones_row(t.m[0]);

  for (int q = 1; q <= pmax + 1; ++q) {
    std::size_t qi = static_cast<std::size_t>(q);
    if (levels.size() <= qi || levels[qi].empty()) {
      // No allowed q-paths: the remaining levels stay zero.
      t.n[qi] = RationalMatrix();
      t.b[qi] = RationalMatrix(t.m[qi - 1], 0);
      t.m[qi] = 0;
      continue;
    }
    BoundaryMatrix bm = boundary_blocks(g, levels[qi - 1], levels[qi]);
    t.n[qi] = null_space_basis(bm.d_star);
    t.m[qi] = t.n[qi].cols();
    t.b[qi] = solve_all(t.n[qi - 1], bm.e * t.n[qi]);
  }
  return t;
}

HomologyResult betti_general(const Digraph& g, int p, const GeneralOptions& opt) {
  if (p < 0) throw Error(Code::Argument, "betti needs degree >= 0");
  HomologyResult res;
  res.dimension = p;
  res.algorithm = "general";
  if (g.vertex_count() == 0) return res;

  GeneralTrace t = general_trace(g, p, opt);
  std::size_t pi = static_cast<std::size_t>(p);
  std::size_t kernel = t.m[pi] - rank(t.b[pi]);
  res.betti = static_cast<long long>(kernel) - static_cast<long long>(rank(t.b[pi + 1]));
  return res;
}

bool omega_structure_check(const StratifiedDigraph& g, int p, const GeneralOptions& opt) {
  if (p < 1) throw Error(Code::Argument, "structure check needs degree >= 1");
  std::size_t lhs = omega_basis(g.graph(), p, false, opt).n.cols();

  long long rhs = 0;
  int depth = g.depth();
  for (int i = 0; i + p <= depth; ++i) {
    for (VertexId x : g.layers()[static_cast<std::size_t>(i)]) {
      for (VertexId y : g.layers()[static_cast<std::size_t>(i + p)]) {
        if (p == 1) {
          rhs += g.graph().has_edge(x, y) ? 1 : 0;
          continue;
        }
        // Vertices usable strictly between x and y, layered by distance
        // from x: heads must follow x, tails must precede y.
        std::vector<std::vector<VertexId>> between(static_cast<std::size_t>(p) - 1);
        for (int s = 1; s <= p - 1; ++s) {
          for (VertexId z : g.layers()[static_cast<std::size_t>(i + s)]) {
            if (s == 1 && !g.graph().has_edge(x, z)) continue;
            if (s == p - 1 && !g.graph().has_edge(z, y)) continue;
            between[static_cast<std::size_t>(s - 1)].push_back(z);
          }
        }
        std::vector<VertexId> keep;
        for (const auto& layer : between) keep.insert(keep.end(), layer.begin(), layer.end());
        StratifiedDigraph h =
            StratifiedDigraph::unchecked(g.graph().induced(keep), std::move(between));
        rhs += full_depth(h, false).betti;
      }
    }
  }
  return static_cast<long long>(lhs) == rhs;
}

}  // namespace pathhom

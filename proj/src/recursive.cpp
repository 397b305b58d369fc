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

#include "recursive.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace pathhom {

namespace {

struct Engine {
  const StratifiedDigraph& s;
  bool track;
  bool trace;

  std::vector<long long> profile;
  std::vector<Chain> basis;        // tracked cycles of the current level
  std::vector<LayerState> states;  // filled when tracing
  bool reached_top = false;

  explicit Engine(const StratifiedDigraph& g, bool track_, bool trace_)
      : s(g), track(track_), trace(trace_) {}

  void run() {
    int depth = s.depth();
    profile.assign(static_cast<std::size_t>(depth) + 1, 0);
    const auto& k0 = s.layers()[0];
    std::size_t n0 = k0.size();
    if (n0 <= 1) return;  // a single start vertex cannot carry a cycle

    // Level 0: scalar blocks, differences against the first vertex.
    std::vector<VertexId> kplus = k0;
    std::vector<std::size_t> heights(n0, 1);
    RationalMatrix v(n0, n0 - 1);
    for (std::size_t j = 0; j + 1 < n0; ++j) {
      v.at(0, j) = -1;
      v.at(j + 1, j) = 1;
    }
    std::size_t b = n0 - 1;
    profile[0] = static_cast<long long>(b);
    if (track) {
      basis.clear();
      for (std::size_t j = 1; j < n0; ++j) {
        Chain c(0);
        c.add({k0[j]}, 1);
        c.add({k0[0]}, -1);
        basis.push_back(std::move(c));
      }
    }
    if (trace) {
      LayerState st;
      st.p = 0;
      st.k_plus = kplus;
      st.a_matrices.assign(n0, RationalMatrix::identity(1));
      st.v_matrix = v;
      st.b_p = b;
      states.push_back(std::move(st));
    }
    if (depth == 0) {
      reached_top = true;
      return;
    }

    for (int p = 1; p <= depth; ++p) {
      std::vector<std::size_t> offsets(kplus.size() + 1, 0);
      for (std::size_t i = 0; i < kplus.size(); ++i) offsets[i + 1] = offsets[i] + heights[i];

      std::vector<VertexId> admitted;
      std::vector<RationalMatrix> amats;
      std::ptrdiff_t pivot = -1;  // first admitted block that is an identity
      for (VertexId x : s.layers()[static_cast<std::size_t>(p)]) {
        std::vector<bool> is_pred(kplus.size(), false);
        std::size_t pred_blocks = 0;
        for (std::size_t i = 0; i < kplus.size(); ++i)
          if (s.graph().has_edge(kplus[i], x)) {
            is_pred[i] = true;
            ++pred_blocks;
          }
        if (pred_blocks == 0) continue;
        if (pred_blocks == kplus.size()) {
          // Predecessors cover every admitted block: the constraint matrix
          // is empty and the compatible space is everything.
          if (pivot < 0) pivot = static_cast<std::ptrdiff_t>(admitted.size());
          admitted.push_back(x);
          amats.push_back(RationalMatrix::identity(b));
          continue;
        }
        std::vector<std::size_t> kept_rows;
        for (std::size_t i = 0; i < kplus.size(); ++i)
          if (!is_pred[i])
            for (std::size_t r = offsets[i]; r < offsets[i + 1]; ++r) kept_rows.push_back(r);
        RationalMatrix a = null_space_basis(v.take_rows(kept_rows));
        if (a.cols() == 0) continue;
        admitted.push_back(x);
        amats.push_back(std::move(a));
      }

      if (admitted.size() <= 1) return;  // stacked blocks have a trivial null space

      std::vector<std::size_t> ncols(amats.size());
      for (std::size_t i = 0; i < amats.size(); ++i) ncols[i] = amats[i].cols();
      std::vector<std::size_t> block_off(amats.size() + 1, 0);
      for (std::size_t i = 0; i < amats.size(); ++i) block_off[i + 1] = block_off[i] + ncols[i];
      std::size_t total = block_off.back();

      RationalMatrix vnext;
      if (pivot >= 0) {
        // One block is an identity, so the stacked null space is explicit:
        // free coordinates on the other blocks, the pivot block compensating.
        std::size_t pi = static_cast<std::size_t>(pivot);
        vnext = RationalMatrix(total, total - ncols[pi]);
        std::size_t col = 0;
        for (std::size_t i = 0; i < amats.size(); ++i) {
          if (i == pi) continue;
          for (std::size_t u = 0; u < ncols[i]; ++u, ++col) {
            vnext.at(block_off[i] + u, col) = 1;
            for (std::size_t r = 0; r < b; ++r) {
              const Rational& av = amats[i].at(r, u);
              if (av != 0) vnext.at(block_off[pi] + r, col) = -av;
            }
          }
        }
      } else {
        std::vector<const RationalMatrix*> blocks;
        blocks.reserve(amats.size());
        for (const auto& a : amats) blocks.push_back(&a);
        vnext = null_space_basis(hstack(blocks));
        if (vnext.cols() == 0) return;
      }

      std::size_t bnext = vnext.cols();
      profile[static_cast<std::size_t>(p)] = static_cast<long long>(bnext);

      if (track) {
        std::vector<Chain> next(bnext, Chain(p));
        for (std::size_t i = 0; i < amats.size(); ++i) {
          std::vector<std::size_t> rows(ncols[i]);
          std::iota(rows.begin(), rows.end(), block_off[i]);
          RationalMatrix m = amats[i] * vnext.take_rows(rows);
          for (std::size_t j = 0; j < bnext; ++j) {
            Chain part(p - 1);
            for (std::size_t k = 0; k < b; ++k) {
              const Rational& c = m.at(k, j);
              if (c != 0) part += c * basis[k];
            }
            next[j] += join_vertex(part, admitted[i]);
          }
        }
        basis = std::move(next);
      }
      if (trace) {
        LayerState st;
        st.p = p;
        st.k_plus = admitted;
        st.a_matrices = amats;
        st.v_matrix = vnext;
        st.b_p = bnext;
        states.push_back(std::move(st));
      }

      kplus = std::move(admitted);
      heights = std::move(ncols);
      v = std::move(vnext);
      b = bnext;
    }
    reached_top = true;
  }
};

}  // namespace

HomologyResult full_depth(const StratifiedDigraph& g, bool track) {
  Engine e(g, track, /*trace=*/false);
  e.run();
  HomologyResult res;
  res.dimension = g.depth();
  res.algorithm = "recursive";
  res.betti = e.reached_top ? e.profile.back() : 0;
  if (track) res.basis = e.reached_top ? std::move(e.basis) : std::vector<Chain>{};
  return res;
}

std::vector<std::pair<int, long long>> betti_profile(const StratifiedDigraph& g) {
  Engine e(g, /*track=*/false, /*trace=*/false);
  e.run();
  std::vector<std::pair<int, long long>> out;
  for (std::size_t p = 0; p < e.profile.size(); ++p)
    out.emplace_back(static_cast<int>(p), e.profile[p]);
  return out;
}

std::vector<LayerState> full_depth_trace(const StratifiedDigraph& g) {
  Engine e(g, /*track=*/false, /*trace=*/true);
  e.run();
  return e.states;
}

HomologyResult maximal(const Digraph& g, bool track) {
  int length = longest_path_length(g);  // throws on directed cycles
  HomologyResult res;
  res.dimension = length;
  res.algorithm = "recursive";
  if (track) res.basis.emplace();

  if (length == 0) {
    // Edgeless: reduced degree-0 homology, differences against the first
    // vertex.
    if (g.vertex_count() > 0) res.betti = static_cast<long long>(g.vertex_count()) - 1;
    if (track && g.vertex_count() > 0) {
      VertexId first = g.vertices().front();
      for (std::size_t i = 1; i < g.vertex_count(); ++i) {
        Chain c(0);
        c.add({g.vertices()[i]}, 1);
        c.add({first}, -1);
        res.basis->push_back(std::move(c));
      }
    }
    return res;
  }

  StratifiedDigraph star = extract_longest_subgraph(g);
  for (const auto& comp : weakly_connected_components(star)) {
    TrimResult trimmed = trim_removable(comp);
    if (trimmed.trivial_full_depth) continue;
    HomologyResult part = full_depth(trimmed.graph, track);
    res.betti += part.betti;
    if (track && part.basis)
      for (auto& c : *part.basis) res.basis->push_back(std::move(c));
  }
  return res;
}

}  // namespace pathhom

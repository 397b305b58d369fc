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

#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>

#include "error.hpp"

namespace pathhom {

namespace {

// Small fixed-width bitset over table ids.
struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
  void or_with(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
  std::size_t and_count(const Bits& o) const {
    std::size_t n = 0;
    for (std::size_t k = 0; k < w.size(); ++k)
      n += static_cast<std::size_t>(__builtin_popcountll(w[k] & o.w[k]));
    return n;
  }
};

}  // namespace

std::optional<VertexId> VertexTable::find(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

Digraph Digraph::build(const std::vector<std::string>& vertex_names,
                       const std::vector<std::pair<std::string, std::string>>& edges,
                       const std::map<std::pair<std::string, std::string>, Rational>* weights) {
  std::vector<std::string> names = vertex_names;
  for (const auto& [u, v] : edges) {
    names.push_back(u);
    names.push_back(v);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  auto table = std::make_shared<const VertexTable>(names);

  std::vector<VertexId> verts;
  verts.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) verts.push_back(static_cast<VertexId>(i));

  std::vector<EdgeKey> ids;
  ids.reserve(edges.size());
  for (const auto& [u, v] : edges) ids.emplace_back(*table->find(u), *table->find(v));

  std::map<EdgeKey, Rational> wt;
  if (weights)
    for (const auto& [key, val] : *weights) {
      auto u = table->find(key.first), v = table->find(key.second);
      if (!u || !v) throw Error(Code::Argument, "weight references an unknown vertex");
      wt.emplace(EdgeKey(*u, *v), val);
    }

  return Digraph(std::move(table), std::move(verts), std::move(ids), std::move(wt));
}

Digraph::Digraph(TableRef table, std::vector<VertexId> vertices, std::vector<EdgeKey> edges,
                 std::map<EdgeKey, Rational> weights)
    : table_(std::move(table)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      weights_(std::move(weights)) {
  finish();
}

void Digraph::finish() {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(edges_.begin(), edges_.end());

  member_.assign(table_->size(), false);
  for (VertexId v : vertices_) {
    if (v < 0 || static_cast<std::size_t>(v) >= table_->size())
      throw Error(Code::Argument, "vertex id outside table");
    member_[static_cast<std::size_t>(v)] = true;
  }

  succ_.assign(table_->size(), {});
  pred_.assign(table_->size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (u == v) throw Error(Code::SelfLoop, "self-loop at '" + table_->name(u) + "'");
    if (i > 0 && edges_[i - 1] == edges_[i])
      throw Error(Code::DuplicateEdge,
                  "duplicate edge " + table_->name(u) + " -> " + table_->name(v));
    if (!has_vertex(u) || !has_vertex(v)) throw Error(Code::Argument, "edge endpoint not a vertex");
    succ_[static_cast<std::size_t>(u)].push_back(v);
    pred_[static_cast<std::size_t>(v)].push_back(u);
  }

  if (!weights_.empty()) {
    if (weights_.size() != edges_.size())
      throw Error(Code::MissingWeights, "weights must cover every edge or none");
    for (const auto& [key, val] : weights_)
      if (!has_edge(key.first, key.second))
        throw Error(Code::Argument, "weight on a non-edge");
  }
}

bool Digraph::has_vertex(VertexId v) const {
  return v >= 0 && static_cast<std::size_t>(v) < member_.size() &&
         member_[static_cast<std::size_t>(v)];
}

bool Digraph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u)) return false;
  const auto& s = succ_[static_cast<std::size_t>(u)];
  return std::binary_search(s.begin(), s.end(), v);
}

const std::vector<VertexId>& Digraph::succ(VertexId v) const {
  return succ_[static_cast<std::size_t>(v)];
}

const std::vector<VertexId>& Digraph::pred(VertexId v) const {
  return pred_[static_cast<std::size_t>(v)];
}

const Rational& Digraph::weight(VertexId u, VertexId v) const {
  auto it = weights_.find({u, v});
  if (it == weights_.end())
    throw Error(Code::MissingWeights,
                "no weight for edge " + name(u) + " -> " + name(v));
  return it->second;
}

Digraph Digraph::induced(const std::vector<VertexId>& keep) const {
  std::vector<bool> in(table_->size(), false);
  std::vector<VertexId> verts;
  for (VertexId v : keep)
    if (has_vertex(v)) {
      in[static_cast<std::size_t>(v)] = true;
      verts.push_back(v);
    }
  std::vector<EdgeKey> edges;
  std::map<EdgeKey, Rational> wt;
  for (const auto& e : edges_)
    if (in[static_cast<std::size_t>(e.first)] && in[static_cast<std::size_t>(e.second)]) {
      edges.push_back(e);
      if (weighted()) wt.emplace(e, weights_.at(e));
    }
  return Digraph(table_, std::move(verts), std::move(edges), std::move(wt));
}

Digraph Digraph::with_edges(const std::vector<EdgeKey>& keep) const {
  std::vector<EdgeKey> edges;
  std::map<EdgeKey, Rational> wt;
  for (const auto& e : keep) {
    if (!has_edge(e.first, e.second)) throw Error(Code::Argument, "edge not in graph");
    edges.push_back(e);
    if (weighted()) wt.emplace(e, weights_.at(e));
  }
  return Digraph(table_, vertices_, std::move(edges), std::move(wt));
}

StratifiedDigraph StratifiedDigraph::validate(Digraph g, std::vector<std::vector<VertexId>> layers) {
  StratifiedDigraph s;
  s.graph_ = std::move(g);
  s.layers_ = std::move(layers);
  for (auto& layer : s.layers_) {
    if (layer.empty()) throw Error(Code::NotAPartition, "empty layer");
    std::sort(layer.begin(), layer.end());
    if (std::adjacent_find(layer.begin(), layer.end()) != layer.end())
      throw Error(Code::NotAPartition, "vertex repeated within a layer");
  }
  s.index_layers();
  std::size_t covered = 0;
  for (const auto& layer : s.layers_) covered += layer.size();
  if (covered != s.graph_.vertex_count())
    throw Error(Code::NotAPartition, "layers do not partition the vertex set");
  for (const auto& layer : s.layers_)
    for (VertexId v : layer)
      if (!s.graph_.has_vertex(v))
        throw Error(Code::NotAPartition, "layer member is not a graph vertex");
  for (const auto& [u, v] : s.graph_.edges())
    if (s.layer_of(v) != s.layer_of(u) + 1)
      throw Error(Code::EdgeSkipsLayer, "edge " + s.graph_.name(u) + " -> " + s.graph_.name(v) +
                                            " does not step one layer down");
  return s;
}

StratifiedDigraph StratifiedDigraph::unchecked(Digraph g, std::vector<std::vector<VertexId>> layers) {
  StratifiedDigraph s;
  s.graph_ = std::move(g);
  s.layers_ = std::move(layers);
  for (auto& layer : s.layers_) std::sort(layer.begin(), layer.end());
  s.index_layers();
  return s;
}

void StratifiedDigraph::index_layers() {
  layer_of_.assign(graph_.table() ? graph_.table()->size() : 0, -1);
  for (std::size_t i = 0; i < layers_.size(); ++i)
    for (VertexId v : layers_[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= layer_of_.size())
        throw Error(Code::NotAPartition, "layer member outside the vertex table");
      layer_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
}

int StratifiedDigraph::layer_of(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= layer_of_.size()) return -1;
  return layer_of_[static_cast<std::size_t>(v)];
}

StratifiedDigraph StratifiedDigraph::induced(const std::vector<VertexId>& keep) const {
  Digraph g = graph_.induced(keep);
  std::vector<std::vector<VertexId>> layers(layers_.size());
  for (std::size_t i = 0; i < layers_.size(); ++i)
    for (VertexId v : layers_[i])
      if (g.has_vertex(v)) layers[i].push_back(v);
  return unchecked(std::move(g), std::move(layers));
}

StratifiedDigraph StratifiedDigraph::with_edges(const std::vector<EdgeKey>& keep) const {
  return unchecked(graph_.with_edges(keep), layers_);
}

std::vector<VertexId> topological_order(const Digraph& g) {
  std::vector<std::size_t> indeg(g.table()->size(), 0);
  for (VertexId v : g.vertices()) indeg[static_cast<std::size_t>(v)] = g.pred(v).size();
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<VertexId>> ready;
  for (VertexId v : g.vertices())
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  std::vector<VertexId> order;
  order.reserve(g.vertex_count());
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId w : g.succ(v))
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  if (order.size() != g.vertex_count()) throw Error(Code::CycleDetected, "graph has a directed cycle");
  return order;
}

LayerProfile layer_profile(const Digraph& g) {
  std::vector<VertexId> order = topological_order(g);
  LayerProfile p;
  p.top.assign(g.table()->size(), -1);
  p.bottom.assign(g.table()->size(), -1);
  for (VertexId v : order) {
    int t = 0;
    for (VertexId u : g.pred(v)) t = std::max(t, p.top[static_cast<std::size_t>(u)] + 1);
    p.top[static_cast<std::size_t>(v)] = t;
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int b = 0;
    for (VertexId w : g.succ(*it)) b = std::max(b, p.bottom[static_cast<std::size_t>(w)] + 1);
    p.bottom[static_cast<std::size_t>(*it)] = b;
    p.length = std::max(p.length, p.top[static_cast<std::size_t>(*it)] + b);
  }
  return p;
}

int longest_path_length(const Digraph& g) { return layer_profile(g).length; }

namespace {

std::vector<std::vector<VertexId>> component_groups(const Digraph& g) {
  // Union-find over table ids restricted to present vertices.
  std::vector<VertexId> parent(g.table()->size());
  for (VertexId v : g.vertices()) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](VertexId v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    VertexId ru = find(u), rv = find(v);
    if (ru != rv) parent[static_cast<std::size_t>(std::max(ru, rv))] = std::min(ru, rv);
  }
  std::map<VertexId, std::vector<VertexId>> by_root;
  for (VertexId v : g.vertices()) by_root[find(v)].push_back(v);
  std::vector<std::vector<VertexId>> groups;
  groups.reserve(by_root.size());
  for (auto& [root, members] : by_root) groups.push_back(std::move(members));
  return groups;
}

}  // namespace

std::vector<Digraph> weakly_connected_components(const Digraph& g) {
  std::vector<Digraph> out;
  for (const auto& members : component_groups(g)) out.push_back(g.induced(members));
  return out;
}

std::vector<StratifiedDigraph> weakly_connected_components(const StratifiedDigraph& g) {
  std::vector<StratifiedDigraph> out;
  for (const auto& members : component_groups(g.graph())) out.push_back(g.induced(members));
  return out;
}

StratifiedDigraph extract_longest_subgraph(const Digraph& g) {
  LayerProfile prof = layer_profile(g);
  int l = prof.length;
  if (l == 0) throw Error(Code::DepthZero, "no edges lie on a path of positive length");

  std::vector<EdgeKey> star_edges;
  for (const auto& [u, v] : g.edges())
    if (prof.top[static_cast<std::size_t>(u)] + 1 + prof.bottom[static_cast<std::size_t>(v)] == l)
      star_edges.emplace_back(u, v);

  std::set<VertexId> star_verts;
  for (const auto& [u, v] : star_edges) {
    star_verts.insert(u);
    star_verts.insert(v);
  }
  Digraph sub = g.induced({star_verts.begin(), star_verts.end()}).with_edges(star_edges);

  std::vector<std::vector<VertexId>> layers(static_cast<std::size_t>(l) + 1);
  for (VertexId v : sub.vertices())
    layers[static_cast<std::size_t>(prof.top[static_cast<std::size_t>(v)])].push_back(v);
  return StratifiedDigraph::validate(std::move(sub), std::move(layers));
}

StratifiedDigraph infer_layers(const Digraph& g) {
  if (g.vertex_count() == 0)
    return StratifiedDigraph::unchecked(g, {std::vector<VertexId>{}});
  LayerProfile prof = layer_profile(g);
  for (const auto& [u, v] : g.edges())
    if (prof.top[static_cast<std::size_t>(v)] != prof.top[static_cast<std::size_t>(u)] + 1)
      throw Error(Code::NotStratifiable, "edge " + g.name(u) + " -> " + g.name(v) +
                                             " skips a layer under longest-path placement");
  std::vector<std::vector<VertexId>> layers(static_cast<std::size_t>(prof.length) + 1);
  for (VertexId v : g.vertices())
    layers[static_cast<std::size_t>(prof.top[static_cast<std::size_t>(v)])].push_back(v);
  return StratifiedDigraph::validate(g, std::move(layers));
}

namespace {

// One deletion pass of the degree rule; returns vertices to keep, or nullopt
// when nothing fires.
std::optional<std::vector<VertexId>> removable_pass(const StratifiedDigraph& s) {
  const Digraph& g = s.graph();
  int last = s.depth();
  std::vector<VertexId> keep;
  bool fired = false;
  for (VertexId v : g.vertices()) {
    int layer = s.layer_of(v);
    bool gone = (layer != 0 && g.pred(v).size() <= 1) || (layer != last && g.succ(v).size() <= 1);
    if (gone)
      fired = true;
    else
      keep.push_back(v);
  }
  if (!fired) return std::nullopt;
  return keep;
}

std::optional<std::vector<VertexId>> connected_count_pass(const StratifiedDigraph& s) {
  const Digraph& g = s.graph();
  std::size_t n = g.table()->size();
  std::vector<VertexId> order = topological_order(g);

  std::vector<Bits> down(n, Bits(n)), up(n, Bits(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    down[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(v));
    for (VertexId w : g.succ(v))
      down[static_cast<std::size_t>(v)].or_with(down[static_cast<std::size_t>(w)]);
  }
  for (VertexId v : order) {
    up[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(v));
    for (VertexId u : g.pred(v))
      up[static_cast<std::size_t>(v)].or_with(up[static_cast<std::size_t>(u)]);
  }

  std::vector<Bits> layer_mask(s.layers().size(), Bits(n));
  for (std::size_t i = 0; i < s.layers().size(); ++i)
    for (VertexId v : s.layers()[i]) layer_mask[i].set(static_cast<std::size_t>(v));

  std::vector<VertexId> keep;
  bool fired = false;
  for (VertexId v : g.vertices()) {
    int layer = s.layer_of(v);
    bool gone = false;
    for (std::size_t j = 0; j < s.layers().size() && !gone; ++j) {
      if (static_cast<int>(j) == layer) continue;
      const Bits& reach = static_cast<int>(j) < layer ? up[static_cast<std::size_t>(v)]
                                                      : down[static_cast<std::size_t>(v)];
      if (reach.and_count(layer_mask[j]) <= 1) gone = true;
    }
    if (gone)
      fired = true;
    else
      keep.push_back(v);
  }
  if (!fired) return std::nullopt;
  return keep;
}

}  // namespace

TrimResult trim_removable(const StratifiedDigraph& g) {
  StratifiedDigraph cur = g;
  while (auto keep = removable_pass(cur)) cur = cur.induced(*keep);
  TrimResult r;
  r.graph = std::move(cur);
  for (const auto& layer : r.graph.layers())
    if (layer.empty()) r.trivial_full_depth = true;
  return r;
}

TrimResult trim_connected_count(const StratifiedDigraph& g) {
  StratifiedDigraph cur = g;
  for (;;) {
    while (auto keep = removable_pass(cur)) cur = cur.induced(*keep);
    auto keep = connected_count_pass(cur);
    if (!keep) break;
    cur = cur.induced(*keep);
  }
  TrimResult r;
  r.graph = std::move(cur);
  for (const auto& layer : r.graph.layers())
    if (layer.empty()) r.trivial_full_depth = true;
  return r;
}

}  // namespace pathhom

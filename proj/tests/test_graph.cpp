#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "testutil.hpp"

using pathhom::Code;
using pathhom::Digraph;
using pathhom::EdgeKey;
using pathhom::Error;
using pathhom::extract_longest_subgraph;
using pathhom::infer_layers;
using pathhom::layer_profile;
using pathhom::LayerProfile;
using pathhom::longest_path_length;
using pathhom::Rational;
using pathhom::StratifiedDigraph;
using pathhom::topological_order;
using pathhom::trim_connected_count;
using pathhom::trim_removable;
using pathhom::VertexId;
using pathhom::weakly_connected_components;
using testutil::graph;
using testutil::layered;
using testutil::random_dag;
using testutil::Rng;
using testutil::vid;

namespace {

Code code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Code::Io;
}

bool same_graph(const Digraph& a, const Digraph& b) {
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

// Longest walk ending at v, by enumeration.
std::map<VertexId, int> reference_top(const Digraph& g) {
  std::map<VertexId, int> top;
  for (VertexId v : g.vertices()) top[v] = 0;
  for (int k = 1; k <= testutil::walk_longest(g); ++k)
    for (const auto& p : testutil::walk_paths(g, k)) top[p.back()] = std::max(top[p.back()], k);
  return top;
}

}  // namespace

TEST_CASE("build unions names with edge endpoints") {
  Digraph g = graph({{"b", "c"}}, {"a", "c"});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 1);
  CHECK(g.name(0) == "a");  // table sorted by name
  CHECK(g.name(2) == "c");
  CHECK(g.has_edge(vid(g, "b"), vid(g, "c")));
  CHECK_FALSE(g.has_edge(vid(g, "c"), vid(g, "b")));
  CHECK(g.succ(vid(g, "b")) == std::vector<VertexId>{vid(g, "c")});
  CHECK(g.pred(vid(g, "c")) == std::vector<VertexId>{vid(g, "b")});
  CHECK(g.succ(vid(g, "a")).empty());
}

TEST_CASE("build rejects malformed edges") {
  CHECK(code_of([] { graph({{"a", "a"}}); }) == Code::SelfLoop);
  CHECK(code_of([] { graph({{"a", "b"}, {"a", "b"}}); }) == Code::DuplicateEdge);
}

TEST_CASE("weights are all-or-none") {
  std::map<std::pair<std::string, std::string>, Rational> w;
  w[{"a", "b"}] = Rational(1, 2);
  CHECK(code_of([&] {
          Digraph::build({}, {{"a", "b"}, {"b", "c"}}, &w);
        }) == Code::MissingWeights);

  w[{"b", "c"}] = Rational(3, 4);
  Digraph g = Digraph::build({}, {{"a", "b"}, {"b", "c"}}, &w);
  CHECK(g.weighted());
  CHECK(g.weight(vid(g, "a"), vid(g, "b")) == Rational(1, 2));

  std::map<std::pair<std::string, std::string>, Rational> stray;
  stray[{"a", "b"}] = 1;
  stray[{"x", "y"}] = 1;  // not an edge, endpoints unknown
  CHECK(code_of([&] { Digraph::build({}, {{"a", "b"}}, &stray); }) == Code::Argument);
}

TEST_CASE("topological order is deterministic") {
  Digraph g = graph({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  auto order = topological_order(g);
  std::vector<VertexId> expect{vid(g, "a"), vid(g, "b"), vid(g, "c"), vid(g, "d")};
  CHECK(order == expect);

  Digraph h = graph({{"z", "a"}});
  CHECK(topological_order(h) == std::vector<VertexId>{vid(h, "z"), vid(h, "a")});

  Digraph c = graph({{"a", "b"}, {"b", "a"}});
  CHECK(code_of([&] { topological_order(c); }) == Code::CycleDetected);
}

TEST_CASE("layer profile matches walk enumeration") {
  Rng rng(301);
  for (int t = 0; t < 200; ++t) {
    Digraph g = random_dag(rng, 9);
    LayerProfile prof = layer_profile(g);
    CAPTURE(t);
    CHECK(prof.length == testutil::walk_longest(g));
    CHECK(longest_path_length(g) == prof.length);
    auto top = reference_top(g);
    for (VertexId v : g.vertices())
      CHECK(prof.top[static_cast<std::size_t>(v)] == top[v]);
    for (const auto& [u, v] : g.edges()) {
      CHECK(prof.top[static_cast<std::size_t>(v)] >= prof.top[static_cast<std::size_t>(u)] + 1);
      CHECK(prof.bottom[static_cast<std::size_t>(u)] >=
            prof.bottom[static_cast<std::size_t>(v)] + 1);
    }
  }
}

TEST_CASE("longest-path subgraph equals the union of maximal walks") {
  Rng rng(302);
  int nontrivial = 0;
  for (int t = 0; t < 200; ++t) {
    Digraph g = random_dag(rng);
    if (longest_path_length(g) == 0) continue;
    ++nontrivial;
    StratifiedDigraph s = extract_longest_subgraph(g);
    auto ref = testutil::longest_support(g);
    CAPTURE(t);
    CHECK(std::set<VertexId>(s.graph().vertices().begin(), s.graph().vertices().end()) ==
          ref.vertices);
    CHECK(std::set<EdgeKey>(s.graph().edges().begin(), s.graph().edges().end()) == ref.edges);
    CHECK(s.depth() == longest_path_length(g));
    for (const auto& layer : s.layers()) CHECK_FALSE(layer.empty());
    for (const auto& [u, v] : s.graph().edges())
      CHECK(s.layer_of(v) == s.layer_of(u) + 1);
  }
  CHECK(nontrivial > 150);

  Digraph edgeless = graph({}, {"a", "b"});
  CHECK(code_of([&] { extract_longest_subgraph(edgeless); }) == Code::DepthZero);
}

TEST_CASE("layer inference by longest-path placement") {
  Digraph chain = graph({{"a", "b"}, {"b", "c"}});
  StratifiedDigraph s = infer_layers(chain);
  CHECK(s.depth() == 2);
  CHECK(s.layers() == std::vector<std::vector<VertexId>>{
                          {vid(chain, "a")}, {vid(chain, "b")}, {vid(chain, "c")}});

  Digraph diamond = graph({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  StratifiedDigraph d = infer_layers(diamond);
  CHECK(d.depth() == 2);
  CHECK(d.layers()[1] == std::vector<VertexId>{vid(diamond, "b"), vid(diamond, "c")});

  Digraph isolated = graph({{"a", "b"}}, {"z"});
  StratifiedDigraph i = infer_layers(isolated);
  CHECK(i.depth() == 1);
  CHECK(i.layer_of(vid(isolated, "z")) == 0);

  Digraph chord = graph({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(code_of([&] { infer_layers(chord); }) == Code::NotStratifiable);

  CHECK(infer_layers(Digraph()).depth() == 0);  // single empty layer
}

TEST_CASE("layer validation") {
  Digraph g = graph({{"a", "b"}, {"b", "c"}});
  VertexId a = vid(g, "a"), b = vid(g, "b"), c = vid(g, "c");

  CHECK(StratifiedDigraph::validate(g, {{a}, {b}, {c}}).depth() == 2);

  // Missing vertex, duplicated vertex, empty layer, edge inside a layer.
  CHECK(code_of([&] { StratifiedDigraph::validate(g, {{a}, {b}}); }) == Code::NotAPartition);
  CHECK(code_of([&] {
          StratifiedDigraph::validate(g, {{a, a}, {b}, {c}});
        }) == Code::NotAPartition);
  CHECK(code_of([&] {
          StratifiedDigraph::validate(g, {{a}, {}, {b}, {c}});
        }) == Code::NotAPartition);
  CHECK(code_of([&] {
          StratifiedDigraph::validate(g, {{a, b}, {c}});
        }) == Code::EdgeSkipsLayer);
  CHECK(code_of([&] {
          StratifiedDigraph::validate(g, {{a}, {c}, {b}});
        }) == Code::EdgeSkipsLayer);
}

TEST_CASE("components agree with a breadth-first search") {
  Rng rng(303);
  for (int t = 0; t < 100; ++t) {
    Digraph g = random_dag(rng);
    auto comps = weakly_connected_components(g);
    auto ref = testutil::bfs_components(g);
    CAPTURE(t);
    REQUIRE(comps.size() == ref.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      CHECK(comps[i].vertices() == ref[i]);  // ordered by smallest member
      for (const auto& [u, v] : comps[i].edges()) CHECK(g.has_edge(u, v));
    }
    std::size_t edge_total = 0;
    for (const auto& c : comps) edge_total += c.edge_count();
    CHECK(edge_total == g.edge_count());
  }
}

TEST_CASE("component split keeps the layer lists") {
  Digraph g = graph({{"a", "b"}, {"c", "d"}});
  StratifiedDigraph s = layered(g, {{"a", "c"}, {"b", "d"}});
  auto comps = weakly_connected_components(s);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].depth() == 1);
  CHECK(comps[0].layers() == std::vector<std::vector<VertexId>>{{vid(g, "a")}, {vid(g, "b")}});
  CHECK(comps[1].layers() == std::vector<std::vector<VertexId>>{{vid(g, "c")}, {vid(g, "d")}});
}

TEST_CASE("trimming a bare chain empties it") {
  Digraph g = graph({{"a", "b"}, {"b", "c"}});
  StratifiedDigraph s = layered(g, {{"a"}, {"b"}, {"c"}});
  auto r = trim_removable(s);
  CHECK(r.trivial_full_depth);
  CHECK(r.graph.graph().vertex_count() == 0);
  auto r2 = trim_connected_count(s);
  CHECK(r2.trivial_full_depth);
}

TEST_CASE("trimming keeps complete layered graphs") {
  using pathhom::complete_layered;
  for (const auto& sizes : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 3, 2}}) {
    StratifiedDigraph s = complete_layered(sizes);
    auto r = trim_removable(s);
    CHECK_FALSE(r.trivial_full_depth);
    CHECK(same_graph(r.graph.graph(), s.graph()));
    auto r2 = trim_connected_count(s);
    CHECK_FALSE(r2.trivial_full_depth);
    CHECK(same_graph(r2.graph.graph(), s.graph()));
  }
}

TEST_CASE("trimming is idempotent") {
  Rng rng(304);
  for (int t = 0; t < 120; ++t) {
    StratifiedDigraph s = testutil::random_layered(rng);
    auto once = trim_removable(s);
    auto twice = trim_removable(once.graph);
    CAPTURE(t);
    CHECK(same_graph(once.graph.graph(), twice.graph.graph()));
    auto conn_once = trim_connected_count(s);
    auto conn_twice = trim_connected_count(conn_once.graph);
    CHECK(same_graph(conn_once.graph.graph(), conn_twice.graph.graph()));
  }
}

TEST_CASE("induced subgraphs and edge restriction") {
  Digraph g = graph({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  Digraph sub = g.induced({vid(g, "a"), vid(g, "b")});
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.edge_count() == 1);
  CHECK(sub.table() == g.table());  // shared table

  Digraph restricted = g.with_edges({{vid(g, "a"), vid(g, "c")}});
  CHECK(restricted.vertex_count() == 3);
  CHECK(restricted.edge_count() == 1);
}

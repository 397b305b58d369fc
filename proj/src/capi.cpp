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

#include "pathhom/pathhom.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>

#include "error.hpp"
#include "general.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "persistence.hpp"
#include "recursive.hpp"
#include "sample.hpp"

struct ph_graph {
  pathhom::Digraph g;
  std::optional<pathhom::StratifiedDigraph> layered;
};

struct ph_result {
  pathhom::HomologyResult r;
  pathhom::TableRef table;
};

struct ph_curve {
  pathhom::PersistenceCurve c;
};

namespace {

thread_local std::string t_last_error;

ph_status status_of(pathhom::Code code) {
  using pathhom::Code;
  switch (code) {
    case Code::Parse:
      return PH_ERR_PARSE;
    case Code::SelfLoop:
    case Code::DuplicateEdge:
    case Code::NotAPartition:
    case Code::EdgeSkipsLayer:
    case Code::CycleDetected:
    case Code::NotStratifiable:
    case Code::DepthZero:
    case Code::MissingWeights:
      return PH_ERR_VALIDATION;
    case Code::DimensionGuard:
      return PH_ERR_GUARD;
    case Code::Mismatch:
      return PH_ERR_MISMATCH;
    case Code::Io:
      return PH_ERR_IO;
    case Code::BadRho:
    case Code::Argument:
      return PH_ERR_ARGUMENT;
    default:
      return PH_ERROR;
  }
}

template <typename Fn>
ph_status guarded(Fn&& fn) {
  try {
    fn();
    return PH_OK;
  } catch (const pathhom::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PH_ERROR;
  } catch (...) {
    t_last_error = "unknown error";
    return PH_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ph_status arg_error(const char* msg) {
  t_last_error = msg;
  return PH_ERR_ARGUMENT;
}

// Layered view of the handle; fails when no layers were supplied or
// inferred.
const pathhom::StratifiedDigraph& layered_of(const ph_graph* g) {
  if (!g->layered)
    throw pathhom::Error(pathhom::Code::NotStratifiable,
                         "graph carries no layers; supply a layers file or infer them");
  return *g->layered;
}

ph_graph* wrap_layered(pathhom::StratifiedDigraph s) {
  auto* out = new ph_graph;
  out->g = s.graph();
  out->layered = std::move(s);
  return out;
}

}  // namespace

extern "C" {

const char* ph_version(void) { return "1.0.0"; }

const char* ph_last_error(void) { return t_last_error.c_str(); }

ph_status ph_graph_read(const char* edge_path, const char* layers_path, ph_graph** out) {
  if (!edge_path || !out) return arg_error("null argument");
  return guarded([&] {
    pathhom::Digraph g = pathhom::read_edge_list_file(edge_path);
    auto* h = new ph_graph;
    h->g = std::move(g);
    if (layers_path) {
      try {
        auto layers = pathhom::read_layers_file(layers_path, h->g);
        h->layered = pathhom::StratifiedDigraph::validate(h->g, std::move(layers));
      } catch (...) {
        delete h;
        throw;
      }
    }
    *out = h;
  });
}

ph_status ph_graph_from_strings(const char* edge_text, const char* layers_text, ph_graph** out) {
  if (!edge_text || !out) return arg_error("null argument");
  return guarded([&] {
    std::istringstream in(edge_text);
    pathhom::Digraph g = pathhom::read_edge_list(in, "<edges>");
    auto* h = new ph_graph;
    h->g = std::move(g);
    if (layers_text) {
      std::istringstream lin(layers_text);
      try {
        auto layers = pathhom::read_layers(lin, h->g, "<layers>");
        h->layered = pathhom::StratifiedDigraph::validate(h->g, std::move(layers));
      } catch (...) {
        delete h;
        throw;
      }
    }
    *out = h;
  });
}

ph_status ph_graph_infer_layers(ph_graph* g) {
  if (!g) return arg_error("null graph");
  return guarded([&] { g->layered = pathhom::infer_layers(g->g); });
}

void ph_graph_free(ph_graph* g) { delete g; }

size_t ph_graph_vertex_count(const ph_graph* g) { return g ? g->g.vertex_count() : 0; }

size_t ph_graph_edge_count(const ph_graph* g) { return g ? g->g.edge_count() : 0; }

int ph_graph_depth(const ph_graph* g) {
  return g && g->layered ? g->layered->depth() : -1;
}

int ph_graph_weighted(const ph_graph* g) { return g && g->g.weighted() ? 1 : 0; }

ph_status ph_graph_edge_list(const ph_graph* g, char** out) {
  if (!g || !out) return arg_error("null argument");
  return guarded([&] { *out = dup_string(pathhom::format_edge_list(g->g)); });
}

ph_status ph_graph_layers_text(const ph_graph* g, char** out) {
  if (!g || !out) return arg_error("null argument");
  return guarded([&] { *out = dup_string(pathhom::format_layers(layered_of(g))); });
}

ph_status ph_graph_longest_subgraph(const ph_graph* g, ph_graph** out) {
  if (!g || !out) return arg_error("null argument");
  return guarded([&] { *out = wrap_layered(pathhom::extract_longest_subgraph(g->g)); });
}

ph_status ph_graph_trim(const ph_graph* g, int connected_count, ph_graph** out, int* trivial) {
  if (!g || !out) return arg_error("null argument");
  return guarded([&] {
    pathhom::TrimResult r = connected_count ? pathhom::trim_connected_count(layered_of(g))
                                            : pathhom::trim_removable(layered_of(g));
    if (trivial) *trivial = r.trivial_full_depth ? 1 : 0;
    *out = wrap_layered(std::move(r.graph));
  });
}

ph_status ph_graph_components(const ph_graph* g, ph_graph*** out, size_t* count) {
  if (!g || !out || !count) return arg_error("null argument");
  return guarded([&] {
    std::vector<ph_graph*> handles;
    if (g->layered) {
      for (auto& comp : pathhom::weakly_connected_components(*g->layered))
        handles.push_back(wrap_layered(std::move(comp)));
    } else {
      for (auto& comp : pathhom::weakly_connected_components(g->g)) {
        auto* h = new ph_graph;
        h->g = std::move(comp);
        handles.push_back(h);
      }
    }
    auto** list = static_cast<ph_graph**>(std::malloc(sizeof(ph_graph*) * handles.size()));
    for (std::size_t i = 0; i < handles.size(); ++i) list[i] = handles[i];
    *out = list;
    *count = handles.size();
  });
}

void ph_graph_list_free(ph_graph** list, size_t count) {
  if (!list) return;
  for (size_t i = 0; i < count; ++i) delete list[i];
  std::free(list);
}

ph_status ph_sample_layered(const int* sizes, size_t n_sizes, const char* rho, uint64_t seed,
                            uint64_t index, int uniform_weights, ph_graph** out) {
  if (!sizes || n_sizes == 0 || !rho || !out) return arg_error("null argument");
  return guarded([&] {
    pathhom::SampleSpec spec;
    spec.sizes.assign(sizes, sizes + n_sizes);
    spec.rho = pathhom::parse_rational(rho);
    spec.seed = seed;
    spec.index = index;
    spec.uniform_weights = uniform_weights != 0;
    *out = wrap_layered(pathhom::sample_layered(spec));
  });
}

ph_status ph_betti_full_depth(const ph_graph* g, int track, ph_result** out) {
  if (!g || !out) return arg_error("null argument");
  return guarded([&] {
    auto* r = new ph_result;
    r->table = g->g.table();
    r->r = pathhom::full_depth(layered_of(g), track != 0);
    *out = r;
  });
}

ph_status ph_betti_maximal(const ph_graph* g, int track, ph_result** out) {
  if (!g || !out) return arg_error("null argument");
  return guarded([&] {
    auto* r = new ph_result;
    r->table = g->g.table();
    r->r = pathhom::maximal(g->g, track != 0);
    *out = r;
  });
}

ph_status ph_betti_general(const ph_graph* g, int dim, long long guard, ph_result** out) {
  if (!g || !out) return arg_error("null argument");
  if (dim < 0) return arg_error("dimension must be >= 0");
  return guarded([&] {
    pathhom::GeneralOptions opt;
    if (guard >= 0) opt.dimension_guard = guard;
    auto* r = new ph_result;
    r->table = g->g.table();
    r->r = pathhom::betti_general(g->g, dim, opt);
    *out = r;
  });
}

long long ph_result_betti(const ph_result* r) { return r ? r->r.betti : 0; }

int ph_result_dimension(const ph_result* r) { return r ? r->r.dimension : -1; }

const char* ph_result_algorithm(const ph_result* r) {
  return r ? r->r.algorithm.c_str() : "";
}

ph_status ph_result_basis_json(const ph_result* r, char** out) {
  if (!r || !out) return arg_error("null argument");
  if (!r->r.basis) return arg_error("result was not tracked");
  return guarded([&] {
    pathhom::Json arr = pathhom::Json::array();
    for (const auto& c : *r->r.basis) arr.push_back(pathhom::chain_to_json(c, *r->table));
    *out = dup_string(arr.dump());
  });
}

void ph_result_free(ph_result* r) { delete r; }

ph_status ph_persistence(const ph_graph* g, int include_baseline, ph_curve** out) {
  if (!g || !out) return arg_error("null argument");
  return guarded([&] {
    auto* c = new ph_curve;
    c->c = pathhom::persistence_curve(layered_of(g), include_baseline != 0);
    *out = c;
  });
}

size_t ph_curve_size(const ph_curve* c) { return c ? c->c.points.size() : 0; }

ph_status ph_curve_csv(const ph_curve* c, char** out) {
  if (!c || !out) return arg_error("null argument");
  return guarded([&] { *out = dup_string(pathhom::curve_to_csv(c->c)); });
}

ph_status ph_curve_json(const ph_curve* c, char** out) {
  if (!c || !out) return arg_error("null argument");
  return guarded([&] { *out = dup_string(pathhom::curve_to_json(c->c).dump(2) + "\n"); });
}

void ph_curve_free(ph_curve* c) { delete c; }

void ph_string_free(char* s) { std::free(s); }

}  // extern "C"

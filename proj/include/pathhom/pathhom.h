/*
 * Copyright 2026 the pathhom authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the pathhom shared library: exact path homology of layered
 * digraphs.  All functions return a ph_status; outputs are opaque handles or
 * malloc'd strings released with the matching free function.  On failure a
 * thread-local message is available from ph_last_error().
 */

#ifndef PATHHOM_H
#define PATHHOM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ph_status {
  PH_OK = 0,
  PH_ERROR = 1,          /* unexpected internal failure */
  PH_ERR_PARSE = 2,      /* malformed input text */
  PH_ERR_VALIDATION = 3, /* bad layer structure, cycles, missing weights... */
  PH_ERR_GUARD = 4,      /* refused: enumeration larger than the guard */
  PH_ERR_MISMATCH = 5,   /* reserved for engine comparison failures */
  PH_ERR_IO = 6,         /* unreadable or unwritable file */
  PH_ERR_ARGUMENT = 7    /* bad argument value */
} ph_status;

typedef struct ph_graph ph_graph;   /* digraph, optionally layered/weighted */
typedef struct ph_result ph_result; /* homology result */
typedef struct ph_curve ph_curve;   /* persistence curve */

const char* ph_version(void);
/* Message describing the most recent failure on this thread. */
const char* ph_last_error(void);

/* ---- graphs ------------------------------------------------------------ */

/* Reads an edge list ("u v", "u v weight", or a lone vertex token per line,
 * '#' comments).  layers_path is optional (NULL); when given, line i of the
 * file lists the members of layer i and the result is validated. */
ph_status ph_graph_read(const char* edge_path, const char* layers_path, ph_graph** out);
/* Same from in-memory text; layers_text may be NULL. */
ph_status ph_graph_from_strings(const char* edge_text, const char* layers_text, ph_graph** out);
/* Assigns layers by longest-path level; fails if some edge skips a level. */
ph_status ph_graph_infer_layers(ph_graph* g);
void ph_graph_free(ph_graph* g);

size_t ph_graph_vertex_count(const ph_graph* g);
size_t ph_graph_edge_count(const ph_graph* g);
/* Number of layers minus one, or -1 when the graph carries no layers. */
int ph_graph_depth(const ph_graph* g);
int ph_graph_weighted(const ph_graph* g);

/* Canonical text renderings; free with ph_string_free. */
ph_status ph_graph_edge_list(const ph_graph* g, char** out);
ph_status ph_graph_layers_text(const ph_graph* g, char** out);

/* ---- preprocessing ----------------------------------------------------- */

/* Subgraph of all edges on maximum-length paths, layered by position. */
ph_status ph_graph_longest_subgraph(const ph_graph* g, ph_graph** out);
/* Deletes vertices that cannot carry a top-dimension cycle; with
 * connected_count nonzero the stronger per-layer reachability-count rule is
 * cascaded in as well.  *trivial is set when a layer came out empty. */
ph_status ph_graph_trim(const ph_graph* g, int connected_count, ph_graph** out, int* trivial);
/* Weakly connected components, ordered by smallest vertex name. */
ph_status ph_graph_components(const ph_graph* g, ph_graph*** out, size_t* count);
void ph_graph_list_free(ph_graph** list, size_t count);

/* ---- sampling ---------------------------------------------------------- */

/* Random layered graph: the complete graph on the given layer sizes with a
 * ceil(rho * full) subset of each adjacent edge block, chosen by a
 * counter-based generator from (seed, index).  rho is parsed exactly
 * ("0.35", "1/3").  uniform_weights draws an exact six-digit weight in
 * (0, 1) per kept edge. */
ph_status ph_sample_layered(const int* sizes, size_t n_sizes, const char* rho, uint64_t seed,
                            uint64_t index, int uniform_weights, ph_graph** out);

/* ---- homology ---------------------------------------------------------- */

/* Betti number in the top layer dimension via the layered recursion; the
 * graph must carry layers.  track requests representative cycles. */
ph_status ph_betti_full_depth(const ph_graph* g, int track, ph_result** out);
/* Homology in the maximal dimension of a DAG (longest-path restriction). */
ph_status ph_betti_maximal(const ph_graph* g, int track, ph_result** out);
/* Degree-dim Betti number by the boundary-matrix algorithm; works on any
 * digraph.  guard < 0 keeps the default enumeration limit (2e6 paths). */
ph_status ph_betti_general(const ph_graph* g, int dim, long long guard, ph_result** out);

long long ph_result_betti(const ph_result* r);
int ph_result_dimension(const ph_result* r);
const char* ph_result_algorithm(const ph_result* r);
/* JSON array of tracked cycles; fails with PH_ERR_ARGUMENT when the result
 * was not tracked. */
ph_status ph_result_basis_json(const ph_result* r, char** out);
void ph_result_free(ph_result* r);

/* ---- persistence ------------------------------------------------------- */

/* Full-depth Betti numbers of the subgraphs with weight strictly above each
 * distinct edge weight, ascending; optionally with a baseline point below
 * the minimum weight.  Requires layers and weights. */
ph_status ph_persistence(const ph_graph* g, int include_baseline, ph_curve** out);
size_t ph_curve_size(const ph_curve* c);
ph_status ph_curve_csv(const ph_curve* c, char** out);
ph_status ph_curve_json(const ph_curve* c, char** out);
void ph_curve_free(ph_curve* c);

void ph_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PATHHOM_H */

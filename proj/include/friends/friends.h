/* Copyright 2026 The fsgraph developers
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
 * C interface to the friends-and-strangers toolkit. Every fallible
 * function returns FR_OK or an error code; fr_last_error() describes the
 * most recent failure on the calling thread. Graphs are opaque handles
 * owned by the caller via fr_graph_destroy. Strings returned through
 * char** out-parameters are heap-allocated and released with
 * fr_string_free. Bijections cross the boundary as int arrays of length
 * n, mapping position i to its label b[i].
 */

#ifndef FRIENDS_H
#define FRIENDS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  FR_OK = 0,
  FR_ERR_ARGUMENT = 1,  /* null handle or malformed boundary argument */
  FR_ERR_GRAPH = 2,     /* invalid graph construction or query */
  FR_ERR_CAP = 3,       /* exact analysis beyond the state-space cap */
  FR_ERR_SEQUENCE = 4,  /* swap sequence failed validation */
  FR_ERR_INVARIANT = 5, /* internal guarantee broken; indicates a bug */
  FR_ERR_INTERNAL = 6
};

typedef struct fr_graph fr_graph;

const char* fr_last_error(void);
void fr_string_free(char* s);

/* ---- graphs ---- */

int fr_graph_create(int n, fr_graph** out);
int fr_graph_clone(const fr_graph* g, fr_graph** out);
void fr_graph_destroy(fr_graph* g);
int fr_graph_add_edge(fr_graph* g, int a, int b);
int fr_graph_has_edge(const fr_graph* g, int a, int b, int* out);
int fr_graph_vertex_count(const fr_graph* g, int* out);
int fr_graph_edge_count(const fr_graph* g, int* out);
/* labels: one 0/1 part label per vertex; every edge must cross */
int fr_graph_declare_partition(fr_graph* g, const int* labels, int n);
int fr_graph_min_degree(const fr_graph* g, int* out);
int fr_graph_max_degree(const fr_graph* g, int* out);
int fr_graph_is_connected(const fr_graph* g, int* out);
int fr_graph_is_biconnected(const fr_graph* g, int* out);
int fr_graph_is_bipartite(const fr_graph* g, int* out);
/* girth; -1 when the graph has no cycle */
int fr_graph_girth(const fr_graph* g, int* out);

int fr_graph_complete(int n, fr_graph** out);
int fr_graph_complete_bipartite(int r, int s, fr_graph** out);
int fr_graph_star(int n, fr_graph** out);
int fr_graph_cycle(int n, fr_graph** out);
int fr_graph_path(int n, fr_graph** out);
int fr_graph_theta0(fr_graph** out);
int fr_graph_sample_gnp(int n, double p, uint64_t seed, fr_graph** out);
int fr_graph_sample_bipartite_gnp(int r, double p, uint64_t seed,
                                  fr_graph** out);

/* Edge-list text: header `n m` or `bipartite r m`, then one `u v` line
 * per edge; `#` starts a comment. */
int fr_graph_read_file(const char* path, fr_graph** out);
int fr_graph_write_file(const fr_graph* g, const char* path);
int fr_graph_parse(const char* text, fr_graph** out);
int fr_graph_render(const fr_graph* g, char** out);

/* ---- move-graph analysis ---- */

/* Exact component census of the bijection move graph. Any output
 * pointer may be NULL when that value is not needed; render receives
 * the `count K sizes s1*m1,...` summary line. */
int fr_components(const fr_graph* x, const fr_graph* y, int cap,
                  uint64_t* component_count, uint64_t* isolated_count,
                  uint64_t* total_states, char** render);
/* Backtracking search for a bijection with no legal move. budget 0 is
 * unlimited; *found tells whether witness (length n, may be NULL) was
 * filled; *exhaustive tells whether absence is a proof. */
int fr_find_isolated(const fr_graph* x, const fr_graph* y, uint64_t budget,
                     int* found, int* exhaustive, uint64_t* attempts,
                     int* witness);
int fr_is_isolated(const fr_graph* x, const fr_graph* y, const int* b, int n,
                   int* out);
/* BFS for a move sequence swapping the preimages of u and v; *found = 0
 * certifies there is none. seq may be NULL. */
int fr_exchangeable(const fr_graph* x, const fr_graph* y, const int* b, int n,
                    int u, int v, int cap, int* found, char** seq);
int fr_concordance_class(const fr_graph* x, const fr_graph* y, const int* b,
                         int n, int* out);
/* Replays a `u,v`-pair sequence from b; writes the end bijection into
 * final (length n). */
int fr_apply_sequence(const fr_graph* x, const fr_graph* y, const int* b,
                      int n, const char* seq, int* final_state);

/* ---- star-connectivity classification ---- */

/* status receives the classification token; detail (optional) a short
 * human-readable elaboration such as the articulation vertex. */
int fr_classify(const fr_graph* g, char** status, char** detail);

/* ---- constructions ---- */

int fr_build_lower_bound_pair(int n, fr_graph** x, fr_graph** y,
                              char** manifest);
/* sigma0 (length 2r) receives the isolated bijection when non-NULL. */
int fr_build_bipartite_lower_bound(int r, fr_graph** x, fr_graph** y,
                                   int* sigma0, char** manifest);
int fr_build_large_gadget(int m, fr_graph** g2, fr_graph** h2,
                          fr_graph** gstar, fr_graph** hstar,
                          char** manifest);
int fr_smallest_feasible_gadget_m(int* out);
/* index in 1..4 */
int fr_builtin_sequence(int index, char** seq);
/* Replays seq on n vertices from the identity, checks it nets the u,v
 * transposition, and returns the two minimal graphs it traces. */
int fr_derive_sequence_gadget(const char* seq, int n, int u, int v,
                              fr_graph** gmin, fr_graph** hmin);

/* ---- exchange strategies ---- */

/* Tries direct, common-neighbor, path-conjugation, the bipartite
 * minimum-degree routine, then BFS under cap. On success *found = 1 and
 * seq/strategy are filled; otherwise *found = 0 and reason says why. */
int fr_exchange_ladder(const fr_graph* x, const fr_graph* y, const int* b,
                       int n, int u, int v, int cap, int* found, char** seq,
                       char** strategy, char** reason);
int fr_bipartite_exchange(const fr_graph* x, const fr_graph* y, const int* b,
                          int n, int u, int v, char** seq);

/* ---- pattern embedding ---- */

/* sets: semicolon-separated comma lists, one list per pattern index,
 * e.g. "0,1;4,5;9". witness receives the chosen vertices as a comma
 * list when *found = 1. */
int fr_find_embedding(const fr_graph* g, const fr_graph* h, const fr_graph* x,
                      const fr_graph* y, const int* sigma, int n,
                      const char* sets, int* found, char** witness);

/* ---- experiments ---- */

/* mode: "gnp" or "bipartite". Writes CSV/SVG when paths are non-NULL;
 * csv_render (optional) receives the CSV text. */
int fr_run_sweep(const char* mode, int size, const double* pgrid, int np,
                 int trials, uint64_t seed, int cap, const char* csv_path,
                 const char* svg_path, char** csv_render);
int fr_hitting_times(int n, int trials, uint64_t seed, const char* csv_path,
                     char** csv_render);

#ifdef __cplusplus
}
#endif

#endif /* FRIENDS_H */

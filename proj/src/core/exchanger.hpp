// Copyright 2026 The fsgraph developers
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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fs_engine.hpp"
#include "graph.hpp"
#include "perm.hpp"

namespace fsg {

enum class ExchangeStrategy {
  direct,
  common_neighbor,
  path_conjugation,
  bipartite_min_degree,
  bfs_fallback,
};

std::string to_string(ExchangeStrategy s);

/**
 * A friendly-swap sequence from b whose replay ends at b composed with
 * the transposition of b^-1(u) and b^-1(v). Every producer revalidates
 * by replay before returning, so holders may trust the sequence.
 */
struct ExchangeResult {
  SwapSeq sequence;
  ExchangeStrategy strategy = ExchangeStrategy::direct;
  std::uint64_t search_nodes = 0;

  std::size_t moves() const { return sequence.size(); }
};

/**
 * Three-move exchange wu, wv, wu through the least Y-label w adjacent to
 * both u and v whose current position neighbors both swap positions in X.
 * Absent when no such w exists.
 */
std::optional<ExchangeResult> common_neighbor_exchange(const Graph& x,
                                                       const Graph& y,
                                                       const Perm& b, int u,
                                                       int v);

/**
 * Conjugated exchange templates built around a hub label w in
 * N_Y(u) cap N_Y(v) and a bridge label q in N_Y(w) whose position
 * neighbors both swap positions in X. A walk of hub moves carries the
 * bridge position next to the action, a short core performs the
 * exchange, and the walk is retraced. Two shapes are tried per (w,q):
 * a single path from w's position to the bridge position, then a pair
 * of paths running to each swap position. Path interiors stay inside
 * the positions of N_Y(w) minus {u,v}; the search takes ascending w,
 * then ascending q, shortest paths first. Requires the swap positions
 * adjacent in X; absent when no template closes.
 */
std::optional<ExchangeResult> path_conjugation_exchange(const Graph& x,
                                                        const Graph& y,
                                                        const Perm& b, int u,
                                                        int v);

/**
 * Deterministic exchange for bipartite X, Y on equal parts of size r with
 * min degree at least ceil((3r+2)/4), u and v in different parts of Y,
 * and the two swap positions adjacent in X.
 *
 * Builds the sequence constructively: orient so that v's side of X
 * carries at least r/2 labels from v's side of Y (otherwise run from the
 * swapped bijection and reverse), pick a hub label w next to u, sweep
 * preliminary swaps until the positions not co-adjacent to the swap pair
 * hold only labels from v's side and few stray labels remain, then fire
 * a fixed nine-move core through two fresh labels z1, z2 and retrace.
 *
 * Throws GraphError when a precondition fails and InvariantError if any
 * internally guaranteed choice is missing, which signals a bug rather
 * than a property of the input.
 */
ExchangeResult bipartite_min_degree_exchange(const Graph& x, const Graph& y,
                                             const Perm& b, int u, int v);

struct LadderOutcome {
  std::optional<ExchangeResult> result;
  /** Why nothing was produced; empty on success. */
  std::string reason;
};

/**
 * Tries strategies from cheap to exhaustive: a direct friendly swap, the
 * common-neighbor triple, path conjugation, the bipartite minimum-degree
 * routine when its preconditions hold, and finally bidirectional BFS
 * when n fits under cap. A BFS miss certifies non-exchangeability; a
 * skipped BFS leaves the question open and the reason says so.
 */
LadderOutcome exchange_ladder(const Graph& x, const Graph& y, const Perm& b,
                              int u, int v, int cap = kDefaultStateCap);

enum class DichotomyBranch {
  exchangeable,
  wilsonian_split,
  violation,
};

std::string to_string(DichotomyBranch b);

/** Branch (b) evidence: hub w, bridge q, and the two separated pieces. */
struct DichotomyWitness {
  int w = -1;
  int q = -1;
  /** Swap label whose position extends the bridge-side piece. */
  int side = -1;
  std::vector<int> comp1;  // G-vertices, ascending; contains the side position
  std::vector<int> comp2;  // G-vertices, ascending; contains w's position
};

struct DichotomyReport {
  DichotomyBranch branch = DichotomyBranch::violation;
  std::optional<SwapSeq> sequence;
  std::optional<DichotomyWitness> witness;
};

/**
 * Probes the structural dichotomy for dense pairs: with m <= 9 vertices,
 * both minimum degrees at least 9m/14 + 1, and the swap positions
 * adjacent in G, either u and v are exchangeable from t (checked by BFS)
 * or some hub w and bridge q split G restricted to the positions of
 * N_H[w] minus one swap label into two separated pieces; each piece,
 * with the bridge side extended by that swap position, induces a
 * connectivity-guaranteeing graph of size between 2m/7 and 3m/7.
 * Reports violation when neither branch holds. Throws CapError for
 * m > 9 and GraphError below the degree bound.
 */
DichotomyReport check_9_14_dichotomy(const Graph& g, const Graph& h,
                                     const Perm& t, int u, int v);

}  // namespace fsg

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
#include <utility>
#include <vector>

#include "graph.hpp"
#include "perm.hpp"

namespace fsg {

/**
 * The friends-and-strangers graph FS(X,Y) has one vertex per bijection
 * V(X) -> V(Y); bijections b and b' are adjacent when b' = b . (a c) for
 * an X-edge {a,c} whose images {b(a), b(c)} form a Y-edge. A move is
 * written as the Y-label pair {u,v}: it swaps the current preimages of
 * u and v, and is legal when that preimage pair is an X-edge and {u,v}
 * is a Y-edge.
 */

/** One move, as a pair of Y-labels. */
using Move = std::pair<int, int>;
using SwapSeq = std::vector<Move>;

std::string seq_to_string(const SwapSeq& seq);
/** Parses the seq_to_string format: space-separated `u,v` label pairs. */
SwapSeq seq_from_string(const std::string& text);

struct FriendlyMove {
  Edge x_edge;   // the swapped preimage pair
  Move y_move;   // the Y-label pair
  Perm result;
};

/** All FS-neighbors of b, in ascending X-edge order. */
std::vector<FriendlyMove> friendly_neighbors(const Graph& x, const Graph& y,
                                             const Perm& b);

bool is_isolated(const Graph& x, const Graph& y, const Perm& b);

inline constexpr int kDefaultStateCap = 12;
inline constexpr int kMaxStateCap = 13;

struct ComponentSummary {
  std::uint64_t component_count = 0;
  /** (size, multiplicity), ascending by size. */
  std::vector<std::pair<std::uint64_t, std::uint64_t>> size_multiset;
  std::uint64_t isolated_count = 0;
  std::uint64_t total_states = 0;

  /** Renders as `count K sizes s1*m1,s2*m2,...`. */
  std::string to_string() const;
};

/**
 * Exact component enumeration by flood fill over permutation ranks with a
 * flat visited bitset (n!/8 bytes). Throws CapError beyond the cap; the
 * cap itself may not exceed 13.
 */
ComponentSummary components(const Graph& x, const Graph& y,
                            int cap = kDefaultStateCap);

struct IsolatedSearch {
  std::optional<Perm> witness;
  /** True when the whole search tree was explored within budget. */
  bool exhaustive = false;
  std::uint64_t attempts = 0;
};

/**
 * Backtracking search for a bijection with no friendly swap at all.
 * X-vertices are placed in descending-degree order and images tried in
 * ascending index; a placement mapping an already-placed X-edge onto a
 * Y-edge is pruned. budget caps placement attempts; budget 0 = unlimited.
 * An empty result with exhaustive=false means "not found", not
 * "none exists".
 */
IsolatedSearch find_isolated_vertex(const Graph& x, const Graph& y,
                                    std::uint64_t budget = 10000000);

/**
 * Bidirectional BFS for a friendly-swap sequence taking b to
 * b . (b^-1(u) b^-1(v)). nullopt = certified not exchangeable.
 */
std::optional<SwapSeq> exchangeable(const Graph& x, const Graph& y,
                                    const Perm& b, int u, int v,
                                    int cap = kDefaultStateCap);

/**
 * Parity label in {0,1} for bijections between graphs with declared
 * partitions. Two bijections lie in one FS component only if their labels
 * agree: a friendly swap flips the permutation sign and simultaneously
 * changes |b(A_X) cap A_Y| by one exactly when the swapped Y-pair
 * straddles the Y-parts, keeping the combined label invariant.
 */
int concordance_class(const Graph& x, const Graph& y, const Perm& b);

struct SequenceResult {
  Perm final;
  std::vector<int> involved;  // Y-labels touched, ascending
};

/**
 * Replays a move sequence from b, validating every move. Throws
 * SequenceError with the offending position on the first illegal move.
 */
SequenceResult apply_sequence(const Graph& x, const Graph& y, const Perm& b,
                              const SwapSeq& seq);

}  // namespace fsg

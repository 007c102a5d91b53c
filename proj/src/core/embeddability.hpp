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
#include <vector>

#include "graph.hpp"
#include "perm.hpp"

namespace fsg {

/**
 * A pattern-embedding instance: patterns g (X-side constraints) and h
 * (Y-side constraints) share the index set [m]; candidate sets live in
 * V(y) and must be pairwise disjoint; sigma maps V(x) to V(y).
 */
struct EmbedInstance {
  Graph g;
  Graph h;
  Graph x;
  Graph y;
  Perm sigma;
  std::vector<std::vector<int>> sets;
};

/** chosen[i] is the picked element of sets[i]. */
struct EmbedWitness {
  std::vector<int> chosen;
};

/** Edge count of g plus edge count of h inside the index subset j. */
int beta(const Graph& g, const Graph& h, const std::vector<int>& j);

/**
 * Searches for per-index choices v_i in sets[i] such that every h-edge
 * {i,j} lands on a y-edge {v_i,v_j} and every g-edge lands on an x-edge
 * between sigma-preimages. Backtracking in ascending index order with
 * ascending candidate values, checking each placement against all
 * earlier ones, so the first witness is deterministic and an absent
 * result is exhaustive.
 */
std::optional<EmbedWitness> find_embedding(const EmbedInstance& inst);

struct SubsetReport {
  std::vector<int> subset;  // ascending indices
  int beta = 0;
  double lhs = 0.0;
  bool pass = true;
};

struct HypothesisReport {
  double threshold = 0.0;
  /** Every subset with at least one pattern edge, in mask order. */
  std::vector<SubsetReport> checked;
  std::vector<std::vector<int>> failing;
  bool all_pass = true;
};

/**
 * Evaluates p^beta(J) * prod_{j in J} q[j] >= 3 * 2^(m+1) * max(q) * ln N
 * over every index subset J spanning at least one pattern edge, where N
 * is n, or 2n when bipartite is set. Natural logarithm throughout. The
 * subset count is capped at m <= 20.
 */
HypothesisReport check_hypothesis_inequality(const Graph& g, const Graph& h,
                                             double p,
                                             const std::vector<int>& q, int n,
                                             bool bipartite);

/**
 * True when the candidate sets respect both bipartitions: sets indexed
 * by one h-part lie inside a single y-part with the other h-part's sets
 * in the opposite y-part, and the sigma-preimages split the same way
 * along the g-parts and x-parts. Which named part hosts which side is
 * free, so the answer is stable under renaming parts. All four graphs
 * must carry declared partitions.
 */
bool is_admissible(const std::vector<std::vector<int>>& sets,
                   const Perm& sigma, const Graph& g, const Graph& h,
                   const Graph& x, const Graph& y);

enum class MajorityCase { I, II, III, IV };

std::string to_string(MajorityCase c);

/**
 * Classifies (sigma, u, v) by two booleans: whether sigma sends the
 * X-neighborhoods of the two swap positions into the same y-part by
 * majority, and whether sigma-inverse sends the Y-neighborhoods of u, v
 * into the same x-part by majority. Exactly half counts as part 0.
 * same/same = I, same/different = II, different/same = III,
 * different/different = IV. Requires declared partitions, u and v in
 * different y-parts, and the swap positions adjacent in x.
 */
MajorityCase majority_map_case(const Graph& x, const Graph& y,
                               const Perm& sigma, int u, int v);

/**
 * Frequency over Monte Carlo trials with which the pattern pair embeds
 * into sampled (X,Y) with a uniform sigma and uniformly drawn disjoint
 * candidate sets of sizes q. Deterministic for a fixed seed; trials are
 * seeded independently so they could run in any order.
 */
double estimate_embeddability(const Graph& g, const Graph& h,
                              const RandomModel& model,
                              const std::vector<int>& q, int trials,
                              std::uint64_t seed);

}  // namespace fsg

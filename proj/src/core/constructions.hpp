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

#include <array>
#include <string>
#include <vector>

#include "fs_engine.hpp"
#include "graph.hpp"
#include "perm.hpp"

namespace fsg {

// A pair of same-vertex-set graphs whose vertices carry a named block
// structure. blocks[i] lists the vertices of block_names[i]; for the
// five-block family the blocks partition the shared vertex set, for the
// bipartite family the first four name X-side ranges and the last four the
// Y-side ranges.
struct BlockConstruction {
  Graph x;
  Graph y;
  std::vector<std::string> block_names;
  std::vector<std::vector<int>> blocks;
};

// Cross-block edge profile certifying that block-preserving bijections are
// closed under legal moves: no block-index pair may carry edges in both
// graphs.
struct BlockCertificate {
  std::vector<std::pair<int, int>> x_cross_pairs;
  std::vector<std::pair<int, int>> y_cross_pairs;
};

// Five-block pair on n >= 5 vertices. Blocks are consecutive index ranges,
// the first n mod 5 of size floor(n/5)+1. X joins blocks whose index
// difference is not +-2 mod 5, Y those not +-1 mod 5; both are complete
// inside blocks. Throws GraphError for n < 5.
BlockConstruction build_lower_bound_pair(int n);

// Recomputes the cross-block pairs of both graphs from their edges and
// checks disjointness. Requires c.blocks to partition the vertex set.
// Throws InvariantError if the sets intersect.
BlockCertificate certify_block_disconnected(const BlockConstruction& c);

struct BipartiteLowerBound {
  BlockConstruction blocks;
  Perm sigma0;  // isolated vertex of FS(x, y)
};

// Bipartite pair inside K_{r,r} with min{delta(x), delta(y)} exactly
// ceil((3r+1)/4) - 1 and a bijection sigma0 isolated in FS(x, y).
// Throws GraphError for r < 2.
BipartiteLowerBound build_bipartite_lower_bound(int r);

// Cycle-with-chords layout. Vertex ids are the m cycle positions; z holds
// the twelve anchor positions in clockwise order, w/xs/ys the special
// positions. g_2star is the cycle plus four chords, h_2star the star with
// center w. g_star and h_star extend them by two linked probe vertices m
// and m+1: in g_star the probes attach to z[2], z[10] and z[4], z[8]; in
// h_star they attach to all xs and all ys respectively.
struct GadgetLayout {
  int m = 0;
  int ell = 0;
  std::array<int, 12> z{};
  int w = -1;
  std::vector<int> xs;
  std::vector<int> ys;
  Graph g_2star{1};
  Graph h_2star{1};
  Graph g_star{1};
  Graph h_star{1};
};

struct GadgetCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GadgetReport {
  std::vector<GadgetCheck> checks;
  bool all_pass = false;
};

// Greedy deterministic layout for a given m; throws GraphError when the
// arithmetic placement cannot satisfy the constraints. A successful return
// has already passed verify_gadget_constraints.
GadgetLayout build_large_gadget(int m);

// Re-checks every layout constraint against the stored graphs and
// positions: anchor order and consecutive anchor edges, the two ell-1
// arcs, the even z[1]->z[3] arc, special-vertex separation (true graph
// distance, threshold m/(3*ell)), and girth >= m/6. Pure report, never
// throws.
GadgetReport verify_gadget_constraints(const GadgetLayout& layout);

// Smallest m accepted by build_large_gadget, by ascending scan.
int smallest_feasible_gadget_m();

// Minimal graphs supporting a swap sequence: h_min holds exactly the label
// pairs used, g_min exactly the position pairs crossed when the sequence
// is replayed from the identity.
struct DerivedGadget {
  Graph g_min;
  Graph h_min;
  std::optional<std::vector<int>> g_coloring;
  std::optional<std::vector<int>> h_coloring;
};

// Replays s from the identity on n vertices, collecting g_min/h_min, and
// verifies the net effect is exactly the transposition of u and v. Throws
// SequenceError when the net effect differs or labels are out of range.
DerivedGadget derive_gadget_from_sequence(const SwapSeq& s, int n, int u, int v);

// The four built-in 8-vertex exchange sequences (0-indexed labels); each
// nets the transposition (6 7) and has length 33, 27, 25 or 23.
std::array<SwapSeq, 4> builtin_bipartite_gadget_sequences();

}  // namespace fsg

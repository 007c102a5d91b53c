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

#include <array>

#include "constructions.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "fs_engine.hpp"
#include "graph.hpp"
#include "wilson.hpp"

using namespace fsg;

TEST_CASE("five-block pair structure") {
  BlockConstruction c = build_lower_bound_pair(5);
  CHECK(c.blocks.size() == 5);
  CHECK_NOTHROW(certify_block_disconnected(c));
  CHECK(components(c.x, c.y).to_string() == "count 20 sizes 1*10,11*10");

  BlockConstruction c6 = build_lower_bound_pair(6);
  CHECK(components(c6.x, c6.y).to_string() ==
        "count 6 sizes 2*2,76*1,212*2,216*1");

  BlockConstruction c20 = build_lower_bound_pair(20);
  CHECK(degree_stats(c20.x).min_degree == 11);
  CHECK(degree_stats(c20.y).min_degree == 11);
  CHECK_NOTHROW(certify_block_disconnected(c20));

  CHECK_THROWS_AS(build_lower_bound_pair(4), GraphError);
}

TEST_CASE("block certificate rejects a tampered pair") {
  BlockConstruction c = build_lower_bound_pair(10);
  // create a cross-block pair carrying edges in both graphs
  int a = c.blocks[0][0], b = c.blocks[1][0];
  if (!c.x.has_edge(a, b)) c.x.add_edge(a, b);
  if (!c.y.has_edge(a, b)) c.y.add_edge(a, b);
  CHECK_THROWS_AS(certify_block_disconnected(c), InvariantError);
}

TEST_CASE("bipartite four-block pair") {
  const std::array<int, 4> expected_min{1, 2, 3, 3};
  for (int r = 2; r <= 5; ++r) {
    BipartiteLowerBound built = build_bipartite_lower_bound(r);
    int want = expected_min[r - 2];
    CHECK(degree_stats(built.blocks.x).min_degree == want);
    // y's complemented crossings gain one degree when the block size is odd
    int ywant = want + ((r % 4 == 1 || r % 4 == 2) ? 1 : 0);
    CHECK(degree_stats(built.blocks.y).min_degree == ywant);
    CHECK(want == (3 * r + 1 + 3) / 4 - 1);  // ceil((3r+1)/4) - 1
    CHECK(is_isolated(built.blocks.x, built.blocks.y, built.sigma0));
  }
  CHECK(degree_stats(build_bipartite_lower_bound(8).blocks.x).min_degree == 6);
  CHECK(degree_stats(build_bipartite_lower_bound(8).blocks.y).min_degree == 6);

  CHECK(build_bipartite_lower_bound(4).sigma0 ==
        Perm{0, 1, 4, 5, 2, 3, 6, 7});
  CHECK(build_bipartite_lower_bound(5).sigma0 ==
        Perm{0, 1, 2, 5, 6, 3, 4, 7, 8, 9});

  auto sum = components(build_bipartite_lower_bound(4).blocks.x,
                        build_bipartite_lower_bound(4).blocks.y);
  CHECK(sum.to_string() == "count 189 sizes 1*144,328*36,744*6,7776*2,8352*1");
  CHECK(sum.isolated_count == 144);

  CHECK_THROWS_AS(build_bipartite_lower_bound(1), GraphError);
}

TEST_CASE("built-in sequences derive their minimal gadgets") {
  auto seqs = builtin_bipartite_gadget_sequences();
  const std::array<std::size_t, 4> lengths{33, 27, 25, 23};
  const std::array<int, 4> h_edges{7, 7, 7, 8};
  const Perm target{0, 1, 2, 3, 4, 5, 7, 6};
  for (int i = 0; i < 4; ++i) {
    CHECK(seqs[i].size() == lengths[i]);
    DerivedGadget d = derive_gadget_from_sequence(seqs[i], 8, 6, 7);
    CHECK(d.g_min.edge_count() == 11);
    CHECK(d.h_min.edge_count() == h_edges[i]);
    CHECK(is_bipartite(d.g_min));
    CHECK(is_bipartite(d.h_min));
    auto replay = apply_sequence(d.g_min, d.h_min, identity_perm(8), seqs[i]);
    CHECK(replay.final == target);
  }

  DerivedGadget first = derive_gadget_from_sequence(seqs[0], 8, 6, 7);
  CHECK(first.g_min.edges() ==
        std::vector<std::pair<int, int>>{{0, 5},
                                         {0, 7},
                                         {1, 4},
                                         {1, 7},
                                         {2, 4},
                                         {2, 5},
                                         {3, 4},
                                         {3, 5},
                                         {4, 6},
                                         {5, 6},
                                         {6, 7}});
  CHECK(first.h_min.edges() ==
        std::vector<std::pair<int, int>>{
            {0, 3}, {1, 3}, {2, 3}, {2, 7}, {3, 4}, {3, 5}, {3, 6}});
}

TEST_CASE("sequence derivation rejects a wrong net effect") {
  SwapSeq one{{0, 1}};
  CHECK_NOTHROW(derive_gadget_from_sequence(one, 3, 0, 1));
  CHECK_THROWS_AS(derive_gadget_from_sequence(one, 3, 0, 2), SequenceError);
  SwapSeq out{{0, 9}};
  CHECK_THROWS_AS(derive_gadget_from_sequence(out, 3, 0, 1), SequenceError);
}

TEST_CASE("large gadget layout at the smallest feasible size") {
  int m = smallest_feasible_gadget_m();
  CHECK(m == 691);
  GadgetLayout layout = build_large_gadget(m);
  CHECK(layout.ell == 13);
  CHECK(layout.w == 22);
  CHECK(layout.z == std::array<int, 12>{0, 116, 221, 232, 233, 234, 350, 466,
                                        571, 582, 583, 584});
  CHECK(layout.xs.size() == 13);
  CHECK(layout.ys.size() == 13);
  GadgetReport report = verify_gadget_constraints(layout);
  CHECK(report.all_pass);
  for (const auto& check : report.checks) CHECK(check.pass);
  CHECK(classify(layout.g_2star).status == WilsonStatus::wilsonian);

  CHECK_THROWS_AS(build_large_gadget(20), GraphError);
}

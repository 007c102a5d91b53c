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

#include "doctest.h"
#include "errors.hpp"
#include "exchanger.hpp"
#include "fs_engine.hpp"
#include "graph.hpp"
#include "rng.hpp"

using namespace fsg;

namespace {

void check_nets_swap(const Graph& x, const Graph& y, const Perm& b,
                     const SwapSeq& seq, int u, int v) {
  Perm expect = b;
  Perm inv = inverse(b);
  std::swap(expect[inv[u]], expect[inv[v]]);
  CHECK(apply_sequence(x, y, b, seq).final == expect);
}

// 4-vertex pair where only the conjugation route works
struct SmallPair {
  Graph x{4};
  Graph y{4};
  SmallPair() {
    x.add_edge(0, 1);
    x.add_edge(0, 3);
    x.add_edge(1, 3);
    x.add_edge(2, 3);
    y.add_edge(0, 2);
    y.add_edge(1, 2);
    y.add_edge(2, 3);
  }
};

}  // namespace

TEST_CASE("three-move exchange through a shared neighbor") {
  Graph k3 = make_complete(3);
  auto r = common_neighbor_exchange(k3, k3, identity_perm(3), 0, 1);
  REQUIRE(r.has_value());
  CHECK(seq_to_string(r->sequence) == "0,2 1,2 0,2");
  CHECK(r->strategy == ExchangeStrategy::common_neighbor);
  check_nets_swap(k3, k3, identity_perm(3), r->sequence, 0, 1);
}

TEST_CASE("conjugation route on the small pair") {
  SmallPair p;
  CHECK_FALSE(
      common_neighbor_exchange(p.x, p.y, identity_perm(4), 0, 1).has_value());
  auto r = path_conjugation_exchange(p.x, p.y, identity_perm(4), 0, 1);
  REQUIRE(r.has_value());
  CHECK(seq_to_string(r->sequence) == "2,3 0,2 1,2 0,2 2,3");
  check_nets_swap(p.x, p.y, identity_perm(4), r->sequence, 0, 1);

  auto ladder = exchange_ladder(p.x, p.y, identity_perm(4), 0, 1);
  REQUIRE(ladder.result.has_value());
  CHECK(ladder.result->strategy == ExchangeStrategy::path_conjugation);
  CHECK(to_string(ladder.result->strategy) == "path_conjugation");
}

TEST_CASE("adjacent labels exchange in one move") {
  Graph k33 = make_complete_bipartite(3, 3);
  auto r = bipartite_min_degree_exchange(k33, k33, identity_perm(6), 0, 3);
  CHECK(r.sequence == SwapSeq{{0, 3}});
  check_nets_swap(k33, k33, identity_perm(6), r.sequence, 0, 3);

  // at part size 4 the degree bound forces the complete pair, so the
  // direct move is the only reachable outcome
  Graph k44 = make_complete_bipartite(4, 4);
  auto r4 = bipartite_min_degree_exchange(k44, k44, identity_perm(8), 0, 4);
  CHECK(r4.sequence.size() == 1);
}

TEST_CASE("minimum-degree exchange on the first nontrivial part size") {
  Graph x = make_complete_bipartite(6, 6);
  Graph y = make_complete_bipartite(6, 6);
  for (int i = 0; i < 6; ++i) {
    x.remove_edge(i, 6 + (i + 1) % 6);
    y.remove_edge(i, i + 6);
  }
  CHECK(degree_stats(x).min_degree == 5);
  auto r = bipartite_min_degree_exchange(x, y, identity_perm(12), 0, 6);
  CHECK(seq_to_string(r.sequence) ==
        "1,9 5,7 3,6 4,8 3,8 0,8 4,8 3,8 3,6 4,6 4,8 5,7 1,9");
  check_nets_swap(x, y, identity_perm(12), r.sequence, 0, 6);
}

TEST_CASE("minimum-degree exchange from random starts stays valid") {
  for (int trial = 0; trial < 25; ++trial) {
    SplitMix64 gen = derive_stream(20260823, 62, trial);
    int r = 6 + static_cast<int>(gen.next() % 3);
    Graph x = make_complete_bipartite(r, r);
    Graph y = make_complete_bipartite(r, r);
    // drop one perfect matching from each side, keeping the degree bound
    for (int i = 0; i < r; ++i) {
      x.remove_edge(i, r + static_cast<int>((i + 1 + trial) % r));
      y.remove_edge(i, r + i);
    }
    Perm b = identity_perm(2 * r);
    for (int i = 2 * r - 1; i > 0; --i)
      std::swap(b[i], b[gen.next() % (i + 1)]);
    int u = static_cast<int>(gen.next() % r);
    int v = r + static_cast<int>(gen.next() % r);
    if (!x.has_edge(inverse(b)[u], inverse(b)[v])) continue;
    auto res = bipartite_min_degree_exchange(x, y, b, u, v);
    check_nets_swap(x, y, b, res.sequence, u, v);
  }
}

TEST_CASE("precondition failures are reported, not computed around") {
  Graph k33 = make_complete_bipartite(3, 3);
  CHECK_THROWS_AS(
      bipartite_min_degree_exchange(k33, k33, identity_perm(6), 0, 1),
      GraphError);  // same part
  Graph sparse = make_complete_bipartite(4, 4);
  for (int j = 5; j <= 7; ++j) sparse.remove_edge(0, j);
  CHECK_THROWS_AS(
      bipartite_min_degree_exchange(sparse, sparse, identity_perm(8), 0, 4),
      GraphError);  // min degree below the threshold
  CHECK_THROWS_AS(
      bipartite_min_degree_exchange(make_complete(4), make_complete(4),
                                    identity_perm(4), 0, 1),
      GraphError);  // no declared partitions
}

TEST_CASE("ladder reports absence with a reason") {
  Graph empty(2);
  auto no = exchange_ladder(make_complete(2), empty, identity_perm(2), 0, 1);
  CHECK_FALSE(no.result.has_value());
  CHECK(no.reason ==
        "not exchangeable: exhaustive state search found no sequence");

  Graph p14 = make_path(14);
  auto big = exchange_ladder(p14, p14, identity_perm(14), 0, 13);
  CHECK_FALSE(big.result.has_value());
  CHECK(big.reason ==
        "state space exceeds the cap and no constructive strategy applies");
}

TEST_CASE("ladder prefers the direct move") {
  Graph k4 = make_complete(4);
  auto r = exchange_ladder(k4, k4, identity_perm(4), 0, 1);
  REQUIRE(r.result.has_value());
  CHECK(r.result->strategy == ExchangeStrategy::direct);
  CHECK(r.result->sequence.size() == 1);
}

TEST_CASE("dense dichotomy lands in the exchangeable branch") {
  Graph k8 = make_complete(8);
  auto rep = check_9_14_dichotomy(k8, k8, identity_perm(8), 0, 1);
  CHECK(rep.branch == DichotomyBranch::exchangeable);
  REQUIRE(rep.sequence.has_value());
  check_nets_swap(k8, k8, identity_perm(8), *rep.sequence, 0, 1);

  CHECK_THROWS_AS(check_9_14_dichotomy(make_complete(10), make_complete(10),
                                       identity_perm(10), 0, 1),
                  CapError);
  CHECK_THROWS_AS(check_9_14_dichotomy(make_cycle(8), make_cycle(8),
                                       identity_perm(8), 0, 1),
                  GraphError);  // degree bound
}

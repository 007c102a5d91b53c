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

#include <map>

#include "doctest.h"
#include "errors.hpp"
#include "fs_engine.hpp"
#include "graph.hpp"

using namespace fsg;

TEST_CASE("state caps are pinned") {
  CHECK(kDefaultStateCap == 12);
  CHECK(kMaxStateCap == 13);
  CHECK_THROWS_AS(components(make_complete(5), make_complete(5), 4), CapError);
  CHECK_THROWS_AS(
      exchangeable(make_complete(4), make_complete(4), identity_perm(4), 0, 1, 3),
      CapError);
}

TEST_CASE("complete pair collapses to one component") {
  auto sum = components(make_complete(4), make_complete(4));
  CHECK(sum.component_count == 1);
  CHECK(sum.total_states == 24);
  CHECK(sum.isolated_count == 0);
  CHECK(sum.to_string() == "count 1 sizes 24*1");
}

TEST_CASE("bipartite square pair splits in two") {
  Graph k22 = make_complete_bipartite(2, 2);
  auto sum = components(k22, k22);
  CHECK(sum.component_count == 2);
  CHECK(sum.to_string() == "count 2 sizes 12*2");
}

TEST_CASE("star against the exceptional families") {
  auto theta = components(make_star(7), make_theta0());
  CHECK(theta.component_count == 6);
  CHECK(theta.to_string() == "count 6 sizes 840*6");

  auto c5 = components(make_star(5), make_cycle(5));
  CHECK(c5.to_string() == "count 6 sizes 20*6");

  auto c6 = components(make_star(6), make_cycle(6));
  CHECK(c6.to_string() == "count 24 sizes 30*24");
}

TEST_CASE("empty partner isolates every bijection") {
  Graph empty(4);
  auto sum = components(make_complete(4), empty);
  CHECK(sum.component_count == 24);
  CHECK(sum.isolated_count == 24);
  CHECK(sum.to_string() == "count 24 sizes 1*24");
  CHECK(is_isolated(make_complete(4), empty, identity_perm(4)));
  CHECK_FALSE(is_isolated(make_complete(4), make_complete(4), identity_perm(4)));
}

TEST_CASE("friendly moves on the complete pair") {
  auto moves = friendly_neighbors(make_complete(4), make_complete(4),
                                  identity_perm(4));
  CHECK(moves.size() == 6);
  for (const auto& m : moves) {
    CHECK(m.result != identity_perm(4));
    // each friendly move is an involution
    auto back = friendly_neighbors(make_complete(4), make_complete(4), m.result);
    bool returns = false;
    for (const auto& r : back)
      if (r.result == identity_perm(4)) returns = true;
    CHECK(returns);
  }
}

TEST_CASE("isolated-vertex search") {
  Graph empty(2);
  Graph k2 = make_complete(2);
  auto hit = find_isolated_vertex(k2, empty);
  REQUIRE(hit.witness.has_value());
  CHECK(is_isolated(k2, empty, *hit.witness));

  auto miss = find_isolated_vertex(make_complete(4), make_complete(4));
  CHECK_FALSE(miss.witness.has_value());
  CHECK(miss.exhaustive);
}

TEST_CASE("exchange search nets the target swap") {
  Graph k4 = make_complete(4);
  auto seq = exchangeable(k4, k4, identity_perm(4), 2, 3);
  REQUIRE(seq.has_value());
  auto replay = apply_sequence(k4, k4, identity_perm(4), *seq);
  CHECK(replay.final == Perm{0, 1, 3, 2});

  Graph empty(2);
  CHECK_FALSE(exchangeable(make_complete(2), empty, identity_perm(2), 0, 1)
                  .has_value());
}

TEST_CASE("concordance classes split the bipartite square pair evenly") {
  Graph k22 = make_complete_bipartite(2, 2);
  std::map<int, int> census;
  for (std::uint64_t r = 0; r < 24; ++r)
    ++census[concordance_class(k22, k22, perm_unrank(r, 4))];
  REQUIRE(census.size() == 2);
  for (const auto& [label, count] : census) CHECK(count == 12);
}

TEST_CASE("sequence replay validates every move") {
  Graph p3 = make_path(3);
  SwapSeq seq{{0, 1}, {0, 2}};
  try {
    apply_sequence(p3, p3, identity_perm(3), seq);
    FAIL("expected SequenceError");
  } catch (const SequenceError& e) {
    CHECK(e.position() == 1);
  }

  SwapSeq ok{{0, 1}};
  auto res = apply_sequence(p3, p3, identity_perm(3), ok);
  CHECK(res.final == Perm{1, 0, 2});
  CHECK(res.involved == std::vector<int>{0, 1});
}

TEST_CASE("move list text round trips") {
  SwapSeq seq{{0, 1}, {10, 3}};
  std::string text = seq_to_string(seq);
  CHECK(text == "0,1 10,3");
  CHECK(seq_from_string(text) == seq);
  CHECK(seq_from_string("").empty());
  CHECK_THROWS_AS(seq_from_string("0;1"), SequenceError);
  CHECK_THROWS_AS(seq_from_string("0,1 2"), SequenceError);
}

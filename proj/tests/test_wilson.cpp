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
#include "fs_engine.hpp"
#include "graph.hpp"
#include "wilson.hpp"

using namespace fsg;

TEST_CASE("status precedence is fixed") {
  CHECK(classify(make_path(4)).status == WilsonStatus::not_biconnected);
  // a 4-cycle is both a cycle and bipartite; cycle wins
  CHECK(classify(make_cycle(4)).status == WilsonStatus::cycle_exception);
  CHECK(classify(make_cycle(5)).status == WilsonStatus::cycle_exception);
  CHECK(classify(make_theta0()).status == WilsonStatus::theta0_exception);
  CHECK(classify(make_complete_bipartite(3, 3)).status ==
        WilsonStatus::bipartite_exception);
  CHECK(classify(make_complete(4)).status == WilsonStatus::wilsonian);
  // the triangle is a cycle but not an exceptional one; star pairs on it
  // stay connected, so it lands in the default class
  CHECK(classify(make_complete(3)).status == WilsonStatus::wilsonian);
}

TEST_CASE("verdict carries a usable witness") {
  auto cut = classify(make_path(4));
  REQUIRE(cut.articulation_vertex.has_value());
  int a = *cut.articulation_vertex;
  CHECK((a == 1 || a == 2));

  auto bip = classify(make_complete_bipartite(2, 3));
  REQUIRE(bip.two_coloring.has_value());
  const auto& col = *bip.two_coloring;
  CHECK(col[0] == col[1]);
  CHECK(col[0] != col[2]);

  auto theta = classify(make_theta0());
  REQUIRE(theta.theta0_map.has_value());
}

TEST_CASE("exceptional-graph isomorphism is label independent") {
  // relabel the adopted 7-vertex exceptional graph through a rotation
  Graph t0 = make_theta0();
  Perm relab{3, 4, 5, 0, 1, 2, 6};
  Graph moved(7);
  for (auto [a, b] : t0.edges()) moved.add_edge(relab[a], relab[b]);
  auto map = theta0_isomorphism(moved);
  REQUIRE(map.has_value());
  for (auto [a, b] : t0.edges()) CHECK(moved.has_edge((*map)[a], (*map)[b]));

  CHECK_FALSE(theta0_isomorphism(make_cycle(7)).has_value());
  CHECK_FALSE(theta0_isomorphism(make_complete(7)).has_value());
}

TEST_CASE("prediction matches the exact census on small stars") {
  CHECK(predict_star_components(make_complete(4)) == StarPrediction::connected);
  CHECK(predict_star_components(make_cycle(5)) ==
        StarPrediction::not_guaranteed);

  // wilsonian example on 5 vertices: wheel over a 4-cycle
  Graph wheel(5);
  for (int i = 0; i < 4; ++i) {
    wheel.add_edge(i, (i + 1) % 4);
    wheel.add_edge(i, 4);
  }
  CHECK(classify(wheel).status == WilsonStatus::wilsonian);
  CHECK(components(make_star(5), wheel).component_count == 1);
}

TEST_CASE("status names render as tokens") {
  CHECK(to_string(WilsonStatus::wilsonian) == "wilsonian");
  CHECK(to_string(WilsonStatus::not_biconnected) == "not_biconnected");
  CHECK(to_string(WilsonStatus::cycle_exception) == "cycle_exception");
  CHECK(to_string(WilsonStatus::theta0_exception) == "theta0_exception");
  CHECK(to_string(WilsonStatus::bipartite_exception) == "bipartite_exception");
}

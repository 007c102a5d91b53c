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

#include <sstream>

#include "doctest.h"
#include "errors.hpp"
#include "graph.hpp"

using namespace fsg;

TEST_CASE("edge bookkeeping") {
  Graph g(4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // duplicate is a no-op
  g.add_edge(2, 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(0) == 1);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 1);
  CHECK_FALSE(g.has_edge(0, 1));

  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 4), GraphError);
  CHECK_THROWS_AS(Graph(-1), GraphError);
}

TEST_CASE("neighbors and edges are sorted") {
  Graph g(5);
  g.add_edge(3, 1);
  g.add_edge(3, 0);
  g.add_edge(3, 4);
  CHECK(g.neighbors(3) == std::vector<int>{0, 1, 4});
  auto es = g.edges();
  REQUIRE(es.size() == 3);
  CHECK(es[0] == std::pair<int, int>{0, 3});
  CHECK(es[2] == std::pair<int, int>{3, 4});
}

TEST_CASE("partition declaration restricts edges") {
  Graph g(4);
  g.declare_partition({0, 0, 1, 1});
  CHECK(g.has_partition());
  CHECK(g.part(0) == 0);
  CHECK(g.part(3) == 1);
  CHECK(g.part_vertices(0) == std::vector<int>{0, 1});
  g.add_edge(0, 2);
  CHECK_THROWS_AS(g.add_edge(0, 1), GraphError);

  Graph h(3);
  h.add_edge(0, 1);
  // declaring a partition that an existing edge violates must fail
  CHECK_THROWS_AS(h.declare_partition({0, 0, 1}), GraphError);
  CHECK_THROWS_AS(h.part(0), GraphError);
}

TEST_CASE("standard families") {
  Graph k5 = make_complete(5);
  CHECK(k5.edge_count() == 10);
  CHECK(degree_stats(k5).min_degree == 4);

  Graph kb = make_complete_bipartite(2, 3);
  CHECK(kb.vertex_count() == 5);
  CHECK(kb.edge_count() == 6);
  CHECK(kb.has_partition());
  CHECK(kb.part_vertices(0).size() == 2);

  Graph st = make_star(6);
  CHECK(st.edge_count() == 5);
  CHECK(degree_stats(st).max_degree == 5);
  CHECK(degree_stats(st).min_degree == 1);

  Graph c6 = make_cycle(6);
  CHECK(c6.edge_count() == 6);
  CHECK(girth(c6) == 6);

  Graph p4 = make_path(4);
  CHECK(p4.edge_count() == 3);
  CHECK_FALSE(girth(p4).has_value());

  Graph t0 = make_theta0();
  CHECK(t0.vertex_count() == 7);
  CHECK(t0.edge_count() == 8);
  CHECK(girth(t0) == 5);
}

TEST_CASE("connectivity predicates") {
  CHECK(is_connected(make_path(5)));
  CHECK_FALSE(is_biconnected(make_path(5)));
  CHECK(is_biconnected(make_cycle(5)));
  CHECK(is_bipartite(make_cycle(6)));
  CHECK_FALSE(is_bipartite(make_cycle(5)));

  Graph two(2);
  CHECK_FALSE(is_connected(two));
  CHECK(distance(make_cycle(6), 0, 3) == 3);
  CHECK_FALSE(distance(two, 0, 1).has_value());

  auto coloring = bipartition(make_path(4));
  REQUIRE(coloring.has_value());
  CHECK((*coloring)[0] != (*coloring)[1]);
}

TEST_CASE("induced subgraph relabels to selection order") {
  Graph g = make_cycle(5);
  Graph sub = induced_subgraph(g, {1, 2, 4});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 1);
  CHECK(sub.has_edge(0, 1));  // {1,2} survives
  CHECK_FALSE(sub.has_edge(0, 2));
  CHECK_THROWS_AS(induced_subgraph(g, {0, 0}), GraphError);
  CHECK_THROWS_AS(induced_subgraph(g, {5}), GraphError);
}

TEST_CASE("connected components are sorted by least vertex") {
  Graph g(6);
  g.add_edge(4, 5);
  g.add_edge(1, 3);
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == std::vector<int>{0});
  CHECK(comps[1] == std::vector<int>{1, 3});
  CHECK(comps[2] == std::vector<int>{2});
  CHECK(comps[3] == std::vector<int>{4, 5});
}

TEST_CASE("edge list round trip") {
  Graph g = make_complete_bipartite(2, 2);
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  Graph back = read_edge_list(in);
  CHECK(back.vertex_count() == 4);
  CHECK(back.edge_count() == 4);
  CHECK(back.has_partition());
  CHECK(back.part(0) == 0);
  CHECK(back.part(2) == 1);

  std::istringstream plain("3 2\n0 1\n# comment\n1 2\n");
  Graph p = read_edge_list(plain);
  CHECK(p.edge_count() == 2);
  CHECK_FALSE(p.has_partition());

  std::istringstream bip("bipartite 2 1\n0 2\n");
  Graph b = read_edge_list(bip);
  CHECK(b.vertex_count() == 4);
  CHECK(b.has_partition());

  std::istringstream bad("2 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(bad), GraphError);
}

TEST_CASE("random models are deterministic in the seed") {
  Graph a = sample(RandomModel::gnp(10, 0.4, 99));
  Graph b = sample(RandomModel::gnp(10, 0.4, 99));
  Graph c = sample(RandomModel::gnp(10, 0.4, 100));
  CHECK(a.edges() == b.edges());
  CHECK(a.edges() != c.edges());

  Graph d = sample(RandomModel::bipartite_gnp(4, 0.5, 7));
  CHECK(d.vertex_count() == 8);
  CHECK(d.has_partition());

  CHECK(sample(RandomModel::gnp(6, 0.0, 1)).edge_count() == 0);
  CHECK(sample(RandomModel::gnp(6, 1.0, 1)).edge_count() == 15);
  CHECK_THROWS_AS(sample(RandomModel::gnp(6, 1.5, 1)), GraphError);
}

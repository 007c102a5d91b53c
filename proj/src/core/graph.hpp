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
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace fsg {

using Edge = std::pair<int, int>;

/**
 * Undirected simple graph on vertices 0..n-1, adjacency stored as symmetric
 * bit rows. Optionally carries a two-part vertex partition (labels 0/1);
 * when declared, every edge must cross the parts.
 *
 * Neighbor iteration is always in ascending vertex order, which fixes the
 * tie-breaking of every search built on top.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return test(a, b);
  }

  /** Adds {a,b}; duplicate edges are tolerated and deduplicated. */
  void add_edge(int a, int b);
  void remove_edge(int a, int b);

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  /** All edges {a,b} with a < b, in lexicographic order. */
  std::vector<Edge> edges() const;

  bool has_partition() const { return !part_.empty(); }
  /** Part label of v (0 or 1); requires a declared partition. */
  int part(int v) const;
  /** Vertices of a part, ascending. */
  std::vector<int> part_vertices(int label) const;
  /**
   * Declares a two-part partition. Every existing edge must cross; edges
   * added later are checked as well.
   */
  void declare_partition(const std::vector<int>& labels);

  /** Raw adjacency row of v (words_per_row() little-endian 64-bit words). */
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  int words_per_row() const { return words_; }

  bool adjacent_unchecked(int a, int b) const { return test(a, b); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw GraphError("vertex " + std::to_string(v) +
                       " out of range for graph on " + std::to_string(n_) +
                       " vertices");
  }
  bool test(int a, int b) const {
    return (bits_[static_cast<std::size_t>(a) * words_ + b / 64] >>
            (b % 64)) & 1;
  }
  void set(int a, int b) {
    bits_[static_cast<std::size_t>(a) * words_ + b / 64] |= 1ULL << (b % 64);
  }
  void clear(int a, int b) {
    bits_[static_cast<std::size_t>(a) * words_ + b / 64] &= ~(1ULL << (b % 64));
  }

  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> part_;
};

// Named generators. complete_bipartite and star carry partition labels.
Graph make_complete(int n);
Graph make_complete_bipartite(int r, int s);
Graph make_star(int n);
Graph make_cycle(int n);
Graph make_path(int n);
/**
 * The 7-vertex exceptional graph of the star-connectivity theorem:
 * a 6-cycle 0-1-2-3-4-5 plus vertex 6 adjacent to 0 and 3.
 */
Graph make_theta0();

struct DegreeStats {
  int min_degree;
  int max_degree;
};
DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);

/**
 * True iff g is connected and stays connected after deleting any single
 * vertex. Graphs on one or two vertices count as biconnected whenever
 * they are connected.
 */
bool is_biconnected(const Graph& g);

/**
 * A proper 2-coloring when one exists. On a graph with a declared
 * partition, returns the declared labels.
 */
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/** Length of the shortest cycle; nullopt for forests. */
std::optional<int> girth(const Graph& g);

/** Shortest-path edge count; nullopt when unreachable. */
std::optional<int> distance(const Graph& g, int u, int v);

/**
 * Induced subgraph on verts; vertex k of the result is verts[k]. Vertices
 * must be distinct and in range. The result carries no partition.
 */
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

/** Connected components, each ascending, ordered by smallest vertex. */
std::vector<std::vector<int>> connected_components(const Graph& g);

/** Seeded random graph model: G(n,p) or the bipartite G(K_{r,r},p). */
struct RandomModel {
  enum class Kind { gnp, bipartite_gnp };
  Kind kind = Kind::gnp;
  int size = 1;  // n for gnp, r for bipartite_gnp
  double p = 0.0;
  std::uint64_t seed = 0;

  static RandomModel gnp(int n, double p, std::uint64_t seed) {
    return RandomModel{Kind::gnp, n, p, seed};
  }
  static RandomModel bipartite_gnp(int r, double p, std::uint64_t seed) {
    return RandomModel{Kind::bipartite_gnp, r, p, seed};
  }
};

/**
 * Samples the model. Each eligible vertex pair is included independently
 * with probability p, drawing one splitmix64 value per pair in
 * lexicographic order, so identical models reproduce identical graphs.
 */
Graph sample(const RandomModel& model);

/**
 * Edge-list text format. First line `n m`, or `bipartite r m` for a
 * partition-labeled graph on 2r vertices with parts {0..r-1} and
 * {r..2r-1}; then m lines `u v` with 0-indexed endpoints.
 */
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace fsg

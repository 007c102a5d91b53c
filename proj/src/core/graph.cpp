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

#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <sstream>

#include "rng.hpp"

namespace fsg {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.first, e.second);
}

void Graph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b)
    throw GraphError("self-loop at vertex " + std::to_string(a));
  if (!part_.empty() && part_[a] == part_[b])
    throw GraphError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                     "} does not cross the declared partition");
  if (test(a, b)) return;
  set(a, b);
  set(b, a);
  ++edge_count_;
}

void Graph::remove_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (!test(a, b)) return;
  clear(a, b);
  clear(b, a);
  --edge_count_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int a = 0; a < n_; ++a)
    for (int b : neighbors(a))
      if (a < b) out.emplace_back(a, b);
  return out;
}

int Graph::part(int v) const {
  check_vertex(v);
  if (part_.empty()) throw GraphError("graph has no declared partition");
  return part_[v];
}

std::vector<int> Graph::part_vertices(int label) const {
  if (part_.empty()) throw GraphError("graph has no declared partition");
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (part_[v] == label) out.push_back(v);
  return out;
}

void Graph::declare_partition(const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != n_)
    throw GraphError("partition label count " +
                     std::to_string(labels.size()) + " != vertex count " +
                     std::to_string(n_));
  for (int v = 0; v < n_; ++v)
    if (labels[v] != 0 && labels[v] != 1)
      throw GraphError("partition label must be 0 or 1");
  for (int a = 0; a < n_; ++a)
    for (int b : neighbors(a))
      if (a < b && labels[a] == labels[b])
        throw GraphError("edge {" + std::to_string(a) + "," +
                         std::to_string(b) +
                         "} does not cross the declared partition");
  part_ = labels;
}

Graph make_complete(int n) {
  if (n < 1) throw GraphError("complete graph needs n >= 1");
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph make_complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw GraphError("complete bipartite needs r,s >= 1");
  Graph g(r + s);
  std::vector<int> labels(r + s, 0);
  for (int v = r; v < r + s; ++v) labels[v] = 1;
  g.declare_partition(labels);
  for (int a = 0; a < r; ++a)
    for (int b = r; b < r + s; ++b) g.add_edge(a, b);
  return g;
}

Graph make_star(int n) {
  if (n < 1) throw GraphError("star graph needs n >= 1");
  Graph g(n);
  std::vector<int> labels(n, 1);
  labels[0] = 0;
  if (n >= 2) g.declare_partition(labels);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw GraphError("cycle graph needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph make_path(int n) {
  if (n < 1) throw GraphError("path graph needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_theta0() {
  Graph g(7);
  for (int v = 0; v < 6; ++v) g.add_edge(v, (v + 1) % 6);
  g.add_edge(6, 0);
  g.add_edge(6, 3);
  return g;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.vertex_count() < 1) throw GraphError("degree stats need n >= 1");
  DegreeStats st{g.degree(0), g.degree(0)};
  for (int v = 1; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    if (d < st.min_degree) st.min_degree = d;
    if (d > st.max_degree) st.max_degree = d;
  }
  return st;
}

namespace {

// BFS reach count from `start`, skipping vertex `skip` (-1 = none).
int reach_count(const Graph& g, int start, int skip) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  int count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (w == skip || seen[w]) continue;
      seen[w] = 1;
      ++count;
      queue.push_back(w);
    }
  }
  return count;
}

}  // namespace

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  return reach_count(g, 0, -1) == n;
}

bool is_biconnected(const Graph& g) {
  int n = g.vertex_count();
  if (!is_connected(g)) return false;
  if (n <= 2) return true;
  for (int v = 0; v < n; ++v) {
    int start = v == 0 ? 1 : 0;
    if (reach_count(g, start, v) != n - 1) return false;
  }
  return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  int n = g.vertex_count();
  if (g.has_partition()) {
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = g.part(v);
    return labels;
  }
  std::vector<int> color(n, -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::optional<int> girth(const Graph& g) {
  int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v]) {
          int len = dist[v] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw GraphError("distance endpoint out of range");
  if (u == v) return 0;
  std::vector<int> dist(g.vertex_count(), -1);
  dist[u] = 0;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int b : g.neighbors(a)) {
      if (dist[b] != -1) continue;
      dist[b] = dist[a] + 1;
      if (b == v) return dist[b];
      queue.push_back(b);
    }
  }
  return std::nullopt;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  int n = g.vertex_count();
  std::vector<int> pos(n, -1);
  for (std::size_t k = 0; k < verts.size(); ++k) {
    int v = verts[k];
    if (v < 0 || v >= n) throw GraphError("induced subgraph vertex out of range");
    if (pos[v] != -1) throw GraphError("induced subgraph vertex repeated");
    pos[v] = static_cast<int>(k);
  }
  Graph sub(static_cast<int>(verts.size()));
  for (std::size_t k = 0; k < verts.size(); ++k)
    for (int w : g.neighbors(verts[k]))
      if (pos[w] > static_cast<int>(k)) sub.add_edge(static_cast<int>(k), pos[w]);
  return sub;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b : g.neighbors(a)) {
        if (seen[b]) continue;
        seen[b] = 1;
        comp.push_back(b);
        queue.push_back(b);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph sample(const RandomModel& model) {
  if (model.p < 0.0 || model.p > 1.0)
    throw GraphError("edge probability must lie in [0,1]");
  if (model.size < 1) throw GraphError("model size must be >= 1");
  SplitMix64 rng(model.seed);
  if (model.kind == RandomModel::Kind::gnp) {
    int n = model.size;
    Graph g(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.next_double() < model.p) g.add_edge(a, b);
    return g;
  }
  int r = model.size;
  Graph g(2 * r);
  std::vector<int> labels(2 * r, 0);
  for (int v = r; v < 2 * r; ++v) labels[v] = 1;
  g.declare_partition(labels);
  for (int a = 0; a < r; ++a)
    for (int b = r; b < 2 * r; ++b)
      if (rng.next_double() < model.p) g.add_edge(a, b);
  return g;
}

namespace {

// Comment and blank lines may appear anywhere in an edge-list stream.
bool is_skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string header;
  while (std::getline(in, header)) {
    if (!is_skippable(header)) break;
  }
  if (header.empty() || is_skippable(header))
    throw GraphError("empty edge-list input");
  std::istringstream hs(header);
  std::string first;
  hs >> first;
  int n = 0, m = 0;
  bool bip = false;
  if (first == "bipartite") {
    int r;
    if (!(hs >> r >> m) || r < 1)
      throw GraphError("malformed bipartite header: " + header);
    n = 2 * r;
    bip = true;
  } else {
    try {
      n = std::stoi(first);
    } catch (const std::exception&) {
      throw GraphError("malformed edge-list header: " + header);
    }
    if (!(hs >> m) || n < 0) throw GraphError("malformed edge-list header: " + header);
  }
  Graph g(n);
  if (bip) {
    std::vector<int> labels(n, 0);
    for (int v = n / 2; v < n; ++v) labels[v] = 1;
    g.declare_partition(labels);
  }
  int got = 0;
  std::string line;
  while (got < m && std::getline(in, line)) {
    if (is_skippable(line)) continue;
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u >> v)) throw GraphError("malformed edge line: " + line);
    g.add_edge(u, v);
    ++got;
  }
  if (got < m)
    throw GraphError("edge-list ended early: expected " + std::to_string(m) +
                     " edges, got " + std::to_string(got));
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  int n = g.vertex_count();
  bool bip_header = false;
  if (g.has_partition() && n % 2 == 0) {
    // The bipartite header can only express parts {0..r-1},{r..2r-1}.
    bip_header = true;
    for (int v = 0; v < n; ++v)
      if (g.part(v) != (v < n / 2 ? 0 : 1)) {
        bip_header = false;
        break;
      }
  }
  if (bip_header)
    out << "bipartite " << n / 2 << ' ' << g.edge_count() << '\n';
  else
    out << n << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot open " + path + " for writing");
  write_edge_list(g, out);
  if (!out) throw GraphError("write failed: " + path);
}

}  // namespace fsg

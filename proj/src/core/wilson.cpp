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

#include "wilson.hpp"

#include <algorithm>
#include <deque>

namespace fsg {

std::string to_string(WilsonStatus status) {
  switch (status) {
    case WilsonStatus::wilsonian: return "wilsonian";
    case WilsonStatus::not_biconnected: return "not_biconnected";
    case WilsonStatus::cycle_exception: return "cycle_exception";
    case WilsonStatus::theta0_exception: return "theta0_exception";
    case WilsonStatus::bipartite_exception: return "bipartite_exception";
  }
  return "unknown";
}

namespace {

int reach_without(const Graph& g, int start, int skip) {
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

std::optional<int> find_articulation(const Graph& g) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    int start = v == 0 ? 1 : 0;
    if (reach_without(g, start, v) != n - 1) return v;
  }
  return std::nullopt;
}

bool theta0_extend(const Graph& pattern, const Graph& g, Perm& map,
                   std::vector<char>& used, int k) {
  int n = pattern.vertex_count();
  if (k == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (g.degree(cand) != pattern.degree(k)) continue;
    bool ok = true;
    for (int j = 0; j < k; ++j) {
      if (pattern.adjacent_unchecked(k, j) !=
          g.adjacent_unchecked(cand, map[j])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[k] = cand;
    used[cand] = 1;
    if (theta0_extend(pattern, g, map, used, k + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<Perm> theta0_isomorphism(const Graph& g) {
  static const Graph pattern = make_theta0();
  if (g.vertex_count() != 7 || g.edge_count() != 8) return std::nullopt;
  auto degree_multiset = [](const Graph& h) {
    std::vector<int> d;
    for (int v = 0; v < h.vertex_count(); ++v) d.push_back(h.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_multiset(g) != degree_multiset(pattern)) return std::nullopt;
  Perm map(7, -1);
  std::vector<char> used(7, 0);
  if (theta0_extend(pattern, g, map, used, 0)) return map;
  return std::nullopt;
}

WilsonVerdict classify(const Graph& g) {
  WilsonVerdict verdict;
  int n = g.vertex_count();
  if (!is_biconnected(g)) {
    verdict.status = WilsonStatus::not_biconnected;
    if (n > 2 && is_connected(g)) verdict.articulation_vertex = find_articulation(g);
    return verdict;
  }
  if (n >= 4) {
    bool two_regular = true;
    for (int v = 0; v < n && two_regular; ++v)
      if (g.degree(v) != 2) two_regular = false;
    // biconnected already implies connected
    if (two_regular) {
      verdict.status = WilsonStatus::cycle_exception;
      return verdict;
    }
  }
  if (auto iso = theta0_isomorphism(g)) {
    verdict.status = WilsonStatus::theta0_exception;
    verdict.theta0_map = std::move(iso);
    return verdict;
  }
  if (auto coloring = bipartition(g)) {
    verdict.status = WilsonStatus::bipartite_exception;
    verdict.two_coloring = std::move(coloring);
    return verdict;
  }
  verdict.status = WilsonStatus::wilsonian;
  return verdict;
}

StarPrediction predict_star_components(const Graph& g) {
  return classify(g).status == WilsonStatus::wilsonian
             ? StarPrediction::connected
             : StarPrediction::not_guaranteed;
}

}  // namespace fsg

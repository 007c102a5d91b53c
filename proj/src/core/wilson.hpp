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

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "perm.hpp"

namespace fsg {

/**
 * Sufficiency classification for FS(Star_n, Y) connectivity: Y guarantees
 * a connected FS(Star_n, Y) when it is biconnected, not a cycle on >= 4
 * vertices, not the 7-vertex exceptional graph, and not bipartite.
 * Exceptions are reported in that fixed precedence order, so a graph
 * matching several descriptions gets exactly one status (a 4-cycle is
 * cycle_exception, not bipartite_exception).
 */
enum class WilsonStatus {
  wilsonian,
  not_biconnected,
  cycle_exception,
  theta0_exception,
  bipartite_exception,
};

std::string to_string(WilsonStatus status);

struct WilsonVerdict {
  WilsonStatus status = WilsonStatus::wilsonian;
  /** Articulation vertex, when status is not_biconnected and one exists. */
  std::optional<int> articulation_vertex;
  /** A proper 2-coloring, when status is bipartite_exception. */
  std::optional<std::vector<int>> two_coloring;
  /** Vertex map from make_theta0() onto the graph, for theta0_exception. */
  std::optional<Perm> theta0_map;
};

WilsonVerdict classify(const Graph& g);

enum class StarPrediction { connected, not_guaranteed };

/** connected iff classify(g) is wilsonian; the theorem gives sufficiency only. */
StarPrediction predict_star_components(const Graph& g);

/** Exact-isomorphism test against the adopted 7-vertex exceptional graph. */
std::optional<Perm> theta0_isomorphism(const Graph& g);

}  // namespace fsg

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

#include "constructions.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>

namespace fsg {

namespace {

std::pair<int, int> ordered(int a, int b) {
  return a < b ? std::pair<int, int>{a, b} : std::pair<int, int>{b, a};
}

}  // namespace

BlockConstruction build_lower_bound_pair(int n) {
  if (n < 5) throw GraphError("five-block family needs at least 5 vertices");
  const int base = n / 5, extra = n % 5;
  std::vector<int> block_of(n);
  std::vector<std::vector<int>> blocks(5);
  int next = 0;
  for (int b = 0; b < 5; ++b) {
    const int size = base + (b < extra ? 1 : 0);
    for (int k = 0; k < size; ++k) {
      block_of[next] = b;
      blocks[b].push_back(next);
      ++next;
    }
  }
  Graph x(n), y(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int d = ((block_of[a] - block_of[b]) % 5 + 5) % 5;
      if (d != 2 && d != 3) x.add_edge(a, b);
      if (d != 1 && d != 4) y.add_edge(a, b);
    }
  }
  return BlockConstruction{std::move(x), std::move(y),
                           {"A1", "A2", "A3", "A4", "A5"}, std::move(blocks)};
}

BlockCertificate certify_block_disconnected(const BlockConstruction& c) {
  const int n = c.x.vertex_count();
  if (c.y.vertex_count() != n)
    throw GraphError("certificate needs graphs on a shared vertex set");
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    for (int v : c.blocks[b]) {
      if (v < 0 || v >= n || block_of[v] != -1)
        throw GraphError("certificate needs blocks partitioning the vertices");
      block_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v)
    if (block_of[v] == -1)
      throw GraphError("certificate needs blocks partitioning the vertices");

  const auto cross = [&](const Graph& g) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& [a, b] : g.edges())
      if (block_of[a] != block_of[b])
        pairs.insert(ordered(block_of[a], block_of[b]));
    return std::vector<std::pair<int, int>>(pairs.begin(), pairs.end());
  };
  BlockCertificate cert{cross(c.x), cross(c.y)};
  std::vector<std::pair<int, int>> common;
  std::set_intersection(cert.x_cross_pairs.begin(), cert.x_cross_pairs.end(),
                        cert.y_cross_pairs.begin(), cert.y_cross_pairs.end(),
                        std::back_inserter(common));
  if (!common.empty()) {
    std::ostringstream msg;
    msg << "block closure broken: blocks " << common.front().first << ","
        << common.front().second << " carry edges in both graphs";
    throw InvariantError(msg.str());
  }
  return cert;
}

BipartiteLowerBound build_bipartite_lower_bound(int r) {
  if (r < 2) throw GraphError("bipartite four-block family needs r >= 2");
  const int hi = (r + 1) / 2, lo = r / 2, n = 2 * r;
  // Working ranges: A=[0,hi) B=[hi,r) C=[r,r+lo) D=[r+lo,2r).
  const auto in_a = [&](int i) { return i; };
  const auto in_b = [&](int j) { return hi + j; };
  const auto in_c = [&](int j) { return r + j; };
  const auto in_d = [&](int i) { return r + lo + i; };

  std::vector<int> xparts(n);
  for (int v = 0; v < n; ++v) xparts[v] = v < r ? 0 : 1;
  Graph x(n);
  x.declare_partition(xparts);
  for (int i = 0; i < hi; ++i)
    for (int j = 0; j < lo; ++j) x.add_edge(in_a(i), in_c(j));
  for (int j = 0; j < lo; ++j)
    for (int i = 0; i < hi; ++i) x.add_edge(in_b(j), in_d(i));
  for (int i = 0; i < hi; ++i)
    for (int t = 0; t < hi / 2; ++t) x.add_edge(in_a(i), in_d((i + t) % hi));
  for (int j = 0; j < lo; ++j)
    for (int t = 0; t < lo / 2; ++t) x.add_edge(in_b(j), in_c((j + t) % lo));

  // Y on the renumbering phi that makes its parts contiguous: A and D stay,
  // B and C trade index ranges. sigma0 = phi is then an isolated vertex.
  std::vector<int> phi(n);
  for (int v = 0; v < n; ++v) {
    if (v < hi)
      phi[v] = v;
    else if (v < r)
      phi[v] = v - hi + r;
    else if (v < r + lo)
      phi[v] = v - r + hi;
    else
      phi[v] = v;
  }
  std::vector<int> yparts(n);
  for (int v = 0; v < n; ++v) yparts[v] = v < r ? 0 : 1;
  Graph y(n);
  y.declare_partition(yparts);
  for (int i = 0; i < hi; ++i)
    for (int j = 0; j < lo; ++j) y.add_edge(phi[in_a(i)], phi[in_b(j)]);
  for (int j = 0; j < lo; ++j)
    for (int i = 0; i < hi; ++i) y.add_edge(phi[in_c(j)], phi[in_d(i)]);
  for (int i = 0; i < hi; ++i)
    for (int ii = 0; ii < hi; ++ii)
      if (!x.has_edge(in_a(i), in_d(ii)))
        y.add_edge(phi[in_a(i)], phi[in_d(ii)]);
  for (int j = 0; j < lo; ++j)
    for (int jj = 0; jj < lo; ++jj)
      if (!x.has_edge(in_b(j), in_c(jj)))
        y.add_edge(phi[in_b(j)], phi[in_c(jj)]);

  const auto range = [](int from, int count) {
    std::vector<int> out(count);
    for (int k = 0; k < count; ++k) out[k] = from + k;
    return out;
  };
  BlockConstruction blocks{
      std::move(x),
      std::move(y),
      {"XA", "XB", "XC", "XD", "YA", "YB", "YC", "YD"},
      {range(0, hi), range(hi, lo), range(r, lo), range(r + lo, hi),
       range(0, hi), range(r, lo), range(hi, lo), range(r + lo, hi)}};
  return BipartiteLowerBound{std::move(blocks), std::move(phi)};
}

namespace {

// Single-source BFS distances; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

struct ArcPlan {
  int m = 0;
  int ell = 0;
  std::array<int, 12> z{};
  std::vector<int> specials;  // 2*ell+1 positions, ascending stream
};

ArcPlan plan_gadget(int m) {
  ArcPlan plan;
  plan.m = m;
  int root = static_cast<int>(std::sqrt(static_cast<double>(m)));
  while ((root + 1) * (root + 1) <= m) ++root;
  while (root * root > m) --root;
  const int ell = root / 2;
  plan.ell = ell;
  if (ell < 3)
    throw GraphError("gadget layout infeasible at m=" + std::to_string(m) +
                     ": anchor arcs collapse");
  const int sixth = (m + 5) / 6;
  const int even_sixth = sixth + (sixth % 2);
  auto& z = plan.z;
  z[0] = 0;
  z[1] = sixth;                // long arc guarding the first chord pair
  z[3] = z[1] + even_sixth;    // even arc, gives the odd chord cycle
  z[4] = z[3] + 1;
  z[5] = z[4] + 1;
  z[2] = z[3] + 2 - ell;       // fixes the probe arc z[2] -> z[4] at ell-1
  z[6] = z[5] + sixth;
  z[7] = z[6] + sixth;
  z[9] = z[7] + even_sixth;
  z[10] = z[9] + 1;
  z[11] = z[10] + 1;
  z[8] = z[9] + 2 - ell;
  if (z[2] <= z[1] || z[8] <= z[7] || z[11] >= m)
    throw GraphError("gadget layout infeasible at m=" + std::to_string(m) +
                     ": anchors do not fit on the cycle");

  const int spacing = (m + 3 * ell - 1) / (3 * ell);
  const int buffer = spacing + 4;  // chord shortcuts shave a few steps
  const std::array<std::pair<int, int>, 6> free_arcs{{{z[0], z[1]},
                                                      {z[1], z[2]},
                                                      {z[5], z[6]},
                                                      {z[6], z[7]},
                                                      {z[7], z[8]},
                                                      {z[11], m}}};
  for (const auto& [from, to] : free_arcs)
    for (int p = from + buffer; p <= to - buffer; p += spacing)
      plan.specials.push_back(p % m);
  const int needed = 2 * ell + 1;
  if (static_cast<int>(plan.specials.size()) < needed)
    throw GraphError("gadget layout infeasible at m=" + std::to_string(m) +
                     ": room for " + std::to_string(plan.specials.size()) +
                     " of " + std::to_string(needed) + " special vertices");
  plan.specials.resize(needed);
  return plan;
}

}  // namespace

GadgetLayout build_large_gadget(int m) {
  const ArcPlan plan = plan_gadget(m);
  GadgetLayout layout;
  layout.m = m;
  layout.ell = plan.ell;
  layout.z = plan.z;
  layout.w = plan.specials[0];
  layout.xs.assign(plan.specials.begin() + 1,
                   plan.specials.begin() + 1 + plan.ell);
  layout.ys.assign(plan.specials.begin() + 1 + plan.ell, plan.specials.end());

  Graph ring(m);
  for (int v = 0; v < m; ++v) ring.add_edge(v, (v + 1) % m);
  ring.add_edge(plan.z[0], plan.z[5]);
  ring.add_edge(plan.z[1], plan.z[3]);
  ring.add_edge(plan.z[6], plan.z[11]);
  ring.add_edge(plan.z[7], plan.z[9]);
  layout.g_2star = ring;

  Graph hub(m);
  for (int v = 0; v < m; ++v)
    if (v != layout.w) hub.add_edge(layout.w, v);
  layout.h_2star = hub;

  Graph gs(m + 2);
  for (const auto& [a, b] : ring.edges()) gs.add_edge(a, b);
  gs.add_edge(m, m + 1);
  gs.add_edge(m, plan.z[2]);
  gs.add_edge(m, plan.z[10]);
  gs.add_edge(m + 1, plan.z[4]);
  gs.add_edge(m + 1, plan.z[8]);
  layout.g_star = std::move(gs);

  Graph hs(m + 2);
  for (const auto& [a, b] : hub.edges()) hs.add_edge(a, b);
  for (int xp : layout.xs) hs.add_edge(m, xp);
  for (int yp : layout.ys) hs.add_edge(m + 1, yp);
  layout.h_star = std::move(hs);

  const GadgetReport report = verify_gadget_constraints(layout);
  if (!report.all_pass) {
    std::string why = "gadget layout infeasible at m=" + std::to_string(m);
    for (const auto& check : report.checks)
      if (!check.pass) why += "; " + check.name + ": " + check.detail;
    throw GraphError(why);
  }
  return layout;
}

GadgetReport verify_gadget_constraints(const GadgetLayout& layout) {
  GadgetReport report;
  const int m = layout.m, ell = layout.ell;
  const auto& z = layout.z;
  const auto clockwise = [m](int from, int to) { return ((to - from) % m + m) % m; };
  auto add = [&report](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    bool ok = m >= 12 && layout.g_2star.vertex_count() == m;
    std::string detail;
    std::set<int> seen(z.begin(), z.end());
    if (seen.size() != 12) {
      ok = false;
      detail = "anchor positions not distinct";
    }
    for (int k = 1; ok && k < 12; ++k)
      if (clockwise(z[0], z[k]) <= clockwise(z[0], z[k - 1])) {
        ok = false;
        detail = "anchors " + std::to_string(k - 1) + "," + std::to_string(k) +
                 " out of clockwise order";
      }
    add("anchor-order", ok, detail.empty() ? "12 anchors in cycle order" : detail);
  }

  {
    bool ok = layout.g_2star.vertex_count() == m &&
              layout.g_2star.edge_count() == m + 4;
    std::string detail = "cycle plus 4 chords";
    for (int v = 0; ok && v < m; ++v)
      if (!layout.g_2star.has_edge(v, (v + 1) % m)) {
        ok = false;
        detail = "cycle edge " + std::to_string(v) + " missing";
      }
    const std::array<std::pair<int, int>, 4> chords{
        {{z[0], z[5]}, {z[1], z[3]}, {z[6], z[11]}, {z[7], z[9]}}};
    for (const auto& [a, b] : chords)
      if (ok && !layout.g_2star.has_edge(a, b)) {
        ok = false;
        detail = "chord " + std::to_string(a) + "," + std::to_string(b) +
                 " missing";
      }
    add("ring-shape", ok, detail);
  }

  {
    bool ok = true;
    std::string detail = "consecutive anchor triples";
    const std::array<std::pair<int, int>, 4> steps{
        {{z[3], z[4]}, {z[4], z[5]}, {z[9], z[10]}, {z[10], z[11]}}};
    for (const auto& [a, b] : steps)
      if (clockwise(a, b) != 1) {
        ok = false;
        detail = "anchors " + std::to_string(a) + "," + std::to_string(b) +
                 " not adjacent on the cycle";
      }
    add("anchor-edges", ok, detail);
  }

  add("arc-z2-to-z4", clockwise(z[2], z[4]) == ell - 1,
      "clockwise " + std::to_string(clockwise(z[2], z[4])) + " vs " +
          std::to_string(ell - 1));
  add("arc-z8-to-z10", clockwise(z[8], z[10]) == ell - 1,
      "clockwise " + std::to_string(clockwise(z[8], z[10])) + " vs " +
          std::to_string(ell - 1));
  add("arc-z1-to-z3-even", clockwise(z[1], z[3]) % 2 == 0,
      "clockwise " + std::to_string(clockwise(z[1], z[3])));

  {
    bool ok = static_cast<int>(layout.xs.size()) == ell &&
              static_cast<int>(layout.ys.size()) == ell && layout.w >= 0;
    std::string detail = std::to_string(2 * ell + 1) + " distinct positions";
    std::set<int> picked(z.begin(), z.end());
    std::vector<int> specials{layout.w};
    specials.insert(specials.end(), layout.xs.begin(), layout.xs.end());
    specials.insert(specials.end(), layout.ys.begin(), layout.ys.end());
    for (int p : specials)
      if (p < 0 || p >= m || !picked.insert(p).second) {
        ok = false;
        detail = "position " + std::to_string(p) + " reused or out of range";
      }
    add("special-positions", ok, detail);

    if (ok) {
      bool sep = true;
      std::string sep_detail;
      const std::array<int, 4> guarded{z[2], z[4], z[8], z[10]};
      for (std::size_t i = 0; i < specials.size() && sep; ++i) {
        const auto dist = bfs_distances(layout.g_2star, specials[i]);
        for (std::size_t j = i + 1; j < specials.size() && sep; ++j)
          if (3 * ell * dist[specials[j]] < m) {
            sep = false;
            sep_detail = "specials " + std::to_string(specials[i]) + "," +
                         std::to_string(specials[j]) + " at distance " +
                         std::to_string(dist[specials[j]]);
          }
        for (int g : guarded)
          if (sep && 3 * ell * dist[g] < m) {
            sep = false;
            sep_detail = "special " + std::to_string(specials[i]) +
                         " and anchor " + std::to_string(g) + " at distance " +
                         std::to_string(dist[g]);
          }
      }
      add("special-separation", sep,
          sep ? "all gaps at least m/(3*ell)" : sep_detail);
    } else {
      add("special-separation", false, "skipped: bad special positions");
    }
  }

  {
    const auto g = girth(layout.g_2star);
    const bool ok = g.has_value() && 6 * *g >= m;
    add("girth", ok,
        g ? "girth " + std::to_string(*g) : std::string("acyclic"));
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const GadgetCheck& c) { return c.pass; });
  return report;
}

int smallest_feasible_gadget_m() {
  for (int m = 16; m <= 4096; ++m) {
    try {
      build_large_gadget(m);
      return m;
    } catch (const GraphError&) {
    }
  }
  throw GraphError("no feasible gadget size up to 4096");
}

DerivedGadget derive_gadget_from_sequence(const SwapSeq& s, int n, int u,
                                          int v) {
  if (s.empty()) throw SequenceError("empty sequence", 0);
  if (n <= 0 || u < 0 || u >= n || v < 0 || v >= n || u == v)
    throw SequenceError("target labels out of range", 0);
  Perm cur = identity_perm(n), inv = identity_perm(n);
  std::set<std::pair<int, int>> g_edges, h_edges;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto [a, b] = s[k];
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw SequenceError("bad move labels", k);
    const int pa = inv[a], pb = inv[b];
    g_edges.insert(ordered(pa, pb));
    h_edges.insert(ordered(a, b));
    std::swap(cur[pa], cur[pb]);
    std::swap(inv[a], inv[b]);
  }
  for (int i = 0; i < n; ++i) {
    const int expect = i == u ? v : i == v ? u : i;
    if (cur[i] != expect)
      throw SequenceError(
          "net effect is not the expected transposition (image of " +
              std::to_string(i) + " is " + std::to_string(cur[i]) + ")",
          s.size());
  }
  DerivedGadget out{
      Graph(n, std::vector<Edge>(g_edges.begin(), g_edges.end())),
      Graph(n, std::vector<Edge>(h_edges.begin(), h_edges.end())),
      std::nullopt,
      std::nullopt};
  out.g_coloring = bipartition(out.g_min);
  out.h_coloring = bipartition(out.h_min);
  return out;
}

std::array<SwapSeq, 4> builtin_bipartite_gadget_sequences() {
  const auto decode = [](std::initializer_list<int> toks) {
    SwapSeq seq;
    for (int t : toks) {
      const int a = t / 10 - 1, b = t % 10 - 1;
      seq.push_back(ordered(a, b));
    }
    return seq;
  };
  return {
      decode({46, 34, 45, 47, 34, 38, 46, 47, 24, 34, 14, 46, 45, 24, 34, 14,
              46, 45, 24, 34, 47, 24, 45, 46, 14, 47, 24, 45, 46, 14, 47, 24,
              45}),
      decode({16, 56, 67, 46, 36, 67, 46, 36, 26, 16, 56, 38, 36, 16, 26, 67,
              46, 36, 56, 26, 67, 46, 36, 56, 16, 67, 26}),
      decode({36, 34, 47, 35, 34, 38, 14, 34, 24, 14, 34, 35, 47, 34, 38, 35,
              34, 14, 24, 47, 14, 34, 35, 38, 36}),
      decode({26, 35, 14, 34, 38, 36, 34, 67, 38, 16, 36, 35, 38, 34, 14, 16,
              36, 38, 26, 35, 34, 38, 35}),
  };
}

}  // namespace fsg

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

#include "exchanger.hpp"

#include <algorithm>
#include <deque>

#include "wilson.hpp"

namespace fsg {

namespace {

Move mk(int a, int b) { return a < b ? Move{a, b} : Move{b, a}; }

void check_pair_inputs(const Graph& x, const Graph& y, const Perm& b, int u,
                       int v) {
  int n = x.vertex_count();
  if (y.vertex_count() != n) throw GraphError("graphs differ in vertex count");
  check_permutation(b);
  if (static_cast<int>(b.size()) != n)
    throw GraphError("bijection size does not match the graphs");
  if (u < 0 || u >= n || v < 0 || v >= n || u == v)
    throw GraphError("swap labels must be two distinct Y-vertices");
}

/** Replays seq from b and insists the result is b with u,v preimages swapped. */
void validate_exchange(const Graph& x, const Graph& y, const Perm& b, int u,
                       int v, const SwapSeq& seq) {
  SequenceResult res = apply_sequence(x, y, b, seq);
  Perm inv = inverse(b);
  Perm expect = b;
  std::swap(expect[inv[u]], expect[inv[v]]);
  if (res.final != expect)
    throw InvariantError("exchange replay does not net the target swap");
}

/**
 * Shortest path src -> dst whose interior stays inside allowed; the
 * endpoints themselves are exempt. Empty when no such path exists.
 */
std::vector<int> restricted_path(const Graph& g, int src, int dst,
                                 const std::vector<char>& allowed) {
  if (src == dst) return {src};
  int n = g.vertex_count();
  std::vector<int> parent(n, -2);
  parent[src] = -1;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int c : g.neighbors(a)) {
      if (parent[c] != -2) continue;
      if (c == dst) {
        std::vector<int> path{dst};
        for (int at = a; at != -1; at = parent[at]) path.push_back(at);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!allowed[c]) continue;
      parent[c] = a;
      queue.push_back(c);
    }
  }
  return {};
}

}  // namespace

std::string to_string(ExchangeStrategy s) {
  switch (s) {
    case ExchangeStrategy::direct: return "direct";
    case ExchangeStrategy::common_neighbor: return "common_neighbor";
    case ExchangeStrategy::path_conjugation: return "path_conjugation";
    case ExchangeStrategy::bipartite_min_degree: return "bipartite_min_degree";
    case ExchangeStrategy::bfs_fallback: return "bfs_fallback";
  }
  return "unknown";
}

std::optional<ExchangeResult> common_neighbor_exchange(const Graph& x,
                                                       const Graph& y,
                                                       const Perm& b, int u,
                                                       int v) {
  check_pair_inputs(x, y, b, u, v);
  Perm inv = inverse(b);
  const int up = inv[u], vp = inv[v];
  std::uint64_t scanned = 0;
  for (int w = 0; w < x.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    ++scanned;
    if (!y.has_edge(w, u) || !y.has_edge(w, v)) continue;
    int wp = inv[w];
    // wu, wv, wu walks w around the position triangle {wp, up, vp}
    if (!x.has_edge(wp, up) || !x.has_edge(up, vp) || !x.has_edge(wp, vp))
      continue;
    SwapSeq seq{mk(w, u), mk(w, v), mk(w, u)};
    validate_exchange(x, y, b, u, v, seq);
    return ExchangeResult{seq, ExchangeStrategy::common_neighbor, scanned};
  }
  return std::nullopt;
}

std::optional<ExchangeResult> path_conjugation_exchange(const Graph& x,
                                                        const Graph& y,
                                                        const Perm& b, int u,
                                                        int v) {
  check_pair_inputs(x, y, b, u, v);
  const int n = x.vertex_count();
  Perm inv = inverse(b);
  const int up = inv[u], vp = inv[v];
  if (!x.has_edge(up, vp)) return std::nullopt;
  std::uint64_t scanned = 0;

  for (int w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    if (!y.has_edge(w, u) || !y.has_edge(w, v)) continue;
    const int wp = inv[w];

    // Degenerate bridge at w itself: the three-move triangle walk.
    if (x.has_edge(wp, up) && x.has_edge(wp, vp)) {
      SwapSeq seq{mk(w, u), mk(w, v), mk(w, u)};
      validate_exchange(x, y, b, u, v, seq);
      return ExchangeResult{seq, ExchangeStrategy::path_conjugation, scanned};
    }

    // Positions open to walk interiors: labels next to w other than u,v.
    std::vector<char> allowed(n, 0);
    for (int lab : y.neighbors(w))
      if (lab != u && lab != v) allowed[inv[lab]] = 1;

    for (int q : y.neighbors(w)) {
      if (q == u || q == v) continue;
      const int qp = inv[q];
      if (!x.has_edge(qp, up) || !x.has_edge(qp, vp)) continue;
      ++scanned;

      std::vector<char> interior = allowed;
      interior[qp] = 0;

      auto hub_walk = [&](const std::vector<int>& path, SwapSeq& out) {
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
          out.push_back(mk(w, b[path[i]]));
      };
      auto hub_walk_back = [&](const std::vector<int>& path, SwapSeq& out) {
        for (std::size_t i = path.size() - 2; i >= 1; --i)
          out.push_back(mk(w, b[path[i]]));
      };

      std::vector<int> single = restricted_path(x, wp, qp, interior);
      if (!single.empty()) {
        SwapSeq seq;
        hub_walk(single, seq);
        seq.push_back(mk(w, q));
        seq.push_back(mk(w, u));
        seq.push_back(mk(w, v));
        seq.push_back(mk(w, u));
        seq.push_back(mk(w, q));
        if (single.size() >= 3) hub_walk_back(single, seq);
        validate_exchange(x, y, b, u, v, seq);
        return ExchangeResult{seq, ExchangeStrategy::path_conjugation,
                              scanned};
      }

      std::vector<int> to_u = restricted_path(x, wp, up, interior);
      if (to_u.empty()) continue;
      std::vector<int> to_v = restricted_path(x, wp, vp, interior);
      if (to_v.empty()) continue;

      // Three self-retracing blocks; each restores its walk interiors.
      SwapSeq seq;
      auto block = [&](const std::vector<int>& path,
                       std::initializer_list<int> core) {
        hub_walk(path, seq);
        for (int lab : core) seq.push_back(mk(w, lab));
        if (path.size() >= 3) hub_walk_back(path, seq);
      };
      block(to_u, {u, q, v, q, u});
      block(to_v, {q, v, u, v, q});
      block(to_u, {v, u, q, u, v});
      validate_exchange(x, y, b, u, v, seq);
      return ExchangeResult{seq, ExchangeStrategy::path_conjugation, scanned};
    }
  }
  return std::nullopt;
}

namespace {

/** Empty when the bipartite routine's preconditions all hold. */
std::string bip_precondition_failure(const Graph& x, const Graph& y,
                                     const Perm& b, int u, int v) {
  const int n = x.vertex_count();
  if (n % 2 != 0) return "bipartite exchange needs an even vertex count";
  if (!x.has_partition() || !y.has_partition())
    return "bipartite exchange needs declared partitions on both graphs";
  const int r = n / 2;
  if (static_cast<int>(x.part_vertices(0).size()) != r ||
      static_cast<int>(y.part_vertices(0).size()) != r)
    return "bipartite exchange needs parts of equal size";
  int delta = std::min(degree_stats(x).min_degree, degree_stats(y).min_degree);
  if (4 * delta < 3 * r + 2)
    return "minimum degree " + std::to_string(delta) +
           " is below the bound ceil((3r+2)/4) = " +
           std::to_string((3 * r + 5) / 4);
  if (y.part(u) == y.part(v))
    return "swap labels must lie in different parts of Y";
  Perm inv = inverse(b);
  if (!x.has_edge(inv[u], inv[v]))
    return "swap positions must be adjacent in X";
  return "";
}

/**
 * Core of the bipartite routine, run from a bijection sigma already
 * oriented so v's X-side holds at least r/2 labels from v's Y-side.
 * Assumes u,v not adjacent in Y. Returns the full sequence from sigma.
 */
SwapSeq run_bip_core(const Graph& x, const Graph& y, const Perm& sigma, int u,
                     int v, int limit, std::uint64_t& nodes) {
  const int n = x.vertex_count();
  const int r = n / 2;
  Perm tau = sigma;
  Perm tinv = inverse(sigma);
  const int up = tinv[u], vp = tinv[v];
  const int ax = x.part(up);
  const int bx = x.part(vp);
  const int ay = y.part(u);
  const int by = y.part(v);
  if (ax == bx) throw InvariantError("swap positions share an X part");

  int w = -1;
  for (int cand : y.neighbors(u))
    if (x.has_edge(tinv[cand], up)) {
      w = cand;
      break;
    }
  if (w == -1) throw InvariantError("no hub label with an adjacent position");
  const int wp = tinv[w];

  // Positions on u's side lacking an edge to v's or w's position. The
  // degree bound caps how many there can be.
  std::vector<char> in_d(n, 0);
  int d_size = 0;
  for (int pos = 0; pos < n; ++pos)
    if (x.part(pos) == ax &&
        !(x.has_edge(pos, vp) && x.has_edge(pos, wp))) {
      in_d[pos] = 1;
      ++d_size;
    }
  if (d_size > limit)
    throw InvariantError("exclusion set exceeds the degree-bound cap");
  if (in_d[up]) throw InvariantError("u's position fell in the exclusion set");

  // phi1 counts wrong-side labels still stuck on exclusion positions,
  // phi2 strays on the co-adjacent positions, stray their total.
  auto count_state = [&](int& phi1, int& stray, int& same_side, int& phi2) {
    phi1 = stray = same_side = phi2 = 0;
    for (int pos = 0; pos < n; ++pos) {
      if (x.part(pos) != ax) continue;
      bool label_on_v_side = (y.part(tau[pos]) == by);
      if (label_on_v_side) {
        ++stray;
        if (!in_d[pos]) ++phi2;
      } else {
        ++same_side;
        if (in_d[pos]) ++phi1;
      }
    }
  };

  SwapSeq prelim;
  int iter = 0;
  const int iter_cap = 2 * r + 8;
  for (;;) {
    int phi1, stray, same_side, phi2;
    count_state(phi1, stray, same_side, phi2);
    bool excess = stray > limit;
    if (phi1 == 0 && !excess) break;
    if (++iter > iter_cap)
      throw InvariantError("preliminary sweep failed to terminate");
    ++nodes;

    int la = -1, lb = -1;
    bool first_kind = phi1 > 0 && same_side > limit + 1;
    if (first_kind) {
      int xw = n;
      for (int pos = 0; pos < n; ++pos)
        if (in_d[pos] && y.part(tau[pos]) == ay) xw = std::min(xw, tau[pos]);
      if (xw == n) throw InvariantError("first-kind source missing");
      int yw = -1;
      for (int cand : y.neighbors(xw)) {
        if (cand == v || cand == w) continue;
        int pos = tinv[cand];
        if (x.part(pos) != bx) continue;
        if (!x.has_edge(tinv[xw], pos)) continue;
        yw = cand;
        break;
      }
      if (yw == -1) throw InvariantError("first-kind partner missing");
      la = xw;
      lb = yw;
    } else {
      if (!excess)
        throw InvariantError("second-kind swap chosen without its guarantee");
      int qw = n;
      for (int pos = 0; pos < n; ++pos)
        if (x.part(pos) == ax && !in_d[pos] && y.part(tau[pos]) == by)
          qw = std::min(qw, tau[pos]);
      if (qw == n) throw InvariantError("second-kind source missing");
      int sw = -1;
      for (int cand : y.neighbors(qw)) {
        int pos = tinv[cand];
        if (x.part(pos) != bx) continue;
        if (!x.has_edge(tinv[qw], pos)) continue;
        sw = cand;
        break;
      }
      if (sw == -1) throw InvariantError("second-kind partner missing");
      la = qw;
      lb = sw;
    }

    if (la == u || la == v || la == w || lb == u || lb == v || lb == w)
      throw InvariantError("preliminary swap touched a pinned label");
    int pa = tinv[la], pb = tinv[lb];
    if (!x.has_edge(pa, pb) || !y.has_edge(la, lb))
      throw InvariantError("preliminary swap is not friendly");
    std::swap(tau[pa], tau[pb]);
    tinv[la] = pb;
    tinv[lb] = pa;
    prelim.push_back(mk(la, lb));

    int phi1b, strayb, same_sideb, phi2b;
    count_state(phi1b, strayb, same_sideb, phi2b);
    if (first_kind) {
      if (!(phi1b < phi1 && phi2b <= phi2))
        throw InvariantError("first-kind swap made no progress");
    } else {
      if (!(phi2b < phi2 && phi1b <= phi1))
        throw InvariantError("second-kind swap made no progress");
    }
  }

  // Two fresh labels next to both v and w whose positions sit on u's
  // side; the sweep's exit state guarantees they exist and lie outside
  // the exclusion set.
  int z1 = -1, z2 = -1;
  for (int cand : y.neighbors(v)) {
    if (!y.has_edge(w, cand)) continue;
    int pos = tinv[cand];
    if (x.part(pos) != ax) continue;
    if (z1 == -1)
      z1 = cand;
    else {
      z2 = cand;
      break;
    }
  }
  if (z2 == -1) throw InvariantError("fewer than two bridge labels found");
  if (z1 == u || z2 == u)
    throw InvariantError("bridge label collides with u");
  if (in_d[tinv[z1]] || in_d[tinv[z2]])
    throw InvariantError("bridge position landed in the exclusion set");

  SwapSeq gadget{mk(v, z1), mk(w, z2), mk(w, z1), mk(w, u), mk(w, z2),
                 mk(w, z1), mk(v, z1), mk(v, z2), mk(w, z2)};

  SwapSeq out = prelim;
  out.insert(out.end(), gadget.begin(), gadget.end());
  out.insert(out.end(), prelim.rbegin(), prelim.rend());
  return out;
}

}  // namespace

ExchangeResult bipartite_min_degree_exchange(const Graph& x, const Graph& y,
                                             const Perm& b, int u, int v) {
  check_pair_inputs(x, y, b, u, v);
  std::string fail = bip_precondition_failure(x, y, b, u, v);
  if (!fail.empty()) throw GraphError(fail);

  const int n = x.vertex_count();
  const int r = n / 2;
  int delta = std::min(degree_stats(x).min_degree, degree_stats(y).min_degree);
  const int limit = 2 * r - 2 * delta;
  Perm inv = inverse(b);
  std::uint64_t nodes = 0;

  SwapSeq seq;
  if (y.has_edge(u, v)) {
    seq.push_back(mk(u, v));
  } else {
    // Orientation: v's X-side must hold at least r/2 labels from v's
    // Y-side. When b fails this, the swapped bijection satisfies it
    // strictly, and its sequence reversed is the answer from b.
    auto balanced = [&](const Perm& s) {
      Perm si = inverse(s);
      int side = x.part(si[v]);
      int target = y.part(v);
      int c = 0;
      for (int pos = 0; pos < n; ++pos)
        if (x.part(pos) == side && y.part(s[pos]) == target) ++c;
      return 2 * c >= r;
    };
    if (balanced(b)) {
      seq = run_bip_core(x, y, b, u, v, limit, nodes);
    } else {
      Perm rho = b;
      std::swap(rho[inv[u]], rho[inv[v]]);
      if (!balanced(rho))
        throw InvariantError("neither orientation meets the balance bound");
      SwapSeq from_rho = run_bip_core(x, y, rho, u, v, limit, nodes);
      seq.assign(from_rho.rbegin(), from_rho.rend());
    }
  }
  validate_exchange(x, y, b, u, v, seq);
  return ExchangeResult{seq, ExchangeStrategy::bipartite_min_degree, nodes};
}

LadderOutcome exchange_ladder(const Graph& x, const Graph& y, const Perm& b,
                              int u, int v, int cap) {
  check_pair_inputs(x, y, b, u, v);
  const int n = x.vertex_count();
  Perm inv = inverse(b);

  if (y.has_edge(u, v) && x.has_edge(inv[u], inv[v])) {
    SwapSeq seq{mk(u, v)};
    validate_exchange(x, y, b, u, v, seq);
    return {ExchangeResult{seq, ExchangeStrategy::direct, 0}, ""};
  }
  if (auto res = common_neighbor_exchange(x, y, b, u, v)) return {*res, ""};
  if (auto res = path_conjugation_exchange(x, y, b, u, v)) return {*res, ""};
  if (bip_precondition_failure(x, y, b, u, v).empty())
    return {bipartite_min_degree_exchange(x, y, b, u, v), ""};
  if (n <= std::min(cap, kMaxStateCap)) {
    if (auto seq = exchangeable(x, y, b, u, v, cap)) {
      validate_exchange(x, y, b, u, v, *seq);
      return {ExchangeResult{*seq, ExchangeStrategy::bfs_fallback, 0}, ""};
    }
    return {std::nullopt,
            "not exchangeable: exhaustive state search found no sequence"};
  }
  return {std::nullopt,
          "state space exceeds the cap and no constructive strategy applies"};
}

std::string to_string(DichotomyBranch b) {
  switch (b) {
    case DichotomyBranch::exchangeable: return "exchangeable";
    case DichotomyBranch::wilsonian_split: return "wilsonian_split";
    case DichotomyBranch::violation: return "violation";
  }
  return "unknown";
}

DichotomyReport check_9_14_dichotomy(const Graph& g, const Graph& h,
                                     const Perm& t, int u, int v) {
  check_pair_inputs(g, h, t, u, v);
  const int m = g.vertex_count();
  if (m > 9) throw CapError("dichotomy probe supports at most 9 vertices");
  int delta = std::min(degree_stats(g).min_degree, degree_stats(h).min_degree);
  if (14 * delta < 9 * m + 14)
    throw GraphError("minimum degree " + std::to_string(delta) +
                     " is below the dichotomy bound 9m/14+1");
  Perm inv = inverse(t);
  if (!g.has_edge(inv[u], inv[v]))
    throw GraphError("swap positions must be adjacent in G");

  if (auto seq = exchangeable(g, h, t, u, v, 9)) {
    DichotomyReport rep;
    rep.branch = DichotomyBranch::exchangeable;
    rep.sequence = *seq;
    return rep;
  }

  for (int w = 0; w < m; ++w) {
    if (w == u || w == v) continue;
    if (!h.has_edge(w, u) || !h.has_edge(w, v)) continue;
    for (int q : h.neighbors(w)) {
      int qp = inv[q];
      if (!g.has_edge(qp, inv[u]) || !g.has_edge(qp, inv[v])) continue;
      for (int side : {u, v}) {
        // Positions of w's closed H-neighborhood minus the side label.
        std::vector<int> verts;
        for (int lab = 0; lab < m; ++lab)
          if (lab != side && (lab == w || h.has_edge(w, lab)))
            verts.push_back(inv[lab]);
        std::sort(verts.begin(), verts.end());
        Graph restricted = induced_subgraph(g, verts);
        auto comps = connected_components(restricted);
        auto comp_of = [&](int gv) {
          int local = static_cast<int>(
              std::lower_bound(verts.begin(), verts.end(), gv) -
              verts.begin());
          for (std::size_t k = 0; k < comps.size(); ++k)
            if (std::binary_search(comps[k].begin(), comps[k].end(), local))
              return static_cast<int>(k);
          return -1;
        };
        int kw = comp_of(inv[w]);
        int kq = comp_of(qp);
        if (kw == kq) continue;

        auto lift = [&](const std::vector<int>& comp) {
          std::vector<int> out;
          out.reserve(comp.size());
          for (int local : comp) out.push_back(verts[local]);
          return out;
        };
        std::vector<int> comp2 = lift(comps[kw]);
        std::vector<int> comp1 = lift(comps[kq]);
        comp1.push_back(inv[side]);
        std::sort(comp1.begin(), comp1.end());

        int c1 = static_cast<int>(comp1.size());
        int c2 = static_cast<int>(comp2.size());
        if (7 * c1 < 2 * m || 7 * c1 > 3 * m) continue;
        if (7 * c2 < 2 * m || 7 * c2 > 3 * m) continue;
        if (classify(induced_subgraph(g, comp1)).status !=
            WilsonStatus::wilsonian)
          continue;
        if (classify(induced_subgraph(g, comp2)).status !=
            WilsonStatus::wilsonian)
          continue;

        DichotomyReport rep;
        rep.branch = DichotomyBranch::wilsonian_split;
        rep.witness = DichotomyWitness{w, q, side, comp1, comp2};
        return rep;
      }
    }
  }
  return DichotomyReport{};
}

}  // namespace fsg

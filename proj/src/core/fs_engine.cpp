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

#include "fs_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace fsg {

namespace {

void check_sizes(const Graph& x, const Graph& y) {
  if (x.vertex_count() != y.vertex_count())
    throw GraphError("graphs have different vertex counts: " +
                     std::to_string(x.vertex_count()) + " vs " +
                     std::to_string(y.vertex_count()));
}

void check_cap(int n, int cap) {
  if (cap > kMaxStateCap)
    throw CapError("cap " + std::to_string(cap) + " exceeds hard limit " +
                   std::to_string(kMaxStateCap));
  if (n > cap)
    throw CapError("n=" + std::to_string(n) +
                   " exceeds the exact-analysis cap " + std::to_string(cap));
}

}  // namespace

std::string seq_to_string(const SwapSeq& seq) {
  std::ostringstream out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out << ' ';
    out << seq[i].first << ',' << seq[i].second;
  }
  return out.str();
}

SwapSeq seq_from_string(const std::string& text) {
  SwapSeq seq;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    auto comma = token.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == token.size())
      throw SequenceError("move token '" + token + "' is not a label pair",
                          seq.size());
    int a, b;
    try {
      std::size_t used_a = 0, used_b = 0;
      a = std::stoi(token.substr(0, comma), &used_a);
      b = std::stoi(token.substr(comma + 1), &used_b);
      if (used_a != comma || used_b != token.size() - comma - 1)
        throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw SequenceError("move token '" + token + "' is not a label pair",
                          seq.size());
    }
    seq.push_back({a, b});
  }
  return seq;
}

std::vector<FriendlyMove> friendly_neighbors(const Graph& x, const Graph& y,
                                             const Perm& b) {
  check_sizes(x, y);
  check_permutation(b);
  if (static_cast<int>(b.size()) != x.vertex_count())
    throw GraphError("bijection size mismatch");
  std::vector<FriendlyMove> out;
  for (const Edge& e : x.edges()) {
    int yu = b[e.first], yv = b[e.second];
    if (!y.adjacent_unchecked(yu, yv)) continue;
    Perm next = b;
    std::swap(next[e.first], next[e.second]);
    out.push_back({e, {std::min(yu, yv), std::max(yu, yv)}, std::move(next)});
  }
  return out;
}

bool is_isolated(const Graph& x, const Graph& y, const Perm& b) {
  check_sizes(x, y);
  check_permutation(b);
  if (static_cast<int>(b.size()) != x.vertex_count())
    throw GraphError("bijection size mismatch");
  for (const Edge& e : x.edges())
    if (y.adjacent_unchecked(b[e.first], b[e.second])) return false;
  return true;
}

std::string ComponentSummary::to_string() const {
  std::ostringstream out;
  out << "count " << component_count << " sizes ";
  for (std::size_t i = 0; i < size_multiset.size(); ++i) {
    if (i) out << ',';
    out << size_multiset[i].first << '*' << size_multiset[i].second;
  }
  return out.str();
}

namespace {

template <typename RankT>
ComponentSummary components_impl(const Graph& x, const Graph& y, int n,
                                 std::uint64_t total) {
  const std::vector<Edge> xe = x.edges();
  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  auto test_and_set = [&visited](std::uint64_t r) {
    std::uint64_t mask = 1ULL << (r % 64);
    std::uint64_t& word = visited[r / 64];
    if (word & mask) return true;
    word |= mask;
    return false;
  };

  std::map<std::uint64_t, std::uint64_t> size_counts;
  std::uint64_t component_count = 0, isolated_count = 0;
  std::vector<RankT> queue;
  Perm b(n);

  for (std::uint64_t start = 0; start < total; ++start) {
    if (test_and_set(start)) continue;
    ++component_count;
    std::uint64_t size = 0;
    queue.clear();
    queue.push_back(static_cast<RankT>(start));
    std::size_t head = 0;
    while (head < queue.size()) {
      std::uint64_t r = queue[head++];
      ++size;
      b = perm_unrank(r, n);
      for (const Edge& e : xe) {
        if (!y.adjacent_unchecked(b[e.first], b[e.second])) continue;
        std::swap(b[e.first], b[e.second]);
        std::uint64_t nr = perm_rank(b);
        std::swap(b[e.first], b[e.second]);
        if (!test_and_set(nr)) queue.push_back(static_cast<RankT>(nr));
      }
    }
    ++size_counts[size];
    if (size == 1) ++isolated_count;
  }

  ComponentSummary summary;
  summary.component_count = component_count;
  summary.isolated_count = isolated_count;
  summary.total_states = total;
  summary.size_multiset.assign(size_counts.begin(), size_counts.end());
  return summary;
}

}  // namespace

ComponentSummary components(const Graph& x, const Graph& y, int cap) {
  check_sizes(x, y);
  int n = x.vertex_count();
  check_cap(n, cap);
  std::uint64_t total = factorial(n);
  if (total <= 0xFFFFFFFFULL) return components_impl<std::uint32_t>(x, y, n, total);
  return components_impl<std::uint64_t>(x, y, n, total);
}

namespace {

struct IsolatedSearcher {
  const Graph& x;
  const Graph& y;
  int n;
  std::uint64_t budget;  // 0 = unlimited
  std::vector<int> order;     // X-vertices, descending degree
  std::vector<int> image;     // image[k] = Y-image of order[k], -1 unset
  std::vector<char> used;     // Y-vertex taken
  bool abandoned = false;
  IsolatedSearch result;

  // Places position k; returns true iff a witness was found.
  bool place(int k) {
    if (k == n) {
      Perm b(n);
      for (int i = 0; i < n; ++i) b[order[i]] = image[i];
      result.witness = b;
      return true;
    }
    int xv = order[k];
    for (int yv = 0; yv < n; ++yv) {
      if (used[yv]) continue;
      if (budget != 0 && result.attempts >= budget) {
        abandoned = true;
        return false;
      }
      ++result.attempts;
      bool clash = false;
      for (int j = 0; j < k; ++j) {
        if (x.adjacent_unchecked(xv, order[j]) &&
            y.adjacent_unchecked(yv, image[j])) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      image[k] = yv;
      used[yv] = 1;
      if (place(k + 1)) return true;
      used[yv] = 0;
      image[k] = -1;
      if (abandoned) return false;
    }
    return false;
  }
};

}  // namespace

IsolatedSearch find_isolated_vertex(const Graph& x, const Graph& y,
                                    std::uint64_t budget) {
  check_sizes(x, y);
  int n = x.vertex_count();
  IsolatedSearcher s{x, y, n, budget, {}, {}, {}, false, {}};
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&x](int a, int b) { return x.degree(a) > x.degree(b); });
  s.image.assign(n, -1);
  s.used.assign(n, 0);
  bool found = s.place(0);
  s.result.exhaustive = found || !s.abandoned;
  return s.result;
}

namespace {

struct ParentEntry {
  std::uint64_t parent;
  Move move;
};

using ParentMap = std::unordered_map<std::uint64_t, ParentEntry>;

// Walks the parent chain from rank back to the root, collecting moves.
std::vector<Move> chain_moves(const ParentMap& parents, std::uint64_t from) {
  std::vector<Move> moves;
  std::uint64_t cur = from;
  for (;;) {
    auto it = parents.find(cur);
    if (it == parents.end() || it->second.parent == cur) break;
    moves.push_back(it->second.move);
    cur = it->second.parent;
  }
  return moves;
}

}  // namespace

std::optional<SwapSeq> exchangeable(const Graph& x, const Graph& y,
                                    const Perm& b, int u, int v, int cap) {
  check_sizes(x, y);
  check_permutation(b);
  int n = x.vertex_count();
  if (static_cast<int>(b.size()) != n)
    throw GraphError("bijection size mismatch");
  if (u == v) throw GraphError("exchange targets must differ");
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw GraphError("exchange target out of range");
  check_cap(n, cap);

  Perm target = b;
  Perm binv = inverse(b);
  std::swap(target[binv[u]], target[binv[v]]);

  std::uint64_t start_rank = perm_rank(b);
  std::uint64_t target_rank = perm_rank(target);
  if (start_rank == target_rank) return SwapSeq{};

  const std::vector<Edge> xe = x.edges();
  // side 0 grows from b, side 1 from the target; moves are involutive so a
  // backward-tree edge replays with the same label pair.
  ParentMap parents[2];
  std::vector<std::uint64_t> frontier[2];
  parents[0][start_rank] = {start_rank, {-1, -1}};
  parents[1][target_rank] = {target_rank, {-1, -1}};
  frontier[0] = {start_rank};
  frontier[1] = {target_rank};

  auto build_result = [&](std::uint64_t meet) {
    std::vector<Move> forward = chain_moves(parents[0], meet);
    std::reverse(forward.begin(), forward.end());
    std::vector<Move> backward = chain_moves(parents[1], meet);
    SwapSeq seq = std::move(forward);
    seq.insert(seq.end(), backward.begin(), backward.end());
    return seq;
  };

  Perm cur(n);
  while (!frontier[0].empty() && !frontier[1].empty()) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<std::uint64_t> next;
    for (std::uint64_t r : frontier[side]) {
      cur = perm_unrank(r, n);
      for (const Edge& e : xe) {
        int yu = cur[e.first], yv = cur[e.second];
        if (!y.adjacent_unchecked(yu, yv)) continue;
        std::swap(cur[e.first], cur[e.second]);
        std::uint64_t nr = perm_rank(cur);
        std::swap(cur[e.first], cur[e.second]);
        if (parents[side].find(nr) == parents[side].end()) {
          parents[side][nr] = {r, {std::min(yu, yv), std::max(yu, yv)}};
          if (parents[1 - side].count(nr)) return build_result(nr);
          next.push_back(nr);
        }
      }
    }
    frontier[side] = std::move(next);
  }
  return std::nullopt;
}

int concordance_class(const Graph& x, const Graph& y, const Perm& b) {
  check_sizes(x, y);
  check_permutation(b);
  if (!x.has_partition() || !y.has_partition())
    throw GraphError("concordance classes need declared partitions");
  int n = x.vertex_count();
  if (static_cast<int>(b.size()) != n)
    throw GraphError("bijection size mismatch");

  std::vector<int> ax = x.part_vertices(0), bx = x.part_vertices(1);
  std::vector<int> ay = y.part_vertices(0), by = y.part_vertices(1);
  // Reference bijection: part-aligned order-preserving map when the part
  // sizes match, identity numbering otherwise. Labels are parities
  // relative to this reference, so equal labels reproduce concordance.
  Perm ref = identity_perm(n);
  if (ax.size() == ay.size()) {
    for (std::size_t i = 0; i < ax.size(); ++i) ref[ax[i]] = ay[i];
    for (std::size_t i = 0; i < bx.size(); ++i) ref[bx[i]] = by[i];
  }

  auto part_a_hits = [&y](const Perm& p, const std::vector<int>& part0) {
    int hits = 0;
    for (int v : part0)
      if (y.part(p[v]) == 0) ++hits;
    return hits;
  };
  int sign_term = perm_sign(compose(inverse(ref), b)) == -1 ? 1 : 0;
  int diff = part_a_hits(b, ax) - part_a_hits(ref, ax);
  return ((sign_term + diff) % 2 + 2) % 2;
}

SequenceResult apply_sequence(const Graph& x, const Graph& y, const Perm& b,
                              const SwapSeq& seq) {
  check_sizes(x, y);
  check_permutation(b);
  int n = x.vertex_count();
  if (static_cast<int>(b.size()) != n)
    throw GraphError("bijection size mismatch");
  Perm cur = b;
  Perm inv = inverse(b);
  std::vector<char> touched(n, 0);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    auto [u, v] = seq[k];
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw SequenceError("move labels invalid", k);
    if (!y.adjacent_unchecked(u, v))
      throw SequenceError("labels {" + std::to_string(u) + "," +
                              std::to_string(v) + "} are not a Y-edge",
                          k);
    int a = inv[u], c = inv[v];
    if (!x.adjacent_unchecked(a, c))
      throw SequenceError("preimages {" + std::to_string(a) + "," +
                              std::to_string(c) + "} are not an X-edge",
                          k);
    cur[a] = v;
    cur[c] = u;
    inv[u] = c;
    inv[v] = a;
    touched[u] = touched[v] = 1;
  }
  SequenceResult res;
  res.final = std::move(cur);
  for (int l = 0; l < n; ++l)
    if (touched[l]) res.involved.push_back(l);
  return res;
}

}  // namespace fsg

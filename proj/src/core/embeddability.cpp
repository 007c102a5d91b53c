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

#include "embeddability.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace fsg {

int beta(const Graph& g, const Graph& h, const std::vector<int>& j) {
  int m = g.vertex_count();
  if (h.vertex_count() != m)
    throw GraphError("pattern graphs differ in vertex count");
  std::vector<char> in(m, 0);
  for (int v : j) {
    if (v < 0 || v >= m) throw GraphError("subset index out of range");
    in[v] = 1;
  }
  int count = 0;
  for (int a = 0; a < m; ++a) {
    if (!in[a]) continue;
    for (int b = a + 1; b < m; ++b) {
      if (!in[b]) continue;
      if (g.has_edge(a, b)) ++count;
      if (h.has_edge(a, b)) ++count;
    }
  }
  return count;
}

namespace {

void check_instance(const EmbedInstance& inst) {
  int m = inst.g.vertex_count();
  if (inst.h.vertex_count() != m)
    throw GraphError("pattern graphs differ in vertex count");
  if (static_cast<int>(inst.sets.size()) != m)
    throw GraphError("one candidate set per pattern index required");
  int n = inst.x.vertex_count();
  if (inst.y.vertex_count() != n)
    throw GraphError("host graphs differ in vertex count");
  check_permutation(inst.sigma);
  if (static_cast<int>(inst.sigma.size()) != n)
    throw GraphError("bijection size does not match the host graphs");
  std::vector<char> taken(n, 0);
  for (const auto& set : inst.sets)
    for (int v : set) {
      if (v < 0 || v >= n) throw GraphError("candidate vertex out of range");
      if (taken[v]) throw GraphError("candidate sets are not disjoint");
      taken[v] = 1;
    }
}

}  // namespace

std::optional<EmbedWitness> find_embedding(const EmbedInstance& inst) {
  check_instance(inst);
  const int m = inst.g.vertex_count();
  Perm siginv = inverse(inst.sigma);

  std::vector<std::vector<int>> domains(inst.sets.size());
  for (int i = 0; i < m; ++i) {
    domains[i] = inst.sets[i];
    std::sort(domains[i].begin(), domains[i].end());
  }

  std::vector<int> chosen(m, -1);
  // iterative backtracking: cursor[i] = next candidate index to try
  std::vector<std::size_t> cursor(m, 0);
  int i = 0;
  while (i < m) {
    bool placed = false;
    while (cursor[i] < domains[i].size()) {
      int cand = domains[i][cursor[i]++];
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (inst.h.has_edge(i, j) && !inst.y.has_edge(cand, chosen[j]))
          ok = false;
        if (ok && inst.g.has_edge(i, j) &&
            !inst.x.has_edge(siginv[cand], siginv[chosen[j]]))
          ok = false;
      }
      if (ok) {
        chosen[i] = cand;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++i;
      if (i < m) cursor[i] = 0;
    } else {
      chosen[i] = -1;
      if (i == 0) return std::nullopt;
      --i;
    }
  }
  return EmbedWitness{chosen};
}

HypothesisReport check_hypothesis_inequality(const Graph& g, const Graph& h,
                                             double p,
                                             const std::vector<int>& q, int n,
                                             bool bipartite) {
  const int m = g.vertex_count();
  if (h.vertex_count() != m)
    throw GraphError("pattern graphs differ in vertex count");
  if (m > 20) throw CapError("subset enumeration supports at most 20 indices");
  if (static_cast<int>(q.size()) != m)
    throw GraphError("one set size per pattern index required");
  long long total = 0;
  int qmax = 0;
  for (int qi : q) {
    if (qi <= 0) throw GraphError("set sizes must be positive");
    total += qi;
    qmax = std::max(qmax, qi);
  }
  long long room = bipartite ? 2LL * n : n;
  if (total > room)
    throw GraphError("set sizes exceed the available vertices");
  if (p < 0.0 || p > 1.0) throw GraphError("p must lie in [0,1]");

  HypothesisReport report;
  report.threshold = 3.0 * std::ldexp(1.0, m + 1) * qmax *
                     std::log(bipartite ? 2.0 * n : 1.0 * n);

  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    int b = beta(g, h, subset);
    if (b == 0) continue;
    double lhs = std::pow(p, b);
    for (int i : subset) lhs *= q[i];
    SubsetReport sr{subset, b, lhs, lhs >= report.threshold};
    if (!sr.pass) {
      report.failing.push_back(subset);
      report.all_pass = false;
    }
    report.checked.push_back(std::move(sr));
  }
  return report;
}

namespace {

/**
 * Checks one sided split: sets on side 0 of the pattern partition inside
 * host part c, side 1 inside 1-c. Empty sets never constrain.
 */
bool split_fits(const std::vector<std::vector<int>>& sets,
                const std::vector<int>& pattern_part,
                const std::vector<int>& host_part, int c) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    int want = pattern_part[i] == 0 ? c : 1 - c;
    for (int v : sets[i])
      if (host_part[v] != want) return false;
  }
  return true;
}

}  // namespace

bool is_admissible(const std::vector<std::vector<int>>& sets,
                   const Perm& sigma, const Graph& g, const Graph& h,
                   const Graph& x, const Graph& y) {
  if (!g.has_partition() || !h.has_partition() || !x.has_partition() ||
      !y.has_partition())
    throw GraphError("admissibility needs declared partitions on all graphs");
  const int m = g.vertex_count();
  if (h.vertex_count() != m)
    throw GraphError("pattern graphs differ in vertex count");
  if (static_cast<int>(sets.size()) != m)
    throw GraphError("one candidate set per pattern index required");
  const int n = x.vertex_count();
  if (y.vertex_count() != n)
    throw GraphError("host graphs differ in vertex count");
  check_permutation(sigma);
  if (static_cast<int>(sigma.size()) != n)
    throw GraphError("bijection size does not match the host graphs");

  std::vector<int> hpart(m), gpart(m), ypart(n), xpart(n);
  for (int i = 0; i < m; ++i) {
    hpart[i] = h.part(i);
    gpart[i] = g.part(i);
  }
  for (int v = 0; v < n; ++v) {
    ypart[v] = y.part(v);
    xpart[v] = x.part(v);
  }

  Perm siginv = inverse(sigma);
  std::vector<std::vector<int>> preimages(m);
  for (int i = 0; i < m; ++i) {
    for (int v : sets[i]) {
      if (v < 0 || v >= n) throw GraphError("candidate vertex out of range");
      preimages[i].push_back(siginv[v]);
    }
  }

  bool y_ok = split_fits(sets, hpart, ypart, 0) ||
              split_fits(sets, hpart, ypart, 1);
  bool x_ok = split_fits(preimages, gpart, xpart, 0) ||
              split_fits(preimages, gpart, xpart, 1);
  return y_ok && x_ok;
}

std::string to_string(MajorityCase c) {
  switch (c) {
    case MajorityCase::I: return "I";
    case MajorityCase::II: return "II";
    case MajorityCase::III: return "III";
    case MajorityCase::IV: return "IV";
  }
  return "?";
}

MajorityCase majority_map_case(const Graph& x, const Graph& y,
                               const Perm& sigma, int u, int v) {
  const int n = x.vertex_count();
  if (y.vertex_count() != n)
    throw GraphError("host graphs differ in vertex count");
  if (!x.has_partition() || !y.has_partition())
    throw GraphError("majority classification needs declared partitions");
  check_permutation(sigma);
  if (static_cast<int>(sigma.size()) != n)
    throw GraphError("bijection size does not match the graphs");
  if (u < 0 || u >= n || v < 0 || v >= n || u == v)
    throw GraphError("swap labels must be two distinct Y-vertices");
  if (y.part(u) == y.part(v))
    throw GraphError("swap labels must lie in different parts of Y");
  Perm siginv = inverse(sigma);
  const int up = siginv[u], vp = siginv[v];
  if (!x.has_edge(up, vp))
    throw GraphError("swap positions must be adjacent in X");

  // at least half into part 0 counts as part 0
  auto forward_major = [&](int pos) {
    int zero = 0, deg = 0;
    for (int nb : x.neighbors(pos)) {
      ++deg;
      if (y.part(sigma[nb]) == 0) ++zero;
    }
    return 2 * zero >= deg ? 0 : 1;
  };
  auto backward_major = [&](int label) {
    int zero = 0, deg = 0;
    for (int nb : y.neighbors(label)) {
      ++deg;
      if (x.part(siginv[nb]) == 0) ++zero;
    }
    return 2 * zero >= deg ? 0 : 1;
  };

  bool same_y = forward_major(up) == forward_major(vp);
  bool same_x = backward_major(u) == backward_major(v);
  if (same_y && same_x) return MajorityCase::I;
  if (same_y) return MajorityCase::II;
  if (same_x) return MajorityCase::III;
  return MajorityCase::IV;
}

double estimate_embeddability(const Graph& g, const Graph& h,
                              const RandomModel& model,
                              const std::vector<int>& q, int trials,
                              std::uint64_t seed) {
  const int m = g.vertex_count();
  if (h.vertex_count() != m)
    throw GraphError("pattern graphs differ in vertex count");
  if (static_cast<int>(q.size()) != m)
    throw GraphError("one set size per pattern index required");
  if (trials <= 0) throw GraphError("trial count must be positive");
  int n = model.kind == RandomModel::Kind::bipartite_gnp ? 2 * model.size
                                                         : model.size;
  long long total = 0;
  for (int qi : q) {
    if (qi <= 0) throw GraphError("set sizes must be positive");
    total += qi;
  }
  if (total > n) throw GraphError("set sizes exceed the available vertices");

  int hits = 0;
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 gen = derive_stream(seed, 0x5e7, trial);
    RandomModel mx = model;
    mx.seed = gen.next();
    RandomModel my = model;
    my.seed = gen.next();
    EmbedInstance inst;
    inst.g = g;
    inst.h = h;
    inst.x = sample(mx);
    inst.y = sample(my);
    inst.sigma.resize(n);
    for (int i = 0; i < n; ++i) inst.sigma[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(inst.sigma[i],
                inst.sigma[static_cast<int>(gen.next_below(i + 1))]);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(pool[i], pool[static_cast<int>(gen.next_below(i + 1))]);
    inst.sets.resize(m);
    int at = 0;
    for (int i = 0; i < m; ++i) {
      inst.sets[i].assign(pool.begin() + at, pool.begin() + at + q[i]);
      std::sort(inst.sets[i].begin(), inst.sets[i].end());
      at += q[i];
    }
    if (find_embedding(inst)) ++hits;
  }
  return static_cast<double>(hits) / trials;
}

}  // namespace fsg

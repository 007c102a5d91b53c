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

#include "perm.hpp"

#include <sstream>

namespace fsg {

bool is_permutation(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

void check_permutation(const Perm& p) {
  if (!is_permutation(p))
    throw GraphError("not a permutation: " + perm_to_string(p));
}

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm inverse(const Perm& p) {
  Perm inv(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i]] = i;
  return inv;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size())
    throw GraphError("composing permutations of different sizes");
  Perm out(a.size());
  for (int i = 0; i < static_cast<int>(a.size()); ++i) out[i] = a[b[i]];
  return out;
}

int perm_sign(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20)
    throw GraphError("factorial argument " + std::to_string(n) +
                     " outside the 64-bit range 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t perm_rank(const Perm& p) {
  int n = static_cast<int>(p.size());
  factorial(n);  // range guard
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * static_cast<std::uint64_t>(n - i) + smaller;
  }
  return rank;
}

Perm perm_unrank(std::uint64_t r, int n) {
  if (r >= factorial(n))
    throw GraphError("rank " + std::to_string(r) + " out of range for n=" +
                     std::to_string(n));
  std::vector<int> code(n);
  for (int i = n - 1; i >= 0; --i) {
    code[i] = static_cast<int>(r % static_cast<std::uint64_t>(n - i));
    r /= static_cast<std::uint64_t>(n - i);
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  Perm p(n);
  for (int i = 0; i < n; ++i) {
    p[i] = pool[code[i]];
    pool.erase(pool.begin() + code[i]);
  }
  return p;
}

std::string perm_to_string(const Perm& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ',';
    out << p[i];
  }
  return out.str();
}

Perm perm_from_string(const std::string& text) {
  Perm p;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      p.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw GraphError("bad permutation token '" + token + "' in \"" + text +
                       "\"");
    }
  }
  check_permutation(p);
  return p;
}

}  // namespace fsg

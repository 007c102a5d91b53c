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
#include <string>
#include <vector>

#include "errors.hpp"

namespace fsg {

/** A bijection V(X) -> V(Y): perm[i] is the Y-image of X-vertex i. */
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);
void check_permutation(const Perm& p);

Perm identity_perm(int n);
Perm inverse(const Perm& p);
/** (a . b)(i) = a[b[i]]. */
Perm compose(const Perm& a, const Perm& b);
/** +1 for even, -1 for odd. */
int perm_sign(const Perm& p);

/** n! for n <= 20; larger n overflows 64 bits and is rejected. */
std::uint64_t factorial(int n);

/** Lehmer-code mixed-radix rank in [0, n!). Guards n <= 20. */
std::uint64_t perm_rank(const Perm& p);
Perm perm_unrank(std::uint64_t r, int n);

std::string perm_to_string(const Perm& p);
/** Parses comma-separated images, e.g. "2,0,1". */
Perm perm_from_string(const std::string& text);

}  // namespace fsg

// Copyright 2026 The hamcomp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Upper bounds on the compression of Hamilton cycles per graph family.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>

#include "hamcomp/graphs.hpp"
#include "hamcomp/landau.hpp"

namespace hamcomp {

// Q_n, n >= 3: a k-symmetric cycle has k = 2^i < 2n.
inline bool hypercube_k_allowed(int n, std::uint64_t k) {
  if (n < 3) return k <= 4;
  return k > 0 && (k & (k - 1)) == 0 && k < 2 * static_cast<std::uint64_t>(n);
}

inline std::uint64_t hypercube_upper_bound(int n) {
  if (n < 3) return n == 2 ? 4 : 1;
  std::uint64_t k = 1;
  while (2 * k < 2 * static_cast<std::uint64_t>(n)) k *= 2;
  return k;
}

// J_{n,k}: at most n, or 2n when n = 2k.
inline std::uint64_t johnson_upper_bound(int n, int k) {
  return n == 2 * k ? 2 * static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

// M_{2n+1}: at most 2(2n+1).
inline std::uint64_t middle_levels_upper_bound(int n) {
  return 2 * static_cast<std::uint64_t>(2 * n + 1);
}

// Pi_n, n >= 4: max{2 lambda0, lambda2} when n = 0,1 mod 4, else lambda(n).
inline BigInt permutahedron_upper_bound(int n) {
  if (n % 4 == 0 || n % 4 == 1) {
    BigInt a = 2 * landau0(n).value;
    IntPartition l2 = landau2(n);
    return l2.defined ? std::max(a, l2.value) : a;
  }
  return landau(n).value;
}

// A bound for the family of g when one is known.
inline std::optional<std::uint64_t> family_upper_bound(const Graph& g) {
  switch (g.family()) {
    case Family::kHypercube: return hypercube_upper_bound(g.n());
    case Family::kJohnson: return johnson_upper_bound(g.n(), g.k());
    case Family::kMiddleLevels: return middle_levels_upper_bound(g.k());
    case Family::kPermutahedron:
      if (g.n() >= 4) return permutahedron_upper_bound(g.n()).convert_to<std::uint64_t>();
      return std::nullopt;
    default: return std::nullopt;
  }
}

}  // namespace hamcomp

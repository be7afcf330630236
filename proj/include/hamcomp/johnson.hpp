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

// Johnson and middle levels graphs: paths through necklace representatives,
// n-symmetric balanced 1-track cycles for coprime (n, k), q-symmetric cycles
// otherwise, and symmetric middle levels cycles by lifted search.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hamcomp/cube.hpp"
#include "hamcomp/graphs.hpp"
#include "hamcomp/search.hpp"
#include "hamcomp/verify.hpp"

namespace hamcomp {

// Left shift of the first q of n bits: x_2 ... x_q x_1 x_{q+1} ... x_n.
inline Automorphism prefix_shift(int n, int q) {
  if (q < 1 || q > n) throw Error("prefix_shift: need 1 <= q <= n");
  std::vector<int> source(n);
  std::iota(source.begin(), source.end(), 0);
  for (int i = 0; i < q; ++i) source[i] = (i + 1) % q;
  return Automorphism::johnson(source, false);
}

inline Automorphism cyclic_shift(int n) { return prefix_shift(n, n); }

// x_1 ... x_7 -> complement of x_1 x_2 x_4 x_5 x_6 x_7 x_3 on M_7.
inline Automorphism middle7_ten() {
  return Automorphism::johnson({0, 1, 3, 4, 5, 6, 2}, true);
}

inline VertexWord ones_then_zeros(int ones, int zeros) {
  VertexWord w(ones + zeros, 0);
  std::fill(w.begin(), w.begin() + ones, Symbol{1});
  return w;
}

// A path in J_{n,k} through one vertex of every necklace, from 1^k 0^{n-k}
// to 1^{k-1} 0 1 0^{n-k-1}. For k = 1 and k = n - 1 there is one necklace
// and the path is the single vertex 1^k 0^{n-k}.
inline std::vector<VertexWord> necklace_path(int n, int k, const SearchBudget& budget = {}) {
  if (n < 2 || k < 1 || k >= n) throw Error("necklace_path: need n > k > 0");
  if (k == 1 || k == n - 1) return {ones_then_zeros(k, n - k)};
  Graph g = Graph::johnson(n, k);
  OrbitPartition part = orbit_partition(g, cyclic_shift(n));
  VertexWord end = ones_then_zeros(k - 1, n - k + 1);
  end[k] = 1;
  SearchResult r = orbit_rotation_path_search(
      part.orbits, part.orbit_of, [&g](Index x, std::vector<Index>& out) { g.neighbor_indices(x, out); },
      g.encode(ones_then_zeros(k, n - k)), g.encode(end), budget);
  if (!r.found()) {
    throw Error("necklace_path(" + std::to_string(n) + "," + std::to_string(k) +
                "): search " + status_name(r.status) + " after " + std::to_string(r.nodes) +
                " nodes");
  }
  std::vector<VertexWord> out;
  out.reserve(r.path.size());
  for (Index x : r.path) out.push_back(g.decode(x));
  return out;
}

// C := P, f(P), ..., f^{n-1}(P) with f the cyclic left shift.
inline HamCycle coprime_cycle(int n, int k, const SearchBudget& budget = {}) {
  if (n < 2 || k < 1 || k >= n) throw Error("coprime_cycle: need n > k > 0");
  if (std::gcd(n, k) != 1) throw Error("coprime_cycle: n and k must be coprime");
  Automorphism f = cyclic_shift(n);
  return HamCycle{Graph::johnson(n, k), lift_path(f, necklace_path(n, k, budget), n), "coprime",
                  f, static_cast<std::uint64_t>(n)};
}

// Largest q <= n with q > max(k, n-k) and gcd(q, l) = 1 for all
// l = k-(n-q), ..., k.
inline int q_of(int n, int k) {
  if (k < 1 || k >= n) throw Error("q_of: need n > k > 0");
  for (int q = n; q > std::max(k, n - k); --q) {
    bool ok = true;
    for (int l = k - (n - q); l <= k && ok; ++l) ok = std::gcd(q, l) == 1;
    if (ok) return q;
  }
  throw Error("q_of: no admissible q");
}

// A q-symmetric cycle with at most 1 + n - q tracks, q = q_of(n, k), under
// the left shift of the first q bits. Blocks R_l x_i follow the BRGC
// x_1, ..., x_N of Q_{n-q} with l = k - w(x_i); the last block is reversed
// and shifted so that it ends next to f(1^k 0^{n-k}).
inline HamCycle general_cycle(int n, int k, const SearchBudget& budget = {}) {
  int q = q_of(n, k);
  if (q == n) return coprime_cycle(n, k, budget);
  int r = n - q;
  std::vector<VertexWord> code = brgc_words(r);
  std::vector<std::vector<VertexWord>> paths(q + 1);
  std::vector<VertexWord> p;
  p.reserve(Graph::johnson(n, k).vertex_count() / q);
  for (std::size_t i = 0; i < code.size(); ++i) {
    int weight = std::accumulate(code[i].begin(), code[i].end(), 0);
    int l = k - weight;
    if (paths[l].empty()) paths[l] = necklace_path(q, l, budget);
    std::vector<VertexWord> block = paths[l];
    if (i + 1 == code.size()) {
      for (VertexWord& w : block) {
        std::reverse(w.begin(), w.end());
        std::rotate(w.begin(), w.begin() + (q - l), w.end());
      }
    }
    for (const VertexWord& w : block) p.push_back(concat(w, code[i]));
  }
  Automorphism f = prefix_shift(n, q);
  return HamCycle{Graph::johnson(n, k), lift_path(f, p, q), "general", f,
                  static_cast<std::uint64_t>(q)};
}

// A symmetric cycle of M_{2n+1} by lifted search; f defaults to the cyclic
// left shift of all 2n+1 bits.
inline HamCycle middle_levels_cycle(int n, const SearchBudget& budget = {}) {
  Graph g = Graph::middle_levels(n);
  LiftResult r = lifted_cycle_search(g, cyclic_shift(2 * n + 1), budget);
  if (!r.found()) throw Error("middle_levels_cycle: search " + status_name(r.status));
  r.cycle->construction = "middle_shift";
  return *r.cycle;
}

inline HamCycle middle_levels_cycle(int n, const Automorphism& f, const SearchBudget& budget = {}) {
  Graph g = Graph::middle_levels(n);
  LiftResult r = lifted_cycle_search(g, f, budget);
  if (!r.found()) throw Error("middle_levels_cycle: search " + status_name(r.status));
  r.cycle->construction = "middle_lifted";
  return *r.cycle;
}

}  // namespace hamcomp

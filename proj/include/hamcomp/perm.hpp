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

// Symmetric Hamilton cycles in permutahedra: the Steinhaus-Johnson-Trotter
// cycle, Hamilton-laceable paths, multiset permutation graphs G(a), the
// value-rotating automorphism f_a with its orbit-representative path, the
// lcm(a)-symmetric cycle built on top of it, and a balanced 1-track cycle
// in Pi_n^+.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hamcomp/cube.hpp"
#include "hamcomp/graphs.hpp"
#include "hamcomp/landau.hpp"
#include "hamcomp/search.hpp"
#include "hamcomp/verify.hpp"

namespace hamcomp {

using Composition = std::vector<int>;

inline std::string composition_string(const Composition& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

inline int composition_sum(const Composition& a) {
  int n = 0;
  for (int p : a) {
    if (p < 1) throw Error("composition " + composition_string(a) + ": parts must be positive");
    n += p;
  }
  return n;
}

inline std::uint64_t composition_lcm(const Composition& a) {
  std::uint64_t l = 1;
  for (int p : a) l = std::lcm(l, static_cast<std::uint64_t>(p));
  return l;
}

inline VertexWord identity_perm(int n) {
  VertexWord w(n);
  std::iota(w.begin(), w.end(), Symbol{1});
  return w;
}

// Number of inversions mod 2.
inline int parity(const VertexWord& x) {
  int inv = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) inv ^= x[i] > x[j];
  }
  return inv;
}

// x and y differ by swapping two neighboring entries.
inline bool differ_by_adjacent_swap(const VertexWord& x, const VertexWord& y) {
  if (x.size() != y.size()) return false;
  std::size_t i = 0;
  while (i < x.size() && x[i] == y[i]) ++i;
  if (i + 1 >= x.size()) return false;
  return x[i] == y[i + 1] && x[i + 1] == y[i] &&
         std::equal(x.begin() + i + 2, x.end(), y.begin() + i + 2);
}

// The Steinhaus-Johnson-Trotter cycle: n is inserted into each entry of
// the cycle for n-1, alternately right to left and left to right.
inline std::vector<VertexWord> sjt_words(int n) {
  if (n < 1) throw Error("sjt: need n >= 1");
  std::vector<VertexWord> cur{{1}};
  for (int m = 2; m <= n; ++m) {
    std::vector<VertexWord> next;
    next.reserve(cur.size() * m);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      for (int s = 0; s < m; ++s) {
        int pos = j % 2 == 0 ? m - 1 - s : s;
        VertexWord w = cur[j];
        w.insert(w.begin() + pos, static_cast<Symbol>(m));
        next.push_back(std::move(w));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// The rotation symmetry of the SJT cycle: (rev, 231) for n = 3,
// (rev, 2314) for n = 4 and (id, 31245...n) of order 3 for n >= 5.
inline Automorphism sjt_automorphism(int n) {
  if (n < 3) throw Error("sjt: need n >= 3");
  if (n == 3) return Automorphism::permutahedron(true, {2, 3, 1});
  if (n == 4) return Automorphism::permutahedron(true, {2, 3, 1, 4});
  VertexWord pi = identity_perm(n);
  pi[0] = 3;
  pi[1] = 1;
  pi[2] = 2;
  return Automorphism::permutahedron(false, pi);
}

inline HamCycle sjt(int n) {
  if (n < 3) throw Error("sjt: need n >= 3");
  return HamCycle{Graph::permutahedron(n), sjt_words(n), "sjt", sjt_automorphism(n),
                  n <= 4 ? 6u : 3u};
}

// u (x) (x^1, ..., x^m): the j-th occurrence of value i in u is replaced by
// x^i_j. Block i holds the values b_i+1 .. b_i+a_i.
inline VertexWord mix(const VertexWord& u, const std::vector<VertexWord>& xs) {
  std::size_t m = xs.size();
  std::vector<int> count(m + 1, 0);
  for (Symbol s : u) {
    if (s < 1 || s > m) throw Error("mix: value " + std::to_string(s) + " outside 1.." + std::to_string(m));
    ++count[s];
  }
  int base = 0;
  for (std::size_t i = 0; i < m; ++i) {
    int a = static_cast<int>(xs[i].size());
    if (count[i + 1] != a) throw Error("mix: block " + std::to_string(i + 1) + " size mismatch");
    std::vector<bool> seen(a, false);
    for (Symbol v : xs[i]) {
      int r = static_cast<int>(v) - base - 1;
      if (r < 0 || r >= a || seen[r]) {
        throw Error("mix: block " + std::to_string(i + 1) + " is not a permutation of its values");
      }
      seen[r] = true;
    }
    base += a;
  }
  std::vector<std::size_t> next(m + 1, 0);
  VertexWord out(u.size());
  for (std::size_t p = 0; p < u.size(); ++p) out[p] = xs[u[p] - 1][next[u[p]]++];
  return out;
}

// The lexicographically smallest a-permutation 1^{a_1} ... m^{a_m}.
inline VertexWord identity_multiset(const Composition& a) {
  VertexWord u;
  for (std::size_t i = 0; i < a.size(); ++i) u.insert(u.end(), a[i], static_cast<Symbol>(i + 1));
  return u;
}

// The blocks y with x = ide(a) (x) y.
inline std::vector<VertexWord> split_blocks(const VertexWord& x, const Composition& a) {
  std::vector<VertexWord> y;
  std::size_t base = 0;
  for (int p : a) {
    y.emplace_back(x.begin() + base, x.begin() + base + p);
    base += p;
  }
  return y;
}

namespace internal {

struct LaceMemo {
  std::mutex mu;
  std::map<std::pair<VertexWord, VertexWord>, std::vector<VertexWord>> paths;
};

inline LaceMemo& lace_memo() {
  static LaceMemo memo;
  return memo;
}

}  // namespace internal

// A Hamilton path of Pi_X from x to y. Needs opposite parity for |X| = 2
// or |X| >= 4 and neighboring x, y for |X| = 3. Results are cached by the
// endpoints relabeled to 1..|X|.
inline std::vector<VertexWord> lace_path(const VertexWord& x, const VertexWord& y,
                                         const SearchBudget& budget = {}) {
  if (x.size() != y.size() || x.empty()) throw Error("lace_path: endpoint lengths differ");
  VertexWord values = x;
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw Error("lace_path: repeated value");
  }
  VertexWord ys = y;
  std::sort(ys.begin(), ys.end());
  if (ys != values) throw Error("lace_path: endpoints permute different sets");
  int s = static_cast<int>(x.size());
  auto relabel = [&](const VertexWord& w) {
    VertexWord r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      r[i] = static_cast<Symbol>(std::lower_bound(values.begin(), values.end(), w[i]) - values.begin() + 1);
    }
    return r;
  };
  VertexWord rx = relabel(x);
  VertexWord ry = relabel(y);
  if (s == 1) return {x};
  if (s == 3 && !differ_by_adjacent_swap(rx, ry)) {
    throw Error("lace_path: in Pi_3 the endpoints must differ by an adjacent transposition");
  }
  if (parity(rx) == parity(ry)) throw Error("lace_path: endpoints must have opposite parity");

  std::vector<VertexWord> path;
  auto& memo = internal::lace_memo();
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.paths.find({rx, ry});
    if (it != memo.paths.end()) path = it->second;
  }
  if (path.empty()) {
    Graph g = Graph::permutahedron(s);
    SearchResult r = rotation_path_search(
        g.vertex_count(), [&g](Index v, std::vector<Index>& out) { g.neighbor_indices(v, out); },
        g.encode(rx), g.encode(ry), /*close=*/false, budget);
    if (!r.found()) {
      throw Error("lace_path: search " + status_name(r.status) + " after " +
                  std::to_string(r.nodes) + " nodes");
    }
    for (Index i : r.path) path.push_back(g.decode(i));
    std::lock_guard<std::mutex> lock(memo.mu);
    memo.paths.emplace(std::make_pair(rx, ry), path);
  }
  for (VertexWord& w : path) {
    for (Symbol& c : w) c = values[c - 1];
  }
  return path;
}

struct GaPath {
  std::vector<VertexWord> words;
  bool cycle = false;
};

// Hamilton path from 1^{a_1} 2^{a_2} to 2^{a_2} 1^{a_1} in G(a) when m = 2
// and both parts are odd; a Hamilton cycle starting at `start` (default
// ide(a)) when m >= 3 and at least two parts are odd.
inline GaPath ga_ham(const Composition& a, VertexWord start = {},
                     const SearchBudget& budget = {}) {
  int n = composition_sum(a);
  std::size_t m = a.size();
  std::string name = "ga_ham" + composition_string(a);
  VertexWord u = identity_multiset(a);
  if (m == 1) return {{u}, false};
  int odd = 0;
  for (int p : a) odd += p % 2;
  if (m == 2 && odd != 2) throw Error(name + ": two parts must both be odd");
  if (m >= 3) {
    if (odd < 2) throw Error(name + ": needs at least two odd parts");
    Composition sorted = a;
    std::sort(sorted.begin(), sorted.end());
    if (m == 3 && n % 2 == 0 && sorted == Composition{1, 1, n - 2}) {
      throw Error(name + ": G(a) has no Hamilton cycle for {n-2,1,1} with n even");
    }
  }
  std::vector<VertexWord> words;
  VertexWord w = u;
  do {
    words.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::map<VertexWord, Index> index;
  for (Index i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  auto neighbors = [&](Index x, std::vector<Index>& out) {
    out.clear();
    VertexWord v = words[x];
    for (int i = 0; i + 1 < n; ++i) {
      if (v[i] == v[i + 1]) continue;
      std::swap(v[i], v[i + 1]);
      out.push_back(index.at(v));
      std::swap(v[i], v[i + 1]);
    }
  };
  SearchResult r;
  GaPath out;
  if (m == 2) {
    VertexWord end(u.rbegin(), u.rend());
    r = rotation_path_search(words.size(), neighbors, index.at(u), index.at(end), false, budget);
  } else {
    if (start.empty()) start = u;
    auto it = index.find(start);
    if (it == index.end()) throw Error(name + ": start is not an a-permutation");
    r = rotation_path_search(words.size(), neighbors, it->second, it->second, true, budget);
    out.cycle = true;
  }
  if (!r.found()) throw Error(name + ": search " + status_name(r.status));
  for (Index i : r.path) out.words.push_back(words[i]);
  return out;
}

// f_a = (id, f_1 ... f_m) with f_i the cycle (b_i+1, ..., b_i+a_i) on values.
inline Automorphism fa_automorphism(const Composition& a) {
  int n = composition_sum(a);
  std::vector<int> source(n);
  std::iota(source.begin(), source.end(), 0);
  std::vector<int> values(n + 1, 0);
  int base = 0;
  for (int p : a) {
    for (int j = 1; j <= p; ++j) values[base + j] = base + j % p + 1;
    base += p;
  }
  return Automorphism::positions(source, values);
}

enum class PinShape { kNone, kOddCoprime, kTwoPower };

// (i) pairwise coprime odd parts with a_1 >= 3; (ii) a_1 = 2, a_2 = 2^c and
// a_2, ..., a_m pairwise coprime.
inline PinShape pin_shape(const Composition& a) {
  if (a.empty()) return PinShape::kNone;
  auto coprime_from = [&](std::size_t first) {
    for (std::size_t i = first; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (std::gcd(a[i], a[j]) != 1) return false;
      }
    }
    return true;
  };
  bool odd = std::all_of(a.begin(), a.end(), [](int p) { return p % 2 == 1; });
  if (odd && a[0] >= 3 && coprime_from(0)) return PinShape::kOddCoprime;
  if (a.size() >= 2 && a[0] == 2 && a[1] >= 2 && (a[1] & (a[1] - 1)) == 0 && coprime_from(1)) {
    return PinShape::kTwoPower;
  }
  return PinShape::kNone;
}

// A path in Pi_n from 1...n to a neighbor of f_a(1...n) through one vertex
// of each f_a-orbit of the form ide(a) (x) y. Built by induction on m; the
// value n stays last in the base cases.
inline std::vector<VertexWord> id_mix_path(const Composition& a, const SearchBudget& budget = {}) {
  PinShape shape = pin_shape(a);
  std::string name = "id_mix_path" + composition_string(a);
  if (shape == PinShape::kNone) {
    throw Error(name + ": needs pairwise coprime odd parts with a_1 >= 3, or a_1 = 2, a_2 = 2^c "
                "and pairwise coprime a_2..a_m");
  }
  int n = composition_sum(a);
  std::size_t m = a.size();
  auto word = [](std::initializer_list<int> head, int from, int to, std::initializer_list<int> tail) {
    VertexWord w;
    for (int v : head) w.push_back(static_cast<Symbol>(v));
    for (int v = from; v <= to; ++v) w.push_back(static_cast<Symbol>(v));
    for (int v : tail) w.push_back(static_cast<Symbol>(v));
    return w;
  };
  auto append = [](VertexWord w, Symbol v) {
    w.push_back(v);
    return w;
  };
  if (shape == PinShape::kOddCoprime && m == 1) {
    if (n == 1) throw Error(name + ": needs a_1 >= 3");
    std::vector<VertexWord> p = lace_path(word({}, 1, n - 1, {}), word({}, 2, n - 1, {1}), budget);
    for (VertexWord& w : p) w.push_back(static_cast<Symbol>(n));
    return p;
  }
  if (shape == PinShape::kTwoPower && m == 2) {
    if (n == 4) return {{1, 2, 3, 4}, {2, 1, 3, 4}};
    std::vector<VertexWord> q;
    VertexWord y = word({4, 3}, 5, n - 1, {});
    for (const VertexWord& w : lace_path(word({}, 3, n - 1, {}), y, budget)) {
      q.push_back(append(concat(VertexWord{1, 2}, w), static_cast<Symbol>(n)));
    }
    for (const VertexWord& w : lace_path(y, word({}, 4, n - 1, {3}), budget)) {
      q.push_back(append(concat(VertexWord{2, 1}, w), static_cast<Symbol>(n)));
    }
    return q;
  }
  Composition prefix(a.begin(), a.end() - 1);
  std::vector<VertexWord> z = id_mix_path(prefix, budget);
  int am = a.back();
  int np = n - am;
  std::vector<VertexWord> q;
  if (am == 1) {
    for (VertexWord& w : z) q.push_back(append(w, static_cast<Symbol>(n)));
    return q;
  }
  if (z.size() % 2) throw Error(name + ": odd number of prefix representatives");
  std::vector<VertexWord> p = lace_path(word({}, np + 1, n - 1, {}),
                                        word({np + 2, np + 1}, np + 3, n - 1, {}), budget);
  std::vector<VertexWord> p2 = lace_path(word({np + 1}, np + 3, n, {}),
                                         word({}, np + 3, n, {np + 1}), budget);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i + 1 == z.size()) {
      for (const VertexWord& w : p2) {
        q.push_back(concat(append(z[i], static_cast<Symbol>(np + 2)), w));
      }
      break;
    }
    if (i % 2 == 0) {
      for (const VertexWord& w : p) q.push_back(append(concat(z[i], w), static_cast<Symbol>(n)));
    } else {
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        q.push_back(append(concat(z[i], *it), static_cast<Symbol>(n)));
      }
    }
  }
  return q;
}

// An lcm(a)-symmetric Hamilton cycle of Pi_n under f_a, for a of shape (i)
// or of shape (ii) with m >= 4. Each representative y_i is blown up along a
// Hamilton path of G(a), alternating direction.
inline HamCycle pin_cycle(const Composition& a, const SearchBudget& budget = {}) {
  PinShape shape = pin_shape(a);
  std::string name = "pin_cycle" + composition_string(a);
  int n = composition_sum(a);
  std::size_t m = a.size();
  if (shape == PinShape::kNone) {
    throw Error(name + ": needs pairwise coprime odd parts with a_1 >= 3, or a_1 = 2, a_2 = 2^c "
                "and pairwise coprime a_2..a_m");
  }
  if (shape == PinShape::kTwoPower && m < 4) throw Error(name + ": shape with a_1 = 2 needs m >= 4");
  if (n < 3) throw Error(name + ": needs n >= 3");
  Automorphism f = fa_automorphism(a);
  std::uint64_t k = composition_lcm(a);
  std::vector<VertexWord> q = id_mix_path(a, budget);
  if (m == 1) return HamCycle{Graph::permutahedron(n), lift_path(f, q, k), "pin", f, k};

  std::vector<std::vector<VertexWord>> y;
  for (const VertexWord& x : q) y.push_back(split_blocks(x, a));
  VertexWord u = identity_multiset(a);
  if (shape == PinShape::kTwoPower && a[1] == 2) {
    u = {1, 1};
    for (std::size_t i = 2; i < m; ++i) u.insert(u.end(), a[i], static_cast<Symbol>(i + 1));
    u.insert(u.end(), 2, Symbol{2});
  }
  std::vector<VertexWord> r1, r2;  // paths from u to v and to v'
  if (m == 2) {
    r1 = ga_ham(a, {}, budget).words;
  } else {
    std::vector<VertexWord> c = ga_ham(a, u, budget).words;
    r1.push_back(c[0]);
    r1.insert(r1.end(), c.rbegin(), c.rend() - 1);
    r2 = c;
  }
  if (q.size() % 2) throw Error(name + ": odd number of orbit representatives");
  std::vector<VertexWord> p;
  for (std::size_t i = 0; i < q.size(); i += 2) {
    const std::vector<VertexWord>* r = &r1;
    if (!r2.empty() && !differ_by_adjacent_swap(mix(r1.back(), y[i]), mix(r1.back(), y[i + 1]))) {
      r = &r2;
    }
    for (const VertexWord& w : *r) p.push_back(mix(w, y[i]));
    for (auto it = r->rbegin(); it != r->rend(); ++it) p.push_back(mix(*it, y[i + 1]));
  }
  return HamCycle{Graph::permutahedron(n), lift_path(f, p, k), "pin", f, k};
}

// The composition used for Pi_n: a lambda_0 witness of odd prime powers,
// or a lambda_2 witness (2, 2^c, odd prime powers, 1s) when it is larger
// and has at least four parts.
inline Composition best_perm_composition(int n) {
  if (n < 3) throw Error("best_perm_cycle: need n >= 3");
  IntPartition l0 = landau0(n);
  IntPartition l2 = landau2(n);
  if (l2.defined && l2.value > l0.value && l2.parts.size() >= 4) {
    Composition a{2};
    std::vector<int> evens;
    Composition rest;
    for (int p : l2.parts) (p % 2 == 0 ? evens : rest).push_back(p);
    std::sort(evens.begin(), evens.end());
    a.push_back(evens.back());
    a.insert(a.end(), rest.begin(), rest.end());
    return a;
  }
  return Composition(l0.parts.begin(), l0.parts.end());
}

inline HamCycle best_perm_cycle(int n, const SearchBudget& budget = {}) {
  HamCycle c = pin_cycle(best_perm_composition(n), budget);
  c.construction = "best";
  return c;
}

// An n-symmetric, 1-track, balanced Hamilton cycle of Pi_n^+ for odd n
// under the cyclic left shift of positions.
inline HamCycle plus_one_track(int n, const SearchBudget& budget = {}) {
  if (n < 3 || n % 2 == 0) throw Error("plus_one_track: need odd n >= 3");
  VertexWord x = identity_perm(n - 1);
  VertexWord y = x;
  std::rotate(y.begin(), y.begin() + 1, y.end());
  std::vector<VertexWord> p = lace_path(x, y, budget);
  for (VertexWord& w : p) w.push_back(static_cast<Symbol>(n));
  std::vector<int> source(n);
  for (int i = 0; i < n; ++i) source[i] = (i + 1) % n;
  std::vector<int> values(n + 1);
  std::iota(values.begin(), values.end(), 0);
  Automorphism f = Automorphism::positions(source, values);
  return HamCycle{Graph::permutahedron_plus(n), lift_path(f, p, n), "plus_one_track", f,
                  static_cast<std::uint64_t>(n)};
}

}  // namespace hamcomp

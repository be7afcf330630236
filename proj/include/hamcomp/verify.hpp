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

// Independent checks on Hamilton cycles: validity, compression, symmetry
// under a given automorphism, LCF distance sets, tracks and balance, plus
// the lifted search that turns an orbit-representative path into a
// symmetric cycle.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamcomp/graphs.hpp"
#include "hamcomp/search.hpp"

namespace hamcomp {

struct HamCycle {
  Graph graph;
  std::vector<VertexWord> vertices;
  std::string construction;
  std::optional<Automorphism> automorphism;
  std::optional<std::uint64_t> claimed_k;

  std::size_t size() const { return vertices.size(); }
};

struct CycleReport {
  bool ok = true;
  std::size_t index = 0;  // first offending position
  std::string reason;
  explicit operator bool() const { return ok; }
};

inline CycleReport validate_cycle(const HamCycle& c) {
  const Graph& g = c.graph;
  auto fail = [](std::size_t i, std::string why) {
    CycleReport r;
    r.ok = false;
    r.index = i;
    r.reason = std::move(why);
    return r;
  };
  std::size_t n = c.vertices.size();
  if (n != g.vertex_count()) {
    return fail(std::min<std::size_t>(n, g.vertex_count()),
                "length " + std::to_string(n) + ", expected " + std::to_string(g.vertex_count()));
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (auto why = g.invalid_reason(c.vertices[i])) return fail(i, "invalid vertex: " + *why);
    Index x = g.encode(c.vertices[i]);
    if (seen[x]) return fail(i, "repeated vertex");
    seen[x] = true;
  }
  if (n < 2) return {};
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    if (!g.adjacent(c.vertices[i], c.vertices[j])) {
      return fail(i, "positions " + std::to_string(i) + " and " + std::to_string(j) +
                         " are not adjacent");
    }
  }
  return {};
}

inline void require_valid(const HamCycle& c) {
  CycleReport r = validate_cycle(c);
  if (!r) throw Error("not a Hamilton cycle: " + r.reason + " at index " + std::to_string(r.index));
}

// True when f is an automorphism of g by the shape of its payload alone:
// coordinate permutations with a uniform complement on Johnson and middle
// levels graphs, any (pi, z) on hypercubes, dihedral position maps on
// permutahedra, and affine maps whose linear part fixes the connection set.
inline bool structurally_automorphic(const Graph& g, const Automorphism& f) {
  if (!f.fits(g)) return false;
  switch (g.family()) {
    case Family::kHypercube: return true;
    case Family::kJohnson:
    case Family::kMiddleLevels: {
      const auto& z = f.flips();
      bool uniform = std::all_of(z.begin(), z.end(), [&](Symbol b) { return b == z[0]; });
      if (!uniform) return false;
      return g.family() == Family::kMiddleLevels || !z[0] || g.n() == 2 * g.k();
    }
    case Family::kPermutahedron: {
      int n = g.n();
      const auto& s = f.source();
      bool id = true, rev = true;
      for (int i = 0; i < n; ++i) {
        id = id && s[i] == i;
        rev = rev && s[i] == n - 1 - i;
      }
      return id || rev;
    }
    case Family::kPermutahedronPlus: {
      int n = g.n();
      const auto& s = f.source();
      if (n <= 3) return true;
      bool up = true, down = true;
      for (int i = 0; i < n; ++i) {
        up = up && s[i] == (s[0] + i) % n;
        down = down && s[i] == ((s[0] - i) % n + n) % n;
      }
      return up || down;
    }
    case Family::kAbelianCayley: {
      const auto& conn = g.connection_set();
      for (const VertexWord& s : conn) {
        VertexWord t(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
          int m = g.moduli()[i];
          t[i] = static_cast<Symbol>(((f.signs()[i] * static_cast<int>(s[i])) % m + m) % m);
        }
        if (std::find(conn.begin(), conn.end(), t) == conn.end()) return false;
      }
      return true;
    }
    case Family::kExplicit: return false;
  }
  return false;
}

namespace internal {

// Cycle positions of every vertex index.
struct CyclePositions {
  std::vector<Index> index_at;  // index of the i-th cycle vertex
  std::vector<Index> pos_of;    // cycle position of vertex index x

  explicit CyclePositions(const HamCycle& c) {
    std::size_t n = c.size();
    index_at.resize(n);
    pos_of.assign(c.graph.vertex_count(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      index_at[i] = c.graph.encode(c.vertices[i]);
      pos_of[index_at[i]] = i;
    }
  }
};

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Whether x_i -> x_{i+s} maps every edge of the graph to an edge.
inline bool rotation_preserves_edges(const HamCycle& c, const CyclePositions& p,
                                     std::uint64_t s) {
  const Graph& g = c.graph;
  std::size_t n = c.size();
  std::vector<Index> nb;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexWord& a = c.vertices[(i + s) % n];
    g.neighbor_indices(c.vertices[i], nb);
    for (Index y : nb) {
      const VertexWord& b = c.vertices[(p.pos_of[y] + s) % n];
      if (!g.adjacent(a, b)) return false;
    }
  }
  return true;
}

}  // namespace internal

// True iff apply(f, x_i) = x_{i+N/k} for every i.
inline bool check_symmetric(const HamCycle& c, const Automorphism& f, std::uint64_t k) {
  std::size_t n = c.size();
  if (k == 0 || n % k) throw Error("check_symmetric: k must divide the cycle length");
  require_fit(c.graph, f);
  std::size_t step = n / k;
  VertexWord img;
  for (std::size_t i = 0; i < n; ++i) {
    f.apply_into(c.vertices[i], img);
    if (img != c.vertices[(i + step) % n]) return false;
  }
  return true;
}

// The largest k dividing N such that rotating the cycle by N/k positions is
// an automorphism. Steps are tried in increasing order. When the cycle
// carries an automorphism that is one by its shape, the step it realizes is
// accepted after checking it agrees with the rotation on every vertex.
inline std::uint64_t cycle_compression(const HamCycle& c) {
  require_valid(c);
  std::uint64_t n = c.size();
  if (n <= 2 || c.graph.is_complete()) return n;
  internal::CyclePositions p(c);
  std::uint64_t cert = 0;
  if (c.automorphism && structurally_automorphic(c.graph, *c.automorphism)) {
    std::uint64_t t = p.pos_of[c.graph.encode(c.automorphism->apply(c.vertices[0]))];
    if (t > 0 && n % t == 0 && check_symmetric(c, *c.automorphism, n / t)) cert = t;
  }
  for (std::uint64_t s : internal::divisors(n)) {
    if (s == n) return 1;
    if (cert && s % cert == 0) return n / s;
    if (internal::rotation_preserves_edges(c, p, s)) return n / s;
  }
  return 1;
}

// Distances from x_i to its neighbors other than x_{i-1} and x_{i+1},
// normalized to (-N/2, N/2] and sorted.
using DistanceSet = std::vector<long long>;

struct Lcf {
  std::vector<DistanceSet> sets;
  std::size_t period = 0;

  // "(7,-3,3,-7)^6" for cubic graphs, "({4,6},{-6,6})^5" otherwise.
  std::string to_string() const {
    bool single = std::all_of(sets.begin(), sets.end(),
                              [](const DistanceSet& d) { return d.size() == 1; });
    std::string s = "(";
    for (std::size_t i = 0; i < period; ++i) {
      if (i) s += ",";
      if (single) {
        s += std::to_string(sets[i][0]);
        continue;
      }
      s += "{";
      for (std::size_t j = 0; j < sets[i].size(); ++j) {
        s += (j ? "," : "") + std::to_string(sets[i][j]);
      }
      s += "}";
    }
    s += ")";
    if (period && sets.size() / period > 1) s += "^" + std::to_string(sets.size() / period);
    return s;
  }
};

inline std::size_t smallest_period(const std::vector<DistanceSet>& seq) {
  std::size_t n = seq.size();
  for (std::uint64_t p : internal::divisors(n)) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = seq[i] == seq[(i + p) % n];
    if (ok) return p;
  }
  return n;
}

inline Lcf lcf(const HamCycle& c) {
  require_valid(c);
  internal::CyclePositions p(c);
  long long n = static_cast<long long>(c.size());
  Lcf out;
  out.sets.resize(c.size());
  std::vector<Index> nb;
  for (long long i = 0; i < n; ++i) {
    c.graph.neighbor_indices(c.vertices[i], nb);
    DistanceSet& d = out.sets[i];
    for (Index y : nb) {
      long long delta = ((static_cast<long long>(p.pos_of[y]) - i) % n + n) % n;
      if (2 * delta > n) delta -= n;
      if (n > 2 && delta != 1 && delta != -1) d.push_back(delta);
    }
    std::sort(d.begin(), d.end());
  }
  out.period = smallest_period(out.sets);
  return out;
}

// Whether seq equals block repeated, up to rotating the start and reversing
// the direction of traversal (which negates every distance).
inline bool lcf_equivalent(const std::vector<DistanceSet>& seq,
                           const std::vector<DistanceSet>& block) {
  std::size_t n = seq.size(), b = block.size();
  if (b == 0 || n % b) return false;
  std::vector<DistanceSet> reversed(n);
  for (std::size_t i = 0; i < n; ++i) {
    DistanceSet d = seq[n - 1 - i];
    for (long long& x : d) x = -x;
    std::sort(d.begin(), d.end());
    reversed[i] = std::move(d);
  }
  std::vector<DistanceSet> pattern(block);
  for (DistanceSet& d : pattern) std::sort(d.begin(), d.end());
  for (const std::vector<DistanceSet>* s : {&seq, static_cast<const std::vector<DistanceSet>*>(&reversed)}) {
    for (std::size_t r = 0; r < b; ++r) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = (*s)[(i + r) % n] == pattern[i % b];
      if (ok) return true;
    }
  }
  return false;
}

namespace internal {

// Start of the lexicographically least rotation (two-pointer scan).
inline std::size_t least_rotation(const std::vector<Symbol>& s) {
  std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    std::size_t a = i + k, b = j + k;
    if (a >= n) a -= n;
    if (b >= n) b -= n;
    if (s[a] == s[b]) {
      ++k;
      continue;
    }
    if (s[a] > s[b]) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return n ? std::min(i, j) : 0;
}

}  // namespace internal

struct Tracks {
  std::size_t count = 0;
  std::vector<std::size_t> class_of;  // per column
  // column j equals column representative(class_of[j]) shifted down by
  // shift[j] rows: col_j[i] = col_rep[i - shift[j] mod N].
  std::vector<std::size_t> shift;
  std::vector<std::size_t> representative;
};

inline Tracks track_count(const HamCycle& c) {
  std::size_t n = c.size();
  std::size_t width = c.vertices.empty() ? 0 : c.vertices[0].size();
  Tracks t;
  t.class_of.resize(width);
  t.shift.resize(width);
  std::map<std::vector<Symbol>, std::size_t> classes;
  std::vector<std::size_t> rep_rotation;
  std::vector<std::vector<Symbol>> cols(width, std::vector<Symbol>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < width; ++j) cols[j][i] = c.vertices[i][j];
  }
  std::vector<Symbol> canon(n);
  for (std::size_t j = 0; j < width; ++j) {
    const std::vector<Symbol>& col = cols[j];
    std::size_t r = internal::least_rotation(col);
    for (std::size_t i = 0; i < n; ++i) canon[i] = col[(i + r) % n];
    auto [it, fresh] = classes.emplace(canon, classes.size());
    if (fresh) {
      t.representative.push_back(j);
      rep_rotation.push_back(r);
    }
    std::size_t id = it->second;
    t.class_of[j] = id;
    // col[i + r] = rep[i + r_rep]  =>  col[i] = rep[i - (r - r_rep)]
    t.shift[j] = n ? (n + r - rep_rotation[id]) % n : 0;
  }
  t.count = classes.size();
  return t;
}

// Bitstring cycles: per-position changes and 0->1 rises. Permutation
// cycles: uses of each transposition. Cayley cycles: uses of each
// generator (s and -s together).
struct BalanceStats {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> changes;
  std::vector<std::uint64_t> rises;

  bool balanced() const {
    return std::adjacent_find(changes.begin(), changes.end(), std::not_equal_to<>()) ==
           changes.end();
  }
};

inline BalanceStats balance_stats(const HamCycle& c) {
  require_valid(c);
  const Graph& g = c.graph;
  std::size_t n = c.size();
  BalanceStats b;
  auto next = [&](std::size_t i) -> const VertexWord& { return c.vertices[(i + 1) % n]; };
  if (g.is_bitstring_family()) {
    std::size_t w = g.word_length();
    b.changes.assign(w, 0);
    b.rises.assign(w, 0);
    for (std::size_t j = 0; j < w; ++j) b.labels.push_back("x" + std::to_string(j + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < w; ++j) {
        Symbol a = c.vertices[i][j], z = next(i)[j];
        if (a != z) ++b.changes[j];
        if (!a && z) ++b.rises[j];
      }
    }
  } else if (g.is_permutation_family()) {
    int m = g.n();
    int classes = g.family() == Family::kPermutahedronPlus && m >= 3 ? m : m - 1;
    b.changes.assign(std::max(classes, 0), 0);
    for (int p = 0; p + 1 < m; ++p) {
      b.labels.push_back("(" + std::to_string(p + 1) + "," + std::to_string(p + 2) + ")");
    }
    if (classes == m) b.labels.push_back("(1," + std::to_string(m) + ")");
    for (std::size_t i = 0; i < n; ++i) {
      int first = -1, last = -1;
      for (int p = 0; p < m; ++p) {
        if (c.vertices[i][p] != next(i)[p]) {
          if (first < 0) first = p;
          last = p;
        }
      }
      if (first < 0) continue;
      ++b.changes[last == first + 1 ? first : classes - 1];
    }
  } else if (g.family() == Family::kAbelianCayley) {
    const auto& gens = g.generators();
    b.changes.assign(gens.size(), 0);
    for (const VertexWord& s : gens) {
      std::string l = "+-(";
      for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + std::to_string(s[i]);
      b.labels.push_back(l + ")");
    }
    VertexWord d(g.n());
    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 0; j < g.n(); ++j) {
        int m = g.moduli()[j];
        d[j] = static_cast<Symbol>((next(i)[j] + m - c.vertices[i][j]) % m);
      }
      for (std::size_t s = 0; s < gens.size(); ++s) {
        if (d == gens[s] || d == g.negate(gens[s])) {
          ++b.changes[s];
          break;
        }
      }
    }
  }
  return b;
}

// C := P, f(P), ..., f^{k-1}(P).
inline std::vector<VertexWord> lift_path(const Automorphism& f, const std::vector<VertexWord>& path,
                                         std::uint64_t k) {
  std::vector<VertexWord> out;
  out.reserve(path.size() * k);
  std::vector<VertexWord> block = path;
  for (std::uint64_t r = 0; r < k; ++r) {
    out.insert(out.end(), block.begin(), block.end());
    if (r + 1 < k) {
      for (VertexWord& w : block) w = f.apply(w);
    }
  }
  return out;
}

struct LiftResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<HamCycle> cycle;
  std::uint64_t nodes = 0;
  std::uint64_t k = 0;  // common orbit size
  bool found() const { return status == SearchStatus::kFound; }
};

// Searches for a path from vertex 0 through every orbit of f once whose last
// vertex is adjacent to f(x_0); on success the path is lifted to a
// k-symmetric cycle. With a visitor, every lifted cycle is passed to it
// until it returns false.
inline LiftResult lifted_cycle_search(
    const Graph& g, const Automorphism& f, const SearchBudget& budget = {},
    Ordering order = Ordering::kLexicographic,
    const std::function<bool(const HamCycle&)>& visit = {}) {
  require_fit(g, f);
  OrbitPartition part = orbit_partition(g, f);
  if (!part.uniform) throw Error("lifted_cycle_search: orbits of " + f.describe() + " differ in size");
  LiftResult out;
  out.k = part.orbit_size();
  if (!structurally_automorphic(g, f) && !preserves_edges(g, f)) {
    throw Error("lifted_cycle_search: " + f.describe() + " is not an automorphism");
  }
  OrbitPathSearch search(g, part.orbit_of, static_cast<std::uint32_t>(part.size()));
  Index target = g.encode(f.apply(g.decode(0)));
  auto make = [&](const std::vector<Index>& path) {
    HamCycle c{g, {}, "lifted", f, out.k};
    std::vector<VertexWord> words;
    words.reserve(path.size());
    for (Index x : path) words.push_back(g.decode(x));
    c.vertices = lift_path(f, words, out.k);
    return c;
  };
  OrbitPathSearch::Visitor visitor;
  if (visit) visitor = [&](const std::vector<Index>& path) { return visit(make(path)); };
  SearchResult r = search.path_closing_at(0, target, order, budget, visitor);
  out.status = r.status;
  out.nodes = r.nodes;
  if (r.found()) out.cycle = make(r.path);
  return out;
}

}  // namespace hamcomp

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

// Graph families as implicit graphs, their automorphisms, and orbits.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamcomp {

using Symbol = std::uint16_t;
// x_1 is symbols[0]; bits are 0/1, permutation entries are 1..n, group
// elements are residues per coordinate, explicit vertices are {index}.
using VertexWord = std::vector<Symbol>;
using Index = std::uint64_t;

// Thrown for inputs outside an operation's contract.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family {
  kHypercube,
  kJohnson,
  kMiddleLevels,
  kPermutahedron,
  kPermutahedronPlus,
  kAbelianCayley,
  kExplicit,
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::kHypercube: return "hypercube";
    case Family::kJohnson: return "johnson";
    case Family::kMiddleLevels: return "middle";
    case Family::kPermutahedron: return "permutahedron";
    case Family::kPermutahedronPlus: return "permutahedron_plus";
    case Family::kAbelianCayley: return "cayley";
    case Family::kExplicit: return "explicit";
  }
  return "unknown";
}

namespace internal {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

// Pascal triangle with saturating entries, rows 0..n.
class Binomials {
 public:
  Binomials() = default;
  explicit Binomials(int n) : n_(n), table_((n + 1) * (n + 1), 0) {
    for (int a = 0; a <= n; ++a) {
      at(a, 0) = 1;
      for (int b = 1; b <= a; ++b) at(a, b) = sat_add(at(a - 1, b - 1), at(a - 1, b));
    }
  }
  std::uint64_t operator()(int a, int b) const {
    if (a < 0 || b < 0 || b > a) return 0;
    return table_[a * (n_ + 1) + b];
  }

 private:
  std::uint64_t& at(int a, int b) { return table_[a * (n_ + 1) + b]; }
  int n_ = 0;
  std::vector<std::uint64_t> table_;
};

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace internal

// A graph family handle with a neighbor oracle and a bijective codec
// between vertex words and indices 0..vertex_count()-1. Indices follow
// lexicographic order of the words for every family.
class Graph {
 public:
  static Graph hypercube(int n) {
    if (n < 1 || n > 62) throw Error("hypercube: need 1 <= n <= 62");
    Graph g(Family::kHypercube);
    g.n_ = n;
    g.count_ = Index{1} << n;
    return g;
  }

  static Graph johnson(int n, int k) {
    if (n < 1 || k < 1 || k >= n) throw Error("johnson: need 0 < k < n");
    Graph g(Family::kJohnson);
    g.n_ = n;
    g.k_ = k;
    g.binom_ = internal::Binomials(n);
    g.count_ = g.binom_(n, k);
    if (g.count_ == std::numeric_limits<std::uint64_t>::max()) {
      throw Error("johnson: vertex count overflows");
    }
    return g;
  }

  // The middle levels graph M_{2n+1}: bitstrings of length 2n+1 with weight
  // n or n+1, adjacent when they differ in one bit.
  static Graph middle_levels(int n) {
    if (n < 1 || n > 30) throw Error("middle: need 1 <= n <= 30");
    Graph g(Family::kMiddleLevels);
    g.n_ = 2 * n + 1;
    g.k_ = n;
    g.binom_ = internal::Binomials(g.n_);
    g.count_ = 2 * g.binom_(g.n_, n);
    return g;
  }

  static Graph permutahedron(int n) {
    if (n < 1 || n > 20) throw Error("permutahedron: need 1 <= n <= 20");
    Graph g(Family::kPermutahedron);
    g.n_ = n;
    g.count_ = internal::factorial(n);
    return g;
  }

  // Permutahedron with the extra transposition of the first and last entry.
  static Graph permutahedron_plus(int n) {
    Graph g = permutahedron(n);
    g.family_ = Family::kPermutahedronPlus;
    return g;
  }

  static Graph abelian_cayley(std::vector<int> moduli,
                              std::vector<VertexWord> gens) {
    if (moduli.empty()) throw Error("cayley: group needs at least one factor");
    Index count = 1;
    for (int m : moduli) {
      if (m < 1 || m > std::numeric_limits<Symbol>::max()) {
        throw Error("cayley: factor order out of range");
      }
      count *= static_cast<Index>(m);
    }
    Graph g(Family::kAbelianCayley);
    g.n_ = static_cast<int>(moduli.size());
    g.moduli_ = std::move(moduli);
    g.count_ = count;
    for (const VertexWord& s : gens) {
      g.require_vertex(s);
      if (std::all_of(s.begin(), s.end(), [](Symbol c) { return c == 0; })) {
        throw Error("cayley: generator must be nonzero");
      }
    }
    g.gens_ = std::move(gens);
    for (const VertexWord& s : g.gens_) {
      for (const VertexWord& t : {s, g.negate(s)}) {
        if (std::find(g.connection_.begin(), g.connection_.end(), t) ==
            g.connection_.end()) {
          g.connection_.push_back(t);
        }
      }
    }
    return g;
  }

  // Vertices 0..n-1; edges as 0-based index pairs.
  static Graph explicit_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > std::numeric_limits<Symbol>::max()) {
      throw Error("explicit: vertex count out of range");
    }
    Graph g(Family::kExplicit);
    g.n_ = n;
    g.count_ = static_cast<Index>(n);
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw Error("explicit: edge endpoint out of range");
      if (u == v) throw Error("explicit: self-loop");
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
  }

  Family family() const { return family_; }
  // Word length for bitstring and permutation families (2n+1 for M_{2n+1}),
  // number of cyclic factors for Cayley graphs, 1 for explicit graphs.
  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t word_length() const {
    return family_ == Family::kExplicit ? 1 : static_cast<std::size_t>(n_);
  }
  Index vertex_count() const { return count_; }
  const std::vector<int>& moduli() const { return moduli_; }
  const std::vector<VertexWord>& generators() const { return gens_; }
  // Generators closed under negation, without duplicates.
  const std::vector<VertexWord>& connection_set() const { return connection_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  bool is_bitstring_family() const {
    return family_ == Family::kHypercube || family_ == Family::kJohnson ||
           family_ == Family::kMiddleLevels;
  }
  bool is_permutation_family() const {
    return family_ == Family::kPermutahedron || family_ == Family::kPermutahedronPlus;
  }

  bool operator==(const Graph& o) const {
    return family_ == o.family_ && n_ == o.n_ && k_ == o.k_ &&
           moduli_ == o.moduli_ && gens_ == o.gens_ && adj_ == o.adj_;
  }

  std::string describe() const {
    std::string s = family_name(family_) + "(";
    switch (family_) {
      case Family::kJohnson:
        s += std::to_string(n_) + "," + std::to_string(k_);
        break;
      case Family::kMiddleLevels:
        s += std::to_string(k_);
        break;
      case Family::kAbelianCayley:
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
          s += (i ? "x" : "") + std::string("Z") + std::to_string(moduli_[i]);
        }
        break;
      default:
        s += std::to_string(n_);
    }
    return s + ")";
  }

  // Empty when w is a vertex; otherwise the reason it is not.
  std::optional<std::string> invalid_reason(const VertexWord& w) const {
    if (w.size() != word_length()) {
      return "word length " + std::to_string(w.size()) + ", expected " +
             std::to_string(word_length());
    }
    switch (family_) {
      case Family::kHypercube:
      case Family::kJohnson:
      case Family::kMiddleLevels: {
        int weight = 0;
        for (Symbol c : w) {
          if (c > 1) return "bitstring symbol " + std::to_string(c) + " is not 0/1";
          weight += c;
        }
        if (family_ == Family::kJohnson && weight != k_) {
          return "weight " + std::to_string(weight) + ", expected " + std::to_string(k_);
        }
        if (family_ == Family::kMiddleLevels && weight != k_ && weight != k_ + 1) {
          return "weight " + std::to_string(weight) + " is not a middle level";
        }
        return std::nullopt;
      }
      case Family::kPermutahedron:
      case Family::kPermutahedronPlus: {
        std::vector<bool> seen(n_ + 1, false);
        for (Symbol c : w) {
          if (c < 1 || c > n_ || seen[c]) return "not a permutation of 1..n";
          seen[c] = true;
        }
        return std::nullopt;
      }
      case Family::kAbelianCayley:
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] >= moduli_[i]) return "coordinate out of range";
        }
        return std::nullopt;
      case Family::kExplicit:
        if (w[0] >= n_) return "vertex index out of range";
        return std::nullopt;
    }
    return "unknown family";
  }

  bool is_vertex(const VertexWord& w) const { return !invalid_reason(w); }

  void require_vertex(const VertexWord& w) const {
    if (auto r = invalid_reason(w)) throw Error(describe() + ": invalid vertex: " + *r);
  }

  Index encode(const VertexWord& w) const {
    switch (family_) {
      case Family::kHypercube: {
        Index x = 0;
        for (Symbol c : w) x = (x << 1) | c;
        return x;
      }
      case Family::kJohnson: {
        thread_local std::vector<int> pos;
        pos.clear();
        bool use_ones = k_ <= n_ - k_;
        for (int i = 0; i < n_; ++i) {
          if ((w[i] == 1) == use_ones) pos.push_back(i);
        }
        return rank_positions(pos);
      }
      case Family::kMiddleLevels: {
        Index r = 0;
        int ones = 0;
        for (int i = 0; i < n_; ++i) {
          if (w[i]) {
            int rem = n_ - 1 - i;
            r += binom_(rem, k_ - ones) + binom_(rem, k_ + 1 - ones);
            ++ones;
          }
        }
        return r;
      }
      case Family::kPermutahedron:
      case Family::kPermutahedronPlus: {
        Index r = 0;
        for (int i = 0; i < n_; ++i) {
          int smaller = 0;
          for (int j = i + 1; j < n_; ++j) smaller += w[j] < w[i];
          r = r * static_cast<Index>(n_ - i) + static_cast<Index>(smaller);
        }
        return r;
      }
      case Family::kAbelianCayley: {
        Index r = 0;
        for (std::size_t i = 0; i < w.size(); ++i) r = r * moduli_[i] + w[i];
        return r;
      }
      case Family::kExplicit:
        return w[0];
    }
    return 0;
  }

  VertexWord decode(Index x) const {
    if (x >= count_) throw Error(describe() + ": index out of range");
    VertexWord w(word_length(), 0);
    switch (family_) {
      case Family::kHypercube:
        for (int i = n_ - 1; i >= 0; --i, x >>= 1) w[i] = static_cast<Symbol>(x & 1);
        break;
      case Family::kJohnson: {
        int r = k_;
        for (int i = 0; i < n_; ++i) {
          Index zero_first = binom_(n_ - 1 - i, r);
          if (x < zero_first) continue;
          x -= zero_first;
          w[i] = 1;
          --r;
        }
        break;
      }
      case Family::kMiddleLevels: {
        int ones = 0;
        for (int i = 0; i < n_; ++i) {
          int rem = n_ - 1 - i;
          Index zero_first = binom_(rem, k_ - ones) + binom_(rem, k_ + 1 - ones);
          if (x < zero_first) continue;
          x -= zero_first;
          w[i] = 1;
          ++ones;
        }
        break;
      }
      case Family::kPermutahedron:
      case Family::kPermutahedronPlus: {
        std::vector<int> digits(n_);
        for (int i = n_ - 1; i >= 0; --i) {
          Index base = static_cast<Index>(n_ - i);
          digits[i] = static_cast<int>(x % base);
          x /= base;
        }
        std::vector<Symbol> avail(n_);
        std::iota(avail.begin(), avail.end(), Symbol{1});
        for (int i = 0; i < n_; ++i) {
          w[i] = avail[digits[i]];
          avail.erase(avail.begin() + digits[i]);
        }
        break;
      }
      case Family::kAbelianCayley:
        for (int i = n_ - 1; i >= 0; --i) {
          w[i] = static_cast<Symbol>(x % moduli_[i]);
          x /= moduli_[i];
        }
        break;
      case Family::kExplicit:
        w[0] = static_cast<Symbol>(x);
        break;
    }
    return w;
  }

  std::vector<VertexWord> neighbors(const VertexWord& w) const {
    require_vertex(w);
    std::vector<VertexWord> out;
    for_each_neighbor(w, [&](const VertexWord& v) { out.push_back(v); });
    return out;
  }

  // Calls fn(word) for each neighbor; w must be a vertex.
  template <class Fn>
  void for_each_neighbor(const VertexWord& w, Fn&& fn) const {
    VertexWord v = w;
    switch (family_) {
      case Family::kHypercube:
      case Family::kMiddleLevels:
        for (int i = 0; i < n_; ++i) {
          v[i] ^= 1;
          if (family_ == Family::kHypercube || is_vertex_weight(v)) fn(v);
          v[i] ^= 1;
        }
        break;
      case Family::kJohnson:
        for (int i = 0; i < n_; ++i) {
          if (!w[i]) continue;
          for (int j = 0; j < n_; ++j) {
            if (w[j]) continue;
            std::swap(v[i], v[j]);
            fn(v);
            std::swap(v[i], v[j]);
          }
        }
        break;
      case Family::kPermutahedron:
      case Family::kPermutahedronPlus:
        for (int i = 0; i + 1 < n_; ++i) {
          std::swap(v[i], v[i + 1]);
          fn(v);
          std::swap(v[i], v[i + 1]);
        }
        if (family_ == Family::kPermutahedronPlus && n_ >= 3) {
          std::swap(v[0], v[n_ - 1]);
          fn(v);
          std::swap(v[0], v[n_ - 1]);
        }
        break;
      case Family::kAbelianCayley:
        for (const VertexWord& s : connection_) {
          for (int i = 0; i < n_; ++i) v[i] = static_cast<Symbol>((w[i] + s[i]) % moduli_[i]);
          fn(v);
        }
        break;
      case Family::kExplicit:
        for (int u : adj_[w[0]]) {
          v[0] = static_cast<Symbol>(u);
          fn(v);
        }
        break;
    }
  }

  // Appends the indices of all neighbors of w to out (cleared first).
  void neighbor_indices(const VertexWord& w, std::vector<Index>& out) const {
    out.clear();
    if (family_ == Family::kHypercube) {
      Index x = encode(w);
      for (int i = 0; i < n_; ++i) out.push_back(x ^ (Index{1} << (n_ - 1 - i)));
      return;
    }
    if (family_ == Family::kJohnson) {
      johnson_neighbor_indices(w, out);
      return;
    }
    if (family_ == Family::kExplicit) {
      for (int u : adj_[w[0]]) out.push_back(static_cast<Index>(u));
      return;
    }
    for_each_neighbor(w, [&](const VertexWord& v) { out.push_back(encode(v)); });
  }

  void neighbor_indices(Index x, std::vector<Index>& out) const {
    neighbor_indices(decode(x), out);
  }

  bool adjacent(const VertexWord& u, const VertexWord& v) const {
    if (u.size() != v.size() || u.size() != word_length()) return false;
    switch (family_) {
      case Family::kHypercube:
      case Family::kMiddleLevels: {
        int diff = 0;
        for (std::size_t i = 0; i < u.size(); ++i) diff += u[i] != v[i];
        return diff == 1;
      }
      case Family::kJohnson: {
        int diff = 0;
        for (std::size_t i = 0; i < u.size(); ++i) diff += u[i] != v[i];
        return diff == 2;
      }
      case Family::kPermutahedron:
      case Family::kPermutahedronPlus: {
        int first = -1, last = -1, diff = 0;
        for (int i = 0; i < n_; ++i) {
          if (u[i] != v[i]) {
            if (first < 0) first = i;
            last = i;
            ++diff;
          }
        }
        if (diff != 2 || u[first] != v[last] || u[last] != v[first]) return false;
        if (last == first + 1) return true;
        return family_ == Family::kPermutahedronPlus && first == 0 && last == n_ - 1;
      }
      case Family::kAbelianCayley: {
        VertexWord d(n_);
        for (int i = 0; i < n_; ++i) {
          d[i] = static_cast<Symbol>((v[i] + moduli_[i] - u[i]) % moduli_[i]);
        }
        return std::find(connection_.begin(), connection_.end(), d) != connection_.end();
      }
      case Family::kExplicit:
        return std::binary_search(adj_[u[0]].begin(), adj_[u[0]].end(), static_cast<int>(v[0]));
    }
    return false;
  }

  // True when every pair of distinct vertices is adjacent.
  bool is_complete() const {
    switch (family_) {
      case Family::kHypercube: return n_ == 1;
      case Family::kJohnson: return k_ == 1 || k_ == n_ - 1;
      case Family::kMiddleLevels: return false;
      case Family::kPermutahedron:
      case Family::kPermutahedronPlus: return n_ <= 2;
      case Family::kAbelianCayley:
        return connection_.size() + 1 == count_;
      case Family::kExplicit:
        return std::all_of(adj_.begin(), adj_.end(), [&](const std::vector<int>& a) {
          return a.size() + 1 == count_;
        });
    }
    return false;
  }

  VertexWord negate(const VertexWord& x) const {
    VertexWord r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      r[i] = static_cast<Symbol>((moduli_[i] - x[i]) % moduli_[i]);
    }
    return r;
  }

 private:
  explicit Graph(Family f) : family_(f) {}

  bool is_vertex_weight(const VertexWord& v) const {
    int weight = 0;
    for (Symbol c : v) weight += c;
    return weight == k_ || weight == k_ + 1;
  }

  // Lexicographic rank from the sorted positions of the minority symbol.
  Index rank_positions(const std::vector<int>& pos) const {
    int r = static_cast<int>(pos.size());
    Index rank = 0;
    for (int j = 0; j < r; ++j) rank += binom_(n_ - 1 - pos[j], r - j);
    if (k_ <= n_ - k_) return rank;
    return count_ - 1 - rank;
  }

  void johnson_neighbor_indices(const VertexWord& w, std::vector<Index>& out) const {
    thread_local std::vector<int> minority, majority, tmp;
    minority.clear();
    majority.clear();
    Symbol minority_symbol = k_ <= n_ - k_ ? 1 : 0;
    for (int i = 0; i < n_; ++i) (w[i] == minority_symbol ? minority : majority).push_back(i);
    int r = static_cast<int>(minority.size());
    tmp.resize(r);
    for (int a = 0; a < r; ++a) {
      for (int b : majority) {
        // Replace minority[a] by b and keep the list sorted.
        int t = 0;
        bool placed = false;
        for (int j = 0; j < r; ++j) {
          if (j == a) continue;
          if (!placed && b < minority[j]) {
            tmp[t++] = b;
            placed = true;
          }
          tmp[t++] = minority[j];
        }
        if (!placed) tmp[t++] = b;
        out.push_back(rank_positions(tmp));
      }
    }
  }

  Family family_;
  int n_ = 0;
  int k_ = 0;
  Index count_ = 0;
  internal::Binomials binom_;
  std::vector<int> moduli_;
  std::vector<VertexWord> gens_;
  std::vector<VertexWord> connection_;
  std::vector<std::vector<int>> adj_;
};

// A family-specific vertex bijection.
//   kBits:      f(x)_i = x_{source[i]} XOR flips[i]   (hypercube, Johnson,
//               middle levels; Johnson complement is flips = all ones)
//   kPositions: f(x)_i = values[x_{source[i]}]        (permutahedra; source
//               is identity or reversal, values relabels entries)
//   kAffine:    f(x)_i = signs[i]*x_i + offset[i] mod moduli[i]  (Cayley)
//   kTable:     f(x) = image[x]                        (explicit graphs)
class Automorphism {
 public:
  enum class Kind { kBits, kPositions, kAffine, kTable };

  static Automorphism bits(std::vector<int> source, std::vector<Symbol> flips) {
    check_permutation(source, "bits: source");
    if (flips.size() != source.size()) throw Error("bits: flips length mismatch");
    Automorphism f(Kind::kBits);
    f.source_ = std::move(source);
    f.flips_ = std::move(flips);
    return f;
  }

  // Hypercube automorphism x -> x_{pi(1)}...x_{pi(n)} + z (0-based pi).
  static Automorphism hypercube(std::vector<int> pi, std::vector<Symbol> z) {
    return bits(std::move(pi), std::move(z));
  }

  // Johnson / middle-levels automorphism (pi, alpha) with alpha = complement.
  static Automorphism johnson(std::vector<int> pi, bool complement) {
    std::vector<Symbol> flips(pi.size(), complement ? 1 : 0);
    return bits(std::move(pi), std::move(flips));
  }

  // values[v] for v in 1..n; values[0] is unused.
  static Automorphism positions(std::vector<int> source, std::vector<int> values) {
    check_permutation(source, "positions: source");
    if (values.size() != source.size() + 1) throw Error("positions: values length mismatch");
    std::vector<int> shifted(values.begin() + 1, values.end());
    for (int& v : shifted) --v;
    check_permutation(shifted, "positions: values");
    Automorphism f(Kind::kPositions);
    f.source_ = std::move(source);
    f.values_ = std::move(values);
    return f;
  }

  // Permutahedron automorphism (alpha, pi): alpha in {id, rev}; pi given in
  // one-line notation over 1..n.
  static Automorphism permutahedron(bool reverse, const VertexWord& pi) {
    int n = static_cast<int>(pi.size());
    std::vector<int> source(n);
    for (int i = 0; i < n; ++i) source[i] = reverse ? n - 1 - i : i;
    std::vector<int> values(n + 1, 0);
    for (int v = 1; v <= n; ++v) values[v] = pi[v - 1];
    return positions(std::move(source), std::move(values));
  }

  static Automorphism affine(std::vector<int> moduli, std::vector<int> signs,
                             VertexWord offset) {
    if (signs.size() != moduli.size() || offset.size() != moduli.size()) {
      throw Error("affine: size mismatch");
    }
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      if (signs[i] != 1 && signs[i] != -1) throw Error("affine: signs must be +-1");
      if (offset[i] >= moduli[i]) throw Error("affine: offset out of range");
    }
    Automorphism f(Kind::kAffine);
    f.moduli_ = std::move(moduli);
    f.signs_ = std::move(signs);
    f.offset_ = std::move(offset);
    return f;
  }

  static Automorphism translation(std::vector<int> moduli, VertexWord g) {
    std::vector<int> signs(moduli.size(), 1);
    return affine(std::move(moduli), std::move(signs), std::move(g));
  }

  // x -> c - x.
  static Automorphism reflection(std::vector<int> moduli, VertexWord c) {
    std::vector<int> signs(moduli.size(), -1);
    return affine(std::move(moduli), std::move(signs), std::move(c));
  }

  static Automorphism table(std::vector<Index> image) {
    std::vector<int> as_int(image.begin(), image.end());
    check_permutation(as_int, "table");
    Automorphism f(Kind::kTable);
    f.image_ = std::move(image);
    return f;
  }

  static Automorphism identity(const Graph& g) {
    int n = static_cast<int>(g.word_length());
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    switch (g.family()) {
      case Family::kHypercube:
      case Family::kJohnson:
      case Family::kMiddleLevels:
        return bits(id, std::vector<Symbol>(n, 0));
      case Family::kPermutahedron:
      case Family::kPermutahedronPlus: {
        std::vector<int> values(n + 1);
        std::iota(values.begin(), values.end(), 0);
        return positions(id, values);
      }
      case Family::kAbelianCayley:
        return translation(g.moduli(), VertexWord(g.moduli().size(), 0));
      case Family::kExplicit: {
        std::vector<Index> image(g.vertex_count());
        std::iota(image.begin(), image.end(), Index{0});
        return table(image);
      }
    }
    throw Error("identity: unknown family");
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& source() const { return source_; }
  const std::vector<Symbol>& flips() const { return flips_; }
  const std::vector<int>& values() const { return values_; }
  const std::vector<int>& moduli() const { return moduli_; }
  const std::vector<int>& signs() const { return signs_; }
  const VertexWord& offset() const { return offset_; }
  const std::vector<Index>& image() const { return image_; }

  std::size_t word_length() const {
    switch (kind_) {
      case Kind::kBits:
      case Kind::kPositions: return source_.size();
      case Kind::kAffine: return moduli_.size();
      case Kind::kTable: return 1;
    }
    return 0;
  }

  // Whether this automorphism's payload fits graph g.
  bool fits(const Graph& g) const {
    if (word_length() != g.word_length()) return false;
    switch (kind_) {
      case Kind::kBits: return g.is_bitstring_family();
      case Kind::kPositions: return g.is_permutation_family();
      case Kind::kAffine:
        return g.family() == Family::kAbelianCayley && moduli_ == g.moduli();
      case Kind::kTable:
        return g.family() == Family::kExplicit && image_.size() == g.vertex_count();
    }
    return false;
  }

  VertexWord apply(const VertexWord& x) const {
    VertexWord y(x.size());
    apply_into(x, y);
    return y;
  }

  void apply_into(const VertexWord& x, VertexWord& y) const {
    if (x.size() != word_length()) throw Error("apply: word length mismatch");
    y.resize(x.size());
    switch (kind_) {
      case Kind::kBits:
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[source_[i]] ^ flips_[i];
        break;
      case Kind::kPositions:
        for (std::size_t i = 0; i < x.size(); ++i) {
          Symbol s = x[source_[i]];
          if (s == 0 || s >= values_.size()) throw Error("apply: entry out of range");
          y[i] = static_cast<Symbol>(values_[s]);
        }
        break;
      case Kind::kAffine:
        for (std::size_t i = 0; i < x.size(); ++i) {
          long long m = moduli_[i];
          long long v = (signs_[i] * static_cast<long long>(x[i]) + offset_[i]) % m;
          y[i] = static_cast<Symbol>((v + m) % m);
        }
        break;
      case Kind::kTable:
        if (x[0] >= image_.size()) throw Error("apply: vertex out of range");
        y[0] = static_cast<Symbol>(image_[x[0]]);
        break;
    }
  }

  // Order as a map on all words of the payload's shape.
  std::uint64_t order() const {
    std::uint64_t ord = 1;
    auto fold = [&](std::uint64_t len) { ord = std::lcm(ord, len); };
    switch (kind_) {
      case Kind::kBits: {
        std::vector<bool> seen(source_.size(), false);
        for (std::size_t i = 0; i < source_.size(); ++i) {
          if (seen[i]) continue;
          std::uint64_t len = 0;
          int parity = 0;
          for (std::size_t j = i; !seen[j]; j = source_[j]) {
            seen[j] = true;
            parity ^= flips_[j];
            ++len;
          }
          fold(parity ? 2 * len : len);
        }
        break;
      }
      case Kind::kPositions: {
        fold(cycle_lcm(source_));
        std::vector<int> v(values_.begin() + 1, values_.end());
        for (int& e : v) --e;
        fold(cycle_lcm(v));
        break;
      }
      case Kind::kAffine:
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
          std::uint64_t m = moduli_[i];
          if (signs_[i] == 1) {
            fold(m / std::gcd<std::uint64_t>(m, offset_[i]));
          } else if (m > 2) {
            fold(2);
          } else if (offset_[i] != 0) {
            fold(2);
          }
        }
        break;
      case Kind::kTable: {
        std::vector<int> v(image_.begin(), image_.end());
        fold(cycle_lcm(v));
        break;
      }
    }
    return ord;
  }

  bool operator==(const Automorphism& o) const {
    return kind_ == o.kind_ && source_ == o.source_ && flips_ == o.flips_ &&
           values_ == o.values_ && moduli_ == o.moduli_ && signs_ == o.signs_ &&
           offset_ == o.offset_ && image_ == o.image_;
  }

  std::string describe() const {
    auto join = [](const auto& v, int add) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? " " : "") + std::to_string(static_cast<long long>(v[i]) + add);
      }
      return s;
    };
    switch (kind_) {
      case Kind::kBits:
        return "bits(source=[" + join(source_, 1) + "], flips=[" + join(flips_, 0) + "])";
      case Kind::kPositions: {
        std::vector<int> v(values_.begin() + 1, values_.end());
        return "positions(source=[" + join(source_, 1) + "], values=[" + join(v, 0) + "])";
      }
      case Kind::kAffine:
        return "affine(signs=[" + join(signs_, 0) + "], offset=[" + join(offset_, 0) + "])";
      case Kind::kTable:
        return "table([" + join(image_, 0) + "])";
    }
    return "?";
  }

 private:
  explicit Automorphism(Kind k) : kind_(k) {}

  static void check_permutation(const std::vector<int>& p, const char* what) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) {
        throw Error(std::string(what) + " is not a permutation");
      }
      seen[v] = true;
    }
  }

  static std::uint64_t cycle_lcm(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      if (len) ord = std::lcm(ord, len);
    }
    return ord;
  }

  Kind kind_;
  std::vector<int> source_;
  std::vector<Symbol> flips_;
  std::vector<int> values_;
  std::vector<int> moduli_;
  std::vector<int> signs_;
  VertexWord offset_;
  std::vector<Index> image_;
};

// Orbits of an automorphism on the vertices of a graph, by index.
struct OrbitPartition {
  std::vector<std::uint32_t> orbit_of;     // orbit id per vertex index
  std::vector<std::vector<Index>> orbits;  // members in orbit order x, f(x), ...
  bool uniform = true;                     // all orbits share one size
  std::size_t size() const { return orbits.size(); }
  std::size_t orbit_size() const { return orbits.empty() ? 0 : orbits[0].size(); }
};

inline void require_fit(const Graph& g, const Automorphism& f) {
  if (!f.fits(g)) throw Error("automorphism " + f.describe() + " does not act on " + g.describe());
}

// Orbit ids are assigned in increasing order of each orbit's smallest index,
// so orbit 0 contains vertex 0 and each orbit starts at its lexicographically
// smallest word.
inline OrbitPartition orbit_partition(const Graph& g, const Automorphism& f) {
  require_fit(g, f);
  Index n = g.vertex_count();
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  OrbitPartition p;
  p.orbit_of.assign(n, kNone);
  VertexWord w, img;
  for (Index x = 0; x < n; ++x) {
    if (p.orbit_of[x] != kNone) continue;
    std::uint32_t id = static_cast<std::uint32_t>(p.orbits.size());
    std::vector<Index> members;
    w = g.decode(x);
    Index y = x;
    while (p.orbit_of[y] == kNone) {
      p.orbit_of[y] = id;
      members.push_back(y);
      f.apply_into(w, img);
      std::swap(w, img);
      y = g.encode(w);
    }
    if (y != x) throw Error("orbit_partition: map is not a bijection on vertices");
    if (!p.orbits.empty() && members.size() != p.orbits[0].size()) p.uniform = false;
    p.orbits.push_back(std::move(members));
  }
  return p;
}

inline std::vector<std::vector<VertexWord>> orbits(const Automorphism& f, const Graph& g) {
  OrbitPartition p = orbit_partition(g, f);
  std::vector<std::vector<VertexWord>> out;
  out.reserve(p.size());
  for (const auto& o : p.orbits) {
    std::vector<VertexWord> words;
    words.reserve(o.size());
    for (Index x : o) words.push_back(g.decode(x));
    out.push_back(std::move(words));
  }
  return out;
}

// Exhaustive check that f maps vertices to vertices and edges to edges.
inline bool preserves_edges(const Graph& g, const Automorphism& f) {
  if (!f.fits(g)) return false;
  std::vector<bool> hit(g.vertex_count(), false);
  for (Index x = 0; x < g.vertex_count(); ++x) {
    VertexWord w = g.decode(x);
    VertexWord fw = f.apply(w);
    if (!g.is_vertex(fw)) return false;
    Index fx = g.encode(fw);
    if (hit[fx]) return false;
    hit[fx] = true;
    bool ok = true;
    g.for_each_neighbor(w, [&](const VertexWord& v) {
      if (ok && !g.adjacent(fw, f.apply(v))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace hamcomp

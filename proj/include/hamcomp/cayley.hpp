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

// Cayley graphs of abelian groups: Hamilton cycles by nested boustrophedon,
// symmetric cycles through coset representatives of a cyclic subgroup,
// compression at least 2 for even order and the odd order classification.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamcomp/graphs.hpp"
#include "hamcomp/kappa.hpp"
#include "hamcomp/search.hpp"
#include "hamcomp/verify.hpp"

namespace hamcomp {

// "Z3xZ5" -> {3, 5}.
inline std::vector<int> parse_group(const std::string& spec) {
  std::vector<int> moduli;
  std::size_t i = 0;
  auto fail = [&]() { return Error("group '" + spec + "': expected factors like Z3xZ5"); };
  while (i < spec.size()) {
    if (spec[i] != 'Z' && spec[i] != 'z') throw fail();
    ++i;
    if (i < spec.size() && spec[i] == '_') ++i;
    std::size_t j = i;
    while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
    if (j == i || j - i > 6) throw fail();
    int m = std::stoi(spec.substr(i, j - i));
    if (m < 1) throw fail();
    moduli.push_back(m);
    i = j;
    if (i < spec.size()) {
      if (spec[i] != 'x' && spec[i] != 'X' && spec[i] != '+') throw fail();
      ++i;
      if (i == spec.size()) throw fail();
    }
  }
  if (moduli.empty()) throw fail();
  return moduli;
}

inline std::string group_string(const std::vector<int>& moduli) {
  std::string s;
  for (std::size_t i = 0; i < moduli.size(); ++i) s += (i ? "xZ" : "Z") + std::to_string(moduli[i]);
  return s;
}

inline std::string element_string(const VertexWord& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

// "(1,0),(0,1)"; for a cyclic group also "1,7". Entries are reduced.
inline std::vector<VertexWord> parse_elements(const std::string& text, const std::vector<int>& moduli) {
  std::vector<VertexWord> out;
  std::vector<long long> cur;
  std::string num;
  bool in_tuple = false;
  auto fail = [&](const std::string& why) { return Error("elements '" + text + "': " + why); };
  auto flush_num = [&]() {
    if (num.empty() || num == "-") throw fail("missing number");
    cur.push_back(std::stoll(num));
    num.clear();
  };
  auto flush_elem = [&]() {
    if (cur.size() != moduli.size()) {
      throw fail("element has " + std::to_string(cur.size()) + " coordinates, group has " +
                 std::to_string(moduli.size()));
    }
    VertexWord w(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      w[i] = static_cast<Symbol>(((cur[i] % moduli[i]) + moduli[i]) % moduli[i]);
    }
    out.push_back(std::move(w));
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') {
      if (in_tuple || !num.empty() || !cur.empty()) throw fail("unexpected '('");
      in_tuple = true;
    } else if (c == ')') {
      if (!in_tuple) throw fail("unexpected ')'");
      flush_num();
      flush_elem();
      in_tuple = false;
    } else if (c == ',') {
      if (in_tuple) {
        flush_num();
      } else if (!num.empty()) {
        flush_num();
        flush_elem();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && num.empty())) {
      num += c;
    } else {
      throw fail(std::string("unexpected '") + c + "'");
    }
  }
  if (in_tuple) throw fail("unclosed '('");
  if (!num.empty()) {
    flush_num();
    flush_elem();
  }
  return out;
}

// A finite abelian group Z_{m_1} + ... + Z_{m_l} on element indices in the
// lexicographic mixed-radix order used by Graph::abelian_cayley.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw Error("group needs at least one factor");
    weight_.assign(moduli_.size(), 1);
    size_ = 1;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      if (moduli_[i] < 1) throw Error("group factor orders must be positive");
      weight_[i] = size_;
      size_ *= static_cast<Index>(moduli_[i]);
      if (size_ > (Index{1} << 32)) throw Error("group too large");
    }
    if (size_ <= 4096) {
      table_.resize(size_ * size_);
      for (Index a = 0; a < size_; ++a) {
        for (Index b = 0; b < size_; ++b) table_[a * size_ + b] = static_cast<std::uint32_t>(add_digits(a, b));
      }
    }
    neg_.resize(size_);
    for (Index a = 0; a < size_; ++a) {
      VertexWord w = decode(a);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<Symbol>((moduli_[i] - w[i]) % moduli_[i]);
      neg_[a] = static_cast<std::uint32_t>(encode(w));
    }
  }

  const std::vector<int>& moduli() const { return moduli_; }
  Index size() const { return size_; }

  Index encode(const VertexWord& w) const {
    Index x = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) x += static_cast<Index>(w[i]) * weight_[i];
    return x;
  }

  VertexWord decode(Index x) const {
    VertexWord w(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      w[i] = static_cast<Symbol>(x / weight_[i]);
      x %= weight_[i];
    }
    return w;
  }

  Index add(Index a, Index b) const { return table_.empty() ? add_digits(a, b) : table_[a * size_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }

  Index scale(Index a, std::uint64_t j) const {
    Index r = 0;
    for (Index p = a; j; j >>= 1, p = add(p, p)) {
      if (j & 1) r = add(r, p);
    }
    return r;
  }

  std::uint64_t order(Index a) const {
    std::uint64_t o = 1;
    for (Index x = a; x != 0; x = add(x, a)) ++o;
    return o;
  }

  // Membership flags of the subgroup generated by gens.
  std::vector<char> span(const std::vector<Index>& gens) const {
    std::vector<char> in(size_, 0);
    std::vector<Index> members{0};
    in[0] = 1;
    for (Index g : gens) extend_span(in, members, g);
    return in;
  }

  // Adds <g> to the subgroup with flags `in` and element list `members`.
  void extend_span(std::vector<char>& in, std::vector<Index>& members, Index g) const {
    if (in[g]) return;
    std::size_t base = members.size();
    for (Index step = g; !in[step]; step = add(step, g)) {
      for (std::size_t i = 0; i < base; ++i) {
        Index y = add(members[i], step);
        in[y] = 1;
        members.push_back(y);
      }
    }
  }

  bool generates(const std::vector<Index>& gens) const {
    std::vector<char> in = span(gens);
    return std::all_of(in.begin(), in.end(), [](char c) { return c != 0; });
  }

 private:
  Index add_digits(Index a, Index b) const {
    Index r = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      Index da = a / weight_[i], db = b / weight_[i];
      a %= weight_[i];
      b %= weight_[i];
      r += ((da + db) % static_cast<Index>(moduli_[i])) * weight_[i];
    }
    return r;
  }

  std::vector<int> moduli_;
  std::vector<Index> weight_;
  Index size_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> neg_;
};

// A cyclic sequence through <gens> starting at 0, consecutive elements
// differing by +-generator (closing when the subgroup has >= 3 elements).
// Each generator s that enlarges the subgroup H to H + <s> of index m
// turns the cycle c_0, ..., c_{L-1} of H into
//   row 0 = c_0 ... c_{L-1}, rows j = 1..m-1 over c_1 ... c_{L-1} + js in
//   alternating direction, then c_0 + (m-1)s, ..., c_0 + s.
inline std::vector<Index> filtration_cycle(const AbelianGroup& g, const std::vector<Index>& gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<Index> members{0};
  in[0] = 1;
  std::vector<Index> seq{0};
  std::vector<Index> next;
  for (Index s : gens) {
    if (in[s]) continue;
    std::size_t m = 1;
    for (Index t = s; !in[t]; t = g.add(t, s)) ++m;
    std::size_t len = seq.size();
    next.clear();
    next.reserve(len * m);
    if (len == 1) {
      for (std::size_t j = 0; j < m; ++j) next.push_back(g.scale(s, j));
    } else {
      next.insert(next.end(), seq.begin(), seq.end());
      Index shift = 0;
      for (std::size_t j = 1; j < m; ++j) {
        shift = g.add(shift, s);
        if (j % 2) {
          for (std::size_t i = len - 1; i >= 1; --i) next.push_back(g.add(seq[i], shift));
        } else {
          for (std::size_t i = 1; i < len; ++i) next.push_back(g.add(seq[i], shift));
        }
      }
      for (std::size_t j = m - 1; j >= 1; --j) {
        next.push_back(shift);
        shift = g.sub(shift, s);
      }
    }
    seq.swap(next);
    g.extend_span(in, members, s);
  }
  return seq;
}

inline std::vector<Index> encode_all(const AbelianGroup& g, const std::vector<VertexWord>& xs) {
  std::vector<Index> out;
  for (const VertexWord& x : xs) {
    if (x.size() != g.moduli().size()) throw Error("element " + element_string(x) + " has wrong length");
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] >= g.moduli()[i]) throw Error("element " + element_string(x) + " is not reduced");
    }
    out.push_back(g.encode(x));
  }
  return out;
}

// A Hamilton cycle of Gamma(G, S) from the generator filtration.
inline HamCycle abelian_ham_cycle(const std::vector<int>& moduli, const std::vector<VertexWord>& gens) {
  AbelianGroup g(moduli);
  std::vector<Index> idx = encode_all(g, gens);
  if (!g.generates(idx)) throw Error("cayley: generators do not generate " + group_string(moduli));
  if (g.size() < 3) throw Error("cayley: need |G| >= 3 for a Hamilton cycle");
  Graph graph = Graph::abelian_cayley(moduli, gens);
  std::vector<VertexWord> words;
  for (Index x : filtration_cycle(g, idx)) words.push_back(g.decode(x));
  return HamCycle{graph, std::move(words), "filtration", Automorphism::identity(graph), 1};
}

// Drops generators, last first, while the rest still generates.
inline std::vector<Index> minimize_generators(const AbelianGroup& g, std::vector<Index> gens) {
  if (!g.generates(gens)) throw Error("cayley: generators do not generate the group");
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Index> rest = gens;
    rest.erase(rest.begin() + i);
    if (g.generates(rest)) gens = std::move(rest);
  }
  return gens;
}

// C := P, g + P, ..., (ord(g)-1)g + P for a path P from 0 to g + s meeting
// every coset of <g> once; s must be a connection element of the graph.
inline HamCycle factor_comp_cycle(const Graph& graph, const VertexWord& g, const VertexWord& s,
                                  const std::vector<VertexWord>& p) {
  if (graph.family() != Family::kAbelianCayley) throw Error("factor_comp_cycle: needs a Cayley graph");
  AbelianGroup grp(graph.moduli());
  Index gi = encode_all(grp, {g})[0];
  Index si = encode_all(grp, {s})[0];
  const auto& conn = graph.connection_set();
  if (std::find(conn.begin(), conn.end(), s) == conn.end()) {
    throw Error("factor_comp_cycle: s = " + element_string(s) + " is not a generator or its inverse");
  }
  std::uint64_t k = grp.order(gi);
  if (p.empty() || p.size() * k != grp.size()) {
    throw Error("factor_comp_cycle: path has " + std::to_string(p.size()) + " vertices, need |G|/ord(g) = " +
                std::to_string(grp.size() / k));
  }
  std::vector<Index> pi = encode_all(grp, p);
  if (pi.front() != 0) throw Error("factor_comp_cycle: path must start at 0");
  if (pi.back() != grp.add(gi, si)) throw Error("factor_comp_cycle: path must end at g + s");
  std::vector<char> hit(grp.size(), 0);
  std::vector<Index> coset_of(grp.size(), 0);
  std::vector<char> sub = grp.span({gi});
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i && !graph.adjacent(p[i - 1], p[i])) {
      throw Error("factor_comp_cycle: " + element_string(p[i - 1]) + " and " + element_string(p[i]) +
                  " are not adjacent");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (sub[grp.sub(pi[i], pi[j])]) {
        throw Error("factor_comp_cycle: " + element_string(p[j]) + " and " + element_string(p[i]) +
                    " lie in the same coset of <g>");
      }
    }
  }
  Automorphism f = Automorphism::translation(graph.moduli(), g);
  return HamCycle{graph, lift_path(f, p, k), "factor", f, k};
}

// How a cycle of compression >= 2 was obtained for even order.
enum class Comp2Case { kCirculant, kReflection, kVoltage };

inline std::string comp2_case_name(Comp2Case c) {
  switch (c) {
    case Comp2Case::kCirculant: return "circulant";
    case Comp2Case::kReflection: return "reflection";
    case Comp2Case::kVoltage: return "voltage";
  }
  return "?";
}

// Result in element indices: the cycle is invariant under x -> map_c + x
// (circulant, voltage) or x -> map_c - x (reflection), rotating it by
// |G|/k positions.
struct Comp2Plan {
  Comp2Case kind = Comp2Case::kCirculant;
  std::vector<Index> cycle;
  Index map_c = 0;
  std::uint64_t k = 0;
  Index s = 0;  // the generator the case was decided by
};

namespace internal {

// DFS over cosets of <h> for a path from 0 through every coset once that
// ends at g - t for some connection element t.
inline bool coset_path(const AbelianGroup& grp, const std::vector<Index>& conn, Index g,
                       const std::vector<std::uint32_t>& coset_of, std::uint32_t cosets,
                       std::vector<Index>& path, std::uint64_t& nodes, std::uint64_t max_nodes) {
  std::vector<char> used(cosets, 0);
  std::vector<char> is_end(grp.size(), 0);
  for (Index t : conn) is_end[grp.sub(g, t)] = 1;
  path.assign(1, 0);
  used[coset_of[0]] = 1;
  std::vector<std::size_t> next(1, 0);
  while (!path.empty()) {
    if (path.size() == cosets) {
      if (is_end[path.back()]) return true;
    }
    std::size_t& i = next.back();
    if (path.size() == cosets || i == conn.size()) {
      used[coset_of[path.back()]] = 0;
      path.pop_back();
      next.pop_back();
      if (path.empty()) {
        path.push_back(0);  // restore for the caller; search exhausted
        return false;
      }
      continue;
    }
    Index y = grp.add(path.back(), conn[i++]);
    if (used[coset_of[y]]) continue;
    if (++nodes > max_nodes) return false;
    used[coset_of[y]] = 1;
    path.push_back(y);
    next.push_back(0);
  }
  return false;
}

}  // namespace internal

// Compression >= 2 for |G| >= 4 even, S generating (minimized first):
//   some s generates G: the circulant cycle 0, s, 2s, ...;
//   some s of order 2: a Hamilton path P of <S \ s> from 0 to v, then
//   (0,P) followed by its image under x -> (s+v) - x;
//   otherwise s of even order >= 4, h = 2s: a path through the cosets of
//   <h> closing with voltage a generator of <h>, lifted by translation.
// Pass minimal = true when gens is already inclusion-minimal.
inline std::optional<Comp2Plan> comp2_plan(const AbelianGroup& grp, const std::vector<Index>& gens,
                                           std::uint64_t max_nodes = 10'000'000, bool minimal = false) {
  Index n = grp.size();
  if (n < 4 || n % 2) throw Error("comp2: need |G| >= 4 even");
  std::vector<Index> s_min = minimal ? gens : minimize_generators(grp, gens);
  std::vector<Index> conn;
  for (Index s : gens) {
    for (Index t : {s, grp.neg(s)}) {
      if (std::find(conn.begin(), conn.end(), t) == conn.end()) conn.push_back(t);
    }
  }
  Comp2Plan plan;
  for (Index s : s_min) {
    if (grp.order(s) == n) {
      plan.kind = Comp2Case::kCirculant;
      plan.s = s;
      plan.map_c = s;
      plan.k = n;
      plan.cycle.resize(n);
      for (Index i = 0, x = 0; i < n; ++i, x = grp.add(x, s)) plan.cycle[i] = x;
      return plan;
    }
  }
  for (std::size_t i = 0; i < s_min.size(); ++i) {
    Index s = s_min[i];
    if (grp.order(s) != 2) continue;
    std::vector<Index> rest = s_min;
    rest.erase(rest.begin() + i);
    std::vector<Index> p = filtration_cycle(grp, rest);
    Index c = grp.add(s, p.back());
    plan.kind = Comp2Case::kReflection;
    plan.s = s;
    plan.map_c = c;
    plan.k = 2;
    plan.cycle = p;
    for (Index x : p) plan.cycle.push_back(grp.sub(c, x));
    return plan;
  }
  Index s = 0;
  std::uint64_t best = 0;
  for (Index t : s_min) {
    std::uint64_t o = grp.order(t);
    if (o % 2 == 0 && o > best) {
      best = o;
      s = t;
    }
  }
  if (best == 0) throw Error("comp2: no generator of even order");
  Index h = grp.add(s, s);
  std::uint64_t k = best / 2;
  std::vector<char> sub = grp.span({h});
  std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
  std::uint32_t cosets = 0;
  for (Index x = 0; x < n; ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    for (Index y = x, j = 0; j < k; ++j, y = grp.add(y, h)) coset_of[y] = cosets;
    ++cosets;
  }
  std::uint64_t nodes = 0;
  std::vector<Index> path;
  for (std::uint64_t j = 1; j < k || (k == 1 && j == 1); ++j) {
    if (std::gcd(j, k) != 1) continue;
    Index g = grp.scale(h, j);
    if (internal::coset_path(grp, conn, g, coset_of, cosets, path, nodes, max_nodes)) {
      plan.kind = Comp2Case::kVoltage;
      plan.s = s;
      plan.map_c = g;
      plan.k = k;
      plan.cycle.clear();
      for (Index r = 0, shift = 0; r < k; ++r, shift = grp.add(shift, g)) {
        for (Index x : path) plan.cycle.push_back(grp.add(x, shift));
      }
      return plan;
    }
    if (nodes > max_nodes) break;
  }
  return std::nullopt;
}

inline HamCycle comp2_cycle(const std::vector<int>& moduli, const std::vector<VertexWord>& gens,
                            std::uint64_t max_nodes = 10'000'000) {
  AbelianGroup grp(moduli);
  std::vector<Index> idx = encode_all(grp, gens);
  if (!grp.generates(idx)) throw Error("comp2: generators do not generate " + group_string(moduli));
  std::optional<Comp2Plan> plan = comp2_plan(grp, idx, max_nodes);
  if (!plan) throw Error("comp2: voltage search found no cycle within the node budget");
  Graph graph = Graph::abelian_cayley(moduli, gens);
  std::vector<VertexWord> words;
  for (Index x : plan->cycle) words.push_back(grp.decode(x));
  Automorphism f = plan->kind == Comp2Case::kReflection
                       ? Automorphism::reflection(moduli, grp.decode(plan->map_c))
                       : Automorphism::translation(moduli, grp.decode(plan->map_c));
  return HamCycle{graph, std::move(words), "comp2_" + comp2_case_name(plan->kind), f, plan->k};
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Support condition: n composite square-free, one generator per prime
// factor with nonzero coordinates exactly there. Assumes each modulus is
// prime; other decompositions are reduced by the caller.
inline bool canonical_generators(const AbelianGroup& grp, const std::vector<Index>& gens) {
  const auto& mod = grp.moduli();
  if (gens.size() != mod.size()) return false;
  for (int m : mod) {
    if (!is_prime(m) || std::count(mod.begin(), mod.end(), m) != 1) return false;
  }
  std::vector<char> used(mod.size(), 0);
  for (Index s : gens) {
    VertexWord w = grp.decode(s);
    int nonzero = -1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0) continue;
      if (nonzero >= 0) return false;
      nonzero = static_cast<int>(i);
    }
    if (nonzero < 0 || used[nonzero]) return false;
    used[nonzero] = 1;
  }
  return true;
}

struct OddClassification {
  bool incompressible = false;  // kappa = 1
  bool certified = false;       // exhaustive certificate or a verified witness
  std::uint64_t lower = 1;      // verified lower bound on kappa
  std::string reason;
  std::optional<HamCycle> witness;
};

// Odd |G|: kappa = 1 exactly when |G| is composite and square-free and S is
// canonical (certified by exhaustive lifted search when |G| <= 1000);
// otherwise a prime p | |G| with kappa >= p, witnessed by a path through
// the cosets of an order-p element h.
inline OddClassification odd_order_classify(const std::vector<int>& moduli, const std::vector<VertexWord>& gens,
                                            const SearchBudget& budget = {}) {
  AbelianGroup grp(moduli);
  Index n = grp.size();
  if (n % 2 == 0) throw Error("odd_order_classify: |G| must be odd");
  std::vector<Index> idx = encode_all(grp, gens);
  if (!grp.generates(idx)) throw Error("odd_order_classify: generators do not generate " + group_string(moduli));
  Graph graph = Graph::abelian_cayley(moduli, gens);
  OddClassification out;
  if (n == 1) {
    out.reason = "trivial group";
    return out;
  }
  std::vector<Index> s_min = minimize_generators(grp, idx);
  for (Index s : s_min) {
    if (grp.order(s) != n) continue;
    Automorphism f = Automorphism::translation(moduli, grp.decode(s));
    std::vector<VertexWord> words;
    for (Index i = 0, x = 0; i < n; ++i, x = grp.add(x, s)) words.push_back(grp.decode(x));
    out.lower = n;
    out.certified = true;
    out.reason = "generator " + element_string(grp.decode(s)) + " has order |G|";
    out.witness = HamCycle{graph, std::move(words), "circulant", f, n};
    return out;
  }
  bool square_free = true;
  std::uint64_t rest = n;
  for (std::uint64_t p = 3; p * p <= rest; p += 2) {
    if (rest % p) continue;
    rest /= p;
    if (rest % p == 0) square_free = false;
    while (rest % p == 0) rest /= p;
  }
  bool all_prime = std::all_of(moduli.begin(), moduli.end(), [](int m) { return is_prime(m); });
  if (square_free && all_prime && canonical_generators(grp, idx)) {
    out.incompressible = true;
    out.lower = 1;
    if (n <= 1000) {
      KappaOptions opt;
      opt.budget = budget;
      KappaResult kr = kappa_exact(graph, opt);
      out.certified = kr.certified && kr.kappa == 1;
      out.witness = kr.witness;
      out.reason = out.certified ? "canonical generators; exhaustive search certifies kappa = 1"
                                 : "canonical generators; exhaustive search inconclusive";
    } else {
      out.reason = "canonical generators; kappa = 1 by the classification, not re-certified above 1000 vertices";
    }
    return out;
  }
  // An element h of prime order p, chosen from a composite-order generator,
  // from an element of order p^2, or off S inside Z_p^2.
  std::vector<Index> hs;
  for (Index s : s_min) {
    std::uint64_t o = grp.order(s);
    for (std::uint64_t p = 3; p <= o; p += 2) {
      if (o % p == 0 && is_prime(p) && o != p) hs.push_back(grp.scale(s, o / p));
    }
  }
  std::vector<char> in_s(n, 0);
  for (Index s : idx) in_s[s] = in_s[grp.neg(s)] = 1;
  for (Index a = 1; a < n; ++a) {
    std::uint64_t o = grp.order(a);
    if (is_prime(o)) {
      if (!in_s[a]) hs.push_back(a);
    } else {
      for (std::uint64_t p = 3; p * p <= o; p += 2) {
        if (o == p * p && is_prime(p)) hs.push_back(grp.scale(a, p));
      }
    }
  }
  for (Index h : hs) {
    std::uint64_t p = grp.order(h);
    for (std::uint64_t j = 1; j < p; ++j) {
      Automorphism f = Automorphism::translation(moduli, grp.decode(grp.scale(h, j)));
      LiftResult r = lifted_cycle_search(graph, f, budget);
      if (r.found()) {
        out.lower = p;
        out.certified = true;
        out.reason = "path through the cosets of <" + element_string(grp.decode(h)) + "> lifts to a " +
                     std::to_string(p) + "-symmetric cycle";
        out.witness = std::move(r.cycle);
        return out;
      }
    }
  }
  out.reason = "no coset path found within the budget; kappa >= 1 only";
  return out;
}

// All abelian groups of order n as lists of prime-power cyclic factors.
inline std::vector<std::vector<int>> abelian_groups(int n) {
  std::vector<std::vector<std::vector<int>>> per_prime;
  int rest = n;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::vector<std::vector<int>> options;
    for (const auto& parts : internal::partitions(e)) {
      std::vector<int> f;
      for (int part : parts) {
        int q = 1;
        for (int i = 0; i < part; ++i) q *= p;
        f.push_back(q);
      }
      options.push_back(f);
    }
    per_prime.push_back(options);
  }
  std::vector<std::vector<int>> out{{}};
  for (const auto& options : per_prime) {
    std::vector<std::vector<int>> next;
    for (const auto& base : out) {
      for (const auto& f : options) {
        std::vector<int> g = base;
        g.insert(g.end(), f.begin(), f.end());
        next.push_back(g);
      }
    }
    out = std::move(next);
  }
  if (n == 1) out = {{1}};
  return out;
}

// Calls visit for every inclusion-minimal generating set, taking one of
// s and -s (the smaller index) since both give the same Cayley graph.
// Elements are listed in increasing index order.
inline std::uint64_t for_each_minimal_generating_set(
    const AbelianGroup& grp, const std::function<void(const std::vector<Index>&)>& visit) {
  Index n = grp.size();
  std::vector<std::uint64_t> order(n);
  for (Index a = 0; a < n; ++a) order[a] = grp.order(a);
  std::vector<Index> cand;
  for (Index a = 1; a < n; ++a) {
    if (a <= grp.neg(a)) cand.push_back(a);
  }
  std::uint64_t count = 0;
  std::vector<Index> chosen;
  std::vector<std::vector<char>> in_stack{std::vector<char>(n, 0)};
  std::vector<std::vector<Index>> members_stack{{0}};
  in_stack[0][0] = 1;
  auto minimal = [&]() {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      std::uint64_t bound = 1;
      for (std::size_t j = 0; j < chosen.size() && bound < n; ++j) {
        if (j != i) bound *= order[chosen[j]];
      }
      if (bound < n) continue;
      std::vector<Index> rest = chosen;
      rest.erase(rest.begin() + i);
      if (grp.generates(rest)) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    for (std::size_t c = from; c < cand.size(); ++c) {
      Index a = cand[c];
      const std::vector<char>& in = in_stack.back();
      if (in[a]) continue;
      std::vector<char> in2 = in;
      std::vector<Index> members2 = members_stack.back();
      grp.extend_span(in2, members2, a);
      chosen.push_back(a);
      if (members2.size() == n) {
        if (minimal()) {
          ++count;
          visit(chosen);
        }
      } else {
        in_stack.push_back(std::move(in2));
        members_stack.push_back(std::move(members2));
        dfs(c + 1);
        in_stack.pop_back();
        members_stack.pop_back();
      }
      chosen.pop_back();
    }
  };
  if (n == 1) {
    visit({});
    return 1;
  }
  dfs(0);
  return count;
}

}  // namespace hamcomp

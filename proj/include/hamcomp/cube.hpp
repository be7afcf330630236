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

// Hypercube constructions: the binary reflected Gray code, the shift-and-
// complement automorphism g with its orbit representatives R_n and the path
// P_n through them, the zigzag product of paths, and symmetric cycles in
// Q_{n+m} built from them.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hamcomp/graphs.hpp"
#include "hamcomp/verify.hpp"

namespace hamcomp {

inline bool is_power_of_two(std::uint64_t n) { return n && !(n & (n - 1)); }

// Gamma_1 = 0, 1 and Gamma_n = 0 Gamma_{n-1}, 1 reverse(Gamma_{n-1}).
inline std::vector<VertexWord> brgc_words(int n) {
  if (n < 1 || n > 30) throw Error("brgc: need 1 <= n <= 30");
  std::vector<VertexWord> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    std::uint64_t gray = i ^ (i >> 1);
    VertexWord w(n);
    for (int j = 0; j < n; ++j) w[j] = static_cast<Symbol>((gray >> (n - 1 - j)) & 1);
    out.push_back(std::move(w));
  }
  return out;
}

// x_1 x_2 x_3 ... -> x_2 ~x_1 ~x_3 ... (x_2 ~x_1 for n = 2).
inline Automorphism brgc_automorphism(int n) {
  std::vector<int> source(n);
  std::iota(source.begin(), source.end(), 0);
  std::vector<Symbol> flips(n, 0);
  source[0] = 1;
  source[1] = 0;
  flips[1] = 1;
  if (n >= 3) flips[2] = 1;
  return Automorphism::hypercube(source, flips);
}

inline HamCycle brgc(int n) {
  if (n < 2) throw Error("brgc: Q_n has a Hamilton cycle only for n >= 2");
  return HamCycle{Graph::hypercube(n), brgc_words(n), "brgc", brgc_automorphism(n), 4};
}

// g(x_1 ... x_n) = x_2 ... x_n ~x_1.
inline Automorphism shift_complement(int n) {
  std::vector<int> source(n);
  for (int i = 0; i < n; ++i) source[i] = (i + 1) % n;
  std::vector<Symbol> flips(n, 0);
  flips[n - 1] = 1;
  return Automorphism::hypercube(source, flips);
}

inline VertexWord apply_power(const Automorphism& f, VertexWord x, std::uint64_t times) {
  for (std::uint64_t i = 0; i < times; ++i) x = f.apply(x);
  return x;
}

// u_1 v_1 u_2 v_2 ... u_n v_n.
inline VertexWord interleave(const VertexWord& u, const VertexWord& v) {
  if (u.size() != v.size()) throw Error("interleave: length mismatch");
  VertexWord w(2 * u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    w[2 * i] = u[i];
    w[2 * i + 1] = v[i];
  }
  return w;
}

inline VertexWord concat(const VertexWord& u, const VertexWord& v) {
  VertexWord w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

// R_2 = {00}; R_{2n} = {g^k(u) o v | u, v in R_n, 0 <= k < n}, listed with k
// outermost, then u, then v.
inline std::vector<VertexWord> representatives(int n) {
  if (n < 2 || !is_power_of_two(n)) throw Error("representatives: n must be a power of two >= 2");
  std::vector<VertexWord> r{VertexWord{0, 0}};
  for (int len = 2; len < n; len *= 2) {
    Automorphism g = shift_complement(len);
    std::vector<VertexWord> next;
    next.reserve(r.size() * r.size() * len);
    std::vector<VertexWord> shifted = r;
    for (int k = 0; k < len; ++k) {
      for (const VertexWord& u : shifted) {
        for (const VertexWord& v : r) next.push_back(interleave(u, v));
      }
      for (VertexWord& u : shifted) u = g.apply(u);
    }
    r = std::move(next);
  }
  return r;
}

using Combine = std::function<VertexWord(const VertexWord&, const VertexWord&)>;

// (P, v_1), (reverse P, v_2), (P, v_3), ... for Q = (v_1, ..., v_s), s even.
inline std::vector<VertexWord> zigzag(const std::vector<VertexWord>& p,
                                      const std::vector<VertexWord>& q,
                                      const Combine& h = concat) {
  if (q.size() % 2) throw Error("zigzag: the second path must have even length");
  std::vector<VertexWord> out;
  out.reserve(p.size() * q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      out.push_back(h(p[j % 2 ? p.size() - 1 - i : i], q[j]));
    }
  }
  return out;
}

// P_4 = (0000, 0010); P_{2n} = h(P' zz P_n), h(P'' zz reverse P_n) with
// P' = P_n, g^2(P_n), ..., g^{n-2}(P_n) and P'' = g(P_n), g^3(P_n), ...,
// g^{n-1}(P_n), where h interleaves.
inline std::vector<VertexWord> rep_path(int n) {
  if (n < 4 || !is_power_of_two(n)) throw Error("rep_path: n must be a power of two >= 4");
  std::vector<VertexWord> p{VertexWord{0, 0, 0, 0}, VertexWord{0, 0, 1, 0}};
  for (int len = 4; len < n; len *= 2) {
    Automorphism g = shift_complement(len);
    std::vector<VertexWord> even, odd;
    std::vector<VertexWord> block = p;
    for (int j = 0; j < len; ++j) {
      auto& dst = j % 2 ? odd : even;
      dst.insert(dst.end(), block.begin(), block.end());
      for (VertexWord& w : block) w = g.apply(w);
    }
    std::vector<VertexWord> reversed(p.rbegin(), p.rend());
    std::vector<VertexWord> next = zigzag(even, p, interleave);
    std::vector<VertexWord> tail = zigzag(odd, reversed, interleave);
    next.insert(next.end(), tail.begin(), tail.end());
    p = std::move(next);
  }
  return p;
}

// (g, h) acting on the concatenation u v.
inline Automorphism product_automorphism(const Automorphism& g, const Automorphism& h) {
  if (g.kind() != Automorphism::Kind::kBits || h.kind() != Automorphism::Kind::kBits) {
    throw Error("product: both factors must act on bitstrings");
  }
  std::vector<int> source = g.source();
  std::vector<Symbol> flips = g.flips();
  int n = static_cast<int>(source.size());
  for (int s : h.source()) source.push_back(n + s);
  flips.insert(flips.end(), h.flips().begin(), h.flips().end());
  return Automorphism::bits(source, flips);
}

// C := P zz Q, f(P zz Q), ..., f^{k-1}(P zz Q) in Q_n x Q_m = Q_{n+m} with
// f = (g, h). Each precondition is checked and reported by name.
inline HamCycle product_cycle(int n, const Automorphism& g, const std::vector<VertexWord>& p, int m,
                              const Automorphism& h, const std::vector<VertexWord>& q,
                              std::string construction = "product") {
  Graph gg = Graph::hypercube(n), hh = Graph::hypercube(m);
  require_fit(gg, g);
  require_fit(hh, h);
  OrbitPartition orb = orbit_partition(gg, g);
  if (!orb.uniform || orb.orbit_size() < 2) {
    throw Error("product: orbits of g must share one size k >= 2");
  }
  std::uint64_t k = orb.orbit_size();
  if (p.empty() || p.size() != orb.size()) throw Error("product: P must visit every orbit of g once");
  std::vector<bool> hit(orb.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    gg.require_vertex(p[i]);
    std::uint32_t o = orb.orbit_of[gg.encode(p[i])];
    if (hit[o]) throw Error("product: P visits an orbit twice");
    hit[o] = true;
    if (i && !gg.adjacent(p[i - 1], p[i])) throw Error("product: P is not a path");
  }
  if (!gg.adjacent(p[0], g.apply(p[0]))) throw Error("product: first vertex of P is not adjacent to its image under g");
  if (hh.vertex_count() % 2) throw Error("product: H must have an even number of vertices");
  if (k % h.order()) throw Error("product: ord(h) must divide k");
  if (q.size() != hh.vertex_count()) throw Error("product: Q must be a Hamilton path of H");
  std::vector<bool> seen(q.size(), false);
  for (std::size_t i = 0; i < q.size(); ++i) {
    hh.require_vertex(q[i]);
    Index x = hh.encode(q[i]);
    if (seen[x]) throw Error("product: Q repeats a vertex");
    seen[x] = true;
    if (i && !hh.adjacent(q[i - 1], q[i])) throw Error("product: Q is not a path");
  }
  if (q.back() != h.apply(q.front())) throw Error("product: Q must end at h(v) for its start v");
  Automorphism f = product_automorphism(g, h);
  std::vector<VertexWord> block = zigzag(p, q);
  return HamCycle{Graph::hypercube(n + m), lift_path(f, block, k), std::move(construction), f, k};
}

// Flip of the first bit of Q_m.
inline Automorphism flip_first(int m) {
  std::vector<int> source(m);
  std::iota(source.begin(), source.end(), 0);
  std::vector<Symbol> flips(m, 0);
  flips[0] = 1;
  return Automorphism::hypercube(source, flips);
}

// A 2n-symmetric cycle in Q_{n+m}, n = 2^r >= 4, with h flipping the first
// bit of Q_m and Q = Gamma_m.
inline HamCycle shifted_product_cycle(int n, int m) {
  if (n < 4 || !is_power_of_two(n) || m < 1) {
    throw Error("shifted_product_cycle: need n a power of two >= 4 and m >= 1");
  }
  return product_cycle(n, shift_complement(n), rep_path(n), m, flip_first(m), brgc_words(m),
                       "optimal");
}

// kappa(Q_n) = 2^ceil(log2 n): the BRGC for n <= 4, otherwise the product
// cycle with n = 2^r + m, r = ceil(log2 n) - 1.
inline HamCycle optimal_cube_cycle(int n) {
  if (n < 2) throw Error("optimal_cube_cycle: need n >= 2");
  if (n <= 4) {
    HamCycle c = brgc(n);
    c.construction = "optimal";
    return c;
  }
  int p = 1;
  while (2 * p < n) p *= 2;
  return shifted_product_cycle(p, n - p);
}

// The automorphism of Q_{m_1+...+m_{t-1}} that complements the first bit and
// then cyclically shifts each group of m_j bits one position to the left.
inline Automorphism group_shift(const std::vector<int>& ms) {
  int total = std::accumulate(ms.begin(), ms.end(), 0);
  std::vector<int> source(total);
  std::vector<Symbol> flips(total, 0);
  int base = 0;
  for (int mj : ms) {
    for (int i = 0; i < mj; ++i) source[base + i] = base + (i + 1) % mj;
    base += mj;
  }
  flips[ms[0] - 1] = 1;
  return Automorphism::hypercube(source, flips);
}

// A 2n-symmetric cycle in Q_{n+m_1+...+m_{t-1}} with at most t tracks.
// Q is Gamma_m with every word reversed when t = 2, and Gamma_M with
// coordinates 1 and m_1 exchanged otherwise, so that Q ends at h(0^M).
inline HamCycle t_track_cycle(int n, const std::vector<int>& ms) {
  if (n < 4 || !is_power_of_two(n)) throw Error("t_track_cycle: n must be a power of two >= 4");
  if (ms.empty()) throw Error("t_track_cycle: need t >= 2");
  for (std::size_t j = 0; j < ms.size(); ++j) {
    if (ms[j] < 1 || !is_power_of_two(ms[j]) || ms[j] > n) {
      throw Error("t_track_cycle: each m_j must be a power of two <= n");
    }
    if (j && ms[j] > ms[j - 1]) throw Error("t_track_cycle: m_j must be non-increasing");
  }
  int total = std::accumulate(ms.begin(), ms.end(), 0);
  std::vector<VertexWord> q = brgc_words(total);
  if (ms.size() == 1) {
    for (VertexWord& w : q) std::reverse(w.begin(), w.end());
  } else {
    for (VertexWord& w : q) std::swap(w[0], w[ms[0] - 1]);
  }
  std::string name = ms.size() == 1 ? "two_track" : "t_track";
  return product_cycle(n, shift_complement(n), rep_path(n), total, group_shift(ms), q, name);
}

inline HamCycle two_track_cycle(int n, int m) { return t_track_cycle(n, {m}); }

}  // namespace hamcomp

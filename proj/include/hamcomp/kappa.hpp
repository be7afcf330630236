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

// Exact Hamilton compression by lifted search over one automorphism per
// conjugacy class of the family's automorphism group.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamcomp/bounds.hpp"
#include "hamcomp/graphs.hpp"
#include "hamcomp/search.hpp"
#include "hamcomp/verify.hpp"

namespace hamcomp {

struct KappaCandidate {
  Automorphism f;
  std::uint64_t k = 0;  // common orbit size
  std::string label;
};

struct CandidateList {
  std::vector<KappaCandidate> candidates;  // uniform orbits only, k descending
  bool complete = false;  // one automorphism from every conjugacy class
};

namespace internal {

inline void partitions_into(int n, int max_part, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(n - p, p, cur, out);
    cur.pop_back();
  }
}

// All partitions of n, parts non-increasing.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_into(n, n, cur, out);
  return out;
}

// A 0-based permutation with consecutive cycles of the given lengths.
inline std::vector<int> cycles_permutation(const std::vector<int>& lengths) {
  std::vector<int> p;
  int base = 0;
  for (int len : lengths) {
    for (int i = 0; i < len; ++i) p.push_back(base + (i + 1) % len);
    base += len;
  }
  return p;
}

inline std::string parts_label(const std::vector<int>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

// Signed cycle types: each cycle (length, parity of its flips).
inline void signed_types(const std::vector<int>& parts, std::size_t i,
                         std::vector<std::pair<int, int>>& cur,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
  if (i == parts.size()) {
    out.push_back(cur);
    return;
  }
  std::size_t j = i;
  while (j < parts.size() && parts[j] == parts[i]) ++j;
  for (std::size_t signed_count = 0; signed_count <= j - i; ++signed_count) {
    for (std::size_t t = i; t < j; ++t) cur.emplace_back(parts[t], t - i < signed_count ? 1 : 0);
    signed_types(parts, j, cur, out);
    cur.resize(cur.size() - (j - i));
  }
}

}  // namespace internal

// One automorphism per conjugacy class where the family's group is known:
//   Q_n: signed cycle types; J_{n,k}: cycle types (with complement when
//   n = 2k); M_{2n+1}: cycle types with or without complement; Pi_n:
//   {id, rev} x cycle types on values; canonical Cayley graphs of distinct
//   prime orders: per coordinate identity, a rotation up to sign, or a
//   reflection. Pi_n^+ and other Cayley graphs get a subgroup only.
inline std::vector<Automorphism> automorphism_candidates(const Graph& g, bool& complete) {
  std::vector<Automorphism> out;
  complete = true;
  int n = g.n();
  switch (g.family()) {
    case Family::kHypercube:
      for (const auto& parts : internal::partitions(n)) {
        std::vector<std::vector<std::pair<int, int>>> types;
        std::vector<std::pair<int, int>> cur;
        internal::signed_types(parts, 0, cur, types);
        for (const auto& type : types) {
          std::vector<int> lengths;
          for (auto [len, sign] : type) lengths.push_back(len);
          std::vector<int> source = internal::cycles_permutation(lengths);
          std::vector<Symbol> flips(n, 0);
          int base = 0;
          for (auto [len, sign] : type) {
            flips[base] = static_cast<Symbol>(sign);
            base += len;
          }
          out.push_back(Automorphism::hypercube(source, flips));
        }
      }
      break;
    case Family::kJohnson:
    case Family::kMiddleLevels: {
      bool cpl = g.family() == Family::kMiddleLevels || n == 2 * g.k();
      for (const auto& parts : internal::partitions(n)) {
        std::vector<int> source = internal::cycles_permutation(parts);
        out.push_back(Automorphism::johnson(source, false));
        if (cpl) out.push_back(Automorphism::johnson(source, true));
      }
      break;
    }
    case Family::kPermutahedron:
    case Family::kPermutahedronPlus: {
      std::vector<std::vector<int>> position_maps;
      std::vector<int> id(n);
      std::iota(id.begin(), id.end(), 0);
      if (g.family() == Family::kPermutahedron) {
        position_maps.push_back(id);
        std::vector<int> rev(id.rbegin(), id.rend());
        position_maps.push_back(rev);
      } else {
        complete = false;
        for (int j = 0; j <= n / 2; ++j) {
          std::vector<int> rot(n);
          for (int i = 0; i < n; ++i) rot[i] = (i + j) % n;
          position_maps.push_back(rot);
        }
        for (int j = 0; j < (n % 2 ? 1 : 2) && n >= 3; ++j) {
          std::vector<int> refl(n);
          for (int i = 0; i < n; ++i) refl[i] = ((j - i) % n + n) % n;
          position_maps.push_back(refl);
        }
      }
      for (const auto& source : position_maps) {
        for (const auto& parts : internal::partitions(n)) {
          std::vector<int> cyc = internal::cycles_permutation(parts);
          std::vector<int> values(n + 1, 0);
          for (int v = 1; v <= n; ++v) values[v] = cyc[v - 1] + 1;
          out.push_back(Automorphism::positions(source, values));
        }
      }
      break;
    }
    case Family::kAbelianCayley: {
      const auto& mod = g.moduli();
      std::size_t l = mod.size();
      bool canonical = g.generators().size() == l;
      for (std::size_t i = 0; canonical && i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
          if ((g.generators()[i][j] != 0) != (i == j)) canonical = false;
        }
      }
      auto is_prime = [](int p) {
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d) {
          if (p % d == 0) return false;
        }
        return true;
      };
      bool distinct_primes = canonical;
      for (std::size_t i = 0; i < l && distinct_primes; ++i) {
        distinct_primes = is_prime(mod[i]) && mod[i] >= 3 &&
                          std::count(mod.begin(), mod.end(), mod[i]) == 1;
      }
      if (canonical) {
        // Per coordinate: (sign, multiple of the generator).
        std::vector<std::vector<std::pair<int, int>>> options(l);
        for (std::size_t i = 0; i < l; ++i) {
          options[i].emplace_back(1, 0);
          int top = distinct_primes ? (mod[i] - 1) / 2 : mod[i] - 1;
          for (int c = 1; c <= top; ++c) options[i].emplace_back(1, c);
          options[i].emplace_back(-1, 0);
        }
        complete = distinct_primes;
        std::vector<std::size_t> pick(l, 0);
        while (true) {
          std::vector<int> signs(l);
          VertexWord offset(l);
          for (std::size_t i = 0; i < l; ++i) {
            signs[i] = options[i][pick[i]].first;
            offset[i] = static_cast<Symbol>(
                (static_cast<long long>(options[i][pick[i]].second) * g.generators()[i][i]) % mod[i]);
          }
          out.push_back(Automorphism::affine(mod, signs, offset));
          std::size_t i = 0;
          while (i < l && ++pick[i] == options[i].size()) pick[i++] = 0;
          if (i == l) break;
        }
      } else {
        complete = false;
        for (Index x = 0; x < g.vertex_count(); ++x) {
          out.push_back(Automorphism::translation(mod, g.decode(x)));
        }
        for (Index x = 0; x < g.vertex_count(); ++x) {
          out.push_back(Automorphism::reflection(mod, g.decode(x)));
        }
      }
      break;
    }
    case Family::kExplicit:
      complete = false;
      out.push_back(Automorphism::identity(g));
      break;
  }
  return out;
}

// Candidates with uniform orbits, sorted by orbit size descending (ties
// keep generation order). Extra automorphisms are validated and appended.
inline CandidateList kappa_candidates(const Graph& g, const std::vector<Automorphism>& extra = {},
                                      bool extra_only = false) {
  CandidateList list;
  std::vector<Automorphism> raw;
  if (!extra_only) raw = automorphism_candidates(g, list.complete);
  if (extra_only || !extra.empty()) list.complete = list.complete && !extra_only;
  for (const Automorphism& f : extra) {
    if (!structurally_automorphic(g, f) && !preserves_edges(g, f)) {
      throw Error("kappa: " + f.describe() + " is not an automorphism of " + g.describe());
    }
    raw.push_back(f);
  }
  bool has_identity = false;
  for (const Automorphism& f : raw) {
    OrbitPartition p = orbit_partition(g, f);
    if (!p.uniform) continue;
    if (p.orbit_size() == 1) {
      if (has_identity) continue;
      has_identity = true;
    }
    list.candidates.push_back({f, p.orbit_size(), f.describe()});
  }
  if (!has_identity) list.candidates.push_back({Automorphism::identity(g), 1, "identity"});
  std::stable_sort(list.candidates.begin(), list.candidates.end(),
                   [](const KappaCandidate& a, const KappaCandidate& b) { return a.k > b.k; });
  return list;
}

struct KappaOptions {
  SearchBudget budget{10'000'000, 0};  // per candidate
  bool use_bounds = true;
  std::vector<Automorphism> extra;  // user automorphisms (explicit graphs)
  bool extra_only = false;
};

struct KappaAttempt {
  std::string label;
  std::uint64_t k = 0;
  std::string outcome;  // found, exhausted, budget, bound
  std::uint64_t nodes = 0;
};

struct KappaResult {
  std::uint64_t kappa = 0;  // best k achieved (0: no Hamilton cycle)
  std::uint64_t upper = 0;  // largest k not ruled out
  bool certified = false;   // kappa == upper and the candidate list is complete
  std::optional<HamCycle> witness;
  std::vector<KappaAttempt> attempts;
};

inline KappaResult kappa_exact(const Graph& g, const KappaOptions& opt = {}) {
  CandidateList list = kappa_candidates(g, opt.extra, opt.extra_only);
  std::optional<std::uint64_t> bound;
  if (opt.use_bounds) bound = family_upper_bound(g);
  KappaResult r;
  bool budget_hit = false;
  for (const KappaCandidate& c : list.candidates) {
    if (c.k <= r.kappa) break;
    bool pruned = bound && c.k > *bound;
    if (!pruned && opt.use_bounds && g.family() == Family::kHypercube && g.n() >= 3) {
      pruned = !hypercube_k_allowed(g.n(), c.k);
    }
    if (pruned) {
      r.attempts.push_back({c.label, c.k, "bound", 0});
      continue;
    }
    LiftResult lift = lifted_cycle_search(g, c.f, opt.budget);
    r.attempts.push_back({c.label, c.k, status_name(lift.status), lift.nodes});
    if (lift.found()) {
      r.kappa = c.k;
      r.witness = std::move(lift.cycle);
      r.witness->construction = "kappa_exact";
      break;
    }
    if (lift.status == SearchStatus::kBudget) {
      budget_hit = true;
      r.upper = std::max(r.upper, c.k);
    }
  }
  r.upper = std::max(r.upper, r.kappa);
  r.certified = list.complete && !budget_hit;
  return r;
}

}  // namespace hamcomp

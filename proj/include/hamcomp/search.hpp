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

// Backtracking search for paths that visit every orbit of a vertex partition
// exactly once. With singleton orbits this is plain Hamilton path search.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hamcomp/graphs.hpp"

namespace hamcomp {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 0;  // 0 means no wall-clock limit
};

enum class SearchStatus { kFound, kExhausted, kBudget };

inline std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kExhausted: return "exhausted";
    case SearchStatus::kBudget: return "budget";
  }
  return "?";
}

struct SearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::vector<Index> path;
  std::uint64_t nodes = 0;
  bool found() const { return status == SearchStatus::kFound; }
};

enum class Ordering { kLexicographic, kWarnsdorff };

class OrbitPathSearch {
 public:
  using NeighborFn = std::function<void(Index, std::vector<Index>&)>;
  // Return false to stop enumeration.
  using Visitor = std::function<bool(const std::vector<Index>&)>;

  OrbitPathSearch(std::vector<std::uint32_t> orbit_of, std::uint32_t orbit_count,
                  NeighborFn neighbors)
      : orbit_of_(std::move(orbit_of)),
        orbit_count_(orbit_count),
        neighbors_(std::move(neighbors)) {
    build_quotient();
  }

  // Uses the graph's own neighbor oracle.
  OrbitPathSearch(const Graph& g, std::vector<std::uint32_t> orbit_of,
                  std::uint32_t orbit_count)
      : OrbitPathSearch(std::move(orbit_of), orbit_count,
                        [&g](Index x, std::vector<Index>& out) { g.neighbor_indices(x, out); }) {}

  std::uint32_t orbit_count() const { return orbit_count_; }
  const std::vector<std::vector<std::uint32_t>>& quotient() const { return qadj_; }

  // A path from start through every orbit once, ending exactly at end.
  SearchResult path_to(Index start, Index end, Ordering order, const SearchBudget& budget,
                       const Visitor& visit = {}) {
    return run(start, end, /*close=*/false, order, budget, visit);
  }

  // A path from start through every orbit once whose last vertex is
  // adjacent to target (which lies in start's orbit for lifted cycles).
  SearchResult path_closing_at(Index start, Index target, Ordering order,
                               const SearchBudget& budget, const Visitor& visit = {}) {
    return run(start, target, /*close=*/true, order, budget, visit);
  }

 private:
  void build_quotient() {
    std::vector<Index> rep(orbit_count_, std::numeric_limits<Index>::max());
    for (Index x = 0; x < orbit_of_.size(); ++x) {
      std::uint32_t o = orbit_of_[x];
      if (rep[o] == std::numeric_limits<Index>::max()) rep[o] = x;
    }
    qadj_.assign(orbit_count_, {});
    std::vector<Index> nb;
    for (std::uint32_t o = 0; o < orbit_count_; ++o) {
      neighbors_(rep[o], nb);
      for (Index y : nb) {
        std::uint32_t p = orbit_of_[y];
        if (p != o) qadj_[o].push_back(p);
      }
      std::sort(qadj_[o].begin(), qadj_[o].end());
      qadj_[o].erase(std::unique(qadj_[o].begin(), qadj_[o].end()), qadj_[o].end());
    }
  }

  bool qadjacent(std::uint32_t a, std::uint32_t b) const {
    return std::binary_search(qadj_[a].begin(), qadj_[a].end(), b);
  }

  struct Frame {
    std::vector<Index> candidates;
    std::size_t next = 0;
  };

  SearchResult run(Index start, Index target, bool close, Ordering order,
                   const SearchBudget& budget, const Visitor& visit) {
    SearchResult result;
    const std::uint32_t total = orbit_count_;
    const std::uint32_t start_orbit = orbit_of_[start];
    const std::uint32_t end_orbit = orbit_of_[target];
    if (!close && start_orbit == end_orbit && (total != 1 || start != target)) {
      return result;  // the end orbit cannot be both first and last
    }
    std::vector<char> visited(total, 0);
    std::vector<std::uint32_t> free_deg(total);
    for (std::uint32_t o = 0; o < total; ++o) {
      free_deg[o] = static_cast<std::uint32_t>(qadj_[o].size());
    }
    auto mark = [&](std::uint32_t o, int delta) {
      visited[o] = delta > 0;
      for (std::uint32_t p : qadj_[o]) free_deg[p] -= delta;
    };

    std::vector<Index> path{start};
    mark(start_orbit, 1);
    std::vector<Index> nb;
    std::vector<Index> target_nb;
    if (close) {
      neighbors_(target, target_nb);
      std::sort(target_nb.begin(), target_nb.end());
    }
    auto complete = [&]() {
      Index last = path.back();
      if (close) return std::binary_search(target_nb.begin(), target_nb.end(), last);
      return last == target;
    };

    auto start_time = std::chrono::steady_clock::now();
    auto out_of_budget = [&]() {
      if (result.nodes > budget.max_nodes) return true;
      if (budget.max_seconds > 0 && (result.nodes & 4095) == 0) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_time;
        if (dt.count() > budget.max_seconds) return true;
      }
      return false;
    };

    // Necessary condition on the quotient after the head moved from orbit
    // old_head to new_head: every unvisited orbit still has enough
    // available neighbors to be entered and left.
    auto feasible = [&](std::uint32_t old_head, std::uint32_t new_head) {
      std::uint32_t remaining = total - static_cast<std::uint32_t>(path.size());
      if (remaining == 0 || total <= 3) return true;
      auto check = [&](std::uint32_t o) {
        if (visited[o]) return true;
        std::uint32_t avail = free_deg[o] + (qadjacent(o, new_head) ? 1 : 0);
        if (close) {
          if (qadjacent(o, start_orbit)) ++avail;
          return avail >= 2;
        }
        if (o == end_orbit) return avail >= 1;
        return avail >= 2 || remaining == 1;
      };
      for (std::uint32_t o : qadj_[old_head]) {
        if (!check(o)) return false;
      }
      for (std::uint32_t o : qadj_[new_head]) {
        if (!check(o)) return false;
      }
      if (!close && !visited[end_orbit] && !check(end_orbit)) return false;
      return true;
    };

    auto candidates_of = [&](Index head, std::vector<Index>& out) {
      out.clear();
      std::uint32_t remaining = total - static_cast<std::uint32_t>(path.size());
      neighbors_(head, nb);
      for (Index y : nb) {
        std::uint32_t o = orbit_of_[y];
        if (visited[o]) continue;
        if (!close) {
          if (o == end_orbit && (remaining != 1 || y != target)) continue;
        }
        out.push_back(y);
      }
      if (order == Ordering::kWarnsdorff) {
        std::sort(out.begin(), out.end(), [&](Index a, Index b) {
          std::uint32_t da = free_deg[orbit_of_[a]], db = free_deg[orbit_of_[b]];
          return da != db ? da < db : a < b;
        });
      } else {
        std::sort(out.begin(), out.end());
      }
    };

    if (path.size() == total) {
      if (complete()) {
        result.path = path;
        result.status = SearchStatus::kFound;
        if (visit) visit(path);
      }
      return result;
    }

    std::vector<Frame> stack;
    stack.emplace_back();
    candidates_of(start, stack.back().candidates);
    bool stopped = false;
    while (!stack.empty() && !stopped) {
      Frame& top = stack.back();
      if (top.next == top.candidates.size()) {
        stack.pop_back();
        if (path.size() > 1) {
          mark(orbit_of_[path.back()], -1);
          path.pop_back();
        }
        continue;
      }
      Index y = top.candidates[top.next++];
      ++result.nodes;
      if (out_of_budget()) {
        result.status = SearchStatus::kBudget;
        return result;
      }
      std::uint32_t old_head = orbit_of_[path.back()];
      std::uint32_t o = orbit_of_[y];
      path.push_back(y);
      mark(o, 1);
      if (path.size() == total) {
        if (complete()) {
          result.path = path;
          result.status = SearchStatus::kFound;
          if (!visit || !visit(path)) stopped = true;
        }
        mark(o, -1);
        path.pop_back();
        continue;
      }
      if (!feasible(old_head, o)) {
        mark(o, -1);
        path.pop_back();
        continue;
      }
      stack.emplace_back();
      candidates_of(y, stack.back().candidates);
    }
    if (result.status != SearchStatus::kFound) result.status = SearchStatus::kExhausted;
    return result;
  }

  std::vector<std::uint32_t> orbit_of_;
  std::uint32_t orbit_count_;
  NeighborFn neighbors_;
  std::vector<std::vector<std::uint32_t>> qadj_;
};

// Singleton orbits: plain Hamilton path search.
inline std::vector<std::uint32_t> singleton_orbits(Index n) {
  std::vector<std::uint32_t> ids(n);
  for (Index i = 0; i < n; ++i) ids[i] = static_cast<std::uint32_t>(i);
  return ids;
}

// Hamilton path from start to target (or, with close, a Hamilton cycle
// through start) by rotation-extension: extend the head to its unvisited
// neighbor with fewest unvisited neighbors; when stuck, pick a random path
// neighbor w of the head and reverse the segment after w. The target stays
// off the path until every other vertex is covered. Restarts with a fresh
// random state after 50 steps per vertex. Deterministic for a given seed.
inline SearchResult rotation_path_search(Index count, const OrbitPathSearch::NeighborFn& neighbors,
                                         Index start, Index target, bool close,
                                         const SearchBudget& budget = {},
                                         std::uint64_t seed = 1) {
  SearchResult result;
  if (count == 0 || start >= count || target >= count) return result;
  if (!close && start == target) {
    if (count == 1) {
      result.path = {start};
      result.status = SearchStatus::kFound;
    }
    return result;
  }
  if (count == 1) {
    result.path = {start};
    result.status = close ? SearchStatus::kFound : SearchStatus::kExhausted;
    return result;
  }
  std::mt19937_64 rng(seed);
  const Index avoid = close ? count : target;
  const Index goal = close ? count : count - 1;  // path length before the last step
  std::vector<Index> path, pos(count), nb, nb2, options;
  std::vector<char> on(count);
  auto start_time = std::chrono::steady_clock::now();
  const std::uint64_t per_try = 50 * static_cast<std::uint64_t>(count) + 10'000;
  while (true) {
    path.assign(1, start);
    std::fill(on.begin(), on.end(), 0);
    on[start] = 1;
    pos[start] = 0;
    for (std::uint64_t step = 0; step < per_try; ++step) {
      if (++result.nodes > budget.max_nodes) {
        result.status = SearchStatus::kBudget;
        return result;
      }
      if (budget.max_seconds > 0 && (result.nodes & 4095) == 0) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_time;
        if (dt.count() > budget.max_seconds) {
          result.status = SearchStatus::kBudget;
          return result;
        }
      }
      Index head = path.back();
      neighbors(head, nb);
      if (path.size() == goal) {
        Index want = close ? start : target;
        if (std::find(nb.begin(), nb.end(), want) != nb.end()) {
          if (!close) path.push_back(target);
          result.path = path;
          result.status = SearchStatus::kFound;
          return result;
        }
      }
      Index best = count;
      std::size_t best_deg = 0;
      std::size_t ties = 0;
      for (Index y : nb) {
        if (on[y] || y == avoid) continue;
        neighbors(y, nb2);
        std::size_t d = 0;
        for (Index z : nb2) d += !on[z] && z != avoid;
        if (best == count || d < best_deg) {
          best = y;
          best_deg = d;
          ties = 1;
        } else if (d == best_deg && rng() % ++ties == 0) {
          best = y;
        }
      }
      if (best != count) {
        pos[best] = path.size();
        path.push_back(best);
        on[best] = 1;
        continue;
      }
      options.clear();
      for (Index y : nb) {
        if (on[y] && pos[y] + 2 < path.size()) options.push_back(y);
      }
      if (options.empty()) break;
      std::size_t i = pos[options[rng() % options.size()]];
      std::reverse(path.begin() + i + 1, path.end());
      for (std::size_t j = i + 1; j < path.size(); ++j) pos[path[j]] = j;
    }
  }
}

// Path from start to target through every orbit of an automorphism f once,
// by rotation-extension on orbit representatives. orbits[o] lists orbit o
// in f-order. When the head is adjacent to y = f^j(v_i) for a path vertex
// v_i, the path v_1..v_i f^-j(v_m)..f^-j(v_{i+1}) is again valid since f^-j
// maps edges to edges. The target orbit stays off the path until every
// other orbit is covered. Restarts after 50 steps per orbit.
inline SearchResult orbit_rotation_path_search(const std::vector<std::vector<Index>>& orbits,
                                               const std::vector<std::uint32_t>& orbit_of,
                                               const OrbitPathSearch::NeighborFn& neighbors,
                                               Index start, Index target,
                                               const SearchBudget& budget = {},
                                               std::uint64_t seed = 1) {
  SearchResult result;
  const std::size_t total = orbits.size();
  const std::uint32_t avoid = orbit_of[target];
  if (orbit_of[start] == avoid) {
    if (total == 1 && start == target) {
      result.path = {start};
      result.status = SearchStatus::kFound;
    }
    return result;
  }
  std::vector<std::uint32_t> rank(orbit_of.size());
  for (const auto& o : orbits) {
    for (std::size_t i = 0; i < o.size(); ++i) rank[o[i]] = static_cast<std::uint32_t>(i);
  }
  // f^j(x), j taken modulo the orbit size of x.
  auto shift = [&](Index x, long long j) {
    const std::vector<Index>& o = orbits[orbit_of[x]];
    long long m = static_cast<long long>(o.size());
    return o[static_cast<std::size_t>(((rank[x] + j) % m + m) % m)];
  };
  constexpr std::size_t kOff = std::numeric_limits<std::size_t>::max();
  std::mt19937_64 rng(seed);
  std::vector<Index> path, nb;
  std::vector<std::size_t> at(total, kOff);  // path position per orbit
  std::vector<std::pair<std::size_t, long long>> options;
  // Quotient adjacency and, per orbit, the number of adjacent orbits that
  // are neither on the path nor the target orbit.
  std::vector<std::vector<std::uint32_t>> qadj(total);
  for (std::uint32_t o = 0; o < total; ++o) {
    neighbors(orbits[o][0], nb);
    for (Index y : nb) {
      if (orbit_of[y] != o) qadj[o].push_back(orbit_of[y]);
    }
    std::sort(qadj[o].begin(), qadj[o].end());
    qadj[o].erase(std::unique(qadj[o].begin(), qadj[o].end()), qadj[o].end());
  }
  std::vector<std::uint32_t> free_deg(total);
  auto enter = [&](std::uint32_t o) {
    for (std::uint32_t p : qadj[o]) --free_deg[p];
  };
  auto start_time = std::chrono::steady_clock::now();
  const std::uint64_t per_try = 50 * static_cast<std::uint64_t>(total) + 10'000;
  while (true) {
    for (Index x : path) at[orbit_of[x]] = kOff;
    for (std::uint32_t o = 0; o < total; ++o) {
      free_deg[o] = static_cast<std::uint32_t>(qadj[o].size());
    }
    enter(avoid);
    path.assign(1, start);
    at[orbit_of[start]] = 0;
    enter(orbit_of[start]);
    for (std::uint64_t step = 0; step < per_try; ++step) {
      if (++result.nodes > budget.max_nodes) {
        result.status = SearchStatus::kBudget;
        return result;
      }
      if (budget.max_seconds > 0 && (result.nodes & 4095) == 0) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_time;
        if (dt.count() > budget.max_seconds) {
          result.status = SearchStatus::kBudget;
          return result;
        }
      }
      Index head = path.back();
      neighbors(head, nb);
      if (path.size() + 1 == total && std::find(nb.begin(), nb.end(), target) != nb.end()) {
        path.push_back(target);
        result.path = path;
        result.status = SearchStatus::kFound;
        return result;
      }
      Index best = kOff;
      std::size_t best_deg = 0, ties = 0;
      for (Index y : nb) {
        std::uint32_t o = orbit_of[y];
        if (at[o] != kOff || o == avoid) continue;
        std::size_t d = free_deg[o];
        if (best == kOff || d < best_deg) {
          best = y;
          best_deg = d;
          ties = 1;
        } else if (d == best_deg && rng() % ++ties == 0) {
          best = y;
        }
      }
      if (best != kOff) {
        at[orbit_of[best]] = path.size();
        enter(orbit_of[best]);
        path.push_back(best);
        continue;
      }
      options.clear();
      for (Index y : nb) {
        std::size_t i = at[orbit_of[y]];
        if (i == kOff || i + 1 >= path.size()) continue;
        long long j = static_cast<long long>(rank[y]) - rank[path[i]];
        if (i + 2 == path.size() && shift(path[i], j) == path[i]) continue;
        options.emplace_back(i, j);
      }
      if (options.empty()) break;
      auto [i, j] = options[rng() % options.size()];
      std::reverse(path.begin() + i + 1, path.end());
      for (std::size_t t = i + 1; t < path.size(); ++t) {
        path[t] = shift(path[t], -j);
        at[orbit_of[path[t]]] = t;
      }
    }
  }
}

}  // namespace hamcomp

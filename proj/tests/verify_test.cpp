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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "test_util.hpp"

namespace hamcomp {
namespace {

HamCycle ring(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  Graph g = Graph::explicit_graph(n, edges);
  HamCycle c{g, {}, "ring", std::nullopt, std::nullopt};
  for (int i = 0; i < n; ++i) c.vertices.push_back({static_cast<Symbol>(i)});
  return c;
}

TEST(Validate, AcceptsBrgc) {
  HamCycle c = brgc(4);
  CycleReport r = validate_cycle(c);
  EXPECT_TRUE(r.ok) << r.reason;
}

TEST(Validate, ReportsLength) {
  HamCycle c = brgc(4);
  c.vertices.pop_back();
  CycleReport r = validate_cycle(c);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.index, 15u);
  EXPECT_NE(r.reason.find("length"), std::string::npos);
}

TEST(Validate, ReportsRepeatedVertex) {
  HamCycle c = brgc(4);
  c.vertices[9] = c.vertices[3];
  CycleReport r = validate_cycle(c);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.index, 9u);
  EXPECT_NE(r.reason.find("repeated"), std::string::npos);
}

TEST(Validate, ReportsInvalidWord) {
  HamCycle c = brgc(4);
  c.vertices[6] = {0, 2, 0, 0};
  CycleReport r = validate_cycle(c);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.index, 6u);
  EXPECT_NE(r.reason.find("invalid"), std::string::npos);
}

TEST(Validate, ReportsMissingEdge) {
  HamCycle c = brgc(4);
  std::swap(c.vertices[4], c.vertices[6]);
  CycleReport r = validate_cycle(c);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.index, 3u);
  EXPECT_NE(r.reason.find("not adjacent"), std::string::npos);
  EXPECT_THROW(cycle_compression(c), Error);
}

TEST(Validate, ReportsWrapAroundEdge) {
  HamCycle c = brgc(3);
  std::rotate(c.vertices.begin() + 1, c.vertices.begin() + 2, c.vertices.end());
  CycleReport r = validate_cycle(c);
  EXPECT_FALSE(r.ok);
}

TEST(Symmetric, BrgcIsNotEightSymmetricUnderShift) {
  HamCycle c = brgc(4);
  EXPECT_FALSE(check_symmetric(c, shift_complement(4), 8));
  EXPECT_TRUE(check_symmetric(c, brgc_automorphism(4), 4));
}

TEST(Symmetric, IdentityIsOneSymmetric) {
  for (HamCycle c : {brgc(5), sjt(4), ring(7)}) {
    EXPECT_TRUE(check_symmetric(c, Automorphism::identity(c.graph), 1));
  }
}

TEST(Symmetric, RejectsNonDivisor) {
  HamCycle c = brgc(3);
  EXPECT_THROW(check_symmetric(c, brgc_automorphism(3), 3), Error);
}

TEST(Compression, RingAndCompleteGraph) {
  for (int n : {3, 5, 8, 12}) {
    HamCycle c = ring(n);
    EXPECT_EQ(cycle_compression(c), static_cast<std::uint64_t>(n));
    EXPECT_EQ(oracle::compression(c.vertices, testing::oracle_adjacency(c.graph)), static_cast<std::uint64_t>(n));
  }
  for (int n : {4, 7, 9}) {
    Graph k = Graph::johnson(n, 1);
    HamCycle c{k, {}, "", std::nullopt, std::nullopt};
    for (Index x = 0; x < k.vertex_count(); ++x) c.vertices.push_back(k.decode(x));
    std::reverse(c.vertices.begin() + 1, c.vertices.end());
    EXPECT_EQ(cycle_compression(c), static_cast<std::uint64_t>(n));
    EXPECT_EQ(oracle::compression(c.vertices, oracle::johnson_adjacent), static_cast<std::uint64_t>(n));
  }
}

TEST(Compression, SjtValues) {
  EXPECT_EQ(cycle_compression(sjt(3)), 6u);
  EXPECT_EQ(cycle_compression(sjt(4)), 6u);
  EXPECT_EQ(cycle_compression(sjt(5)), 3u);
  EXPECT_EQ(oracle::compression(sjt(5).vertices, [](const oracle::Word& a, const oracle::Word& b) {
              return oracle::swap_adjacent(a, b, false);
            }),
            3u);
}

// A wrong automorphism attached to the cycle must not inflate the result.
TEST(Compression, IgnoresMisleadingAutomorphism) {
  HamCycle c = brgc(4);
  c.automorphism = shift_complement(4);
  c.claimed_k = 8;
  EXPECT_EQ(cycle_compression(c), 4u);
}

TEST(Divisors, Ascending) {
  EXPECT_EQ(internal::divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(internal::divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(internal::divisors(49), (std::vector<std::uint64_t>{1, 7, 49}));
}

TEST(Lcf, BrgcThreeCube) {
  Lcf l = lcf(brgc(3));
  EXPECT_EQ(l.sets.size(), 8u);
  EXPECT_EQ(l.period % 2, 0u);
  EXPECT_EQ(8 % l.period, 0u);
}

TEST(Lcf, EquivalenceUpToRotationAndReversal) {
  std::vector<DistanceSet> block = {{7}, {-3}, {3}, {-7}};
  std::vector<DistanceSet> seq;
  for (int r = 0; r < 6; ++r) seq.insert(seq.end(), block.begin(), block.end());
  EXPECT_TRUE(lcf_equivalent(seq, block));
  std::rotate(seq.begin(), seq.begin() + 1, seq.end());
  EXPECT_TRUE(lcf_equivalent(seq, block));
  EXPECT_FALSE(lcf_equivalent(seq, {{7}, {3}, {-3}, {-7}}));
  // Reversal reverses the order and negates every distance.
  EXPECT_TRUE(lcf_equivalent({{5}, {-9}, {9}, {-5}, {5}, {-9}, {9}, {-5}}, {{9}, {-5}, {5}, {-9}}));
  EXPECT_TRUE(lcf_equivalent({{2, 4}, {-1}}, {{1}, {-4, -2}}));
  EXPECT_FALSE(lcf_equivalent({{2, 4}, {-1}}, {{-1}, {-4, -2}}));
  EXPECT_FALSE(lcf_equivalent(seq, {{7}, {-3}, {3}}));
}

TEST(Lcf, StringFormat) {
  Lcf l{{{7}, {-3}, {3}, {-7}, {7}, {-3}, {3}, {-7}}, 4};
  EXPECT_EQ(l.to_string(), "(7,-3,3,-7)^2");
  Lcf m{{{4, 6}, {-6, 6}}, 2};
  EXPECT_EQ(m.to_string(), "({4,6},{-6,6})");
}

// Some 6-symmetric cycle of the 4-permutahedron has LCF (7,-3,3,-7)^6.
TEST(Lcf, PermutahedronFourSixSymmetric) {
  Graph g = Graph::permutahedron(4);
  CandidateList list = kappa_candidates(g);
  bool seen = false;
  std::vector<DistanceSet> block = {{7}, {-3}, {3}, {-7}};
  for (const KappaCandidate& cand : list.candidates) {
    if (cand.k != 6 || seen) continue;
    lifted_cycle_search(g, cand.f, {}, Ordering::kLexicographic, [&](const HamCycle& c) {
      EXPECT_TRUE(validate_cycle(c).ok);
      EXPECT_TRUE(check_symmetric(c, cand.f, 6));
      Lcf l = lcf(c);
      if (lcf_equivalent(l.sets, block)) {
        seen = true;
        EXPECT_EQ(l.to_string(), "(7,-3,3,-7)^6") << "period differs in rotation only";
      }
      return !seen;
    });
  }
  EXPECT_TRUE(seen);
}

TEST(Tracks, RotationAndColumnShifts) {
  HamCycle c = brgc(5);
  Tracks t = track_count(c);
  for (int r : {1, 7, 19}) {
    HamCycle d = c;
    std::rotate(d.vertices.begin(), d.vertices.begin() + r, d.vertices.end());
    EXPECT_EQ(track_count(d).count, t.count);
    std::reverse(d.vertices.begin(), d.vertices.end());
    EXPECT_EQ(track_count(d).count, t.count);
  }
  // Every column is its representative shifted by the reported amount.
  std::size_t n = c.size();
  for (std::size_t j = 0; j < 5; ++j) {
    std::size_t rep = t.representative[t.class_of[j]];
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(c.vertices[i][j], c.vertices[(i + n - t.shift[j]) % n][rep]);
    }
  }
}

TEST(Tracks, LeastRotationMatchesBruteForce) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Symbol> s(1 + rng() % 12);
    for (Symbol& x : s) x = static_cast<Symbol>(rng() % 3);
    std::vector<Symbol> best = s;
    for (std::size_t r = 1; r < s.size(); ++r) {
      std::vector<Symbol> t(s.begin() + r, s.end());
      t.insert(t.end(), s.begin(), s.begin() + r);
      best = std::min(best, t);
    }
    std::size_t r = internal::least_rotation(s);
    std::vector<Symbol> got(s.begin() + r, s.end());
    got.insert(got.end(), s.begin(), s.begin() + r);
    EXPECT_EQ(got, best);
  }
}

TEST(Tracks, SingleTrackJohnson) {
  EXPECT_EQ(track_count(coprime_cycle(7, 3)).count, 1u);
}

TEST(Balance, FlipsOfSmallCodes) {
  BalanceStats q2 = balance_stats(brgc(2));
  EXPECT_EQ(q2.changes, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(q2.rises, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_TRUE(q2.balanced());
  BalanceStats q3 = balance_stats(brgc(3));
  EXPECT_EQ(q3.changes, (std::vector<std::uint64_t>{2, 2, 4}));
  EXPECT_FALSE(q3.balanced());
  BalanceStats p = balance_stats(sjt(3));
  EXPECT_EQ(p.labels, (std::vector<std::string>{"(1,2)", "(2,3)"}));
  EXPECT_EQ(p.changes[0] + p.changes[1], 6u);
}

// Largest compression over every Hamilton cycle, by enumeration, against
// the lifted search over candidate automorphisms.
TEST(KappaExact, MatchesEnumeration) {
  std::vector<Graph> graphs = {Graph::hypercube(3), Graph::hypercube(4), Graph::johnson(4, 2),
                               Graph::johnson(5, 2), Graph::permutahedron(3), Graph::permutahedron(4),
                               Graph::middle_levels(2)};
  for (const Graph& g : graphs) {
    SCOPED_TRACE(g.describe());
    int n = static_cast<int>(g.vertex_count());
    oracle::Adjacent adj = testing::oracle_adjacency(g);
    std::vector<VertexWord> words;
    for (Index x = 0; x < g.vertex_count(); ++x) words.push_back(g.decode(x));
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = i != j && adj(words[i], words[j]);
    }
    std::uint64_t best = 0;
    for (const std::vector<int>& cyc : oracle::all_hamilton_cycles(n, m)) {
      std::vector<oracle::Word> seq;
      for (int v : cyc) seq.push_back(words[v]);
      best = std::max(best, oracle::compression(seq, adj));
    }
    KappaResult r = kappa_exact(g);
    EXPECT_EQ(r.kappa, best);
    EXPECT_TRUE(r.certified);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(cycle_compression(*r.witness), best);
  }
}

TEST(KappaExact, CompleteGraphLiftedTwoSymmetric) {
  Graph k4 = Graph::johnson(4, 1);
  Automorphism swap = Automorphism::johnson({2, 3, 0, 1}, false);
  LiftResult lift = lifted_cycle_search(k4, swap);
  ASSERT_TRUE(lift.found());
  EXPECT_EQ(lift.k, 2u);
  EXPECT_TRUE(check_symmetric(*lift.cycle, swap, 2));
  std::vector<std::vector<bool>> m(4, std::vector<bool>(4, true));
  for (int i = 0; i < 4; ++i) m[i][i] = false;
  EXPECT_EQ(oracle::all_hamilton_cycles(4, m).size(), 3u);
  std::size_t two_symmetric = 0;
  for (const std::vector<int>& cyc : oracle::all_hamilton_cycles(4, m)) {
    std::vector<VertexWord> w;
    for (int v : cyc) w.push_back(k4.decode(v));
    bool ok = true;
    for (int i = 0; i < 4; ++i) ok = ok && swap.apply(w[i]) == w[(i + 2) % 4];
    two_symmetric += ok;
  }
  EXPECT_GE(two_symmetric, 1u);
}

TEST(LiftedSearch, RejectsNonUniformOrbits) {
  Graph q = Graph::hypercube(4);
  EXPECT_THROW(lifted_cycle_search(q, Automorphism::hypercube({1, 2, 3, 0}, {0, 0, 0, 0})), Error);
}

TEST(LiftPath, RepeatsBlocks) {
  Automorphism f = shift_complement(2);
  std::vector<VertexWord> p = {{0, 0}};
  std::vector<VertexWord> c = lift_path(f, p, 4);
  ASSERT_EQ(c.size(), 4u);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(c[i], f.apply(c[i - 1]));
}

}  // namespace
}  // namespace hamcomp

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

#include <numeric>
#include <set>
#include <vector>

#include "test_util.hpp"

namespace hamcomp {
namespace {

using testing::expect_sound;

TEST(QOf, KnownValues) {
  EXPECT_EQ(q_of(10, 4), 7);
  EXPECT_EQ(q_of(7, 3), 7);
  EXPECT_EQ(q_of(6, 3), 5);
  EXPECT_THROW(q_of(5, 5), Error);
}

TEST(QOf, MatchesBruteForce) {
  for (int n = 2; n <= 60; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(q_of(n, k), oracle::q_brute(n, k)) << n << "," << k;
    }
  }
}

TEST(NecklacePath, EndpointsAndNecklaces) {
  for (auto [n, k] : {std::pair{5, 2}, {7, 3}, {8, 3}, {9, 4}, {11, 5}}) {
    SCOPED_TRACE(std::to_string(n) + "," + std::to_string(k));
    std::vector<VertexWord> p = necklace_path(n, k);
    EXPECT_EQ(p.front(), ones_then_zeros(k, n - k));
    VertexWord end = ones_then_zeros(k - 1, n - k + 1);
    end[k] = 1;
    EXPECT_EQ(p.back(), end);
    std::set<VertexWord> necklaces;
    for (std::size_t i = 0; i < p.size(); ++i) {
      VertexWord least = p[i];
      VertexWord r = p[i];
      for (int s = 0; s < n; ++s) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        least = std::min(least, r);
      }
      EXPECT_TRUE(necklaces.insert(least).second) << "necklace visited twice";
      if (i) EXPECT_TRUE(oracle::johnson_adjacent(p[i - 1], p[i]));
    }
    EXPECT_EQ(necklaces.size() * static_cast<std::size_t>(n), Graph::johnson(n, k).vertex_count());
  }
}

TEST(Coprime, SmallCasesAreSingleTrackAndBalanced) {
  for (int n = 3; n <= 16; ++n) {
    for (int k = 1; k < n; ++k) {
      if (std::gcd(n, k) != 1 || Graph::johnson(n, k).vertex_count() > 20000) continue;
      SCOPED_TRACE(std::to_string(n) + "," + std::to_string(k));
      HamCycle c = coprime_cycle(n, k);
      expect_sound(c, 400);
      std::uint64_t per = c.size() / n;
      EXPECT_EQ(cycle_compression(c), static_cast<std::uint64_t>(n));
      EXPECT_LE(cycle_compression(c), johnson_upper_bound(n, k));
      EXPECT_EQ(track_count(c).count, 1u);
      BalanceStats b = balance_stats(c);
      for (std::size_t j = 0; j < b.rises.size(); ++j) {
        EXPECT_EQ(b.rises[j], per);
        EXPECT_EQ(b.changes[j], 2 * per);
      }
    }
  }
}

TEST(Coprime, RejectsCommonFactor) {
  EXPECT_THROW(coprime_cycle(6, 2), Error);
  EXPECT_THROW(coprime_cycle(6, 6), Error);
}

TEST(General, TenFour) {
  HamCycle c = general_cycle(10, 4);
  expect_sound(c, 0);
  EXPECT_EQ(*c.claimed_k, 7u);
  EXPECT_GE(cycle_compression(c), 7u);
  EXPECT_LE(track_count(c).count, 4u);
}

TEST(General, TrackBoundHolds) {
  for (auto [n, k] : {std::pair{6, 3}, {8, 4}, {9, 3}, {10, 5}, {12, 4}, {12, 6}}) {
    SCOPED_TRACE(std::to_string(n) + "," + std::to_string(k));
    HamCycle c = general_cycle(n, k);
    int q = q_of(n, k);
    expect_sound(c, 300);
    EXPECT_EQ(*c.claimed_k, static_cast<std::uint64_t>(q));
    EXPECT_LE(track_count(c).count, static_cast<std::size_t>(1 + n - q));
  }
}

TEST(General, CoprimeDelegates) {
  HamCycle c = general_cycle(9, 4);
  EXPECT_EQ(c.construction, "coprime");
  EXPECT_EQ(cycle_compression(c), 9u);
}

TEST(MiddleLevels, FiveSymmetricInM5) {
  HamCycle c = middle_levels_cycle(2);
  expect_sound(c);
  EXPECT_EQ(cycle_compression(c), 5u);
  Lcf l = lcf(c);
  EXPECT_TRUE(lcf_equivalent(l.sets, {{-5}, {9}, {-9}, {5}})) << l.to_string();
}

TEST(MiddleLevels, SevenAndTenSymmetricInM7) {
  HamCycle seven = middle_levels_cycle(3);
  expect_sound(seven);
  EXPECT_GE(cycle_compression(seven), 7u);
  HamCycle ten = middle_levels_cycle(3, middle7_ten());
  expect_sound(ten);
  EXPECT_EQ(*ten.claimed_k, 10u);
  EXPECT_EQ(cycle_compression(ten), 10u);
  EXPECT_EQ(middle_levels_upper_bound(3), 14u);
}

TEST(MiddleLevels, KappaOfM7IsTen) {
  KappaResult r = kappa_exact(Graph::middle_levels(3));
  EXPECT_EQ(r.kappa, 10u);
  EXPECT_TRUE(r.certified);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(cycle_compression(*r.witness), 10u);
  bool fourteen_excluded = false;
  for (const KappaAttempt& a : r.attempts) {
    if (a.k == 14) fourteen_excluded = fourteen_excluded || a.outcome == "exhausted";
    if (a.k > 10) EXPECT_NE(a.outcome, "found");
  }
  EXPECT_TRUE(fourteen_excluded);
}

TEST(Bounds, JohnsonUpperBound) {
  EXPECT_EQ(johnson_upper_bound(7, 3), 7u);
  EXPECT_GE(johnson_upper_bound(10, 4), 7u);
}

}  // namespace
}  // namespace hamcomp

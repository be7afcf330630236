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

// Landau's function and its variants restricted by the number of even parts.
//   lambda(n)  = max lcm over all partitions of n
//   lambda0(n) = max lcm over partitions with no even part
//   lambda2(n) = max lcm over partitions with a positive even number of even
//                parts (undefined for n <= 3)

#pragma once

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hamcomp/graphs.hpp"

namespace hamcomp {

using BigInt = boost::multiprecision::cpp_int;

// A partition of n with its lcm; parts are non-increasing and padded with 1s.
struct IntPartition {
  bool defined = true;
  BigInt value = 1;
  std::vector<int> parts;

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  BigInt lcm() const {
    BigInt l = 1;
    for (int p : parts) l = boost::multiprecision::lcm(l, BigInt(p));
    return l;
  }
  std::string value_string() const { return defined ? value.str() : "-inf"; }
  // Parts other than 1, e.g. "7,5,4,3".
  std::string parts_string() const {
    std::string s;
    for (int p : parts) {
      if (p == 1 && parts.size() > 1 && parts[0] != 1) break;
      s += (s.empty() ? "" : ",") + std::to_string(p);
    }
    return s;
  }
};

namespace internal {

struct Candidate {
  BigInt value = 1;
  std::vector<int> parts;  // non-increasing, no 1s
};

// Larger value wins; ties go to the lexicographically larger part sequence
// with missing entries read as 1.
inline bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  std::size_t len = std::max(a.parts.size(), b.parts.size());
  for (std::size_t i = 0; i < len; ++i) {
    int x = i < a.parts.size() ? a.parts[i] : 1;
    int y = i < b.parts.size() ? b.parts[i] : 1;
    if (x != y) return x > y;
  }
  return false;
}

inline std::vector<int> primes_up_to(int n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<int> primes;
  for (int p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (long long q = 1LL * p * p; q <= n; q += p) composite[q] = true;
  }
  return primes;
}

// best[b]: the best product of powers of distinct odd primes with sum <= b.
class OddPrimePowerTable {
 public:
  Candidate at(int b) {
    std::lock_guard<std::mutex> lock(mu_);
    if (b >= static_cast<int>(best_.size())) grow(std::max(b, 2 * static_cast<int>(best_.size())));
    return best_[b];
  }

 private:
  void grow(int limit) {
    std::vector<Candidate> best(limit + 1);
    for (int p : primes_up_to(limit)) {
      if (p == 2) continue;
      std::vector<Candidate> next = best;
      for (int b = 0; b <= limit; ++b) {
        for (long long q = p; q <= b; q *= p) {
          Candidate c = best[b - q];
          c.value *= q;
          c.parts.insert(std::upper_bound(c.parts.begin(), c.parts.end(), static_cast<int>(q),
                                          std::greater<int>()),
                         static_cast<int>(q));
          if (better(c, next[b])) next[b] = std::move(c);
        }
      }
      best = std::move(next);
    }
    best_ = std::move(best);
  }

  std::mutex mu_;
  std::vector<Candidate> best_;
};

inline OddPrimePowerTable& odd_table() {
  static OddPrimePowerTable table;
  return table;
}

inline IntPartition finish(const Candidate& c, int n) {
  IntPartition p;
  p.value = c.value;
  p.parts = c.parts;
  std::sort(p.parts.begin(), p.parts.end(), std::greater<int>());
  int s = std::accumulate(p.parts.begin(), p.parts.end(), 0);
  p.parts.insert(p.parts.end(), n - s, 1);
  return p;
}

inline Candidate with_parts(Candidate c, std::initializer_list<int> extra) {
  for (int q : extra) {
    c.value *= q;
    c.parts.push_back(q);
  }
  std::sort(c.parts.begin(), c.parts.end(), std::greater<int>());
  c.value = 1;
  for (int q : c.parts) c.value = boost::multiprecision::lcm(c.value, BigInt(q));
  return c;
}

}  // namespace internal

inline IntPartition landau0(int n) {
  if (n < 1) throw Error("landau0: need n >= 1");
  return internal::finish(internal::odd_table().at(n), n);
}

inline IntPartition landau(int n) {
  if (n < 1) throw Error("landau: need n >= 1");
  internal::Candidate best = internal::odd_table().at(n);
  for (int q = 2; q <= n; q *= 2) {
    internal::Candidate c = internal::with_parts(internal::odd_table().at(n - q), {q});
    if (internal::better(c, best)) best = std::move(c);
  }
  return internal::finish(best, n);
}

inline IntPartition landau2(int n) {
  if (n < 1) throw Error("landau2: need n >= 1");
  if (n <= 3) {
    IntPartition p;
    p.defined = false;
    p.value = 0;
    return p;
  }
  internal::Candidate best;
  bool have = false;
  for (int q = 2; q + 2 <= n; q *= 2) {
    internal::Candidate c = internal::with_parts(internal::odd_table().at(n - 2 - q), {q, 2});
    if (!have || internal::better(c, best)) {
      best = std::move(c);
      have = true;
    }
  }
  return internal::finish(best, n);
}

// a/b as in the appendix table: "2", "1.2", "1.75", or truncated "1.33..".
inline std::string ratio_string(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error("ratio_string: zero denominator");
  BigInt whole = a / b, rest = a % b;
  std::string s = whole.str();
  if (rest == 0) return s;
  BigInt hundredths = rest * 100 / b;
  bool exact = (rest * 100) % b == 0;
  std::string frac = hundredths.str();
  if (frac.size() < 2) frac = "0" + frac;
  if (exact && frac.back() == '0') frac.pop_back();
  return s + "." + frac + (exact ? "" : "..");
}

}  // namespace hamcomp

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DECMIN_MCONVEX_HPP
#define DECMIN_MCONVEX_HPP

#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "decmin/core.hpp"
#include "decmin/setfn.hpp"

namespace decmin {

inline constexpr std::size_t kDefaultEnumCap = 1000000;

// x is an integral point of B iff x~(S) = p(S) and x~(Z) >= p(Z) for all Z.
inline bool contains(const SupermodularFn& p, const IntVec& x) {
  p.ground().require_enumerable();
  if (x.size() != size_t(p.n())) throw DomainError("contains: dimension");
  Subset full = p.ground().full_mask();
  if (tilde_sum(x, full) != p.eval(full)) return false;
  // Gray-code walk keeps the running subset sum in O(1) updates per subset.
  Int sum = 0;
  Subset prev = 0;
  for (Subset i = 1; i <= full; ++i) {
    Subset gray = i ^ (i >> 1);
    Subset flipped = gray ^ prev;
    int bit = __builtin_ctz(flipped);
    if (gray & flipped)
      sum += x[bit];
    else
      sum -= x[bit];
    prev = gray;
    if (gray != full && sum < p.eval(gray)) return false;
    if (i == full) break;
  }
  return true;
}

// Greedy vertex along the pi-decreasing order (ties by ground index):
// m(s_j) = p(I_j) - p(I_{j-1}).  Attains lovasz_ext(p, pi) as its pi-weight.
inline IntVec greedy_vertex(const SupermodularFn& p, const IntVec& pi) {
  if (pi.size() != size_t(p.n())) throw DomainError("greedy_vertex: dimension");
  std::vector<int> order(p.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pi[a] > pi[b]; });
  IntVec m(p.n());
  Subset prefix = 0;
  Int prev = 0;
  for (int j = 0; j < p.n(); ++j) {
    prefix |= Subset(1) << order[j];
    Int cur = p.eval(prefix);
    m[order[j]] = cur - prev;
    prev = std::move(cur);
  }
  return m;
}

inline bool exchange_feasible(const SupermodularFn& p, const IntVec& m, int s,
                              int t) {
  if (s == t) return false;
  IntVec y(m);
  y[s] += 1;
  y[t] -= 1;
  return contains(p, y);
}

namespace detail {

// For a point x of B, marks feasibility of every single exchange
// x + chi_s - chi_t in one sweep: the move is feasible iff every subset Z
// with t in Z, s not in Z has slack x~(Z) - p(Z) >= 1.
inline void exchange_feasibility_map(const SupermodularFn& p,
                                     const std::vector<long long>& x,
                                     std::vector<char>* feas) {
  const int n = p.n();
  const Subset full = p.ground().full_mask();
  const std::vector<long long>& pt = p.table64();
  std::vector<char> blocked(size_t(n) * n, 0);
  long long sum = 0;
  Subset prev = 0;
  for (Subset i = 1; i <= full; ++i) {
    Subset gray = i ^ (i >> 1);
    Subset flipped = gray ^ prev;
    int bit = __builtin_ctz(flipped);
    if (gray & flipped)
      sum += x[bit];
    else
      sum -= x[bit];
    prev = gray;
    if (sum - pt[gray] < 1) {
      // Z = S contributes nothing: its outside is empty.
      Subset out = full & ~gray;
      for (Subset zt = gray; zt; zt &= zt - 1) {
        int t = __builtin_ctz(zt);
        for (Subset zs = out; zs; zs &= zs - 1)
          blocked[size_t(t) * n + __builtin_ctz(zs)] = 1;
      }
    }
    if (i == full) break;
  }
  feas->assign(size_t(n) * n, 0);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t) (*feas)[size_t(s) * n + t] = !blocked[size_t(t) * n + s];
}

inline std::vector<long long> to_i64(const IntVec& x) {
  std::vector<long long> r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = static_cast<long long>(x[i]);
  return r;
}

inline IntVec from_i64(const std::vector<long long>& x) {
  IntVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  return r;
}

}  // namespace detail

// All integral points of B, by breadth-first search over single exchanges
// from a greedy vertex.  Exchange connectivity of M-convex sets makes the
// search complete.  Output is sorted lexicographically.
inline std::vector<IntVec> enumerate_points(
    const SupermodularFn& p, std::size_t cap = kDefaultEnumCap) {
  p.ground().require_enumerable();
  if (!p.fits_int64())
    throw DomainError("enumerate_points: oracle values exceed the fast range");
  const int n = p.n();
  IntVec seed = greedy_vertex(p, IntVec(n, Int(0)));
  std::set<std::vector<long long>> seen;
  std::deque<std::vector<long long>> queue;
  seen.insert(detail::to_i64(seed));
  queue.push_back(detail::to_i64(seed));
  std::vector<char> feas;
  while (!queue.empty()) {
    std::vector<long long> x = std::move(queue.front());
    queue.pop_front();
    detail::exchange_feasibility_map(p, x, &feas);
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (s == t || !feas[size_t(s) * n + t]) continue;
        std::vector<long long> y(x);
        y[s] += 1;
        y[t] -= 1;
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw EnumerationCapError("enumerate_points: cap exceeded (" +
                                      std::to_string(cap) + ")");
          queue.push_back(std::move(y));
        }
      }
    }
  }
  std::vector<IntVec> out;
  out.reserve(seen.size());
  for (const auto& x : seen) out.push_back(detail::from_i64(x));
  return out;
}

struct BruteMinResult {
  Int value;
  std::vector<IntVec> argmins;  // sorted lexicographically
};

inline BruteMinResult brute_min(const std::vector<IntVec>& points,
                                const std::function<Int(const IntVec&)>& f) {
  if (points.empty()) throw DomainError("brute_min: empty point set");
  BruteMinResult r;
  bool first = true;
  for (const IntVec& x : points) {
    Int v = f(x);
    if (first || v < r.value) {
      r.value = v;
      r.argmins.clear();
      r.argmins.push_back(x);
      first = false;
    } else if (v == r.value) {
      r.argmins.push_back(x);
    }
  }
  return r;
}

inline BruteMinResult brute_min(const SupermodularFn& p,
                                const std::function<Int(const IntVec&)>& f,
                                std::size_t cap = kDefaultEnumCap) {
  return brute_min(enumerate_points(p, cap), f);
}

}  // namespace decmin

#endif  // DECMIN_MCONVEX_HPP

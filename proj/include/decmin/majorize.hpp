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

#ifndef DECMIN_MAJORIZE_HPP
#define DECMIN_MAJORIZE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "decmin/core.hpp"

namespace decmin {

enum class OrderRel { Smaller, Equal, Greater, Incomparable };

namespace detail {
inline void check_dims(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size() || x.empty())
    throw DomainError("vector comparison: dimension mismatch");
}
}  // namespace detail

// Total preorder <=dec: compare the decreasingly sorted vectors
// lexicographically.  Equal means value-equivalent.
inline OrderRel dec_compare(const IntVec& x, const IntVec& y) {
  detail::check_dims(x, y);
  std::vector<Int> xs = sort_desc(x), ys = sort_desc(y);
  if (xs < ys) return OrderRel::Smaller;
  if (ys < xs) return OrderRel::Greater;
  return OrderRel::Equal;
}

// Total preorder >=inc on increasingly sorted vectors.
inline OrderRel inc_compare(const IntVec& x, const IntVec& y) {
  detail::check_dims(x, y);
  std::vector<Int> xs = sort_asc(x), ys = sort_asc(y);
  if (xs > ys) return OrderRel::Greater;
  if (ys > xs) return OrderRel::Smaller;
  return OrderRel::Equal;
}

inline bool value_equivalent(const IntVec& x, const IntVec& y) {
  return dec_compare(x, y) == OrderRel::Equal;
}

// x majorized by y: prefix sums of the sorted vectors dominate and the
// totals agree.
inline bool majorizes(const IntVec& y, const IntVec& x) {
  detail::check_dims(x, y);
  std::vector<Int> xs = sort_desc(x), ys = sort_desc(y);
  Int px = 0, py = 0;
  for (size_t k = 0; k + 1 < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py) return false;
  }
  px += xs.back();
  py += ys.back();
  return px == py;
}

// Weak submajorization: prefix dominance without the equal-total clause.
inline bool weakly_submajorizes(const IntVec& y, const IntVec& x) {
  detail::check_dims(x, y);
  std::vector<Int> xs = sort_desc(x), ys = sort_desc(y);
  Int px = 0, py = 0;
  for (size_t k = 0; k < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py) return false;
  }
  return true;
}

// Equal totals and sum of (x(i)-a)+ dominated for every integer a between
// the extreme components of the two vectors.  Outside that range both sides
// coincide, so finitely many a decide the relation.
inline bool excess_profile_leq(const IntVec& x, const IntVec& y) {
  detail::check_dims(x, y);
  Int tx = 0, ty = 0;
  for (const Int& v : x) tx += v;
  for (const Int& v : y) ty += v;
  if (tx != ty) return false;
  Int lo = x[0], hi = x[0];
  for (const Int& v : x) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  for (const Int& v : y) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  for (Int a = lo; a <= hi; ++a) {
    Int ex = 0, ey = 0;
    for (const Int& v : x)
      if (v > a) ex += v - a;
    for (const Int& v : y)
      if (v > a) ey += v - a;
    if (ex > ey) return false;
  }
  return true;
}

// Robin Hood move: x + lam*(chi_s - chi_t) with 0 <= lam <= x(t) - x(s).
// The result is majorized by x and keeps the component total.
inline IntVec t_transform(const IntVec& x, int s, int t, const Int& lam) {
  if (s < 0 || t < 0 || size_t(s) >= x.size() || size_t(t) >= x.size())
    throw DomainError("t_transform: index out of range");
  if (lam < 0 || lam > x[t] - x[s])
    throw DomainError("t_transform: step out of range");
  IntVec r(x);
  r[s] += lam;
  r[t] -= lam;
  return r;
}

// Least majorized element of a finite set, if one exists.  A least majorized
// element must be dec-min, so it suffices to check the dec-min candidate
// against every member.
inline std::optional<IntVec> least_majorized(const std::vector<IntVec>& d) {
  if (d.empty()) throw DomainError("least_majorized: empty set");
  const IntVec* best = &d[0];
  for (const IntVec& x : d)
    if (dec_compare(x, *best) == OrderRel::Smaller) best = &x;
  for (const IntVec& y : d)
    if (!majorizes(y, *best)) return std::nullopt;
  return *best;
}

// Dec-min class of a finite set (all elements value-equivalent to the
// lexicographic minimum of the sorted vectors).
inline std::vector<IntVec> dec_min_class(const std::vector<IntVec>& d) {
  if (d.empty()) throw DomainError("dec_min_class: empty set");
  const IntVec* best = &d[0];
  for (const IntVec& x : d)
    if (dec_compare(x, *best) == OrderRel::Smaller) best = &x;
  std::vector<IntVec> out;
  for (const IntVec& x : d)
    if (value_equivalent(x, *best)) out.push_back(x);
  return out;
}

inline std::vector<IntVec> inc_max_class(const std::vector<IntVec>& d) {
  if (d.empty()) throw DomainError("inc_max_class: empty set");
  const IntVec* best = &d[0];
  for (const IntVec& x : d)
    if (inc_compare(x, *best) == OrderRel::Greater) best = &x;
  std::vector<IntVec> out;
  for (const IntVec& x : d)
    if (value_equivalent(x, *best)) out.push_back(x);
  return out;
}

}  // namespace decmin

#endif  // DECMIN_MAJORIZE_HPP

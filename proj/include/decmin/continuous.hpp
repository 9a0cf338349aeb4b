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

#ifndef DECMIN_CONTINUOUS_HPP
#define DECMIN_CONTINUOUS_HPP

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "decmin/core.hpp"
#include "decmin/decmin.hpp"
#include "decmin/majorize.hpp"
#include "decmin/mconvex.hpp"
#include "decmin/partition.hpp"
#include "decmin/setfn.hpp"

namespace decmin {

// Exact minimum norm point of B: constant lambda_i on each principal block.
// Verified to lie in B and to be tight along the principal chain.
struct MinNormPoint {
  RatVec m_r;
  std::vector<Rat> lambdas;
  std::vector<Subset> blocks;
};

inline MinNormPoint min_norm_point(const SupermodularFn& p) {
  PrincipalDecomposition pd = principal_decomposition(p);
  RatVec m(p.n());
  for (size_t i = 0; i < pd.blocks.size(); ++i)
    for (int s = 0; s < p.n(); ++s)
      if (pd.blocks[i] >> s & 1u) m[s] = pd.lambdas[i];
  for (size_t i = 0; i < pd.chain.size(); ++i)
    if (tilde_sum(m, pd.chain[i]) != Rat(p.eval(pd.chain[i])))
      throw InternalCheckError("min norm point: chain tightness failed");
  Subset full = p.ground().full_mask();
  if (tilde_sum(m, full) != Rat(p.eval(full)))
    throw InternalCheckError("min norm point: wrong total");
  for (Subset z = 1; z < full; ++z)
    if (tilde_sum(m, z) < Rat(p.eval(z)))
      throw InternalCheckError("min norm point: leaves the polyhedron");
  return {std::move(m), pd.lambdas, pd.blocks};
}

// Quadratic duality over the reals, evaluated exactly in rationals at
// pi = 2 m_R: |m_R|^2 = lovasz_ext(2 m_R) - sum (m_R(s))^2.
struct ContinuousDuality {
  Rat primal;
  Rat dual;
};

inline ContinuousDuality continuous_sqsum_duality(const SupermodularFn& p) {
  MinNormPoint mnp = min_norm_point(p);
  Rat primal = 0;
  for (const Rat& v : mnp.m_r) primal += v * v;
  RatVec pi(mnp.m_r);
  for (Rat& v : pi) v *= 2;
  Rat dual = p.lovasz_ext<Rat>(pi) - primal;
  if (primal != dual)
    throw InternalCheckError("continuous square-sum duality failed");
  return {std::move(primal), std::move(dual)};
}

// Proximity report: every dec-min element lies in [floor(m_R), ceil(m_R)];
// the box may also contain points that are not dec-min.
struct ProximityReport {
  IntVec lo, hi;
  std::vector<IntVec> decmins;
  std::vector<IntVec> box_non_decmin;
};

inline ProximityReport proximity_check(const SupermodularFn& p,
                                       std::size_t cap = kDefaultEnumCap) {
  MinNormPoint mnp = min_norm_point(p);
  ProximityReport rep;
  rep.lo = floor_vec(mnp.m_r);
  rep.hi = ceil_vec(mnp.m_r);
  std::vector<IntVec> pts = enumerate_points(p, cap);
  rep.decmins = dec_min_class(pts);
  for (const IntVec& m : rep.decmins)
    if (!leq(rep.lo, m) || !leq(m, rep.hi))
      throw InternalCheckError("a dec-min element escapes the proximity box");
  std::set<IntVec> dm(rep.decmins.begin(), rep.decmins.end());
  for (const IntVec& x : pts)
    if (leq(rep.lo, x) && leq(x, rep.hi) && !dm.count(x))
      rep.box_non_decmin.push_back(x);
  return rep;
}

namespace detail {

// Points of B inside a unit box [lo, hi] (0 <= hi - lo <= 1), by exchange
// BFS from a seed inside the box.  The box restriction of an M-convex set is
// M-convex, so the walk is complete.
inline std::vector<IntVec> box_points(const SupermodularFn& p,
                                      const IntVec& lo, const IntVec& hi,
                                      const IntVec& seed) {
  const int n = p.n();
  std::set<IntVec> seen{seed};
  std::deque<IntVec> queue{seed};
  while (!queue.empty()) {
    IntVec x = std::move(queue.front());
    queue.pop_front();
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (s == t || x[s] + 1 > hi[s] || x[t] - 1 < lo[t]) continue;
        if (!exchange_feasible(p, x, s, t)) continue;
        IntVec y(x);
        y[s] += 1;
        y[t] -= 1;
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// Greedy minimum weight basis of the box matroid: processes the free
// elements by increasing weight (index ties) and keeps those whose chosen
// set still extends to a box point at its upper value.
inline IntVec box_matroid_greedy(const std::vector<IntVec>& box_pts,
                                 const IntVec& lo, const IntVec& hi,
                                 const IntVec& weights) {
  const int n = static_cast<int>(lo.size());
  std::vector<int> free_elems;
  for (int s = 0; s < n; ++s)
    if (hi[s] > lo[s]) free_elems.push_back(s);
  std::stable_sort(free_elems.begin(), free_elems.end(),
                   [&](int a, int b) { return weights[a] < weights[b]; });
  std::vector<int> chosen;
  auto extendable = [&](const std::vector<int>& sel) {
    for (const IntVec& x : box_pts) {
      bool ok = true;
      for (int s : sel)
        if (x[s] != hi[s]) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  };
  for (int s : free_elems) {
    chosen.push_back(s);
    if (!extendable(chosen)) chosen.pop_back();
  }
  IntVec out(lo);
  for (int s : chosen) out[s] = hi[s];
  return out;
}

}  // namespace detail

struct RelaxResult {
  RatVec relaxed;   // the fractional point whose rounding defines the box
  IntVec lo, hi;
  IntVec weights;   // w(s) = hi(s)^2 - lo(s)^2
  IntVec output;    // dec-min element produced by the matroid greedy
};

// Continuous relaxation via the minimum norm point: round it to a unit box,
// then take a minimum weight basis of the box matroid with weights
// u(s)^2 - l(s)^2.
inline RelaxResult relax_decmin(const SupermodularFn& p) {
  MinNormPoint mnp = min_norm_point(p);
  RelaxResult r;
  r.relaxed = mnp.m_r;
  r.lo = floor_vec(mnp.m_r);
  r.hi = ceil_vec(mnp.m_r);
  r.weights.resize(p.n());
  for (int s = 0; s < p.n(); ++s)
    r.weights[s] = r.hi[s] * r.hi[s] - r.lo[s] * r.lo[s];
  IntVec seed = decmin_local_search(p);
  if (!leq(r.lo, seed) || !leq(seed, r.hi))
    throw InternalCheckError("relax_decmin: dec-min seed escapes the box");
  std::vector<IntVec> box_pts = detail::box_points(p, r.lo, r.hi, seed);
  r.output = detail::box_matroid_greedy(box_pts, r.lo, r.hi, r.weights);
  if (!contains(p, r.output) || !value_equivalent(r.output, seed))
    throw InternalCheckError("relax_decmin: greedy result is not dec-min");
  return r;
}

// Variant using a minimizer of the piecewise-linear extension of the
// square-sum.  The extension agrees with the square-sum on integer points,
// so the average of the dec-min class is such a minimizer; its rounding box
// can be strictly smaller than the proximity box.
inline RelaxResult relax_decmin_pwl(const SupermodularFn& p,
                                    std::size_t cap = kDefaultEnumCap) {
  std::vector<IntVec> dm = dec_min_class(enumerate_points(p, cap));
  RelaxResult r;
  r.relaxed.assign(p.n(), Rat(0));
  for (const IntVec& m : dm)
    for (int s = 0; s < p.n(); ++s) r.relaxed[s] += Rat(m[s]);
  for (Rat& v : r.relaxed) v /= Int(dm.size());
  r.lo = floor_vec(r.relaxed);
  r.hi = ceil_vec(r.relaxed);
  r.weights.resize(p.n());
  for (int s = 0; s < p.n(); ++s)
    r.weights[s] = r.hi[s] * r.hi[s] - r.lo[s] * r.lo[s];
  IntVec seed = dm.front();
  for (const IntVec& m : dm)
    if (leq(r.lo, m) && leq(m, r.hi)) {
      seed = m;
      break;
    }
  if (!leq(r.lo, seed) || !leq(seed, r.hi))
    throw InternalCheckError("relax_decmin_pwl: no dec-min in the box");
  std::vector<IntVec> box_pts = detail::box_points(p, r.lo, r.hi, seed);
  r.output = detail::box_matroid_greedy(box_pts, r.lo, r.hi, r.weights);
  if (!contains(p, r.output) || !value_equivalent(r.output, dm.front()))
    throw InternalCheckError("relax_decmin_pwl: greedy result is not dec-min");
  return r;
}

namespace detail {

// Exact rational phase-one simplex with Bland's rule, deciding whether
// target is a convex combination of the given points and producing the
// coefficients when it is.
inline std::optional<std::vector<Rat>> convex_combination(
    const std::vector<IntVec>& pts, const RatVec& target) {
  const int rows = static_cast<int>(target.size()) + 1;
  const int cols = static_cast<int>(pts.size());
  // Tableau over variables [lambda | artificial], one artificial per row.
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + rows + 1));
  for (int i = 0; i < rows; ++i) {
    Rat b = i + 1 < rows ? target[i] : Rat(1);
    for (int j = 0; j < cols; ++j)
      a[i][j] = i + 1 < rows ? Rat(pts[j][i]) : Rat(1);
    a[i][cols + rows] = b;
    if (b < 0)
      for (Rat& v : a[i]) v = -v;
    a[i][cols + i] = 1;
  }
  std::vector<int> basis(rows);
  std::vector<Rat> cost(cols + rows, Rat(0));
  for (int i = 0; i < rows; ++i) {
    basis[i] = cols + i;
    cost[cols + i] = 1;
  }
  auto reduced_cost = [&](int j) {
    Rat rc = cost[j];
    for (int i = 0; i < rows; ++i) rc -= cost[basis[i]] * a[i][j];
    return rc;
  };
  while (true) {
    int enter = -1;
    for (int j = 0; j < cols + rows; ++j)
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < rows; ++i) {
      if (a[i][enter] <= 0) continue;
      Rat ratio = a[i][cols + rows] / a[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0)
      throw InternalCheckError("convex_combination: unbounded phase one");
    Rat pivot = a[leave][enter];
    for (Rat& v : a[leave]) v /= pivot;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || a[i][enter] == 0) continue;
      Rat f = a[i][enter];
      for (int j = 0; j <= cols + rows; ++j) a[i][j] -= f * a[leave][j];
    }
    basis[leave] = enter;
  }
  Rat objective = 0;
  for (int i = 0; i < rows; ++i)
    if (basis[i] >= cols) objective += a[i][cols + rows];
  if (objective != 0) return std::nullopt;
  std::vector<Rat> lambda(cols, Rat(0));
  for (int i = 0; i < rows; ++i)
    if (basis[i] < cols) lambda[basis[i]] = a[i][cols + rows];
  return lambda;
}

}  // namespace detail

// The minimum norm point is a convex combination of the dec-min elements:
// verified through chain tightness, the near-uniform box, and (for small
// dec-min classes) an explicit combination found by exact phase-one simplex.
struct ConvexCombinationReport {
  bool chain_tight = false;
  bool box_ok = false;
  std::vector<IntVec> decmins;
  std::optional<std::vector<Rat>> combination;
};

inline ConvexCombinationReport convex_combination_check(
    const SupermodularFn& p, std::size_t cap = kDefaultEnumCap,
    std::size_t combo_limit = 200) {
  MinNormPoint mnp = min_norm_point(p);
  CanonicalDecomposition can = canonical_decomposition(p);
  ConvexCombinationReport rep;
  rep.chain_tight = true;
  for (Subset cj : can.chain)
    if (tilde_sum(mnp.m_r, cj) != Rat(p.eval(cj))) rep.chain_tight = false;
  rep.box_ok = true;
  for (size_t j = 0; j < can.blocks.size(); ++j)
    for (int s = 0; s < p.n(); ++s)
      if (can.blocks[j] >> s & 1u)
        if (mnp.m_r[s] < Rat(can.betas[j] - 1) || mnp.m_r[s] > Rat(can.betas[j]))
          rep.box_ok = false;
  if (!rep.chain_tight || !rep.box_ok)
    throw InternalCheckError("min norm point escapes the dec-min face");
  rep.decmins = dec_min_class(enumerate_points(p, cap));
  if (rep.decmins.size() <= combo_limit) {
    rep.combination = detail::convex_combination(rep.decmins, mnp.m_r);
    if (!rep.combination)
      throw InternalCheckError(
          "min norm point is not a combination of dec-min elements");
  }
  return rep;
}

}  // namespace decmin

#endif  // DECMIN_CONTINUOUS_HPP

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

#ifndef DECMIN_DUALITY_HPP
#define DECMIN_DUALITY_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "decmin/conjugate.hpp"
#include "decmin/core.hpp"
#include "decmin/decmin.hpp"
#include "decmin/majorize.hpp"
#include "decmin/mconvex.hpp"
#include "decmin/partition.hpp"
#include "decmin/setfn.hpp"

namespace decmin {

// Separable objective Phi(x) = sum phi_s(x(s)), one discrete convex function
// per ground element.
class SeparableObjective {
 public:
  explicit SeparableObjective(std::vector<DiscreteConvexFn> phis)
      : phis_(std::move(phis)) {}

  static SeparableObjective uniform(int n, const DiscreteConvexFn& phi) {
    return SeparableObjective(std::vector<DiscreteConvexFn>(n, phi));
  }

  int n() const { return static_cast<int>(phis_.size()); }
  const DiscreteConvexFn& phi(int s) const { return phis_.at(s); }

  ExtInt eval(const IntVec& x) const {
    ExtInt total{Int(0)};
    for (int s = 0; s < n(); ++s) {
      ExtInt v = phis_[s].eval(x[s]);
      if (!v.finite()) return ExtInt::pos_inf();
      total = total + v;
    }
    return total;
  }

  // Conjugate side: sum psi_s(pi(s)), +inf when any term leaves its domain.
  ExtInt conj_eval(const IntVec& pi) const {
    ExtInt total{Int(0)};
    for (int s = 0; s < n(); ++s) {
      ExtInt v = conjugate(phis_[s]).eval(pi[s]);
      if (!v.finite()) return ExtInt::pos_inf();
      total = total + v;
    }
    return total;
  }

 private:
  std::vector<DiscreteConvexFn> phis_;
};

// Steepest-improvement exchange descent.  A point with no improving single
// exchange is a global minimizer of a separable convex function on an
// M-convex set, so the local optimum returned here is global.
inline IntVec minimize_separable(const SupermodularFn& p,
                                 const SeparableObjective& obj,
                                 std::optional<IntVec> start = std::nullopt) {
  const int n = p.n();
  IntVec x = start ? std::move(*start) : greedy_vertex(p, IntVec(n, Int(0)));
  if (!contains(p, x))
    throw DomainError("minimize_separable: infeasible start");
  if (!obj.eval(x).finite()) {
    // The greedy seed misses dom Phi; fall back to scanning the whole set.
    bool found = false;
    for (const IntVec& cand : enumerate_points(p))
      if (obj.eval(cand).finite()) {
        x = cand;
        found = true;
        break;
      }
    if (!found)
      throw DomainError("minimize_separable: no feasible point has finite cost");
  }
  for (long iter = 0;; ++iter) {
    if (iter > 10000000L)
      throw InternalCheckError("minimize_separable: descent did not stop");
    int bs = -1, bt = -1;
    Int best_delta = 0;
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (s == t) continue;
        ExtInt up = obj.phi(s).eval(x[s] + 1);
        ExtInt dn = obj.phi(t).eval(x[t] - 1);
        if (!up.finite() || !dn.finite()) continue;
        Int delta = up.value() + dn.value() - obj.phi(s).eval(x[s]).value() -
                    obj.phi(t).eval(x[t]).value();
        if (delta < best_delta && exchange_feasible(p, x, s, t)) {
          best_delta = std::move(delta);
          bs = s;
          bt = t;
        }
      }
    }
    if (bs < 0) break;
    x[bs] += 1;
    x[bt] -= 1;
  }
  return x;
}

// Dual objective g(pi) = lovasz_ext(p, pi) - sum psi_s(pi(s)); -inf when a
// conjugate term is infinite.
inline ExtInt dual_value(const SupermodularFn& p, const SeparableObjective& obj,
                         const IntVec& pi) {
  ExtInt conj = obj.conj_eval(pi);
  if (!conj.finite()) return ExtInt::neg_inf();
  return ExtInt(p.lovasz_ext<Int>(pi) - conj.value());
}

// Exact primal/dual pair.  gap = primal - dual is nonnegative by weak
// duality and zero exactly at joint optimality.
struct Certificate {
  IntVec x;
  IntVec pi;
  Int primal;
  Int dual;
  Int gap;
};

namespace detail {

// Difference constraints lo(s) <= pi(s) <= hi(s), pi(s) >= pi(t) for each
// feasible exchange (s,t), solved by Bellman-Ford relaxation.  Returns a
// feasible pi or reports a negative cycle (which certifies infeasibility).
struct DiffConstraints {
  int n;
  std::vector<ExtInt> lo, hi;
  std::vector<std::pair<int, int>> order;  // pi(first) >= pi(second)

  IntVec solve(const std::string& who) const {
    struct Edge {
      int from, to;
      Int w;
    };
    std::vector<Edge> edges;
    const int root = n;
    for (int s = 0; s < n; ++s) {
      if (hi[s].finite()) edges.push_back({root, s, hi[s].value()});
      if (lo[s].finite()) edges.push_back({s, root, -lo[s].value()});
    }
    for (auto& [s, t] : order) edges.push_back({s, t, Int(0)});
    std::vector<Int> dist(n + 1, Int(0));
    std::vector<int> pred(n + 1, -1);
    int last_updated = -1;
    for (int round = 0; round <= n + 1; ++round) {
      bool changed = false;
      for (const Edge& e : edges) {
        if (dist[e.from] + e.w < dist[e.to]) {
          dist[e.to] = dist[e.from] + e.w;
          pred[e.to] = e.from;
          last_updated = e.to;
          changed = true;
        }
      }
      if (!changed) {
        IntVec pi(n);
        for (int s = 0; s < n; ++s) pi[s] = dist[s] - dist[root];
        return pi;
      }
    }
    // Walk predecessors back onto the negative cycle for the error report.
    int v = last_updated;
    for (int i = 0; i <= n + 1; ++i) v = pred[v];
    std::string cycle;
    int u = v;
    do {
      cycle += std::to_string(u) + " <- ";
      u = pred[u];
    } while (u != v && cycle.size() < 512);
    cycle += std::to_string(v);
    throw InternalCheckError(who + ": difference constraints infeasible, " +
                             "negative cycle " + cycle +
                             "; the point is not optimal");
  }
};

}  // namespace detail

// Optimality certificate for a minimizer x* of a separable convex function
// on an M-convex set: constructs pi with pi(s) in the subgradient interval
// at x*(s) and pi(s) >= pi(t) for every feasible exchange, then checks that
// the duality gap vanishes.
inline Certificate dual_certificate(const SupermodularFn& p,
                                    const SeparableObjective& obj,
                                    const IntVec& x_star) {
  const int n = p.n();
  if (!contains(p, x_star))
    throw DomainError("dual_certificate: x* not in the set");
  ExtInt primal = obj.eval(x_star);
  if (!primal.finite())
    throw DomainError("dual_certificate: x* has infinite cost");
  detail::DiffConstraints sys;
  sys.n = n;
  sys.lo.resize(n);
  sys.hi.resize(n);
  for (int s = 0; s < n; ++s) {
    auto [lo, hi] = subgradient_interval(obj.phi(s), x_star[s]);
    sys.lo[s] = lo;
    sys.hi[s] = hi;
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t && exchange_feasible(p, x_star, s, t))
        sys.order.push_back({s, t});
  IntVec pi = sys.solve("dual_certificate");
  ExtInt dual = dual_value(p, obj, pi);
  if (!dual.finite() || dual.value() != primal.value())
    throw InternalCheckError("dual_certificate: gap is not zero");
  return {x_star, std::move(pi), primal.value(), dual.value(), Int(0)};
}

// Square-sum min-max: primal from 1-tightening descent, dual at the vector
// pi* of the canonical decomposition.  pi* is also checked to lie in
// I(m) cap P(m), the dual optimal set relative to the computed dec-min m.
inline Certificate sqsum_minmax(const SupermodularFn& p) {
  IntVec m = decmin_local_search(p);
  CanonicalDecomposition can = canonical_decomposition(p);
  const IntVec& pi = can.pi_star;
  Int primal = square_sum(m);
  Int conj = 0;
  for (const Int& l : pi) conj += floor_div(l, 2) * ceil_div(l, 2);
  Int dual = p.lovasz_ext<Int>(pi) - conj;
  if (primal != dual)
    throw InternalCheckError("square-sum min-max identity failed");
  for (int s = 0; s < p.n(); ++s)
    if (pi[s] < 2 * m[s] - 1 || pi[s] > 2 * m[s] + 1)
      throw InternalCheckError("pi* leaves the subgradient box of a dec-min");
  for (int s = 0; s < p.n(); ++s)
    for (int t = 0; t < p.n(); ++t)
      if (s != t && pi[s] < pi[t] && exchange_feasible(p, m, s, t))
        throw InternalCheckError("pi* violates an exchange-order constraint");
  return {std::move(m), pi, std::move(primal), std::move(dual), Int(0)};
}

// Canonical description of the dual optimal set for the square-sum: within
// each canonical block, pi is pinned to 2 beta_i - 1 outside F_i, boxed on
// F_i, and ordered along the pairs A_i.
struct DualOptimalSet {
  CanonicalDecomposition can;
  std::vector<Subset> f_sets;
  std::vector<std::vector<std::pair<int, int>>> a_pairs;

  bool contains(const IntVec& pi) const {
    for (size_t i = 0; i < can.blocks.size(); ++i) {
      Int two_beta = 2 * can.betas[i];
      for (int s = 0; s < static_cast<int>(pi.size()); ++s) {
        if (!(can.blocks[i] >> s & 1u)) continue;
        if (f_sets[i] >> s & 1u) {
          if (pi[s] < two_beta - 1 || pi[s] > two_beta + 1) return false;
        } else if (pi[s] != two_beta - 1) {
          return false;
        }
      }
      for (auto& [s, t] : a_pairs[i])
        if (pi[s] < pi[t]) return false;
    }
    return true;
  }
};

inline DualOptimalSet dual_optimal_set(const SupermodularFn& p) {
  DualOptimalSet out{canonical_decomposition(p), {}, {}};
  const auto& can = out.can;
  for (size_t i = 0; i < can.blocks.size(); ++i) {
    Subset si = can.blocks[i];
    Subset prev = i > 0 ? can.chain[i - 1] : 0;
    Int p_prev = p.eval(prev);
    // F_i is the largest X <= S_i with beta_i |X| = p(C_{i-1} u X) - p(C_{i-1});
    // the family is a lattice containing the empty set.
    std::vector<Subset> family{0};
    Subset f = 0;
    for (Subset x = si; x; x = (x - 1) & si)
      if (can.betas[i] * popcount(x) == p.eval(prev | x) - p_prev) {
        family.push_back(x);
        f |= x;
      }
    if (can.betas[i] * popcount(f) != p.eval(prev | f) - p_prev)
      throw InternalCheckError("tight-set family is not a lattice");
    out.f_sets.push_back(f);
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < p.n(); ++s) {
      if (!(f >> s & 1u)) continue;
      for (int t = 0; t < p.n(); ++t) {
        if (s == t || !(f >> t & 1u)) continue;
        bool separated = false;
        for (Subset x : family)
          if ((x >> t & 1u) && !(x >> s & 1u)) {
            separated = true;
            break;
          }
        if (!separated) pairs.push_back({s, t});
      }
    }
    out.a_pairs.push_back(std::move(pairs));
  }
  return out;
}

// Primal optimal set relative to a dual optimal pi: points of the set that
// round pi/2 componentwise and carry minimum pi-weight.  Must reproduce the
// dec-min class; any other pi is rejected.
inline std::vector<IntVec> primal_optimal_set(const SupermodularFn& p,
                                              const IntVec& pi,
                                              std::size_t cap =
                                                  kDefaultEnumCap) {
  std::vector<IntVec> pts = enumerate_points(p, cap);
  Int min_weight = p.lovasz_ext<Int>(pi);
  std::vector<IntVec> out;
  for (const IntVec& m : pts) {
    bool in_box = true;
    for (int s = 0; s < p.n(); ++s)
      if (m[s] != floor_div(pi[s], 2) && m[s] != ceil_div(pi[s], 2)) {
        in_box = false;
        break;
      }
    if (in_box && dot(pi, m) == min_weight) out.push_back(m);
  }
  std::vector<IntVec> expected = dec_min_class(pts);
  if (out != expected)
    throw DomainError("primal_optimal_set: pi is not dual optimal");
  return out;
}

// Brute-force dual optimum over the box [2 min(x)-3, 2 max(x)+3]^S around a
// primal optimum x; used as the oracle for the dual-set descriptions.
struct DualScanResult {
  Int best;
  std::vector<IntVec> argmax;
};

inline DualScanResult dual_box_scan(const SupermodularFn& p,
                                    const SeparableObjective& obj,
                                    const IntVec& x_opt,
                                    std::size_t cap = 2000000) {
  Int lo = 2 * *std::min_element(x_opt.begin(), x_opt.end()) - 3;
  Int hi = 2 * *std::max_element(x_opt.begin(), x_opt.end()) + 3;
  Int width = hi - lo + 1;
  Int cells = 1;
  for (int s = 0; s < p.n(); ++s) cells *= width;
  if (cells > cap) throw DomainError("dual_box_scan: box too large");
  IntVec pi(p.n(), lo);
  DualScanResult r{Int(0), {}};
  bool first = true;
  while (true) {
    ExtInt g = dual_value(p, obj, pi);
    if (g.finite()) {
      if (first || g.value() > r.best) {
        r.best = g.value();
        r.argmax.clear();
        r.argmax.push_back(pi);
        first = false;
      } else if (g.value() == r.best) {
        r.argmax.push_back(pi);
      }
    }
    int s = 0;
    while (s < p.n()) {
      if (pi[s] < hi) {
        ++pi[s];
        break;
      }
      pi[s] = lo;
      ++s;
    }
    if (s == p.n()) break;
  }
  if (first) throw DomainError("dual_box_scan: no finite dual value in box");
  return r;
}

// ---------- Intersection of two M-convex sets ----------

struct IntersectionMin {
  bool feasible = false;
  Int value;
  std::vector<IntVec> argmins;
};

inline IntersectionMin minimize_over_intersection(
    const SupermodularFn& p1, const SupermodularFn& p2,
    const SeparableObjective& obj, std::size_t cap = kDefaultEnumCap) {
  std::vector<IntVec> a = enumerate_points(p1, cap);
  std::vector<IntVec> b = enumerate_points(p2, cap);
  std::set<IntVec> bset(b.begin(), b.end());
  IntersectionMin out;
  bool first = true;
  for (const IntVec& x : a) {
    if (!bset.count(x)) continue;
    ExtInt v = obj.eval(x);
    if (!v.finite()) continue;
    if (first || v.value() < out.value) {
      out.value = v.value();
      out.argmins.clear();
      out.argmins.push_back(x);
      first = false;
    } else if (v.value() == out.value) {
      out.argmins.push_back(x);
    }
  }
  out.feasible = !first;
  return out;
}

// Certificate for the intersection formula: dual value
// lovasz_1(pi1) + lovasz_2(pi2) - sum psi_s(pi1(s) + pi2(s)).
struct IntersectionCertificate {
  IntVec x;
  IntVec pi1, pi2;
  ExtInt primal;
  ExtInt dual;
  ExtInt gap;
  bool cond_subgradient = false;  // pi1+pi2 in subgradient interval at x
  bool cond_min1 = false;         // x is a pi1-minimizer in the first set
  bool cond_min2 = false;         // x is a pi2-minimizer in the second set
  bool conditions() const {
    return cond_subgradient && cond_min1 && cond_min2;
  }
};

inline IntersectionCertificate verify_intersection_certificate(
    const SupermodularFn& p1, const SupermodularFn& p2,
    const SeparableObjective& obj, const IntVec& x, const IntVec& pi1,
    const IntVec& pi2) {
  IntersectionCertificate cert;
  cert.x = x;
  cert.pi1 = pi1;
  cert.pi2 = pi2;
  bool in1 = contains(p1, x), in2 = contains(p2, x);
  cert.primal = (in1 && in2) ? obj.eval(x) : ExtInt::pos_inf();

  ExtInt conj{Int(0)};
  for (int s = 0; s < p1.n(); ++s) {
    ExtInt v = conjugate(obj.phi(s)).eval(pi1[s] + pi2[s]);
    if (!v.finite()) {
      conj = ExtInt::pos_inf();
      break;
    }
    conj = conj + v;
  }
  cert.dual = conj.finite()
                  ? ExtInt(p1.lovasz_ext<Int>(pi1) + p2.lovasz_ext<Int>(pi2) -
                           conj.value())
                  : ExtInt::neg_inf();
  cert.gap = (cert.primal.finite() || cert.dual.finite())
                 ? cert.primal - cert.dual
                 : ExtInt::pos_inf();

  cert.cond_subgradient = cert.primal.finite();
  if (cert.cond_subgradient) {
    for (int s = 0; s < p1.n(); ++s) {
      auto [lo, hi] = subgradient_interval(obj.phi(s), x[s]);
      ExtInt sum{pi1[s] + pi2[s]};
      if (sum < lo || sum > hi) {
        cert.cond_subgradient = false;
        break;
      }
    }
  }
  cert.cond_min1 = in1 && dot(pi1, x) == p1.lovasz_ext<Int>(pi1);
  cert.cond_min2 = in2 && dot(pi2, x) == p2.lovasz_ext<Int>(pi2);
  if (cert.conditions() != (cert.gap == ExtInt(Int(0))))
    throw InternalCheckError(
        "intersection certificate: conditions disagree with the gap");
  return cert;
}

}  // namespace decmin

#endif  // DECMIN_DUALITY_HPP

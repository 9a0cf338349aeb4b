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

#ifndef DECMIN_DECMIN_HPP
#define DECMIN_DECMIN_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "decmin/core.hpp"
#include "decmin/majorize.hpp"
#include "decmin/mconvex.hpp"
#include "decmin/partition.hpp"
#include "decmin/setfn.hpp"

namespace decmin {

// A 1-tightening step replaces m by m + chi_s - chi_t where m(t) >= m(s) + 2
// and the result stays in the M-convex set.  Its absence characterizes
// dec-min elements.
struct TighteningStep {
  int s;
  int t;
};

inline std::optional<TighteningStep> find_1tightening(const SupermodularFn& p,
                                                      const IntVec& m) {
  if (!contains(p, m)) throw DomainError("find_1tightening: m not in the set");
  for (int t = 0; t < p.n(); ++t)
    for (int s = 0; s < p.n(); ++s)
      if (s != t && m[t] >= m[s] + 2 && exchange_feasible(p, m, s, t))
        return TighteningStep{s, t};
  return std::nullopt;
}

// Steepest 1-tightening descent.  Each step lowers the square-sum by at
// least 2, so the iteration count is bounded by half the initial gap to the
// Cauchy-Schwarz lower bound total^2 / n.
inline IntVec decmin_local_search(
    const SupermodularFn& p, std::optional<IntVec> start = std::nullopt) {
  IntVec m = start ? std::move(*start)
                   : greedy_vertex(p, IntVec(p.n(), Int(0)));
  if (start && !contains(p, m))
    throw DomainError("decmin_local_search: infeasible start");
  Int total = tilde_sum(m, p.ground().full_mask());
  Int lower = ceil_div(total * total, Int(p.n())) - p.n();
  Int cap = (square_sum(m) - lower) / 2 + p.n() * p.n() + 4;
  for (Int iter = 0; ; ++iter) {
    if (iter > cap)
      throw InternalCheckError("decmin_local_search: descent did not stop");
    int bs = -1, bt = -1;
    Int gain = 1;  // require m(t) - m(s) >= 2
    for (int t = 0; t < p.n(); ++t)
      for (int s = 0; s < p.n(); ++s) {
        if (s == t || m[t] - m[s] <= gain) continue;
        if (exchange_feasible(p, m, s, t)) {
          gain = m[t] - m[s];
          bs = s;
          bt = t;
        }
      }
    if (bs < 0) break;
    m[bs] += 1;
    m[bt] -= 1;
  }
  return m;
}

// Largest component of any dec-min element: max over nonempty X of
// ceil(p(X) / |X|).
inline Int beta1(const SupermodularFn& p) {
  p.ground().require_enumerable();
  Subset full = p.ground().full_mask();
  bool first = true;
  Int best = 0;
  for (Subset x = 1; x <= full; ++x) {
    Int v = ceil_div(p.eval(x), Int(popcount(x)));
    if (first || v > best) {
      best = std::move(v);
      first = false;
    }
    if (x == full) break;
  }
  return best;
}

// Number of beta_1-valued components of any dec-min element:
// max over X of p(X) - (beta_1 - 1)|X|.
inline Int r1(const SupermodularFn& p) {
  Subset full = p.ground().full_mask();
  Int b1 = beta1(p);
  Int best = 0;  // X = empty
  for (Subset x = 1; x <= full; ++x) {
    Int v = p.eval(x) - (b1 - 1) * popcount(x);
    if (v > best) best = std::move(v);
    if (x == full) break;
  }
  return best;
}

struct TotalExcess {
  Int min_side;    // min over the set of the total a-excess
  Int max_side;    // max over X of p(X) - a |X|
  Subset witness;  // smallest maximizer on the right-hand side
};

// Total a-excess min-max identity.  The left side is evaluated at a dec-min
// element, which minimizes it for every integer a; both sides must agree
// exactly.
inline TotalExcess min_total_excess(const SupermodularFn& p, const Int& a) {
  Subset full = p.ground().full_mask();
  Int best = 0;
  Subset witness = 0;
  for (Subset x = 1; x <= full; ++x) {
    Int v = p.eval(x) - a * popcount(x);
    if (v > best) {
      best = std::move(v);
      witness = x;
    } else if (v == best && popcount(x) < popcount(witness)) {
      witness = x;
    }
    if (x == full) break;
  }
  IntVec m = decmin_local_search(p);
  Int mn = 0;
  for (const Int& v : m)
    if (v > a) mn += v - a;
  if (mn != best)
    throw InternalCheckError("total a-excess min-max identity failed");
  return {std::move(mn), std::move(best), witness};
}

// Component-value histogram k -> Theta(m, k) of any dec-min element, from
// the recurrence driven by E(i) = max{ p(X) - (beta_1 - i - 1)|X| }.
// Cross-checked against a dec-min element found by local search.
inline std::map<Int, Int> theta_counts(const SupermodularFn& p) {
  const int n = p.n();
  Subset full = p.ground().full_mask();
  Int b1 = beta1(p);
  auto excess_max = [&](const Int& a) {
    Int best = 0;
    for (Subset x = 1; x <= full; ++x) {
      Int v = p.eval(x) - a * popcount(x);
      if (v > best) best = std::move(v);
      if (x == full) break;
    }
    return best;
  };
  std::vector<Int> theta;
  Int covered = 0;
  for (Int i = 0; covered < n; ++i) {
    if (i > 4 * Int(n) + abs(b1) * 2 + 1000000)
      throw InternalCheckError("theta recurrence did not terminate");
    Int e = excess_max(b1 - i - 1);
    for (Int j = 0; j < i; ++j)
      e -= (i - j + 1) * theta[j.convert_to<size_t>()];
    if (e < 0) throw InternalCheckError("theta recurrence went negative");
    theta.push_back(e);
    covered += e;
  }
  if (covered != n)
    throw InternalCheckError("theta counts do not partition the ground set");
  std::map<Int, Int> hist;
  for (size_t j = 0; j < theta.size(); ++j)
    if (theta[j] != 0) hist[b1 - Int(j)] = theta[j];

  std::map<Int, Int> check;
  for (const Int& v : decmin_local_search(p)) check[v] += 1;
  if (check != hist)
    throw InternalCheckError("theta recurrence disagrees with a dec-min");
  return hist;
}

// Dec-min elements in the form chi_L + Delta*: the basis family of a matroid.
struct DecMinStructure {
  std::vector<IntVec> decmins;       // the whole dec-min class
  IntVec delta_star;
  std::vector<Subset> basis_family;  // { m - Delta* : m dec-min }
  bool matroid_check = false;        // base exchange axiom verified
};

inline DecMinStructure decmin_set(const SupermodularFn& p,
                                  std::size_t cap = kDefaultEnumCap) {
  DecMinStructure out;
  out.decmins = dec_min_class(enumerate_points(p, cap));
  out.delta_star = canonical_decomposition(p).delta_star;
  std::set<Subset> bases;
  for (const IntVec& m : out.decmins) {
    Subset l = 0;
    for (int i = 0; i < p.n(); ++i) {
      Int d = m[i] - out.delta_star[i];
      if (d != 0 && d != 1)
        throw InternalCheckError("dec-min element is not chi_L + Delta*");
      if (d == 1) l |= Subset(1) << i;
    }
    bases.insert(l);
  }
  out.basis_family.assign(bases.begin(), bases.end());
  out.matroid_check = true;
  for (Subset l1 : bases) {
    for (Subset l2 : bases) {
      if (l1 == l2) continue;
      for (Subset rest = l1 & ~l2; rest; rest &= rest - 1) {
        Subset s_bit = rest & (~rest + 1);
        bool swapped = false;
        for (Subset cand = l2 & ~l1; cand; cand &= cand - 1) {
          Subset t_bit = cand & (~cand + 1);
          if (bases.count((l1 & ~s_bit) | t_bit)) {
            swapped = true;
            break;
          }
        }
        if (!swapped) out.matroid_check = false;
      }
    }
  }
  if (!out.matroid_check)
    throw InternalCheckError("dec-min basis family fails base exchange");
  return out;
}

struct LexminWitness {
  Int value;                   // sum of N^(x(s) - min component)
  std::vector<IntVec> argmins;
};

// Dec-min as the minimizer class of a rapidly increasing separable convex
// objective sum N^(x(s) - min): exact big-integer brute force over the
// enumerated set.  N defaults to max(n, 2).
inline LexminWitness lexmin_convex_witness(const SupermodularFn& p,
                                           std::optional<Int> n_opt =
                                               std::nullopt,
                                           std::size_t cap = kDefaultEnumCap) {
  Int n_base = n_opt ? *n_opt : Int(std::max(p.n(), 2));
  if (n_base < std::max(p.n(), 2))
    throw DomainError("lexmin_convex_witness: N must be at least max(|S|,2)");
  std::vector<IntVec> pts = enumerate_points(p, cap);
  Int lo = pts[0][0];
  for (const IntVec& x : pts)
    for (const Int& v : x) lo = std::min(lo, v);
  auto obj = [&](const IntVec& x) {
    Int s = 0;
    for (const Int& v : x) s += ipow(n_base, (v - lo).convert_to<unsigned long>());
    return s;
  };
  BruteMinResult r = brute_min(pts, obj);
  return {std::move(r.value), std::move(r.argmins)};
}

}  // namespace decmin

#endif  // DECMIN_DECMIN_HPP

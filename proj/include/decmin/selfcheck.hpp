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

#ifndef DECMIN_SELFCHECK_HPP
#define DECMIN_SELFCHECK_HPP

// Property suites shared by the CLI self-test and the test binaries.  Every
// check throws InternalCheckError (or derived exceptions) on failure and
// returns quietly on success.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "decmin/continuous.hpp"
#include "decmin/decmin.hpp"
#include "decmin/duality.hpp"
#include "decmin/flows.hpp"
#include "decmin/gen.hpp"
#include "decmin/majorize.hpp"

namespace decmin {
namespace selfcheck {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InternalCheckError("property failed: " + what);
}

// ---------- shared fixture instances ----------

// Two-element segment: integral points (0,3), (1,2), (2,1).
inline SupermodularFn segment2_instance() {
  return SupermodularFn::from_table(GroundSet::numbered(2),
                                    {Int(0), Int(0), Int(1), Int(3)});
}

// Five-point translated matroid instance on four elements.
inline SupermodularFn matroid4_instance() {
  MatroidOracle mat =
      MatroidOracle::graphic(3, {{0, 1}, {0, 2}, {1, 2}, {1, 2}});
  return SupermodularFn::from_matroid_cocomplement(
      GroundSet::numbered(4), mat, {Int(1), Int(1), Int(0), Int(0)});
}

// Two direct-sum instances whose integral point sets intersect exactly in
// {(2,0,0,0), (1,-1,1,1)}: a set with dec-min and inc-max elements that are
// not value-equivalent and with no least majorized element.
inline std::pair<SupermodularFn, SupermodularFn> disjoint_pair_instances() {
  GroundSet g = GroundSet::numbered(4);
  auto block_table = [&](int lo_elem, int hi_elem, Int lo_single,
                         Int hi_single, Int both) {
    std::vector<Int> t(16, Int(0));
    for (Subset x = 0; x < 16; ++x) {
      bool a = x >> lo_elem & 1u, b = x >> hi_elem & 1u;
      if (a && b)
        t[x] = both;
      else if (a)
        t[x] = lo_single;
      else if (b)
        t[x] = hi_single;
    }
    return t;
  };
  auto add = [](std::vector<Int> a, const std::vector<Int>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  // First: blocks {s1,s3} (segment (1,1)..(2,0)) and {s2,s4} ((-1,1)..(0,0)).
  std::vector<Int> t1 = add(block_table(0, 2, Int(1), Int(0), Int(2)),
                            block_table(1, 3, Int(-1), Int(0), Int(0)));
  // Second: blocks {s1,s4} and {s2,s3} with the same segments.
  std::vector<Int> t2 = add(block_table(0, 3, Int(1), Int(0), Int(2)),
                            block_table(1, 2, Int(-1), Int(0), Int(0)));
  return {SupermodularFn::from_table(g, std::move(t1)),
          SupermodularFn::from_table(g, std::move(t2))};
}

// ---------- oracle / extension properties ----------

inline void check_lovasz_properties(const SupermodularFn& p, Rng& rng,
                                    const std::vector<IntVec>& points) {
  for (int trial = 0; trial < 6; ++trial) {
    IntVec pi(p.n());
    for (Int& v : pi) v = rng.uniform(-6, 6);
    Int ext = p.lovasz_ext<Int>(pi);
    Int best = dot(pi, points[0]);
    for (const IntVec& x : points) best = std::min(best, dot(pi, x));
    require(ext == best, "lovasz extension equals the min weight");
    Int lam = rng.uniform(0, 4);
    IntVec scaled(pi);
    for (Int& v : scaled) v *= lam;
    require(p.lovasz_ext<Int>(scaled) == lam * ext,
            "lovasz extension is positively homogeneous");
    IntVec vertex = greedy_vertex(p, pi);
    require(contains(p, vertex), "greedy vertex lies in the set");
    require(dot(pi, vertex) == ext, "greedy vertex attains the extension");
  }
  SubmodularFn b = complement_b(p);
  Subset full = p.ground().full_mask();
  require(b.eval(full) == p.eval(full), "complement agrees at the full set");
  for (int trial = 0; trial < 8; ++trial) {
    Subset z = static_cast<Subset>(rng.next_u64()) & full;
    Int back = b.eval(full) - b.eval(full & ~z);
    require(back == p.eval(z), "complement of the complement reproduces p");
  }
}

// ---------- majorization properties ----------

inline void check_majorization_axioms(Rng& rng) {
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(rng.uniform(2, 6));
    IntVec x(n), y(n);
    for (Int& v : x) v = rng.uniform(-5, 5);
    for (Int& v : y) v = rng.uniform(-5, 5);
    // Align totals so that majorization has a chance.
    Int dx = tilde_sum(x, (Subset(1) << n) - 1);
    Int dy = tilde_sum(y, (Subset(1) << n) - 1);
    y[0] += dx - dy;
    bool maj = majorizes(y, x);
    IntVec mx(x), my(y);
    for (Int& v : mx) v = -v;
    for (Int& v : my) v = -v;
    require(maj == majorizes(my, mx), "x maj y iff -x maj -y");
    require(maj == excess_profile_leq(x, y),
            "prefix-sum and excess-profile tests agree");
    if (maj) {
      require(dec_compare(x, y) != OrderRel::Greater,
              "majorized implies decreasingly smaller or equal");
      require(inc_compare(x, y) != OrderRel::Smaller,
              "majorized implies increasingly larger or equal");
    }
    if (maj) require(weakly_submajorizes(y, x), "majorized implies weak");
    // Robin Hood moves only flatten the vector.
    int s = static_cast<int>(rng.uniform(0, n - 1));
    int t = static_cast<int>(rng.uniform(0, n - 1));
    if (y[t] > y[s]) {
      Int lam = rng.uniform(0, (y[t] - y[s]).convert_to<long long>());
      IntVec z = t_transform(y, s, t, lam);
      require(majorizes(y, z), "t-transform result is majorized by input");
    }
  }
  // The fixed counterexample: dec/inc comparability does not imply
  // majorization.
  IntVec cx{Int(2), Int(2), Int(-2), Int(-2)};
  IntVec cy{Int(3), Int(0), Int(0), Int(-3)};
  require(dec_compare(cx, cy) == OrderRel::Smaller, "counterexample dec");
  require(inc_compare(cx, cy) == OrderRel::Greater, "counterexample inc");
  require(!majorizes(cy, cx), "counterexample not majorized");
}

// ---------- dec-min equivalences (whole-set scans) ----------

inline void check_decmin_equivalences(const SupermodularFn& p,
                                      const std::vector<IntVec>& points) {
  std::vector<IntVec> dm = dec_min_class(points);
  std::vector<IntVec> im = inc_max_class(points);
  require(dm == im, "dec-min class equals inc-max class");
  auto least = least_majorized(points);
  require(least.has_value(), "a least majorized element exists");
  require(value_equivalent(*least, dm.front()),
          "least majorized is value-equivalent to dec-min");
  BruteMinResult sq = brute_min(points, square_sum);
  require(sq.argmins == dm, "square-sum argmin set equals the dec-min class");
  std::set<IntVec> dmset(dm.begin(), dm.end());
  std::vector<char> feas;
  for (const IntVec& x : points) {
    std::vector<long long> xi = detail::to_i64(x);
    detail::exchange_feasibility_map(p, xi, &feas);
    bool tight = true;
    for (int s = 0; s < p.n() && tight; ++s)
      for (int t = 0; t < p.n(); ++t)
        if (s != t && xi[t] >= xi[s] + 2 && feas[size_t(s) * p.n() + t]) {
          tight = false;
          break;
        }
    require(tight == dmset.count(x),
            "no 1-tightening step iff dec-min membership");
  }
  IntVec ls = decmin_local_search(p);
  require(dmset.count(ls), "local search lands in the dec-min class");
  LexminWitness lw = lexmin_convex_witness(p);
  require(lw.argmins == dm, "rapidly increasing objective recovers dec-min");
}

// ---------- scalar min-max formulas ----------

inline void check_scalar_minmax(const SupermodularFn& p,
                                const std::vector<IntVec>& points) {
  std::vector<IntVec> dm = dec_min_class(points);
  const IntVec& m = dm.front();
  std::vector<Int> sorted = sort_desc(m);
  Int b1 = beta1(p);
  require(sorted.front() == b1, "beta1 equals the largest component");
  Int r = r1(p);
  Int count = 0;
  for (const Int& v : m)
    if (v == b1) ++count;
  require(r == count, "r1 counts the beta1-valued components");

  Int bq = sorted.back();
  for (Int a = bq - 2; a <= b1 + 2; ++a) {
    TotalExcess te = min_total_excess(p, a);
    require(te.min_side == te.max_side, "total a-excess min-max");
    Int brute = 0;
    bool first = true;
    for (const IntVec& x : points) {
      Int v = 0;
      for (const Int& c : x)
        if (c > a) v += c - a;
      if (first || v < brute) {
        brute = v;
        first = false;
      }
    }
    require(te.min_side == brute, "excess minimum matches enumeration");
    if (a == b1 - 1) require(te.min_side == r, "a = beta1 - 1 reduces to r1");
  }

  std::map<Int, Int> hist = theta_counts(p);
  for (const IntVec& x : dm) {
    std::map<Int, Int> h;
    for (const Int& v : x) h[v] += 1;
    require(h == hist, "theta histogram is shared by all dec-min elements");
  }
}

// ---------- partitions ----------

inline void check_partitions(const SupermodularFn& p,
                             const std::vector<IntVec>& points) {
  CanonicalDecomposition can = canonical_decomposition(p);
  PrincipalDecomposition pri = principal_decomposition(p);
  PartitionRelation rel = relate_partitions(can, pri);
  require(rel.ok, "partition aggregation: " + rel.message);
  for (size_t j = 1; j < can.betas.size(); ++j)
    require(can.betas[j] < can.betas[j - 1], "essential values decrease");
  std::vector<IntVec> dm = dec_min_class(points);
  for (const IntVec& m : dm) {
    for (size_t j = 0; j < can.blocks.size(); ++j)
      for (int s = 0; s < p.n(); ++s)
        if (can.blocks[j] >> s & 1u)
          require(m[s] == can.betas[j] || m[s] == can.betas[j] - 1,
                  "dec-min is near-uniform on canonical blocks");
    for (Subset cj : can.chain)
      require(tilde_sum(m, cj) == p.eval(cj),
              "dec-min elements are tight along the canonical chain");
  }
  // Monotone nesting of maximizers on a sampled grid of rationals.
  std::vector<Rat> grid;
  for (const Rat& l : pri.lambdas) {
    grid.push_back(l);
    grid.push_back(l + Rat(1, 2));
    grid.push_back(l - Rat(1, 3));
  }
  std::sort(grid.begin(), grid.end());
  for (size_t i = 1; i < grid.size(); ++i) {
    if (grid[i - 1] == grid[i]) continue;
    Subset lower = largest_maximizer(p, grid[i]);     // larger lambda
    Subset upper = smallest_maximizer(p, grid[i - 1]);
    require((lower & ~upper) == 0,
            "maximizers nest monotonically across lambda");
  }
}

// ---------- separable convex duality ----------

inline void check_square_duality(const SupermodularFn& p,
                                 const std::vector<IntVec>& points) {
  SeparableObjective sq =
      SeparableObjective::uniform(p.n(), DiscreteConvexFn::square());
  IntVec x = minimize_separable(p, sq);
  BruteMinResult brute = brute_min(points, square_sum);
  require(sq.eval(x).value() == brute.value,
          "exchange descent reaches the brute-force square-sum minimum");
  Certificate cert = dual_certificate(p, sq, x);
  require(cert.gap == 0, "square-sum certificate gap is zero");
  Certificate mm = sqsum_minmax(p);
  require(mm.primal == brute.value && mm.dual == brute.value,
          "square-sum min-max at pi*");
}

// Random separable objectives whose domains cover the point set.
inline SeparableObjective random_covering_objective(
    Rng& rng, const SupermodularFn& p, const std::vector<IntVec>& points) {
  Int lo = points[0][0], hi = points[0][0];
  for (const IntVec& x : points)
    for (const Int& v : x) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  std::vector<DiscreteConvexFn> phis;
  for (int s = 0; s < p.n(); ++s) {
    while (true) {
      DiscreteConvexFn f = random_cost(rng, lo.convert_to<long long>(),
                                       hi.convert_to<long long>());
      if (f.dom_lo() <= ExtInt(lo) && f.dom_hi() >= ExtInt(hi)) {
        phis.push_back(std::move(f));
        break;
      }
    }
  }
  return SeparableObjective(std::move(phis));
}

inline void check_general_duality(const SupermodularFn& p,
                                  const std::vector<IntVec>& points,
                                  Rng& rng) {
  SeparableObjective obj = random_covering_objective(rng, p, points);
  IntVec x = minimize_separable(p, obj);
  BruteMinResult brute = brute_min(
      points, [&](const IntVec& y) { return obj.eval(y).value(); });
  require(obj.eval(x).value() == brute.value,
          "exchange descent is globally optimal for separable convex costs");
  Certificate cert = dual_certificate(p, obj, x);
  require(cert.gap == 0, "separable certificate gap is zero");
  // Weak duality at random feasible duals, with its two-part slack
  // decomposition: the Fenchel-Young slacks and the pi-weight slack are
  // separately nonnegative and add up to the gap.
  for (int trial = 0; trial < 10; ++trial) {
    IntVec pi(p.n());
    for (Int& v : pi) v = rng.uniform(-8, 8);
    ExtInt g = dual_value(p, obj, pi);
    if (!g.finite()) continue;
    require(g.value() <= cert.primal, "weak duality at a sampled dual");
    Int young = 0;
    for (int s = 0; s < p.n(); ++s)
      young += fenchel_young_slack(obj.phi(s), x[s], pi[s]);
    Int weight = dot(pi, x) - p.lovasz_ext<Int>(pi);
    require(young >= 0 && weight >= 0 &&
                young + weight == cert.primal - g.value(),
            "weak duality slack decomposition");
  }
  // L-optimality of the constructed dual: no +-chi_Y step improves it.
  Subset full = p.ground().full_mask();
  Int gstar = dual_value(p, obj, cert.pi).value();
  for (Subset y = 1; y <= full; ++y) {
    for (int sign = -1; sign <= 1; sign += 2) {
      IntVec pi2(cert.pi);
      for (int s = 0; s < p.n(); ++s)
        if (y >> s & 1u) pi2[s] += sign;
      ExtInt g2 = dual_value(p, obj, pi2);
      require(!g2.finite() || g2.value() <= gstar,
              "constructed dual is locally (hence globally) maximal");
    }
    if (y == full) break;
  }
  // Discrete midpoint concavity of the dual objective on sampled pairs.
  for (int trial = 0; trial < 8; ++trial) {
    IntVec a(p.n()), b(p.n());
    for (Int& v : a) v = rng.uniform(-6, 6);
    for (Int& v : b) v = rng.uniform(-6, 6);
    ExtInt ga = dual_value(p, obj, a), gb = dual_value(p, obj, b);
    if (!ga.finite() || !gb.finite()) continue;
    IntVec up(p.n()), dn(p.n());
    for (int s = 0; s < p.n(); ++s) {
      up[s] = ceil_div(a[s] + b[s], 2);
      dn[s] = floor_div(a[s] + b[s], 2);
    }
    ExtInt gu = dual_value(p, obj, up), gd = dual_value(p, obj, dn);
    require(gu.finite() && gd.finite(),
            "midpoints of feasible duals stay feasible");
    require(ga.value() + gb.value() <= gu.value() + gd.value(),
            "dual objective is midpoint concave");
  }
}

// ---------- dual / primal optimal set structure ----------

// Exhaustive int64 scan of the square-sum dual over the box
// [2 min(x)-3, 2 max(x)+3]; requires the instance to fit the fast table.
struct SquareDualScan {
  bool scanned = false;
  long long best = 0;
  std::vector<std::vector<long long>> argmax;
};

inline SquareDualScan square_dual_scan64(const SupermodularFn& p,
                                         const IntVec& x_opt,
                                         std::size_t cell_cap = 1000000) {
  SquareDualScan out;
  if (!p.fits_int64()) return out;
  long long lo =
      2 * (*std::min_element(x_opt.begin(), x_opt.end())).convert_to<long long>() -
      3;
  long long hi =
      2 * (*std::max_element(x_opt.begin(), x_opt.end())).convert_to<long long>() +
      3;
  double cells = 1;
  for (int s = 0; s < p.n(); ++s) cells *= double(hi - lo + 1);
  if (cells > double(cell_cap)) return out;
  const std::vector<long long>& pt = p.table64();
  const Subset full = p.ground().full_mask();
  std::vector<long long> pi(p.n(), lo);
  std::vector<int> order(p.n());
  bool first = true;
  while (true) {
    // Lovasz extension along the pi-decreasing order, int64 arithmetic.
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pi[a] > pi[b]; });
    long long g = 0;
    Subset prefix = 0;
    for (int j = 0; j < p.n(); ++j) {
      prefix |= Subset(1) << order[j];
      long long coeff =
          (j + 1 < p.n()) ? pi[order[j]] - pi[order[j + 1]] : pi[order[j]];
      g += pt[prefix] * coeff;
    }
    (void)full;
    for (int s = 0; s < p.n(); ++s) {
      long long l = pi[s];
      long long f = l >= 0 ? l / 2 : -((-l + 1) / 2);
      long long c = l - f;
      g -= f * c;
    }
    if (first || g > out.best) {
      out.best = g;
      out.argmax.clear();
      out.argmax.push_back(pi);
      first = false;
    } else if (g == out.best) {
      out.argmax.push_back(pi);
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
  out.scanned = true;
  return out;
}

inline void check_optimal_sets(const SupermodularFn& p,
                               const std::vector<IntVec>& points,
                               std::size_t scan_cap = 1000000) {
  Certificate mm = sqsum_minmax(p);
  DualOptimalSet dos = dual_optimal_set(p);
  require(dos.contains(mm.pi), "pi* satisfies the canonical description");
  SquareDualScan scan = square_dual_scan64(p, mm.x, scan_cap);
  if (!scan.scanned) return;  // box too large for the exhaustive comparison
  require(Int(scan.best) == mm.primal, "box scan reproduces the optimum");
  std::set<std::vector<long long>> opt(scan.argmax.begin(), scan.argmax.end());
  std::vector<long long> pistar = detail::to_i64(mm.pi);
  require(opt.count(pistar), "pi* is dual optimal");
  std::vector<long long> cmin(scan.argmax.front());
  for (const auto& pi : scan.argmax)
    for (int s = 0; s < p.n(); ++s) cmin[s] = std::min(cmin[s], pi[s]);
  require(cmin == pistar, "pi* is the componentwise smallest dual optimum");
  for (const auto& pi : scan.argmax)
    require(dos.contains(detail::from_i64(pi)),
            "every scanned optimum satisfies the description");
  // Inside the scanned box the description captures exactly the optima.
  long long lo = pistar[0], hi = pistar[0];
  {
    long long xmin =
        (*std::min_element(mm.x.begin(), mm.x.end())).convert_to<long long>();
    long long xmax =
        (*std::max_element(mm.x.begin(), mm.x.end())).convert_to<long long>();
    lo = 2 * xmin - 3;
    hi = 2 * xmax + 3;
  }
  std::vector<long long> pi(p.n(), lo);
  while (true) {
    bool in_box_opt = opt.count(pi) > 0;
    bool described = dos.contains(detail::from_i64(pi));
    require(in_box_opt == described,
            "canonical description matches the scanned dual set");
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
  // L-natural closure under componentwise min and max, sampled.
  for (size_t i = 0; i < scan.argmax.size() && i < 12; ++i) {
    for (size_t j = i + 1; j < scan.argmax.size() && j < 12; ++j) {
      std::vector<long long> lo2(p.n()), hi2(p.n());
      for (int s = 0; s < p.n(); ++s) {
        lo2[s] = std::min(scan.argmax[i][s], scan.argmax[j][s]);
        hi2[s] = std::max(scan.argmax[i][s], scan.argmax[j][s]);
      }
      require(opt.count(lo2) && opt.count(hi2),
              "dual optimal set is closed under meet and join");
    }
  }
  std::vector<IntVec> prim = primal_optimal_set(p, mm.pi);
  require(prim == dec_min_class(points),
          "primal optimal set equals the dec-min class");
}

// ---------- continuous relaxation ----------

inline void check_continuous(const SupermodularFn& p,
                             const std::vector<IntVec>& points) {
  MinNormPoint mnp = min_norm_point(p);
  ContinuousDuality cd = continuous_sqsum_duality(p);
  require(cd.primal == cd.dual, "continuous square-sum duality");
  // Distinct component values of m_R are exactly the critical values.
  std::set<Rat> comps(mnp.m_r.begin(), mnp.m_r.end());
  std::set<Rat> crit(mnp.lambdas.begin(), mnp.lambdas.end());
  require(comps == crit, "components of m_R are the critical values");
  ProximityReport prox = proximity_check(p);
  ConvexCombinationReport combo = convex_combination_check(p);
  require(combo.chain_tight && combo.box_ok, "m_R lies on the dec-min face");
  if (combo.combination) {
    RatVec back(p.n(), Rat(0));
    Rat total = 0;
    for (size_t i = 0; i < combo.combination->size(); ++i) {
      const Rat& l = (*combo.combination)[i];
      require(l >= 0, "combination coefficients are nonnegative");
      total += l;
      for (int s = 0; s < p.n(); ++s)
        back[s] += l * Rat(combo.decmins[i][s]);
    }
    require(total == 1 && back == mnp.m_r,
            "explicit convex combination reconstructs m_R");
  }
  RelaxResult ra = relax_decmin(p);
  RelaxResult rb = relax_decmin_pwl(p);
  std::vector<IntVec> dm = dec_min_class(points);
  require(value_equivalent(ra.output, dm.front()),
          "min-norm relaxation returns a dec-min element");
  require(value_equivalent(rb.output, dm.front()),
          "piecewise-linear relaxation returns a dec-min element");
  // Square norm is uniquely minimized at m_R over sampled feasible points.
  Rat norm = 0;
  for (const Rat& v : mnp.m_r) norm += v * v;
  for (size_t i = 0; i < points.size() && i < 50; ++i) {
    RatVec y = to_rat(points[i]);
    if (y == mnp.m_r) continue;
    Rat ny = 0;
    for (const Rat& v : y) ny += v * v;
    require(ny > norm, "m_R uniquely minimizes the square norm");
  }
}

// ---------- dec-min structure ----------

inline void check_matroidal_structure(const SupermodularFn& p,
                                      const std::vector<IntVec>& points) {
  DecMinStructure st = decmin_set(p);
  require(st.matroid_check, "dec-min bases satisfy base exchange");
  require(st.decmins == dec_min_class(points), "dec-min set is reproduced");
  // Unit box: coordinates of dec-min elements spread by at most one.
  for (int s = 0; s < p.n(); ++s) {
    Int lo = st.decmins[0][s], hi = lo;
    for (const IntVec& m : st.decmins) {
      lo = std::min(lo, m[s]);
      hi = std::max(hi, m[s]);
    }
    require(hi - lo <= 1, "dec-min set fits in a unit box");
  }
}

// ---------- conjugates ----------

// Test oracle: conjugate by direct scan of k over dom phi intersected with
// [-window, window].
inline Int brute_conjugate(const DiscreteConvexFn& phi, const Int& l,
                           long long window) {
  bool have = false;
  Int best = 0;
  for (Int k = -window; k <= window; ++k) {
    ExtInt v = phi.eval(k);
    if (!v.finite()) continue;
    Int cand = k * l - v.value();
    if (!have || cand > best) {
      best = std::move(cand);
      have = true;
    }
  }
  if (!have) throw DomainError("brute_conjugate: empty window");
  return best;
}

inline DiscreteConvexFn random_cost_any(Rng& rng, int kind) {
  switch (kind) {
    case 0:
      return DiscreteConvexFn::square();
    case 1:
      return DiscreteConvexFn::weighted_square(rng.uniform(1, 6));
    case 2:
      return DiscreteConvexFn::power_even(rng.uniform(1, 3),
                                          rng.uniform(1, 3));
    case 3:
      return DiscreteConvexFn::exp_growth(rng.uniform(1, 4),
                                          rng.uniform(2, 4));
    case 4:
      return DiscreteConvexFn::abs_dist(rng.uniform(-8, 8));
    case 5:
      return DiscreteConvexFn::pos_part(rng.uniform(-8, 8));
    case 6: {
      Int a = rng.uniform(0, 5);
      Int b = a + rng.uniform(0, 5);
      return DiscreteConvexFn::piece_lin2(std::move(a), std::move(b),
                                          rng.uniform(0, 6));
    }
    case 7: {
      Int a = rng.uniform(-5, 3);
      Int b = a + rng.uniform(0, 6);
      return DiscreteConvexFn::interval_dist(std::move(a), std::move(b));
    }
    default: {
      int len = static_cast<int>(rng.uniform(1, 9));
      std::vector<long long> inc(len);
      for (auto& d : inc) d = rng.uniform(-4, 4);
      std::sort(inc.begin(), inc.end());
      std::vector<Int> vals{Int(rng.uniform(-5, 5))};
      for (long long d : inc) vals.push_back(vals.back() + d);
      return DiscreteConvexFn::table(rng.uniform(-5, 2), std::move(vals));
    }
  }
}

inline void check_conjugates(Rng& rng, int draws_per_kind = 20) {
  // Maximizers of k l - phi(k) for |l| <= 50 and the parameter ranges drawn
  // here always fall inside |k| <= 64 (slopes at the window edge already
  // exceed 50), so the 64-window is an exact oracle and the 128-window
  // re-check guards the reasoning.
  for (int kind = 0; kind <= 8; ++kind) {
    for (int draw = 0; draw < draws_per_kind; ++draw) {
      DiscreteConvexFn phi = random_cost_any(rng, kind);
      ConjugateFn psi = conjugate(phi);
      ExtInt prev = ExtInt::neg_inf();
      ExtInt prev2 = ExtInt::neg_inf();
      for (Int l = -50; l <= 50; ++l) {
        ExtInt closed = psi.eval(l);
        if (closed.finite()) {
          Int near = brute_conjugate(phi, l, 64);
          Int wide = brute_conjugate(phi, l, 128);
          require(closed.value() == near && near == wide,
                  "closed-form conjugate matches brute force");
        } else {
          // The sup is infinite: widening the window keeps improving it.
          require(brute_conjugate(phi, l, 128) > brute_conjugate(phi, l, 64),
                  "infinite conjugate value grows without bound");
        }
        // psi stays discrete convex where finite.
        if (prev2.finite() && prev.finite() && closed.finite())
          require(prev2.value() + closed.value() >= 2 * prev.value(),
                  "conjugate is discrete convex");
        prev2 = prev;
        prev = closed;
      }
      // Biconjugacy over the same dual window: for k whose subgradient
      // interval meets [-50, 50], max_l { k l - psi(l) } returns phi(k).
      for (Int k = -10; k <= 10; ++k) {
        ExtInt fk = phi.eval(k);
        if (!fk.finite()) continue;
        auto [lo, hi] = subgradient_interval(phi, k);
        if (hi < ExtInt(Int(-50)) || lo > ExtInt(Int(50))) continue;
        Int l_lo = std::max(lo.finite() ? lo.value() : Int(-50), Int(-50)) - 2;
        Int l_hi = std::min(hi.finite() ? hi.value() : Int(50), Int(50)) + 2;
        bool have = false;
        Int best = 0;
        for (Int l = l_lo; l <= l_hi; ++l) {
          ExtInt pl = psi.eval(l);
          if (!pl.finite()) continue;
          Int cand = k * l - pl.value();
          if (!have || cand > best) {
            best = std::move(cand);
            have = true;
          }
        }
        require(have && best == fk.value(), "biconjugacy on the window");
        // Fenchel-Young equality exactly on the subgradient interval.
        for (Int l = l_lo; l <= l_hi; ++l) {
          if (!psi.eval(l).finite()) continue;
          Int slack = fenchel_young_slack(phi, k, l);
          bool in_interval = ExtInt(l) >= lo && ExtInt(l) <= hi;
          require((slack == 0) == in_interval,
                  "Fenchel-Young equality iff subgradient");
        }
      }
      // The translation identity against a shifted brute force.
      Int a = rng.uniform(-3, 3), b = rng.uniform(-3, 3), c = rng.uniform(-3, 3);
      DiscreteConvexFn shifted = DiscreteConvexFn::translate(phi, a, b, c);
      ConjugateFn psi2 = conjugate(shifted);
      for (Int l = -20; l <= 20; ++l) {
        ExtInt v = psi2.eval(l);
        ExtInt inner = psi.eval(l - b);
        ExtInt expect = inner.finite()
                            ? ExtInt(inner.value() + a * (l - b) - c)
                            : ExtInt::pos_inf();
        require(v == expect, "translated conjugate identity");
        if (v.finite())
          require(v.value() == brute_conjugate(shifted, l, 128),
                  "translated conjugate matches brute force");
      }
    }
  }
}

// ---------- intersection ----------

inline void check_intersection_fixture() {
  auto [p1, p2] = disjoint_pair_instances();
  std::vector<IntVec> a = enumerate_points(p1);
  std::vector<IntVec> b = enumerate_points(p2);
  std::set<IntVec> bs(b.begin(), b.end());
  std::vector<IntVec> inter;
  for (const IntVec& x : a)
    if (bs.count(x)) inter.push_back(x);
  IntVec u{Int(1), Int(-1), Int(1), Int(1)};
  IntVec v{Int(2), Int(0), Int(0), Int(0)};
  require(inter.size() == 2 && inter[0] == u && inter[1] == v,
          "intersection fixture has exactly the two expected points");
  require(!least_majorized(inter).has_value(),
          "no least majorized element in the intersection");
  require(dec_min_class(inter) == std::vector<IntVec>{u},
          "dec-min of the intersection");
  require(inc_max_class(inter) == std::vector<IntVec>{v},
          "inc-max of the intersection");
  SeparableObjective sq =
      SeparableObjective::uniform(4, DiscreteConvexFn::square());
  IntersectionMin im = minimize_over_intersection(p1, p2, sq);
  require(im.feasible && im.value == 4, "intersection square-sum minimum");
  IntersectionCertificate cert = verify_intersection_certificate(
      p1, p2, sq, u, {Int(1), Int(-1), Int(1), Int(-1)},
      {Int(2), Int(0), Int(0), Int(2)});
  require(cert.gap == ExtInt(Int(0)) && cert.conditions(),
          "intersection certificate is exact");
  IntersectionCertificate bad = verify_intersection_certificate(
      p1, p2, sq, u, IntVec(4, Int(0)), IntVec(4, Int(0)));
  require(bad.gap > ExtInt(Int(0)) && !bad.conditions(),
          "slack dual pair is detected");
}

inline void check_intersection_random(Rng& rng) {
  // Transport single-polyhedron certificates into the intersection formula.
  SupermodularFn p = random_supermodular(rng, 2, 4, 12);
  std::vector<IntVec> pts = enumerate_points(p);
  SeparableObjective obj = random_covering_objective(rng, p, pts);
  IntVec x = minimize_separable(p, obj);
  Certificate cert = dual_certificate(p, obj, x);
  IntersectionCertificate moved = verify_intersection_certificate(
      p, p, obj, x, cert.pi, IntVec(p.n(), Int(0)));
  require(moved.gap == ExtInt(Int(0)) && moved.conditions(),
          "transported certificate stays exact on the diagonal intersection");
}

// ---------- flows ----------

inline void check_flow_instance(const FlowNetwork& net, Rng& rng) {
  FeasibilityReport rep = hoffman_feasible(net);
  std::optional<Int> brute = flow_brute_min(net);
  require(rep.feasible == brute.has_value(),
          "cut condition agrees with brute-force feasibility");
  if (!rep.feasible) return;
  IntVec x = min_cost_mflow(net);
  require(net.conserves(x) && net.within_bounds(x), "optimal flow feasible");
  require(net.cost_of(x).value() == *brute,
          "cycle canceling matches brute force");
  FlowCertificate cert = flow_certificate(net, x);
  require(cert.gap == 0, "flow certificate gap is zero");
  bool all_square = true;
  for (const FlowArc& a : net.arcs)
    if (a.cost.kind() != DiscreteConvexFn::Kind::Square) all_square = false;
  if (all_square) verify_flow_minmax(net);
  // Weak duality for random potential/tension splits.
  for (int trial = 0; trial < 6; ++trial) {
    IntVec pi(net.num_nodes());
    for (Int& v : pi) v = rng.uniform(-4, 4);
    Int dual = 0;
    for (int v = 0; v < net.num_nodes(); ++v) dual += pi[v] * net.demand[v];
    bool finite = true;
    for (int e = 0; e < net.num_arcs(); ++e) {
      const FlowArc& a = net.arcs[e];
      Int d = pi[a.head] - pi[a.tail];
      Int t2 = rng.uniform(-1, 1);
      Int t1 = d - t2;
      ExtInt psi = conjugate(a.cost).eval(t1);
      if (!psi.finite() || (t2 != 0 && ((t2 > 0 && !a.hi) || (t2 < 0 && !a.lo)))) {
        finite = false;
        break;
      }
      dual -= psi.value();
      if (t2 > 0)
        dual -= *a.hi * t2;
      else if (t2 < 0)
        dual -= *a.lo * t2;
    }
    if (finite)
      require(dual <= cert.primal, "weak duality for sampled flow duals");
  }
}

}  // namespace selfcheck
}  // namespace decmin

#endif  // DECMIN_SELFCHECK_HPP

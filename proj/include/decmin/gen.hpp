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

#ifndef DECMIN_GEN_HPP
#define DECMIN_GEN_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "decmin/conjugate.hpp"
#include "decmin/flows.hpp"
#include "decmin/rng.hpp"
#include "decmin/setfn.hpp"

namespace decmin {

// Seeded generator of small supermodular instances, mixing the guaranteed
// constructions (cardinality-convex, induced edges, matroid cocomplement)
// and their table re-encodings.  Values are kept within value_bound.
inline SupermodularFn random_supermodular(Rng& rng, int n_lo = 2, int n_hi = 6,
                                          long long value_bound = 20) {
  while (true) {
    int n = static_cast<int>(rng.uniform(n_lo, n_hi));
    GroundSet ground = GroundSet::numbered(n);
    int kind = static_cast<int>(rng.uniform(0, 3));
    SupermodularFn p = [&]() -> SupermodularFn {
      switch (kind) {
        case 0: {
          std::vector<long long> inc(n);
          for (auto& d : inc) d = rng.uniform(-3, 3);
          std::sort(inc.begin(), inc.end());
          std::vector<Int> g{Int(0)};
          for (int i = 0; i < n; ++i) g.push_back(g.back() + inc[i]);
          return SupermodularFn::from_cardinality_convex(std::move(ground),
                                                         std::move(g));
        }
        case 1: {
          int m = static_cast<int>(rng.uniform(0, n + 2));
          std::vector<std::pair<int, int>> edges;
          for (int i = 0; i < m; ++i)
            edges.push_back({static_cast<int>(rng.uniform(0, n - 1)),
                             static_cast<int>(rng.uniform(0, n - 1))});
          IntVec offset(n);
          for (Int& v : offset) v = rng.uniform(-2, 2);
          Int c = rng.uniform(-2, 0);
          return SupermodularFn::from_induced_edges(
              std::move(ground), std::move(edges), std::move(offset),
              std::move(c));
        }
        default: {
          int mk = static_cast<int>(rng.uniform(0, 2));
          MatroidOracle mat = [&] {
            if (mk == 0)
              return MatroidOracle::uniform(
                  n, static_cast<int>(rng.uniform(0, n)));
            if (mk == 1) {
              // Random assignment of elements to <= 3 blocks.
              std::vector<Subset> blocks(3, 0);
              for (int i = 0; i < n; ++i)
                blocks[rng.uniform(0, 2)] |= Subset(1) << i;
              std::vector<Subset> nonempty;
              std::vector<int> caps;
              for (Subset b : blocks)
                if (b) {
                  nonempty.push_back(b);
                  caps.push_back(
                      static_cast<int>(rng.uniform(0, popcount(b))));
                }
              return MatroidOracle::partition(n, std::move(nonempty),
                                              std::move(caps));
            }
            int vcount = static_cast<int>(rng.uniform(2, 4));
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
              edges.push_back({static_cast<int>(rng.uniform(0, vcount - 1)),
                               static_cast<int>(rng.uniform(0, vcount - 1))});
            return MatroidOracle::graphic(vcount, std::move(edges));
          }();
          IntVec offset(n);
          for (Int& v : offset) v = rng.uniform(-3, 3);
          return SupermodularFn::from_matroid_cocomplement(
              std::move(ground), std::move(mat), std::move(offset));
        }
      }
    }();
    bool in_range = true;
    Subset full = p.ground().full_mask();
    for (Subset x = 0; x <= full; ++x) {
      if (p.eval(x) > value_bound || p.eval(x) < -value_bound) {
        in_range = false;
        break;
      }
      if (x == full) break;
    }
    if (!in_range) continue;
    if (rng.coin(0.25)) {
      // Re-encode through a table oracle to exercise table validation.
      std::vector<Int> values(size_t(1) << p.n());
      for (Subset x = 0; x < values.size(); ++x) values[x] = p.eval(x);
      return SupermodularFn::from_table(p.ground(), std::move(values));
    }
    return p;
  }
}

// Random discrete convex cost whose domain covers [lo, hi].
inline DiscreteConvexFn random_cost(Rng& rng, long long lo, long long hi) {
  switch (rng.uniform(0, 7)) {
    case 0:
      return DiscreteConvexFn::square();
    case 1:
      return DiscreteConvexFn::weighted_square(rng.uniform(1, 3));
    case 2:
      return DiscreteConvexFn::abs_dist(rng.uniform(-2, 2));
    case 3:
      return DiscreteConvexFn::pos_part(rng.uniform(-2, 2));
    case 4:
      return DiscreteConvexFn::interval_dist(rng.uniform(-2, 0),
                                             rng.uniform(0, 2));
    case 5: {
      std::vector<long long> inc(static_cast<size_t>(hi - lo + 2));
      for (auto& d : inc) d = rng.uniform(-3, 3);
      std::sort(inc.begin(), inc.end());
      std::vector<Int> vals{Int(rng.uniform(-4, 4))};
      for (long long d : inc) vals.push_back(vals.back() + d);
      return DiscreteConvexFn::table(lo - 1, std::move(vals));
    }
    case 6: {
      Int b = rng.uniform(0, 4);
      return DiscreteConvexFn::translate(DiscreteConvexFn::square(),
                                         rng.uniform(-2, 2), std::move(b),
                                         rng.uniform(-3, 3));
    }
    default:
      if (lo >= 0) return DiscreteConvexFn::exp_growth(1, 2);
      return DiscreteConvexFn::power_even(1, 2);
  }
}

// Random flow network with finite explicit bounds of width <= 5 on every
// arc.  Demands are taken from a random in-bounds flow most of the time, so
// the instance is feasible by construction; occasionally they are perturbed
// to exercise the infeasible path.
inline FlowNetwork random_network(Rng& rng, int max_nodes = 6,
                                  int max_arcs = 10,
                                  bool square_only = false) {
  FlowNetwork net;
  int n = static_cast<int>(rng.uniform(2, max_nodes));
  for (int v = 0; v < n; ++v) net.nodes.push_back("v" + std::to_string(v));
  int m = static_cast<int>(rng.uniform(1, max_arcs));
  IntVec flow;
  for (int e = 0; e < m; ++e) {
    int u = static_cast<int>(rng.uniform(0, n - 1));
    int w = static_cast<int>(rng.uniform(0, n - 2));
    if (w >= u) ++w;
    long long lo = rng.uniform(-4, 2);
    long long hi = lo + rng.uniform(0, 5);
    DiscreteConvexFn cost = square_only ? DiscreteConvexFn::square()
                                        : random_cost(rng, lo, hi);
    // Keep the explicit window inside the cost domain.
    ExtInt dlo = cost.dom_lo(), dhi = cost.dom_hi();
    if (dlo.finite() && Int(lo) < dlo.value())
      lo = dlo.value().convert_to<long long>();
    if (dhi.finite() && Int(hi) > dhi.value())
      hi = dhi.value().convert_to<long long>();
    if (lo > hi) {
      lo = dlo.finite() ? dlo.value().convert_to<long long>() : 0;
      hi = lo;
    }
    net.arcs.push_back({u, w, Int(lo), Int(hi), std::move(cost)});
    flow.push_back(rng.uniform(lo, hi));
  }
  net.demand.assign(n, Int(0));
  for (int e = 0; e < m; ++e) {
    net.demand[net.arcs[e].head] += flow[e];
    net.demand[net.arcs[e].tail] -= flow[e];
  }
  if (rng.coin(0.15)) {
    int v = static_cast<int>(rng.uniform(0, n - 1));
    int u = static_cast<int>(rng.uniform(0, n - 1));
    Int d = rng.uniform(1, 30);
    net.demand[v] += d;
    net.demand[u] -= d;
  }
  return net;
}

}  // namespace decmin

#endif  // DECMIN_GEN_HPP

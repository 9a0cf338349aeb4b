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

#ifndef DECMIN_FLOWS_HPP
#define DECMIN_FLOWS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "decmin/conjugate.hpp"
#include "decmin/core.hpp"

namespace decmin {

// Arc with optional explicit integer bounds and a discrete convex cost.
// The cost's effective domain acts as an implicit capacity; explicit bounds
// intersect it.
struct FlowArc {
  int tail;
  int head;
  std::optional<Int> lo;
  std::optional<Int> hi;
  DiscreteConvexFn cost;
};

struct FlowNetwork {
  std::vector<std::string> nodes;
  std::vector<FlowArc> arcs;
  IntVec demand;  // net in-flow required at each node; must sum to zero

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_arcs() const { return static_cast<int>(arcs.size()); }

  void validate() const {
    if (nodes.empty()) throw ValidationError("flow network: no nodes");
    if (demand.size() != nodes.size())
      throw ValidationError("flow network: demand size mismatch");
    Int total = 0;
    for (const Int& v : demand) total += v;
    if (total != 0)
      throw ValidationError("flow network: demands must sum to zero");
    for (const FlowArc& a : arcs) {
      if (a.tail < 0 || a.head < 0 || a.tail >= num_nodes() ||
          a.head >= num_nodes())
        throw ValidationError("flow network: arc endpoint out of range");
      if (a.lo && a.hi && *a.lo > *a.hi)
        throw ValidationError("flow network: lower bound exceeds upper bound");
      auto [f, g] = effective_bounds(a);
      if (f > g)
        throw ValidationError(
            "flow network: bounds and cost domain are incompatible");
    }
  }

  static std::pair<ExtInt, ExtInt> effective_bounds(const FlowArc& a) {
    ExtInt f = a.cost.dom_lo(), g = a.cost.dom_hi();
    if (a.lo && ExtInt(*a.lo) > f) f = ExtInt(*a.lo);
    if (a.hi && ExtInt(*a.hi) < g) g = ExtInt(*a.hi);
    return {f, g};
  }

  ExtInt cost_of(const IntVec& x) const {
    ExtInt total{Int(0)};
    for (int e = 0; e < num_arcs(); ++e) {
      ExtInt v = arcs[e].cost.eval(x[e]);
      if (!v.finite()) return ExtInt::pos_inf();
      total = total + v;
    }
    return total;
  }

  bool conserves(const IntVec& x) const {
    IntVec net(num_nodes(), Int(0));
    for (int e = 0; e < num_arcs(); ++e) {
      net[arcs[e].head] += x[e];
      net[arcs[e].tail] -= x[e];
    }
    return net == demand;
  }

  bool within_bounds(const IntVec& x) const {
    for (int e = 0; e < num_arcs(); ++e) {
      auto [f, g] = effective_bounds(arcs[e]);
      if (ExtInt(x[e]) < f || ExtInt(x[e]) > g) return false;
    }
    return true;
  }
};

struct FeasibilityReport {
  bool feasible = false;
  std::optional<IntVec> flow;   // a feasible flow when one exists
  std::optional<Subset> cut;    // node set violating the cut condition
};

namespace detail {

// Max-flow (BFS augmentation, exact Int capacities) on a small network.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1) {}

  int add_edge(int u, int v, Int cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(v);
    cap_.push_back(std::move(cap));
    next_.push_back(head_[u]);
    head_[u] = id;
    to_.push_back(u);
    cap_.push_back(Int(0));
    next_.push_back(head_[v]);
    head_[v] = id + 1;
    return id;
  }

  Int run(int s, int t) {
    Int total = 0;
    while (true) {
      std::vector<int> pre(head_.size(), -1);
      std::queue<int> bfs;
      bfs.push(s);
      pre[s] = -2;
      while (!bfs.empty() && pre[t] == -1) {
        int u = bfs.front();
        bfs.pop();
        for (int id = head_[u]; id != -1; id = next_[id])
          if (cap_[id] > 0 && pre[to_[id]] == -1) {
            pre[to_[id]] = id;
            bfs.push(to_[id]);
          }
      }
      if (pre[t] == -1) return total;
      Int aug = cap_[pre[t]];
      for (int v = t; v != s; v = to_[pre[v] ^ 1])
        aug = std::min(aug, cap_[pre[v]]);
      for (int v = t; v != s; v = to_[pre[v] ^ 1]) {
        cap_[pre[v]] -= aug;
        cap_[pre[v] ^ 1] += aug;
      }
      total += aug;
    }
  }

  const Int& edge_flow_into_reverse(int id) const { return cap_[id ^ 1]; }

 private:
  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<Int> cap_;
  std::vector<int> next_;
};

}  // namespace detail

// Feasibility of the demand system: the cut condition
// rho_g(Z) - delta_f(Z) >= m~(Z) over all node sets Z, with effective bounds.
// A feasible flow is built by max-flow with infinite bounds clamped far
// beyond any value a feasible flow can need at this scale.
inline FeasibilityReport hoffman_feasible(const FlowNetwork& net) {
  net.validate();
  const int n = net.num_nodes();
  if (n > kMaxGroundSize)
    throw DomainError("hoffman_feasible: too many nodes to enumerate cuts");
  FeasibilityReport rep;

  Subset full = n == 32 ? ~Subset(0) : ((Subset(1) << n) - 1);
  for (Subset z = 1; z < full; ++z) {
    Int lhs = 0;
    bool infinite = false;
    for (const FlowArc& a : net.arcs) {
      auto [f, g] = FlowNetwork::effective_bounds(a);
      bool head_in = z >> a.head & 1u, tail_in = z >> a.tail & 1u;
      if (!tail_in && head_in) {
        if (g.is_pos_inf()) {
          infinite = true;
          break;
        }
        lhs += g.value();
      } else if (tail_in && !head_in) {
        if (f.is_neg_inf()) {
          infinite = true;
          break;
        }
        lhs -= f.value();
      }
    }
    if (infinite) continue;
    Int rhs = 0;
    for (int v = 0; v < n; ++v)
      if (z >> v & 1u) rhs += net.demand[v];
    if (lhs < rhs) {
      rep.feasible = false;
      rep.cut = z;
      return rep;
    }
  }

  // Clamp infinite effective bounds and route the lower-bound transform
  // through a max-flow.
  Int big = 7 + net.num_arcs();
  for (const Int& v : net.demand) big += abs(v);
  for (const FlowArc& a : net.arcs) {
    auto [f, g] = FlowNetwork::effective_bounds(a);
    if (f.finite()) big += abs(f.value());
    if (g.finite()) big += abs(g.value());
  }
  std::vector<Int> fcl(net.num_arcs()), gcl(net.num_arcs());
  for (int e = 0; e < net.num_arcs(); ++e) {
    auto [f, g] = FlowNetwork::effective_bounds(net.arcs[e]);
    fcl[e] = f.finite() ? f.value() : -big;
    gcl[e] = g.finite() ? g.value() : big;
  }
  const int src = n, snk = n + 1;
  detail::MaxFlow mf(n + 2);
  std::vector<int> arc_edge(net.num_arcs());
  for (int e = 0; e < net.num_arcs(); ++e)
    arc_edge[e] =
        mf.add_edge(net.arcs[e].tail, net.arcs[e].head, gcl[e] - fcl[e]);
  IntVec imbalance(net.demand);
  for (int e = 0; e < net.num_arcs(); ++e) {
    imbalance[net.arcs[e].head] -= fcl[e];
    imbalance[net.arcs[e].tail] += fcl[e];
  }
  Int need = 0;
  for (int v = 0; v < n; ++v) {
    if (imbalance[v] < 0) {
      mf.add_edge(src, v, -imbalance[v]);
      need -= imbalance[v];
    } else if (imbalance[v] > 0) {
      mf.add_edge(v, snk, imbalance[v]);
    }
  }
  if (mf.run(src, snk) != need)
    throw InternalCheckError(
        "hoffman_feasible: cut scan and max flow disagree");
  rep.feasible = true;
  IntVec flow(net.num_arcs());
  for (int e = 0; e < net.num_arcs(); ++e)
    flow[e] = fcl[e] + mf.edge_flow_into_reverse(arc_edge[e]);
  if (!net.conserves(flow) || !net.within_bounds(flow))
    throw InternalCheckError("hoffman_feasible: constructed flow is invalid");
  rep.flow = std::move(flow);
  return rep;
}

namespace detail {

struct ResidualEdge {
  int from, to;
  int arc;
  bool forward;
  Int cost;
};

inline std::vector<ResidualEdge> residual_edges(const FlowNetwork& net,
                                                const IntVec& x) {
  std::vector<ResidualEdge> edges;
  for (int e = 0; e < net.num_arcs(); ++e) {
    const FlowArc& a = net.arcs[e];
    auto [f, g] = FlowNetwork::effective_bounds(a);
    if (ExtInt(x[e] + 1) <= g) {
      ExtInt up = a.cost.eval(x[e] + 1);
      edges.push_back(
          {a.tail, a.head, e, true, up.value() - a.cost.eval(x[e]).value()});
    }
    if (ExtInt(x[e] - 1) >= f) {
      ExtInt dn = a.cost.eval(x[e] - 1);
      edges.push_back(
          {a.head, a.tail, e, false, dn.value() - a.cost.eval(x[e]).value()});
    }
  }
  return edges;
}

// Bellman-Ford from an implicit zero source.  Returns potentials on success
// or a negative-cost cycle as edge indices.
struct BellmanFord {
  std::vector<Int> dist;
  std::vector<int> cycle;  // empty when no negative cycle
};

inline BellmanFord bellman_ford(int n, const std::vector<ResidualEdge>& edges) {
  BellmanFord out;
  out.dist.assign(n, Int(0));
  std::vector<int> pred_edge(n, -1);
  int last = -1;
  for (int round = 0; round <= n; ++round) {
    last = -1;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const ResidualEdge& e = edges[i];
      if (out.dist[e.from] + e.cost < out.dist[e.to]) {
        out.dist[e.to] = out.dist[e.from] + e.cost;
        pred_edge[e.to] = i;
        last = e.to;
      }
    }
    if (last == -1) return out;
  }
  int v = last;
  for (int i = 0; i <= n; ++i) v = edges[pred_edge[v]].from;
  int u = v;
  do {
    out.cycle.push_back(pred_edge[u]);
    u = edges[pred_edge[u]].from;
  } while (u != v);
  return out;
}

}  // namespace detail

// Unit-step negative-cycle canceling with convex residual costs.  The flow
// is optimal exactly when the residual graph has no negative cycle.
inline IntVec min_cost_mflow(const FlowNetwork& net) {
  FeasibilityReport rep = hoffman_feasible(net);
  if (!rep.feasible)
    throw DomainError("min_cost_mflow: infeasible network (cut " +
                      std::to_string(*rep.cut) + ")");
  IntVec x = std::move(*rep.flow);
  for (long iter = 0;; ++iter) {
    if (iter > 2000000L)
      throw InternalCheckError("min_cost_mflow: canceling did not stop");
    std::vector<detail::ResidualEdge> edges = detail::residual_edges(net, x);
    detail::BellmanFord bf = detail::bellman_ford(net.num_nodes(), edges);
    if (bf.cycle.empty()) break;
    for (int i : bf.cycle) {
      if (edges[i].forward)
        x[edges[i].arc] += 1;
      else
        x[edges[i].arc] -= 1;
    }
    if (!net.conserves(x))
      throw InternalCheckError("min_cost_mflow: a cycle broke conservation");
  }
  return x;
}

// Optimality certificate: potentials from the final residual graph, tension
// split pi(head) - pi(tail) = tau1 + tau2 with tau1 clamped into the
// subgradient interval, and the kilter conditions on tau2.
struct FlowCertificate {
  IntVec x;       // per arc
  IntVec pi;      // per node
  IntVec tau1;    // per arc, in dom psi_e
  IntVec tau2;    // per arc, kilter-signed against the explicit bounds
  Int primal;
  Int dual;
  Int gap;
};

inline FlowCertificate flow_certificate(const FlowNetwork& net,
                                        const IntVec& x) {
  net.validate();
  if (!net.conserves(x) || !net.within_bounds(x))
    throw DomainError("flow_certificate: x is not a feasible flow");
  std::vector<detail::ResidualEdge> edges = detail::residual_edges(net, x);
  detail::BellmanFord bf = detail::bellman_ford(net.num_nodes(), edges);
  if (!bf.cycle.empty())
    throw DomainError("flow_certificate: x is not optimal (negative cycle)");
  FlowCertificate cert;
  cert.x = x;
  cert.pi = IntVec(bf.dist.begin(), bf.dist.end());
  cert.primal = net.cost_of(x).value();
  cert.dual = 0;
  for (int v = 0; v < net.num_nodes(); ++v)
    cert.dual += cert.pi[v] * net.demand[v];
  cert.tau1.resize(net.num_arcs());
  cert.tau2.resize(net.num_arcs());
  for (int e = 0; e < net.num_arcs(); ++e) {
    const FlowArc& a = net.arcs[e];
    Int d = cert.pi[a.head] - cert.pi[a.tail];
    auto [lo, hi] = subgradient_interval(a.cost, x[e]);
    Int t1 = d;
    if (ExtInt(t1) < lo) t1 = lo.value();
    if (ExtInt(t1) > hi) t1 = hi.value();
    Int t2 = d - t1;
    if (t2 > 0) {
      if (!a.hi || x[e] != *a.hi)
        throw InternalCheckError("kilter: positive tau2 off the upper bound");
      cert.dual -= *a.hi * t2;
    } else if (t2 < 0) {
      if (!a.lo || x[e] != *a.lo)
        throw InternalCheckError("kilter: negative tau2 off the lower bound");
      cert.dual -= *a.lo * t2;
    }
    ExtInt psi = conjugate(a.cost).eval(t1);
    if (!psi.finite())
      throw InternalCheckError("flow certificate: tau1 outside dom psi");
    cert.dual -= psi.value();
    cert.tau1[e] = std::move(t1);
    cert.tau2[e] = std::move(t2);
  }
  cert.gap = cert.primal - cert.dual;
  if (cert.gap != 0)
    throw InternalCheckError("flow certificate: nonzero duality gap");
  return cert;
}

// Square-sum specializations of the min-max identity, evaluated at the
// certificate's potential.  Per arc: the plain floor/ceil form when the arc
// is unbounded, the positive-part form for a zero lower bound alone, and the
// general split form against explicit bounds otherwise.
struct FlowMinMaxReport {
  Int primal;
  Int dual_closed_form;
};

inline FlowMinMaxReport verify_flow_minmax(const FlowNetwork& net) {
  for (const FlowArc& a : net.arcs)
    if (a.cost.kind() != DiscreteConvexFn::Kind::Square)
      throw DomainError("verify_flow_minmax: needs square costs");
  IntVec x = min_cost_mflow(net);
  FlowCertificate cert = flow_certificate(net, x);
  Int dual = 0;
  for (int v = 0; v < net.num_nodes(); ++v)
    dual += cert.pi[v] * net.demand[v];
  for (int e = 0; e < net.num_arcs(); ++e) {
    const FlowArc& a = net.arcs[e];
    Int d = cert.pi[a.head] - cert.pi[a.tail];
    if (!a.lo && !a.hi) {
      dual -= floor_div(d, 2) * ceil_div(d, 2);
    } else if (a.lo && *a.lo == 0 && !a.hi) {
      Int dp = d > 0 ? d : Int(0);
      dual -= floor_div(dp, 2) * ceil_div(dp, 2);
    } else {
      const Int& t1 = cert.tau1[e];
      const Int& t2 = cert.tau2[e];
      dual -= floor_div(t1, 2) * ceil_div(t1, 2);
      if (t2 > 0)
        dual -= *a.hi * t2;
      else if (t2 < 0)
        dual -= *a.lo * t2;
    }
  }
  if (dual != cert.primal)
    throw InternalCheckError("flow square-sum min-max failed");
  return {cert.primal, std::move(dual)};
}

// Exact brute-force minimum over all integer flows within the effective
// bounds, by dynamic programming on node imbalances.  All effective bounds
// must be finite.
inline std::optional<Int> flow_brute_min(const FlowNetwork& net,
                                         std::size_t state_cap = 4000000) {
  net.validate();
  std::map<IntVec, Int> states;
  states[IntVec(net.num_nodes(), Int(0))] = 0;
  for (int e = 0; e < net.num_arcs(); ++e) {
    const FlowArc& a = net.arcs[e];
    auto [f, g] = FlowNetwork::effective_bounds(a);
    if (!f.finite() || !g.finite())
      throw DomainError("flow_brute_min: needs finite effective bounds");
    std::map<IntVec, Int> next;
    for (const auto& [imb, cost] : states) {
      for (Int k = f.value(); k <= g.value(); ++k) {
        Int c = cost + a.cost.eval(k).value();
        IntVec imb2(imb);
        imb2[a.head] += k;
        imb2[a.tail] -= k;
        auto it = next.find(imb2);
        if (it == next.end())
          next.emplace(std::move(imb2), std::move(c));
        else if (c < it->second)
          it->second = std::move(c);
        if (next.size() > state_cap)
          throw DomainError("flow_brute_min: state cap exceeded");
      }
    }
    states = std::move(next);
  }
  auto it = states.find(net.demand);
  if (it == states.end()) return std::nullopt;
  return it->second;
}

}  // namespace decmin

#endif  // DECMIN_FLOWS_HPP

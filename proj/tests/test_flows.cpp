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

#include <doctest.h>

#include "decmin/flows.hpp"
#include "decmin/selfcheck.hpp"

using namespace decmin;
namespace sc = decmin::selfcheck;

namespace {

FlowNetwork parallel_pair() {
  FlowNetwork net;
  net.nodes = {"a", "b"};
  net.demand = {Int(-2), Int(2)};
  net.arcs.push_back({0, 1, std::nullopt, std::nullopt,
                      DiscreteConvexFn::square()});
  net.arcs.push_back({0, 1, std::nullopt, std::nullopt,
                      DiscreteConvexFn::square()});
  return net;
}

}  // namespace

TEST_CASE("feasibility and cuts") {
  CHECK(hoffman_feasible(parallel_pair()).feasible);
  FlowNetwork tight;
  tight.nodes = {"a", "b"};
  tight.demand = {Int(-2), Int(2)};
  tight.arcs.push_back({0, 1, Int(0), Int(1), DiscreteConvexFn::square()});
  FeasibilityReport rep = hoffman_feasible(tight);
  CHECK_FALSE(rep.feasible);
  CHECK(*rep.cut == 0b10);  // the head side absorbs more than the cut allows
  FlowNetwork idle;
  idle.nodes = {"a", "b"};
  idle.demand = {Int(0), Int(0)};
  idle.arcs.push_back({0, 1, Int(-1), Int(1), DiscreteConvexFn::square()});
  FeasibilityReport rep0 = hoffman_feasible(idle);
  CHECK(rep0.feasible);
  CHECK(*rep0.flow == IntVec{Int(0)});
  CHECK_THROWS_AS(
      [] {
        FlowNetwork bad;
        bad.nodes = {"a"};
        bad.demand = {Int(1)};
        bad.validate();
      }(),
      ValidationError);
}

TEST_CASE("minimum cost flows") {
  FlowNetwork net = parallel_pair();
  IntVec x = min_cost_mflow(net);
  CHECK(x == IntVec{Int(1), Int(1)});
  CHECK(net.cost_of(x).value() == 2);

  FlowNetwork path;
  path.nodes = {"a", "b", "c"};
  path.demand = {Int(-1), Int(0), Int(1)};
  path.arcs.push_back({0, 1, std::nullopt, std::nullopt,
                       DiscreteConvexFn::square()});
  path.arcs.push_back({1, 2, std::nullopt, std::nullopt,
                       DiscreteConvexFn::square()});
  IntVec px = min_cost_mflow(path);
  CHECK(px == IntVec{Int(1), Int(1)});
  CHECK(path.cost_of(px).value() == 2);

  FlowNetwork centered;
  centered.nodes = {"a", "b"};
  centered.demand = {Int(-3), Int(3)};
  centered.arcs.push_back({0, 1, std::nullopt, std::nullopt,
                           DiscreteConvexFn::abs_dist(3)});
  CHECK(centered.cost_of(min_cost_mflow(centered)).value() == 0);
}

TEST_CASE("flow certificates") {
  FlowNetwork net = parallel_pair();
  IntVec x = min_cost_mflow(net);
  FlowCertificate cert = flow_certificate(net, x);
  CHECK(cert.pi[1] - cert.pi[0] == 1);
  CHECK(cert.tau1 == IntVec{Int(1), Int(1)});
  CHECK(cert.tau2 == IntVec{Int(0), Int(0)});
  CHECK(cert.primal == 2);
  CHECK(cert.dual == 2);
  CHECK(cert.gap == 0);
  CHECK_THROWS_AS(flow_certificate(net, IntVec{Int(2), Int(0)}), DomainError);

  FlowNetwork idle;
  idle.nodes = {"a", "b"};
  idle.demand = {Int(0), Int(0)};
  idle.arcs.push_back({0, 1, std::nullopt, std::nullopt,
                       DiscreteConvexFn::square()});
  FlowCertificate zero = flow_certificate(idle, IntVec{Int(0)});
  CHECK(zero.gap == 0);
  CHECK(zero.primal == 0);

  // Saturated upper bound forces a positive tau2 on the cheap arc.
  FlowNetwork capped;
  capped.nodes = {"a", "b"};
  capped.demand = {Int(-3), Int(3)};
  capped.arcs.push_back({0, 1, Int(0), Int(1), DiscreteConvexFn::square()});
  capped.arcs.push_back({0, 1, std::nullopt, std::nullopt,
                         DiscreteConvexFn::weighted_square(2)});
  IntVec cx = min_cost_mflow(capped);
  CHECK(cx == IntVec{Int(1), Int(2)});
  FlowCertificate ccert = flow_certificate(capped, cx);
  CHECK(ccert.tau2[0] > 0);
  CHECK(ccert.x[0] == 1);  // pinned at the upper bound, kilter-consistent
  CHECK(ccert.gap == 0);
}

TEST_CASE("square-sum flow min-max") {
  FlowMinMaxReport rep = verify_flow_minmax(parallel_pair());
  CHECK(rep.primal == 2);
  CHECK(rep.dual_closed_form == 2);

  // Nonnegative variant with a backward-oriented arc whose tension term
  // vanishes under the positive-part rule.
  FlowNetwork nn;
  nn.nodes = {"a", "b"};
  nn.demand = {Int(-2), Int(2)};
  nn.arcs.push_back({0, 1, Int(0), std::nullopt, DiscreteConvexFn::square()});
  nn.arcs.push_back({1, 0, Int(0), std::nullopt, DiscreteConvexFn::square()});
  FlowMinMaxReport rep2 = verify_flow_minmax(nn);
  CHECK(rep2.primal == 4);

  FlowNetwork zero;
  zero.nodes = {"a", "b"};
  zero.demand = {Int(0), Int(0)};
  zero.arcs.push_back({0, 1, std::nullopt, std::nullopt,
                       DiscreteConvexFn::square()});
  CHECK(verify_flow_minmax(zero).primal == 0);
}

TEST_CASE("brute force agreement on tiny networks") {
  Rng rng(31);
  for (int i = 0; i < 12; ++i) {
    FlowNetwork net = random_network(rng, 4, 4);
    sc::check_flow_instance(net, rng);
  }
}

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

#include <set>

#include "decmin/mconvex.hpp"
#include "decmin/selfcheck.hpp"

using namespace decmin;
namespace sc = decmin::selfcheck;

namespace {
SupermodularFn modular_instance() {
  // p = m~ for m = (2, -1, 3): the polyhedron is the single point m.
  GroundSet g = GroundSet::numbered(3);
  IntVec m{Int(2), Int(-1), Int(3)};
  std::vector<Int> t(8);
  for (Subset z = 0; z < 8; ++z) t[z] = tilde_sum(m, z);
  return SupermodularFn::from_table(g, t);
}
}  // namespace

TEST_CASE("membership") {
  SupermodularFn p2 = sc::segment2_instance();
  CHECK(contains(p2, {Int(1), Int(2)}));
  CHECK_FALSE(contains(p2, {Int(3), Int(0)}));
  CHECK_FALSE(contains(p2, {Int(1), Int(1)}));  // wrong total
  SupermodularFn p4 = sc::matroid4_instance();
  CHECK(contains(p4, {Int(2), Int(2), Int(0), Int(0)}));
  CHECK_FALSE(contains(p4, {Int(3), Int(1), Int(0), Int(0)}));
}

TEST_CASE("greedy vertices") {
  SupermodularFn p2 = sc::segment2_instance();
  CHECK(greedy_vertex(p2, {Int(0), Int(0)}) == IntVec{Int(0), Int(3)});
  // Ordering s2 first gives m(s2) = p({s2}), m(s1) = p(S) - p({s2}).
  CHECK(greedy_vertex(p2, {Int(0), Int(1)}) == IntVec{Int(2), Int(1)});
  Rng rng(3);
  SupermodularFn p4 = sc::matroid4_instance();
  for (int t = 0; t < 10; ++t) {
    IntVec pi(4);
    for (Int& v : pi) v = rng.uniform(-5, 5);
    CHECK(contains(p4, greedy_vertex(p4, pi)));
  }
}

TEST_CASE("exchange feasibility") {
  SupermodularFn p2 = sc::segment2_instance();
  CHECK(exchange_feasible(p2, {Int(0), Int(3)}, 0, 1));
  CHECK_FALSE(exchange_feasible(p2, {Int(2), Int(1)}, 0, 1));
  CHECK_FALSE(exchange_feasible(p2, {Int(1), Int(2)}, 0, 0));
}

TEST_CASE("enumeration") {
  SupermodularFn p2 = sc::segment2_instance();
  auto pts = enumerate_points(p2);
  CHECK(pts == std::vector<IntVec>{{Int(0), Int(3)},
                                   {Int(1), Int(2)},
                                   {Int(2), Int(1)}});
  SupermodularFn p4 = sc::matroid4_instance();
  CHECK(enumerate_points(p4).size() == 5);
  auto single = enumerate_points(modular_instance());
  CHECK(single == std::vector<IntVec>{{Int(2), Int(-1), Int(3)}});
  CHECK_THROWS_AS(enumerate_points(p4, 2), EnumerationCapError);

  SUBCASE("closure under feasible exchanges and membership") {
    auto all = enumerate_points(p4);
    std::set<IntVec> seen(all.begin(), all.end());
    for (const IntVec& x : seen) {
      CHECK(contains(p4, x));
      for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) {
          if (s == t) continue;
          IntVec y(x);
          y[s] += 1;
          y[t] -= 1;
          CHECK(contains(p4, y) == (seen.count(y) > 0));
        }
    }
  }
}

TEST_CASE("brute-force minimization") {
  SupermodularFn p2 = sc::segment2_instance();
  BruteMinResult r = brute_min(p2, square_sum);
  CHECK(r.value == 5);
  CHECK(r.argmins ==
        std::vector<IntVec>{{Int(1), Int(2)}, {Int(2), Int(1)}});
  SupermodularFn p4 = sc::matroid4_instance();
  BruteMinResult r4 = brute_min(p4, square_sum);
  CHECK(r4.value == 6);
  CHECK(r4.argmins.size() == 4);
  BruteMinResult c = brute_min(p4, [](const IntVec&) { return Int(7); });
  CHECK(c.value == 7);
  CHECK(c.argmins.size() == 5);
}

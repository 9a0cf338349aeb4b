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

#include "decmin/continuous.hpp"
#include "decmin/selfcheck.hpp"

using namespace decmin;
namespace sc = decmin::selfcheck;

namespace {
SupermodularFn modular_instance() {
  GroundSet g = GroundSet::numbered(3);
  IntVec m{Int(2), Int(-1), Int(3)};
  std::vector<Int> t(8);
  for (Subset z = 0; z < 8; ++z) t[z] = tilde_sum(m, z);
  return SupermodularFn::from_table(g, t);
}
}  // namespace

TEST_CASE("minimum norm point") {
  MinNormPoint m2 = min_norm_point(sc::segment2_instance());
  CHECK(m2.m_r == RatVec{Rat(3, 2), Rat(3, 2)});
  MinNormPoint m4 = min_norm_point(sc::matroid4_instance());
  CHECK(m4.m_r == RatVec{Rat(3, 2), Rat(3, 2), Rat(1, 2), Rat(1, 2)});
  MinNormPoint mm = min_norm_point(modular_instance());
  CHECK(mm.m_r == RatVec{Rat(2), Rat(-1), Rat(3)});
}

TEST_CASE("continuous square-sum duality") {
  ContinuousDuality d2 = continuous_sqsum_duality(sc::segment2_instance());
  CHECK(d2.primal == Rat(9, 2));
  CHECK(d2.dual == Rat(9, 2));
  ContinuousDuality d4 = continuous_sqsum_duality(sc::matroid4_instance());
  CHECK(d4.primal == Rat(5));
  ContinuousDuality dm = continuous_sqsum_duality(modular_instance());
  CHECK(dm.primal == Rat(14));
}

TEST_CASE("proximity") {
  ProximityReport r4 = proximity_check(sc::matroid4_instance());
  CHECK(r4.lo == IntVec{Int(1), Int(1), Int(0), Int(0)});
  CHECK(r4.hi == IntVec{Int(2), Int(2), Int(1), Int(1)});
  CHECK(r4.decmins.size() == 4);
  REQUIRE(r4.box_non_decmin.size() == 1);
  CHECK(r4.box_non_decmin[0] == IntVec{Int(2), Int(2), Int(0), Int(0)});
  ProximityReport r2 = proximity_check(sc::segment2_instance());
  CHECK(r2.lo == IntVec{Int(1), Int(1)});
  CHECK(r2.hi == IntVec{Int(2), Int(2)});
  ProximityReport rm = proximity_check(modular_instance());
  CHECK(rm.lo == rm.hi);
  CHECK(rm.box_non_decmin.empty());
}

TEST_CASE("continuous relaxation algorithms") {
  RelaxResult r4 = relax_decmin(sc::matroid4_instance());
  CHECK(r4.lo == IntVec{Int(1), Int(1), Int(0), Int(0)});
  CHECK(r4.hi == IntVec{Int(2), Int(2), Int(1), Int(1)});
  CHECK(r4.weights == IntVec{Int(3), Int(3), Int(1), Int(1)});
  CHECK(r4.output == IntVec{Int(2), Int(1), Int(1), Int(0)});
  RelaxResult r2 = relax_decmin(sc::segment2_instance());
  CHECK(r2.weights == IntVec{Int(3), Int(3)});
  CHECK(r2.output == IntVec{Int(2), Int(1)});
  RelaxResult rm = relax_decmin(modular_instance());
  CHECK(rm.lo == rm.hi);
  CHECK(rm.output == IntVec{Int(2), Int(-1), Int(3)});
  RelaxResult rb = relax_decmin_pwl(sc::matroid4_instance());
  CHECK(value_equivalent(rb.output, IntVec{Int(2), Int(1), Int(1), Int(0)}));
  RelaxResult rbm = relax_decmin_pwl(modular_instance());
  CHECK(rbm.output == IntVec{Int(2), Int(-1), Int(3)});
}

TEST_CASE("convex combination of dec-min elements") {
  ConvexCombinationReport c4 =
      convex_combination_check(sc::matroid4_instance());
  CHECK(c4.chain_tight);
  CHECK(c4.box_ok);
  REQUIRE(c4.combination.has_value());
  RatVec back(4, Rat(0));
  Rat total = 0;
  for (size_t i = 0; i < c4.combination->size(); ++i) {
    total += (*c4.combination)[i];
    for (int s = 0; s < 4; ++s)
      back[s] += (*c4.combination)[i] * Rat(c4.decmins[i][s]);
  }
  CHECK(total == 1);
  CHECK(back == RatVec{Rat(3, 2), Rat(3, 2), Rat(1, 2), Rat(1, 2)});
  ConvexCombinationReport cm = convex_combination_check(modular_instance());
  REQUIRE(cm.combination.has_value());
  CHECK(cm.combination->size() == 1);
  CHECK((*cm.combination)[0] == 1);
}

TEST_CASE("continuous properties on random instances") {
  Rng rng(123);
  for (int i = 0; i < 6; ++i) {
    SupermodularFn p = random_supermodular(rng, 2, 5, 10);
    auto pts = enumerate_points(p);
    sc::check_continuous(p, pts);
    sc::check_matroidal_structure(p, pts);
  }
}

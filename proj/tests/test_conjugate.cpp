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

#include "decmin/conjugate.hpp"
#include "decmin/selfcheck.hpp"

using namespace decmin;
namespace sc = decmin::selfcheck;

TEST_CASE("closed-form conjugates") {
  ConjugateFn sq = conjugate(DiscreteConvexFn::square());
  CHECK(sq.eval(5).value() == 6);
  CHECK(sq.eval(-5).value() == 6);
  CHECK(sq.eval(0).value() == 0);
  CHECK(conjugate(DiscreteConvexFn::weighted_square(3)).eval(7).value() == 4);
  CHECK(conjugate(DiscreteConvexFn::exp_growth(1, 2)).eval(5).value() == 7);
  ConjugateFn pp = conjugate(DiscreteConvexFn::pos_part(4));
  CHECK(pp.eval(0).value() == 0);
  CHECK(pp.eval(1).value() == 4);
  CHECK(pp.eval(2).is_pos_inf());
  ConjugateFn ab = conjugate(DiscreteConvexFn::abs_dist(4));
  CHECK(ab.eval(-1).value() == -4);
  CHECK(ab.eval(1).value() == 4);
  CHECK(ab.eval(2).is_pos_inf());
  ConjugateFn iv = conjugate(DiscreteConvexFn::interval_dist(-1, 3));
  CHECK(iv.eval(-1).value() == 1);
  CHECK(iv.eval(0).value() == 0);
  CHECK(iv.eval(1).value() == 3);
  CHECK(iv.eval(-2).is_pos_inf());
  ConjugateFn pl = conjugate(DiscreteConvexFn::piece_lin2(2, 5, 3));
  CHECK(pl.eval(-4).value() == 0);
  CHECK(pl.eval(2).value() == 4);
  CHECK(pl.eval(7).value() == 26);  // 5*7 - 3*3
  CHECK(conjugate(DiscreteConvexFn::power_even(1, 2)).eval(5).value() == 4);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DiscreteConvexFn::weighted_square(0), DomainError);
  CHECK_THROWS_AS(DiscreteConvexFn::exp_growth(1, 1), DomainError);
  CHECK_THROWS_AS(DiscreteConvexFn::piece_lin2(3, 1, 1), DomainError);
  CHECK_THROWS_AS(DiscreteConvexFn::interval_dist(2, 1), DomainError);
  CHECK_THROWS_AS(DiscreteConvexFn::table(0, {Int(0), Int(2), Int(1)}),
                  ValidationError);
}

TEST_CASE("fenchel-young slack") {
  DiscreteConvexFn sq = DiscreteConvexFn::square();
  CHECK(fenchel_young_slack(sq, 2, 4) == 0);
  CHECK(fenchel_young_slack(sq, 2, 0) == 4);
  DiscreteConvexFn ab = DiscreteConvexFn::abs_dist(0);
  CHECK(fenchel_young_slack(ab, 0, 0) == 0);
  CHECK_THROWS_AS(fenchel_young_slack(ab, 0, 5), DomainError);
}

TEST_CASE("subgradient intervals") {
  auto [lo, hi] = subgradient_interval(DiscreteConvexFn::square(), 2);
  CHECK(lo.value() == 3);
  CHECK(hi.value() == 5);
  auto [alo, ahi] = subgradient_interval(DiscreteConvexFn::abs_dist(0), 0);
  CHECK(alo.value() == -1);
  CHECK(ahi.value() == 1);
  auto [plo, phi] = subgradient_interval(DiscreteConvexFn::pos_part(5), 2);
  CHECK(plo.value() == 0);
  CHECK(phi.value() == 0);
  auto [tlo, thi] =
      subgradient_interval(DiscreteConvexFn::table(0, {Int(1), Int(3)}), 0);
  CHECK(tlo.is_neg_inf());
  CHECK(thi.value() == 2);
}

TEST_CASE("translation identity") {
  DiscreteConvexFn sq = DiscreteConvexFn::square();
  DiscreteConvexFn same = DiscreteConvexFn::translate(sq, 0, 0, 0);
  CHECK(conjugate(same).eval(5).value() == 6);
  // k -> (k-1)^2 conjugates to floor(l/2)ceil(l/2) + l.
  DiscreteConvexFn shifted = DiscreteConvexFn::translate(sq, 1, 0, 0);
  for (Int l = -9; l <= 9; ++l)
    CHECK(conjugate(shifted).eval(l).value() ==
          floor_div(l, 2) * ceil_div(l, 2) + l);
  // Linear term b = 3 shifts the conjugate domain of |k|.
  DiscreteConvexFn moved =
      DiscreteConvexFn::translate(DiscreteConvexFn::abs_dist(0), 0, 3, 0);
  CHECK(conjugate(moved).eval(1).is_pos_inf());
  CHECK(conjugate(moved).eval(2).finite());
  CHECK(conjugate(moved).eval(4).finite());
  CHECK(conjugate(moved).eval(5).is_pos_inf());
}

TEST_CASE("closed forms against brute force, biconjugacy") {
  Rng rng(2026);
  sc::check_conjugates(rng, 3);
}

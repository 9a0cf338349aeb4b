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

#include "decmin/majorize.hpp"
#include "decmin/mconvex.hpp"
#include "decmin/selfcheck.hpp"

using namespace decmin;
namespace sc = decmin::selfcheck;

TEST_CASE("dec and inc comparisons") {
  IntVec a{Int(2), Int(5), Int(5), Int(1), Int(4)};
  IntVec b{Int(1), Int(5), Int(5), Int(5), Int(1)};
  IntVec c{Int(1), Int(4), Int(5), Int(2), Int(5)};
  CHECK(dec_compare(a, b) == OrderRel::Smaller);
  CHECK(dec_compare(a, c) == OrderRel::Equal);
  CHECK(dec_compare(a, a) == OrderRel::Equal);
  CHECK(dec_compare(b, a) == OrderRel::Greater);
  CHECK_THROWS_AS(dec_compare(a, IntVec{Int(1)}), DomainError);
}

TEST_CASE("majorization tests") {
  IntVec x{Int(2), Int(2), Int(-2), Int(-2)};
  IntVec y{Int(3), Int(0), Int(0), Int(-3)};
  CHECK_FALSE(majorizes(y, x));
  CHECK(majorizes(x, x));
  CHECK(majorizes(IntVec{Int(2), Int(0)}, IntVec{Int(1), Int(1)}));
  CHECK_FALSE(excess_profile_leq(x, y));
  CHECK(excess_profile_leq(IntVec{Int(1), Int(1)}, IntVec{Int(2), Int(0)}));
  CHECK(excess_profile_leq(x, x));
  CHECK(weakly_submajorizes(IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(0)}));
  CHECK_FALSE(weakly_submajorizes(IntVec{Int(1), Int(1)}, IntVec{Int(2), Int(0)}));
  CHECK(weakly_submajorizes(x, x));
}

TEST_CASE("t-transform") {
  IntVec x{Int(0), Int(3)};
  CHECK(t_transform(x, 0, 1, Int(1)) == IntVec{Int(1), Int(2)});
  CHECK(t_transform(x, 0, 1, Int(0)) == x);
  CHECK_THROWS_AS(t_transform(IntVec{Int(3), Int(0)}, 0, 1, Int(1)),
                  DomainError);
  CHECK_THROWS_AS(t_transform(x, 0, 1, Int(4)), DomainError);
}

TEST_CASE("least majorized elements") {
  std::vector<IntVec> d{{Int(2), Int(0), Int(0), Int(0)},
                        {Int(1), Int(-1), Int(1), Int(1)}};
  CHECK_FALSE(least_majorized(d).has_value());
  auto pts = enumerate_points(sc::segment2_instance());
  auto least = least_majorized(pts);
  REQUIRE(least.has_value());
  CHECK(value_equivalent(*least, IntVec{Int(1), Int(2)}));
  std::vector<IntVec> single{{Int(4), Int(1)}};
  CHECK(least_majorized(single) == single[0]);
}

TEST_CASE("majorization axioms on random vectors") {
  Rng rng(99);
  sc::check_majorization_axioms(rng);
}

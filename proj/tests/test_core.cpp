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

#include <algorithm>

#include "decmin/core.hpp"
#include "decmin/rng.hpp"

using namespace decmin;

TEST_CASE("tilde_sum over subsets") {
  IntVec x{Int(2), Int(1), Int(1), Int(0)};
  CHECK(tilde_sum(x, 0b0011) == 3);
  CHECK(tilde_sum(x, 0) == 0);
  IntVec y{Int(0), Int(3)};
  CHECK(tilde_sum(y, 0b11) == 3);

  SUBCASE("additive over disjoint subsets") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
      IntVec v(5);
      for (Int& c : v) c = rng.uniform(-9, 9);
      Subset a = static_cast<Subset>(rng.next_u64()) & 0b11111;
      Subset b = static_cast<Subset>(rng.next_u64()) & 0b11111 & ~a;
      CHECK(tilde_sum(v, a | b) == tilde_sum(v, a) + tilde_sum(v, b));
    }
  }
}

TEST_CASE("characteristic vectors") {
  CHECK(chi(0, 3) == IntVec{Int(0), Int(0), Int(0)});
  CHECK(chi(0b01, 2) == IntVec{Int(1), Int(0)});
  CHECK(chi(0b0011, 4) == IntVec{Int(1), Int(1), Int(0), Int(0)});
}

TEST_CASE("sort_desc") {
  IntVec x{Int(2), Int(5), Int(5), Int(1), Int(4)};
  CHECK(sort_desc(x) == std::vector<Int>{Int(5), Int(5), Int(4), Int(2), Int(1)});
  CHECK(sort_desc(IntVec{Int(0), Int(0), Int(0)}) ==
        std::vector<Int>{Int(0), Int(0), Int(0)});
  CHECK(sort_desc(IntVec{Int(1), Int(-1), Int(1), Int(1)}) ==
        std::vector<Int>{Int(1), Int(1), Int(1), Int(-1)});

  SUBCASE("idempotent and permutation invariant") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
      IntVec v(6);
      for (Int& c : v) c = rng.uniform(-5, 5);
      std::vector<Int> s = sort_desc(v);
      CHECK(sort_desc(s) == s);
      IntVec w(v);
      for (size_t i = w.size(); i > 1; --i)
        std::swap(w[i - 1], w[rng.uniform(0, static_cast<long long>(i) - 1)]);
      CHECK(sort_desc(w) == s);
    }
  }
}

TEST_CASE("ground set invariants") {
  CHECK_THROWS_AS(GroundSet({"a", "a"}), ValidationError);
  GroundSet g = GroundSet::numbered(3);
  CHECK(g.n() == 3);
  CHECK(g.index("s2") == 1);
  CHECK(g.full_mask() == 0b111);
  CHECK_THROWS_AS(g.index("zz"), ValidationError);
  GroundSet big = GroundSet::numbered(25);
  CHECK_THROWS_AS(big.require_enumerable(), DomainError);
}

TEST_CASE("exact division helpers") {
  CHECK(floor_div(Int(-5), Int(2)) == -3);
  CHECK(ceil_div(Int(-5), Int(2)) == -2);
  CHECK(ceil_div(Int(5), Int(2)) == 3);
  CHECK(floor_rat(Rat(3, 2)) == 1);
  CHECK(ceil_rat(Rat(3, 2)) == 2);
  CHECK(ceil_rat(Rat(-1, 2)) == 0);
  CHECK(ipow(Int(3), 5) == 243);
}

TEST_CASE("extended integers") {
  ExtInt inf = ExtInt::pos_inf();
  CHECK(inf > ExtInt(Int(1000000)));
  CHECK(-inf < ExtInt(Int(-1000000)));
  CHECK((ExtInt(Int(2)) + ExtInt(Int(3))).value() == 5);
  CHECK((inf + ExtInt(Int(3))).is_pos_inf());
  CHECK_THROWS_AS(inf + ExtInt::neg_inf(), DomainError);
  CHECK_THROWS_AS(inf.value(), DomainError);
}

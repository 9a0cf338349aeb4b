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

#include "decmin/partition.hpp"
#include "decmin/selfcheck.hpp"

using namespace decmin;
namespace sc = decmin::selfcheck;

namespace {
SupermodularFn modular_distinct() {
  GroundSet g = GroundSet::numbered(3);
  IntVec m{Int(4), Int(1), Int(-2)};
  std::vector<Int> t(8);
  for (Subset z = 0; z < 8; ++z) t[z] = tilde_sum(m, z);
  return SupermodularFn::from_table(g, t);
}
}  // namespace

TEST_CASE("maximizer selection") {
  SupermodularFn p4 = sc::matroid4_instance();
  CHECK(smallest_maximizer(p4, Rat(1)) == 0b0011);
  CHECK(smallest_maximizer(p4, Rat(0)) == 0b1111);
  CHECK(smallest_maximizer(p4, Rat(100)) == 0);
  CHECK(largest_maximizer(p4, Rat(3, 2)) == 0b0011);
  CHECK(largest_maximizer(p4, Rat(1, 2)) == 0b1111);
  CHECK(largest_maximizer(p4, Rat(100)) == 0);
}

TEST_CASE("canonical decomposition") {
  CanonicalDecomposition c2 = canonical_decomposition(sc::segment2_instance());
  CHECK(c2.betas == std::vector<Int>{Int(2)});
  CHECK(c2.chain == std::vector<Subset>{0b11});
  CHECK(c2.pi_star == IntVec{Int(3), Int(3)});
  CHECK(c2.delta_star == IntVec{Int(1), Int(1)});

  CanonicalDecomposition c4 = canonical_decomposition(sc::matroid4_instance());
  CHECK(c4.betas == std::vector<Int>{Int(2), Int(1)});
  CHECK(c4.blocks == std::vector<Subset>{0b0011, 0b1100});
  CHECK(c4.chain == std::vector<Subset>{0b0011, 0b1111});
  CHECK(c4.pi_star == IntVec{Int(3), Int(3), Int(1), Int(1)});

  CanonicalDecomposition cm = canonical_decomposition(modular_distinct());
  CHECK(cm.betas == std::vector<Int>{Int(4), Int(1), Int(-2)});
  CHECK(cm.blocks == std::vector<Subset>{0b001, 0b010, 0b100});
}

TEST_CASE("principal decomposition") {
  PrincipalDecomposition p2 = principal_decomposition(sc::segment2_instance());
  CHECK(p2.lambdas == std::vector<Rat>{Rat(3, 2)});
  CHECK(p2.blocks == std::vector<Subset>{0b11});

  PrincipalDecomposition p4 = principal_decomposition(sc::matroid4_instance());
  CHECK(p4.lambdas == std::vector<Rat>{Rat(3, 2), Rat(1, 2)});
  CHECK(p4.blocks == std::vector<Subset>{0b0011, 0b1100});
  CHECK(p4.chain == std::vector<Subset>{0b0011, 0b1111});

  PrincipalDecomposition pm = principal_decomposition(modular_distinct());
  CHECK(pm.lambdas == std::vector<Rat>{Rat(4), Rat(1), Rat(-2)});
}

TEST_CASE("relating the decompositions") {
  SupermodularFn p4 = sc::matroid4_instance();
  PartitionRelation rel = relate_partitions(canonical_decomposition(p4),
                                            principal_decomposition(p4));
  CHECK(rel.ok);
  CHECK(rel.index_map == std::vector<std::vector<int>>{{1}, {2}});
  // Integral critical values: betas coincide with lambdas.
  SupermodularFn pm = modular_distinct();
  PartitionRelation relm = relate_partitions(canonical_decomposition(pm),
                                             principal_decomposition(pm));
  CHECK(relm.ok);
  CHECK(relm.index_map.size() == 3);
}

TEST_CASE("partition properties on random instances") {
  Rng rng(41);
  for (int i = 0; i < 8; ++i) {
    SupermodularFn p = random_supermodular(rng, 2, 5, 12);
    sc::check_partitions(p, enumerate_points(p));
  }
}

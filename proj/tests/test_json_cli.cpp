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

#include "decmin/json_io.hpp"
#include "decmin/selfcheck.hpp"

using namespace decmin;
namespace sc = decmin::selfcheck;

TEST_CASE("oracle json round trip") {
  const char* text = R"({
    "ground_set": ["s1", "s2"],
    "p": {"kind": "table", "values": {"": 0, "s1": 0, "s2": 1, "s1,s2": 3}}
  })";
  SupermodularFn p = parse_oracle(Json::parse(text));
  CHECK(p.eval(0b10) == 1);
  SupermodularFn again = parse_oracle(oracle_to_json(p));
  for (Subset z = 0; z < 4; ++z) CHECK(again.eval(z) == p.eval(z));

  // Every generator kind survives the table re-encoding.
  Rng rng(77);
  for (int i = 0; i < 8; ++i) {
    SupermodularFn q = random_supermodular(rng, 2, 4, 10);
    SupermodularFn back = parse_oracle(oracle_to_json(q));
    Subset full = q.ground().full_mask();
    for (Subset z = 0; z <= full; ++z) {
      CHECK(back.eval(z) == q.eval(z));
      if (z == full) break;
    }
  }
  CHECK_THROWS_AS(
      parse_oracle(Json::parse(
          R"({"ground_set":["a"],"p":{"kind":"table","values":{"":0}}})")),
      ValidationError);
}

TEST_CASE("structured oracle kinds parse") {
  const char* card = R"({
    "ground_set": ["a", "b", "c"],
    "p": {"kind": "cardinality", "g": [0, 0, 1, 3]}
  })";
  CHECK(parse_oracle(Json::parse(card)).eval(0b111) == 3);
  const char* edges = R"({
    "ground_set": ["a", "b", "c"],
    "p": {"kind": "induced_edges", "edges": [["a","b"],["b","c"],["a","c"]],
          "offset_modular": {"a": 1}, "offset_const": -1}
  })";
  SupermodularFn pe = parse_oracle(Json::parse(edges));
  CHECK(pe.eval(0b011) == 1);  // 1 edge + offset 1 - 1
  const char* mat = R"({
    "ground_set": ["s1", "s2", "s3", "s4"],
    "p": {"kind": "matroid_cocomplement",
          "matroid": {"kind": "graphic", "vertices": 3,
                      "edges": [[0,1],[0,2],[1,2],[1,2]]},
          "offset_modular": {"s1": 1, "s2": 1}}
  })";
  SupermodularFn pm = parse_oracle(Json::parse(mat));
  SupermodularFn want = sc::matroid4_instance();
  for (Subset z = 0; z < 16; ++z) CHECK(pm.eval(z) == want.eval(z));
}

TEST_CASE("cost json round trip") {
  std::vector<const char*> descriptors = {
      R"({"kind":"square"})",
      R"({"kind":"wsquare","a":3})",
      R"({"kind":"power","a":1,"b":2})",
      R"({"kind":"exp","a":1,"b":2})",
      R"({"kind":"abs","a":0})",
      R"({"kind":"pospart","a":2})",
      R"({"kind":"piecelin2","a":1,"b":4,"lam":2})",
      R"({"kind":"intervaldist","a":-1,"b":2})",
      R"({"kind":"table","lo":-1,"values":[3,0,2]})",
  };
  for (const char* d : descriptors) {
    DiscreteConvexFn f = parse_cost(Json::parse(d));
    DiscreteConvexFn g = parse_cost(cost_to_json(f));
    for (Int k = -6; k <= 6; ++k) CHECK(f.eval(k) == g.eval(k));
  }
}

TEST_CASE("certificate json round trip") {
  SupermodularFn p = sc::segment2_instance();
  SeparableObjective sq =
      SeparableObjective::uniform(2, DiscreteConvexFn::square());
  Certificate cert =
      dual_certificate(p, sq, minimize_separable(p, sq));
  Json j = certificate_to_json(p.ground(), cert);
  ParsedCertificate back = parse_certificate(p.ground(), j);
  CHECK(back.x == cert.x);
  CHECK(back.pi == cert.pi);
  CHECK(back.gap == 0);
  // Re-verification from the parsed data alone.
  CHECK(contains(p, back.x));
  CHECK(sq.eval(back.x).value() == back.primal);
  CHECK(dual_value(p, sq, back.pi).value() == back.dual);
}

TEST_CASE("network json round trip") {
  const char* text = R"({
    "nodes": ["a", "b"],
    "arcs": [
      {"tail": "a", "head": "b", "cost": {"kind": "square"}},
      {"tail": "a", "head": "b", "lo": 0, "hi": 3,
       "cost": {"kind": "wsquare", "a": 2}}
    ],
    "demand": {"a": -2, "b": 2}
  })";
  FlowNetwork net = parse_network(Json::parse(text));
  CHECK(net.num_arcs() == 2);
  CHECK(net.arcs[1].hi == Int(3));
  FlowNetwork again = parse_network(network_to_json(net));
  CHECK(again.demand == net.demand);
  CHECK(min_cost_mflow(again) == min_cost_mflow(net));
  CHECK_THROWS_AS(parse_network(Json::parse(
                      R"({"nodes":["a"],"arcs":[],"demand":{"a":3}})")),
                  ValidationError);
}

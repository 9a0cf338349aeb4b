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

#ifndef DECMIN_JSON_IO_HPP
#define DECMIN_JSON_IO_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "decmin/conjugate.hpp"
#include "decmin/core.hpp"
#include "decmin/duality.hpp"
#include "decmin/flows.hpp"
#include "decmin/setfn.hpp"

namespace decmin {

using Json = nlohmann::ordered_json;

inline Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

inline Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ValidationError("expected an integer: " + j.dump());
}

inline Json rat_to_json(const Rat& v) {
  if (denominator(v) == 1) return int_to_json(numerator(v));
  return Json(numerator(v).str() + "/" + denominator(v).str());
}

inline Rat json_to_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline Json vec_to_json(const GroundSet& ground, const IntVec& x) {
  Json j = Json::object();
  for (int i = 0; i < ground.n(); ++i) j[ground.label(i)] = int_to_json(x[i]);
  return j;
}

inline Json vec_to_json(const GroundSet& ground, const RatVec& x) {
  Json j = Json::object();
  for (int i = 0; i < ground.n(); ++i) j[ground.label(i)] = rat_to_json(x[i]);
  return j;
}

inline IntVec json_to_vec(const GroundSet& ground, const Json& j) {
  IntVec x(ground.n(), Int(0));
  for (auto it = j.begin(); it != j.end(); ++it)
    x[ground.index(it.key())] = json_to_int(it.value());
  return x;
}

inline Json subset_to_json(const GroundSet& ground, Subset z) {
  Json j = Json::array();
  for (int i = 0; i < ground.n(); ++i)
    if (z >> i & 1u) j.push_back(ground.label(i));
  return j;
}

inline Subset json_to_subset(const GroundSet& ground, const Json& j) {
  Subset z = 0;
  for (const Json& e : j) z |= Subset(1) << ground.index(e.get<std::string>());
  return z;
}

// Subset key for table oracles: labels joined by commas in ground order;
// the empty set is "".
inline std::string subset_key(const GroundSet& ground, Subset z) {
  std::string key;
  for (int i = 0; i < ground.n(); ++i)
    if (z >> i & 1u) {
      if (!key.empty()) key += ",";
      key += ground.label(i);
    }
  return key;
}

inline Subset parse_subset_key(const GroundSet& ground, const std::string& s) {
  Subset z = 0;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    z |= Subset(1) << ground.index(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return z;
}

// ---------- oracle instances ----------

inline MatroidOracle parse_matroid(const GroundSet& ground, const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "uniform")
    return MatroidOracle::uniform(ground.n(), j.at("rank").get<int>());
  if (kind == "partition") {
    std::vector<Subset> blocks;
    for (const Json& b : j.at("blocks"))
      blocks.push_back(json_to_subset(ground, b));
    std::vector<int> caps = j.at("caps").get<std::vector<int>>();
    return MatroidOracle::partition(ground.n(), std::move(blocks),
                                    std::move(caps));
  }
  if (kind == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : j.at("edges"))
      edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return MatroidOracle::graphic(j.at("vertices").get<int>(),
                                  std::move(edges));
  }
  throw ValidationError("unknown matroid kind: " + kind);
}

inline Json matroid_to_json(const GroundSet& ground, const MatroidOracle& m) {
  Json j = Json::object();
  switch (m.kind()) {
    case MatroidOracle::Kind::Uniform:
      j["kind"] = "uniform";
      j["rank"] = m.uniform_rank();
      break;
    case MatroidOracle::Kind::Partition: {
      j["kind"] = "partition";
      Json blocks = Json::array();
      for (Subset b : m.blocks()) blocks.push_back(subset_to_json(ground, b));
      j["blocks"] = std::move(blocks);
      j["caps"] = m.caps();
      break;
    }
    case MatroidOracle::Kind::Graphic: {
      j["kind"] = "graphic";
      j["vertices"] = m.num_vertices();
      Json edges = Json::array();
      for (auto& [u, v] : m.edges()) edges.push_back(Json::array({u, v}));
      j["edges"] = std::move(edges);
      break;
    }
  }
  return j;
}

inline SupermodularFn parse_oracle(const Json& j, bool validate_table = true) {
  GroundSet ground(j.at("ground_set").get<std::vector<std::string>>());
  const Json& pj = j.at("p");
  std::string kind = pj.at("kind").get<std::string>();
  if (kind == "table") {
    ground.require_enumerable();
    std::vector<Int> values(size_t(1) << ground.n(), Int(0));
    std::vector<bool> given(values.size(), false);
    for (auto it = pj.at("values").begin(); it != pj.at("values").end(); ++it) {
      Subset z = parse_subset_key(ground, it.key());
      values[z] = json_to_int(it.value());
      given[z] = true;
    }
    for (size_t z = 0; z < values.size(); ++z)
      if (!given[z])
        throw ValidationError("table oracle: missing subset value");
    return SupermodularFn::from_table(std::move(ground), std::move(values),
                                      validate_table);
  }
  if (kind == "cardinality") {
    std::vector<Int> g;
    for (const Json& v : pj.at("g")) g.push_back(json_to_int(v));
    return SupermodularFn::from_cardinality_convex(std::move(ground),
                                                   std::move(g));
  }
  if (kind == "induced_edges") {
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : pj.at("edges"))
      edges.push_back({ground.index(e.at(0).get<std::string>()),
                       ground.index(e.at(1).get<std::string>())});
    IntVec offset(ground.n(), Int(0));
    if (pj.contains("offset_modular"))
      offset = json_to_vec(ground, pj.at("offset_modular"));
    Int c = pj.contains("offset_const") ? json_to_int(pj.at("offset_const"))
                                        : Int(0);
    return SupermodularFn::from_induced_edges(std::move(ground),
                                              std::move(edges),
                                              std::move(offset), std::move(c));
  }
  if (kind == "matroid_cocomplement") {
    MatroidOracle mat = parse_matroid(ground, pj.at("matroid"));
    IntVec offset(ground.n(), Int(0));
    if (pj.contains("offset_modular"))
      offset = json_to_vec(ground, pj.at("offset_modular"));
    return SupermodularFn::from_matroid_cocomplement(
        std::move(ground), std::move(mat), std::move(offset));
  }
  throw ValidationError("unknown oracle kind: " + kind);
}

inline Json oracle_to_json(const SupermodularFn& p) {
  Json j = Json::object();
  j["ground_set"] = p.ground().labels();
  Json pj = Json::object();
  // Table re-encoding is universal and canonical for output.
  pj["kind"] = "table";
  Json values = Json::object();
  Subset full = p.ground().full_mask();
  for (Subset z = 0; z <= full; ++z) {
    values[subset_key(p.ground(), z)] = int_to_json(p.eval(z));
    if (z == full) break;
  }
  pj["values"] = std::move(values);
  j["p"] = std::move(pj);
  return j;
}

// ---------- cost descriptors ----------

inline DiscreteConvexFn parse_cost(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "square") return DiscreteConvexFn::square();
  if (kind == "wsquare")
    return DiscreteConvexFn::weighted_square(json_to_int(j.at("a")));
  if (kind == "power")
    return DiscreteConvexFn::power_even(json_to_int(j.at("a")),
                                        j.at("b").get<long>());
  if (kind == "exp")
    return DiscreteConvexFn::exp_growth(json_to_int(j.at("a")),
                                        json_to_int(j.at("b")));
  if (kind == "abs") return DiscreteConvexFn::abs_dist(json_to_int(j.at("a")));
  if (kind == "pospart")
    return DiscreteConvexFn::pos_part(json_to_int(j.at("a")));
  if (kind == "piecelin2")
    return DiscreteConvexFn::piece_lin2(json_to_int(j.at("a")),
                                        json_to_int(j.at("b")),
                                        json_to_int(j.at("lam")));
  if (kind == "intervaldist")
    return DiscreteConvexFn::interval_dist(json_to_int(j.at("a")),
                                           json_to_int(j.at("b")));
  if (kind == "table") {
    std::vector<Int> values;
    for (const Json& v : j.at("values")) values.push_back(json_to_int(v));
    return DiscreteConvexFn::table(json_to_int(j.at("lo")), std::move(values));
  }
  throw ValidationError("unknown cost kind: " + kind);
}

inline Json cost_to_json(const DiscreteConvexFn& f) {
  using Kind = DiscreteConvexFn::Kind;
  Json j = Json::object();
  switch (f.kind()) {
    case Kind::Square:
      j["kind"] = "square";
      break;
    case Kind::WeightedSquare:
      j["kind"] = "wsquare";
      j["a"] = int_to_json(f.param_a());
      break;
    case Kind::PowerEven:
      j["kind"] = "power";
      j["a"] = int_to_json(f.param_a());
      j["b"] = f.param_power();
      break;
    case Kind::Exp:
      j["kind"] = "exp";
      j["a"] = int_to_json(f.param_a());
      j["b"] = int_to_json(f.param_base());
      break;
    case Kind::Abs:
      j["kind"] = "abs";
      j["a"] = int_to_json(f.param_a());
      break;
    case Kind::PosPart:
      j["kind"] = "pospart";
      j["a"] = int_to_json(f.param_a());
      break;
    case Kind::PieceLin2:
      j["kind"] = "piecelin2";
      j["a"] = int_to_json(f.param_a());
      j["b"] = int_to_json(f.param_b2());
      j["lam"] = int_to_json(f.param_lam());
      break;
    case Kind::IntervalDist:
      j["kind"] = "intervaldist";
      j["a"] = int_to_json(f.param_a());
      j["b"] = int_to_json(f.param_b2());
      break;
    case Kind::Table: {
      j["kind"] = "table";
      j["lo"] = int_to_json(f.param_a());
      Json values = Json::array();
      for (const Int& v : f.table_values()) values.push_back(int_to_json(v));
      j["values"] = std::move(values);
      break;
    }
    case Kind::Translated: {
      // Emit as an explicit table over a window; translations are an
      // in-process convenience, not a wire kind.
      throw DomainError("cost_to_json: translated costs have no wire form");
    }
  }
  return j;
}

// ---------- certificates ----------

inline Json certificate_to_json(const GroundSet& ground,
                                const Certificate& c) {
  Json j = Json::object();
  j["x"] = vec_to_json(ground, c.x);
  j["pi"] = vec_to_json(ground, c.pi);
  j["primal"] = int_to_json(c.primal);
  j["dual"] = int_to_json(c.dual);
  j["gap"] = int_to_json(c.gap);
  return j;
}

struct ParsedCertificate {
  IntVec x;
  IntVec pi;
  Int primal, dual, gap;
};

inline ParsedCertificate parse_certificate(const GroundSet& ground,
                                           const Json& j) {
  return {json_to_vec(ground, j.at("x")), json_to_vec(ground, j.at("pi")),
          json_to_int(j.at("primal")), json_to_int(j.at("dual")),
          json_to_int(j.at("gap"))};
}

// ---------- flow networks ----------

inline FlowNetwork parse_network(const Json& j) {
  FlowNetwork net;
  net.nodes = j.at("nodes").get<std::vector<std::string>>();
  auto node_index = [&](const std::string& name) {
    for (int i = 0; i < net.num_nodes(); ++i)
      if (net.nodes[i] == name) return i;
    throw ValidationError("unknown node: " + name);
  };
  for (const Json& aj : j.at("arcs")) {
    FlowArc arc{node_index(aj.at("tail").get<std::string>()),
                node_index(aj.at("head").get<std::string>()),
                std::nullopt,
                std::nullopt,
                parse_cost(aj.at("cost"))};
    if (aj.contains("lo")) arc.lo = json_to_int(aj.at("lo"));
    if (aj.contains("hi")) arc.hi = json_to_int(aj.at("hi"));
    net.arcs.push_back(std::move(arc));
  }
  net.demand.assign(net.num_nodes(), Int(0));
  if (j.contains("demand"))
    for (auto it = j.at("demand").begin(); it != j.at("demand").end(); ++it)
      net.demand[node_index(it.key())] = json_to_int(it.value());
  net.validate();
  return net;
}

inline Json network_to_json(const FlowNetwork& net) {
  Json j = Json::object();
  j["nodes"] = net.nodes;
  Json arcs = Json::array();
  for (const FlowArc& a : net.arcs) {
    Json aj = Json::object();
    aj["tail"] = net.nodes[a.tail];
    aj["head"] = net.nodes[a.head];
    if (a.lo) aj["lo"] = int_to_json(*a.lo);
    if (a.hi) aj["hi"] = int_to_json(*a.hi);
    aj["cost"] = cost_to_json(a.cost);
    arcs.push_back(std::move(aj));
  }
  j["arcs"] = std::move(arcs);
  Json demand = Json::object();
  for (int v = 0; v < net.num_nodes(); ++v)
    demand[net.nodes[v]] = int_to_json(net.demand[v]);
  j["demand"] = std::move(demand);
  return j;
}

}  // namespace decmin

#endif  // DECMIN_JSON_IO_HPP

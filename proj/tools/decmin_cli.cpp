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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decmin/json_io.hpp"
#include "decmin/selfcheck.hpp"

namespace {

using decmin::Certificate;
using decmin::DiscreteConvexFn;
using decmin::GroundSet;
using decmin::Int;
using decmin::IntVec;
using decmin::Json;
using decmin::SeparableObjective;
using decmin::Subset;
using decmin::SupermodularFn;

struct Options {
  std::string instance;
  std::string instance2;
  std::string network;
  std::string cost;
  std::string certificate;
  std::string out;
  std::string format = "json";
  long long a_value = 0;
  long long seed = 1;
  long long instances = 25;
  std::size_t max_enum = decmin::kDefaultEnumCap;
  std::string method = "minnorm";
  std::string x_json, pi_json, pi2_json;
  std::string y_json;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw decmin::ValidationError("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

SupermodularFn load_instance(const Options& opt, bool validate_table = true) {
  if (opt.instance.empty())
    throw decmin::ValidationError("missing --instance");
  return decmin::parse_oracle(read_json_file(opt.instance), validate_table);
}

SeparableObjective load_objective(const Options& opt, const GroundSet& g) {
  if (opt.cost.empty())
    return SeparableObjective::uniform(g.n(), DiscreteConvexFn::square());
  Json j = Json::parse(opt.cost);
  if (j.contains("kind"))
    return SeparableObjective::uniform(g.n(), decmin::parse_cost(j));
  std::vector<DiscreteConvexFn> phis;
  for (int i = 0; i < g.n(); ++i)
    phis.push_back(decmin::parse_cost(j.at(g.label(i))));
  return SeparableObjective(std::move(phis));
}

void emit(const Options& opt, const Json& j) {
  std::string text;
  if (opt.format == "text") {
    // Flat key: value lines; nested values stay as compact JSON.
    for (auto it = j.begin(); it != j.end(); ++it)
      text += it.key() + ": " +
              (it.value().is_string() ? it.value().get<std::string>()
                                      : it.value().dump()) +
              "\n";
  } else {
    text = j.dump(2) + "\n";
  }
  std::cout << text;
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    out << text;
  }
}

Json labels_json(const GroundSet& g, const std::vector<Subset>& sets) {
  Json arr = Json::array();
  for (Subset z : sets) arr.push_back(decmin::subset_to_json(g, z));
  return arr;
}

int cmd_validate(const Options& opt) {
  Json result = Json::object();
  try {
    SupermodularFn p = load_instance(opt, /*validate_table=*/false);
    auto bad = p.validate_supermodular();
    result["valid"] = bad.empty();
    Json viols = Json::array();
    for (const auto& v : bad) {
      Json vj = Json::object();
      vj["x"] = decmin::subset_to_json(p.ground(), v.x);
      vj["y"] = decmin::subset_to_json(p.ground(), v.y);
      vj["slack"] = decmin::int_to_json(v.slack);
      viols.push_back(std::move(vj));
    }
    result["violations"] = std::move(viols);
    emit(opt, result);
    return bad.empty() ? 0 : 1;
  } catch (const decmin::ValidationError& e) {
    result["valid"] = false;
    result["error"] = e.what();
    emit(opt, result);
    return 1;
  }
}

int cmd_enumerate(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  auto pts = decmin::enumerate_points(p, opt.max_enum);
  Json result = Json::object();
  result["count"] = pts.size();
  Json arr = Json::array();
  for (const IntVec& x : pts) arr.push_back(decmin::vec_to_json(p.ground(), x));
  result["points"] = std::move(arr);
  emit(opt, result);
  return 0;
}

int cmd_decmin(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  decmin::RelaxResult r = decmin::relax_decmin(p);
  decmin::CanonicalDecomposition can = decmin::canonical_decomposition(p);
  Json result = Json::object();
  result["decmin"] = decmin::vec_to_json(p.ground(), r.output);
  Json betas = Json::array();
  for (const Int& b : can.betas) betas.push_back(decmin::int_to_json(b));
  result["beta"] = std::move(betas);
  result["squaresum"] = decmin::int_to_json(decmin::square_sum(r.output));
  emit(opt, result);
  return 0;
}

int cmd_scalar(const Options& opt, bool want_r1) {
  SupermodularFn p = load_instance(opt);
  Json result = Json::object();
  if (want_r1)
    result["r1"] = decmin::int_to_json(decmin::r1(p));
  else
    result["beta1"] = decmin::int_to_json(decmin::beta1(p));
  emit(opt, result);
  return 0;
}

int cmd_excess(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  decmin::TotalExcess te = decmin::min_total_excess(p, Int(opt.a_value));
  Json result = Json::object();
  result["a"] = opt.a_value;
  result["min_total_excess"] = decmin::int_to_json(te.min_side);
  result["max_side"] = decmin::int_to_json(te.max_side);
  result["witness"] = decmin::subset_to_json(p.ground(), te.witness);
  emit(opt, result);
  return 0;
}

int cmd_canonical(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  decmin::CanonicalDecomposition can = decmin::canonical_decomposition(p);
  Json result = Json::object();
  Json betas = Json::array();
  for (const Int& b : can.betas) betas.push_back(decmin::int_to_json(b));
  result["betas"] = std::move(betas);
  result["chain"] = labels_json(p.ground(), can.chain);
  result["partition"] = labels_json(p.ground(), can.blocks);
  result["pi_star"] = decmin::vec_to_json(p.ground(), can.pi_star);
  result["delta_star"] = decmin::vec_to_json(p.ground(), can.delta_star);
  emit(opt, result);
  return 0;
}

int cmd_principal(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  decmin::PrincipalDecomposition pri = decmin::principal_decomposition(p);
  Json result = Json::object();
  Json lambdas = Json::array();
  for (const decmin::Rat& l : pri.lambdas)
    lambdas.push_back(decmin::rat_to_json(l));
  result["lambdas"] = std::move(lambdas);
  result["chain"] = labels_json(p.ground(), pri.chain);
  result["partition"] = labels_json(p.ground(), pri.blocks);
  emit(opt, result);
  return 0;
}

int cmd_relate(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  decmin::CanonicalDecomposition can = decmin::canonical_decomposition(p);
  decmin::PrincipalDecomposition pri = decmin::principal_decomposition(p);
  decmin::PartitionRelation rel = decmin::relate_partitions(can, pri);
  Json result = Json::object();
  result["ok"] = rel.ok;
  result["index_map"] = rel.index_map;
  if (!rel.message.empty()) result["message"] = rel.message;
  emit(opt, result);
  return rel.ok ? 0 : 3;
}

int cmd_minnorm(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  decmin::MinNormPoint mnp = decmin::min_norm_point(p);
  Json result = Json::object();
  result["m_r"] = decmin::vec_to_json(p.ground(), mnp.m_r);
  Json lambdas = Json::array();
  for (const decmin::Rat& l : mnp.lambdas)
    lambdas.push_back(decmin::rat_to_json(l));
  result["lambdas"] = std::move(lambdas);
  result["blocks"] = labels_json(p.ground(), mnp.blocks);
  emit(opt, result);
  return 0;
}

int cmd_relax(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  decmin::RelaxResult r = opt.method == "pwl" ? decmin::relax_decmin_pwl(p)
                                              : decmin::relax_decmin(p);
  Json result = Json::object();
  result["method"] = opt.method;
  result["relaxed"] = decmin::vec_to_json(p.ground(), r.relaxed);
  result["lo"] = decmin::vec_to_json(p.ground(), r.lo);
  result["hi"] = decmin::vec_to_json(p.ground(), r.hi);
  result["weights"] = decmin::vec_to_json(p.ground(), r.weights);
  result["output"] = decmin::vec_to_json(p.ground(), r.output);
  result["squaresum"] = decmin::int_to_json(decmin::square_sum(r.output));
  emit(opt, result);
  return 0;
}

int cmd_minimize(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  SeparableObjective obj = load_objective(opt, p.ground());
  IntVec x = decmin::minimize_separable(p, obj);
  Certificate cert = decmin::dual_certificate(p, obj, x);
  emit(opt, decmin::certificate_to_json(p.ground(), cert));
  return 0;
}

int cmd_certify(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  SeparableObjective obj = load_objective(opt, p.ground());
  if (opt.certificate.empty())
    throw decmin::ValidationError("missing --certificate");
  decmin::ParsedCertificate in =
      decmin::parse_certificate(p.ground(), read_json_file(opt.certificate));
  Json result = Json::object();
  bool feasible = decmin::contains(p, in.x);
  decmin::ExtInt primal =
      feasible ? obj.eval(in.x) : decmin::ExtInt::pos_inf();
  decmin::ExtInt dual = decmin::dual_value(p, obj, in.pi);
  bool ok = feasible && primal.finite() && dual.finite() &&
            primal.value() == in.primal && dual.value() == in.dual &&
            primal.value() - dual.value() == in.gap && in.gap == 0;
  result["feasible"] = feasible;
  result["primal"] = primal.finite()
                         ? decmin::int_to_json(primal.value())
                         : Json(primal.str());
  result["dual"] =
      dual.finite() ? decmin::int_to_json(dual.value()) : Json(dual.str());
  result["gap"] = (primal.finite() && dual.finite())
                      ? decmin::int_to_json(primal.value() - dual.value())
                      : Json((primal - dual).str());
  result["ok"] = ok;
  emit(opt, result);
  return ok ? 0 : 1;
}

int cmd_dualset(const Options& opt) {
  SupermodularFn p = load_instance(opt);
  decmin::DualOptimalSet dos = decmin::dual_optimal_set(p);
  Json result = Json::object();
  Json betas = Json::array();
  for (const Int& b : dos.can.betas) betas.push_back(decmin::int_to_json(b));
  result["betas"] = std::move(betas);
  result["partition"] = labels_json(p.ground(), dos.can.blocks);
  result["f_sets"] = labels_json(p.ground(), dos.f_sets);
  Json pairs = Json::array();
  for (const auto& block_pairs : dos.a_pairs) {
    Json bj = Json::array();
    for (auto& [s, t] : block_pairs)
      bj.push_back(Json::array(
          {p.ground().label(s), p.ground().label(t)}));
    pairs.push_back(std::move(bj));
  }
  result["a_pairs"] = std::move(pairs);
  result["pi_star"] = decmin::vec_to_json(p.ground(), dos.can.pi_star);
  if (!opt.pi_json.empty()) {
    IntVec pi = decmin::json_to_vec(p.ground(), Json::parse(opt.pi_json));
    result["member"] = dos.contains(pi);
  }
  emit(opt, result);
  return 0;
}

int cmd_majorize(const Options& opt) {
  Json xj = Json::parse(opt.x_json), yj = Json::parse(opt.y_json);
  IntVec x, y;
  for (const Json& v : xj) x.push_back(decmin::json_to_int(v));
  for (const Json& v : yj) y.push_back(decmin::json_to_int(v));
  auto rel_str = [](decmin::OrderRel r) {
    switch (r) {
      case decmin::OrderRel::Smaller:
        return "smaller";
      case decmin::OrderRel::Equal:
        return "equal";
      case decmin::OrderRel::Greater:
        return "greater";
      default:
        return "incomparable";
    }
  };
  Json result = Json::object();
  result["dec_compare"] = rel_str(decmin::dec_compare(x, y));
  result["inc_compare"] = rel_str(decmin::inc_compare(x, y));
  result["x_majorized_by_y"] = decmin::majorizes(y, x);
  result["x_weakly_submajorized_by_y"] = decmin::weakly_submajorizes(y, x);
  result["excess_profile_leq"] = decmin::excess_profile_leq(x, y);
  emit(opt, result);
  return 0;
}

int cmd_intersect(const Options& opt) {
  SupermodularFn p1 = load_instance(opt);
  if (opt.instance2.empty())
    throw decmin::ValidationError("missing --instance2");
  SupermodularFn p2 = decmin::parse_oracle(read_json_file(opt.instance2));
  SeparableObjective obj = load_objective(opt, p1.ground());
  Json result = Json::object();
  if (!opt.x_json.empty()) {
    IntVec x = decmin::json_to_vec(p1.ground(), Json::parse(opt.x_json));
    IntVec pi1 = decmin::json_to_vec(p1.ground(), Json::parse(opt.pi_json));
    IntVec pi2 = decmin::json_to_vec(p1.ground(), Json::parse(opt.pi2_json));
    decmin::IntersectionCertificate cert =
        decmin::verify_intersection_certificate(p1, p2, obj, x, pi1, pi2);
    result["primal"] = cert.primal.str();
    result["dual"] = cert.dual.str();
    result["gap"] = cert.gap.str();
    result["conditions"] = cert.conditions();
    emit(opt, result);
    return cert.gap == decmin::ExtInt(Int(0)) ? 0 : 1;
  }
  decmin::IntersectionMin im =
      decmin::minimize_over_intersection(p1, p2, obj, opt.max_enum);
  result["feasible"] = im.feasible;
  if (im.feasible) {
    result["value"] = decmin::int_to_json(im.value);
    Json arr = Json::array();
    for (const IntVec& x : im.argmins)
      arr.push_back(decmin::vec_to_json(p1.ground(), x));
    result["argmins"] = std::move(arr);
  }
  emit(opt, result);
  return im.feasible ? 0 : 1;
}

int cmd_flow(const Options& opt) {
  if (opt.network.empty())
    throw decmin::ValidationError("missing --network");
  decmin::FlowNetwork net =
      decmin::parse_network(read_json_file(opt.network));
  decmin::FeasibilityReport rep = decmin::hoffman_feasible(net);
  Json result = Json::object();
  result["feasible"] = rep.feasible;
  if (!rep.feasible) {
    Json cut = Json::array();
    for (int v = 0; v < net.num_nodes(); ++v)
      if (*rep.cut >> v & 1u) cut.push_back(net.nodes[v]);
    result["cut"] = std::move(cut);
    emit(opt, result);
    return 1;
  }
  IntVec x = decmin::min_cost_mflow(net);
  decmin::FlowCertificate cert = decmin::flow_certificate(net, x);
  Json xi = Json::array(), t1 = Json::array(), t2 = Json::array();
  for (int e = 0; e < net.num_arcs(); ++e) {
    xi.push_back(decmin::int_to_json(cert.x[e]));
    t1.push_back(decmin::int_to_json(cert.tau1[e]));
    t2.push_back(decmin::int_to_json(cert.tau2[e]));
  }
  result["x"] = std::move(xi);
  Json pij = Json::object();
  for (int v = 0; v < net.num_nodes(); ++v)
    pij[net.nodes[v]] = decmin::int_to_json(cert.pi[v]);
  result["pi"] = std::move(pij);
  result["tau1"] = std::move(t1);
  result["tau2"] = std::move(t2);
  result["primal"] = decmin::int_to_json(cert.primal);
  result["dual"] = decmin::int_to_json(cert.dual);
  result["gap"] = decmin::int_to_json(cert.gap);
  emit(opt, result);
  return 0;
}

int cmd_selftest(const Options& opt) {
  namespace sc = decmin::selfcheck;
  decmin::Rng rng(static_cast<std::uint64_t>(opt.seed));
  Json suites = Json::object();

  sc::check_majorization_axioms(rng);
  suites["majorization"] = "ok";
  sc::check_conjugates(rng, 4);
  suites["conjugates"] = "ok";
  sc::check_intersection_fixture();
  suites["intersection_fixture"] = "ok";

  long long n_inst = opt.instances;
  for (long long i = 0; i < n_inst; ++i) {
    SupermodularFn p = decmin::random_supermodular(rng);
    auto pts = decmin::enumerate_points(p, opt.max_enum);
    sc::check_lovasz_properties(p, rng, pts);
    sc::check_decmin_equivalences(p, pts);
    sc::check_scalar_minmax(p, pts);
    sc::check_partitions(p, pts);
    sc::check_square_duality(p, pts);
    sc::check_general_duality(p, pts, rng);
    sc::check_continuous(p, pts);
    sc::check_matroidal_structure(p, pts);
    if (p.n() <= 4) sc::check_optimal_sets(p, pts);
  }
  suites["instances"] = n_inst;

  for (long long i = 0; i < std::max(1LL, n_inst / 2); ++i) {
    decmin::FlowNetwork net = decmin::random_network(rng, 5, 6);
    sc::check_flow_instance(net, rng);
  }
  suites["flows"] = std::max(1LL, n_inst / 2);

  for (long long i = 0; i < std::max(1LL, n_inst / 4); ++i)
    sc::check_intersection_random(rng);
  suites["intersection_random"] = std::max(1LL, n_inst / 4);

  Json result = Json::object();
  result["seed"] = opt.seed;
  result["suites"] = std::move(suites);
  result["ok"] = true;
  emit(opt, result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact decreasing minimization on M-convex sets: dec-min elements, "
      "canonical/principal partitions, min-max certificates, intersections "
      "and convex-cost flows"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_instance) {
    if (needs_instance) {
      sub->add_option("INSTANCE", opt.instance, "instance JSON path");
      sub->add_option("--instance", opt.instance, "instance JSON path");
    }
    sub->add_option("--out", opt.out, "also write the JSON result here");
    sub->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-enum", opt.max_enum, "enumeration cap");
    return sub;
  };

  add_common(app.add_subcommand("validate", "check supermodularity"), true);
  add_common(app.add_subcommand("enumerate", "list all integral points"),
             true);
  add_common(app.add_subcommand("decmin", "dec-min element and essentials"),
             true);
  add_common(app.add_subcommand("beta1", "largest dec-min component"), true);
  add_common(app.add_subcommand("r1", "count of beta1-valued components"),
             true);
  auto* excess =
      add_common(app.add_subcommand("excess", "total a-excess min-max"), true);
  excess->add_option("--a", opt.a_value, "excess threshold a")->required();
  add_common(app.add_subcommand("canonical", "canonical decomposition"), true);
  add_common(app.add_subcommand("principal", "principal decomposition"), true);
  add_common(app.add_subcommand("relate", "relate the two decompositions"),
             true);
  add_common(app.add_subcommand("minnorm", "exact minimum norm point"), true);
  auto* relax =
      add_common(app.add_subcommand("relax", "continuous relaxation"), true);
  relax->add_option("--method", opt.method, "minnorm|pwl")
      ->check(CLI::IsMember({"minnorm", "pwl"}));
  auto* minimize = add_common(
      app.add_subcommand("minimize", "separable convex minimization"), true);
  minimize->add_option("--cost", opt.cost, "cost descriptor JSON");
  auto* certify = add_common(
      app.add_subcommand("certify", "verify an emitted certificate"), true);
  certify->add_option("--cost", opt.cost, "cost descriptor JSON");
  certify->add_option("--certificate", opt.certificate,
                      "certificate JSON path");
  auto* dualset = add_common(
      app.add_subcommand("dualset", "canonical dual optimal set"), true);
  dualset->add_option("--pi", opt.pi_json, "test membership of this vector");
  auto* majorize = add_common(
      app.add_subcommand("majorize", "compare two integer vectors"), false);
  majorize->add_option("--x", opt.x_json, "first vector, e.g. [2,1]")
      ->required();
  majorize->add_option("--y", opt.y_json, "second vector")->required();
  auto* intersect = add_common(
      app.add_subcommand("intersect", "minimize over an intersection"), true);
  intersect->add_option("--instance2", opt.instance2, "second instance");
  intersect->add_option("--cost", opt.cost, "cost descriptor JSON");
  intersect->add_option("--x", opt.x_json, "certificate point");
  intersect->add_option("--pi1", opt.pi_json, "first dual vector");
  intersect->add_option("--pi2", opt.pi2_json, "second dual vector");
  auto* flow = add_common(
      app.add_subcommand("flow", "convex-cost integer flow"), false);
  flow->add_option("NETWORK", opt.network, "network JSON path");
  flow->add_option("--network", opt.network, "network JSON path");
  auto* selftest = add_common(
      app.add_subcommand("selftest", "run the property suites"), false);
  selftest->add_option("--seed", opt.seed, "random seed");
  selftest->add_option("--instances", opt.instances, "instances per suite");

  CLI11_PARSE(app, argc, argv);

  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "validate") return cmd_validate(opt);
    if (cmd == "enumerate") return cmd_enumerate(opt);
    if (cmd == "decmin") return cmd_decmin(opt);
    if (cmd == "beta1") return cmd_scalar(opt, false);
    if (cmd == "r1") return cmd_scalar(opt, true);
    if (cmd == "excess") return cmd_excess(opt);
    if (cmd == "canonical") return cmd_canonical(opt);
    if (cmd == "principal") return cmd_principal(opt);
    if (cmd == "relate") return cmd_relate(opt);
    if (cmd == "minnorm") return cmd_minnorm(opt);
    if (cmd == "relax") return cmd_relax(opt);
    if (cmd == "minimize") return cmd_minimize(opt);
    if (cmd == "certify") return cmd_certify(opt);
    if (cmd == "dualset") return cmd_dualset(opt);
    if (cmd == "majorize") return cmd_majorize(opt);
    if (cmd == "intersect") return cmd_intersect(opt);
    if (cmd == "flow") return cmd_flow(opt);
    if (cmd == "selftest") return cmd_selftest(opt);
  } catch (const decmin::InternalCheckError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const decmin::EnumerationCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const decmin::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const decmin::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

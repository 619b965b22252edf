#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starfree/blocks.hpp"
#include "starfree/cnf.hpp"
#include "starfree/graph.hpp"
#include "starfree/ifvs.hpp"
#include "starfree/meta.hpp"
#include "starfree/oracles.hpp"
#include "starfree/reduction.hpp"
#include "starfree/spider.hpp"
#include "starfree/treedepth.hpp"

using nlohmann::json;
using namespace starfree;

namespace {

// exit codes: 0 ok / yes, 1 decision no, 2 usage or validation, 3 capacity
enum : int { kOk = 0, kNo = 1, kUsage = 2, kCapacity = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

SpiderPattern parse_spider_arg(const std::string& s) {
  std::vector<int> vals;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
  if (vals.size() != 4)
    throw ValidationError("spider pattern must be w,x,y,z");
  return SpiderPattern::of(vals[0], vals[1], vals[2], vals[3]);
}

json report_to_json(const SolveReport& r) {
  json j;
  j["problem"] = r.problem;
  j["n"] = r.n;
  j["m"] = r.m;
  j["feasible"] = r.feasible;
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  j["decision"] = r.decision ? json(*r.decision) : json(nullptr);
  j["witness"] = r.witness;
  json edges = json::array();
  for (const auto& [u, v] : r.edge_witness) edges.push_back({u, v});
  j["edgeWitness"] = edges;
  j["colouring"] = r.colouring;
  json routes = json::array();
  for (const auto& rt : r.routes)
    routes.push_back(
        {{"engine", rt.engine}, {"part", rt.part}, {"size", rt.size}});
  j["routes"] = routes;
  j["validated"] = r.validated;
  return j;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!g.label(v).empty()) out << " [label=\"" << g.label(v) << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"exact graph problems on subdivided-star-free classes"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string gen_kind, gen_out, gen_dot, gen_spider = "1,1,1,1";
  int gen_n = 8, gen_m = 0;
  std::uint64_t gen_seed = 1;
  gen->add_option("kind", gen_kind,
                  "path|cycle|complete|star|spider|nice-cactus|subcubic|"
                  "quasi-bridgeless")
      ->required();
  gen->add_option("-n,--n", gen_n, "vertex count / star leaves");
  gen->add_option("-m,--extra-edges", gen_m, "extra edges (subcubic)");
  gen->add_option("--spider", gen_spider, "tentacle lengths w,x,y,z");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");
  gen->add_option("--dot", gen_dot, "also write a DOT dump here");

  // check
  auto* check = app.add_subcommand("check", "spider-subgraph freeness");
  std::string check_file, check_spider = "2,2,2,2";
  check->add_option("file", check_file)->required();
  check->add_option("--spider", check_spider, "tentacle lengths w,x,y,z");

  // solve / oracle
  SolveCaps caps;
  auto* solve_cmd = app.add_subcommand("solve", "decomposition solver");
  std::string solve_problem, solve_file;
  int solve_k = 3;
  solve_cmd->add_option("problem", solve_problem,
                        "fvs|ifvs|cvc|colouring|matchingcut")
      ->required();
  solve_cmd->add_option("file", solve_file)->required();
  solve_cmd->add_option("--k", solve_k, "colour count for colouring");
  solve_cmd->add_option("--cap-oracle", caps.oracle, "oracle size cap");
  solve_cmd->add_option("--cap-mc", caps.matching_cut, "matching cut cap");
  solve_cmd->add_option("--cap-branch", caps.branch, "branching cap");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference");
  std::string oracle_problem, oracle_file;
  int oracle_cap = kSubsetCap;
  oracle_cmd->add_option("problem", oracle_problem,
                         "fvs|ifvs|cvc|colouring|matchingcut")
      ->required();
  oracle_cmd->add_option("file", oracle_file)->required();
  oracle_cmd->add_option("--cap", oracle_cap, "size cap");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "decomposition + structure");
  std::string analyze_file;
  int aq = 1, ar = 1, atd = 20;
  analyze->add_option("file", analyze_file)->required();
  analyze->add_option("--q", aq);
  analyze->add_option("--r", ar);
  analyze->add_option("--cap-td", atd, "exact treedepth cap");

  // classify-h
  auto* classify = app.add_subcommand("classify-h", "pattern complexity rows");
  std::string classify_file;
  classify->add_option("file", classify_file)->required();

  // reduce / verify-reduction
  auto* reduce_cmd = app.add_subcommand("reduce", "formula to graph instance");
  std::string reduce_in, reduce_out, reduce_sidecar;
  reduce_cmd->add_option("formula", reduce_in)->required();
  reduce_cmd->add_option("-o,--out", reduce_out)->required();
  reduce_cmd->add_option("--sidecar", reduce_sidecar,
                         "threshold/literal-map JSON (default <out>.json)");

  auto* verify = app.add_subcommand("verify-reduction", "end-to-end check");
  std::string verify_in;
  verify->add_option("formula", verify_in)->required();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    Graph g;
    if (gen_kind == "path") g = make_path(gen_n);
    else if (gen_kind == "cycle") g = make_cycle(gen_n);
    else if (gen_kind == "complete") g = make_complete(gen_n);
    else if (gen_kind == "star") g = make_star(gen_n);
    else if (gen_kind == "spider") g = spider_graph(parse_spider_arg(gen_spider));
    else if (gen_kind == "nice-cactus") g = random_nice_cactus(gen_n, gen_seed);
    else if (gen_kind == "subcubic") g = random_subcubic(gen_n, gen_m, gen_seed);
    else if (gen_kind == "quasi-bridgeless")
      g = random_quasi_bridgeless(gen_n, gen_seed);
    else throw ValidationError("unknown generator kind: " + gen_kind);
    const auto text = format_graph(g);
    if (gen_out.empty()) std::cout << text;
    else write_file(gen_out, text);
    if (!gen_dot.empty()) write_file(gen_dot, to_dot(g));
    return kOk;
  }

  if (check->parsed()) {
    const Graph g = parse_graph(read_file(check_file));
    const auto p = parse_spider_arg(check_spider);
    const auto res = spider_free(g, p);
    if (as_json) {
      json j;
      j["free"] = res.free;
      if (res.witness) {
        j["centre"] = res.witness->centre;
        json tent = json::array();
        for (const auto& t : res.witness->tentacles) tent.push_back(t);
        j["tentacles"] = tent;
      } else {
        j["centre"] = nullptr;
        j["tentacles"] = json::array();
      }
      std::cout << j.dump() << '\n';
    } else if (res.free) {
      std::cout << "FREE\n";
    } else {
      std::cout << "contains spider: centre " << res.witness->centre
                << " tentacles";
      for (const auto& t : res.witness->tentacles) {
        std::cout << " [";
        for (std::size_t i = 0; i < t.size(); ++i)
          std::cout << (i ? " " : "") << t[i];
        std::cout << "]";
      }
      std::cout << '\n';
    }
    return res.free ? kOk : kNo;
  }

  auto parse_problem = [](const std::string& s, int k) -> ProblemKind {
    if (s == "fvs") return ProblemKind::fvs();
    if (s == "ifvs") return ProblemKind::ifvs();
    if (s == "cvc") return ProblemKind::cvc();
    if (s == "colouring") return ProblemKind::colouring(k);
    if (s == "matchingcut") return ProblemKind::matching_cut();
    throw ValidationError("unknown problem: " + s);
  };

  if (solve_cmd->parsed()) {
    const Graph g = parse_graph(read_file(solve_file));
    const auto rep = solve(parse_problem(solve_problem, solve_k), g, caps);
    if (as_json) {
      json j = report_to_json(rep);
      j["timeMs"] = rep.time_ms;
      std::cout << j.dump() << '\n';
    } else {
      if (!rep.feasible) std::cout << "no solution\n";
      else if (rep.value) {
        std::cout << "value " << *rep.value << " witness";
        for (int v : rep.witness) std::cout << ' ' << v;
        std::cout << '\n';
      } else if (rep.decision) {
        std::cout << (*rep.decision ? "YES" : "NO") << '\n';
        for (const auto& [u, v] : rep.edge_witness)
          std::cout << "cut edge " << u << ' ' << v << '\n';
      }
    }
    if (!rep.feasible) return kNo;
    if (rep.decision && !*rep.decision) return kNo;
    return kOk;
  }

  if (oracle_cmd->parsed()) {
    const Graph g = parse_graph(read_file(oracle_file));
    json j;
    int code = kOk;
    if (oracle_problem == "fvs") {
      auto w = oracle_min_fvs(g, oracle_cap);
      j["value"] = w.size();
      j["witness"] = w;
    } else if (oracle_problem == "ifvs") {
      auto w = oracle_min_ifvs(g, oracle_cap);
      j["value"] = w ? json(w->size()) : json(nullptr);
      j["witness"] = w ? json(*w) : json(json::array());
      if (!w) code = kNo;
    } else if (oracle_problem == "cvc") {
      auto w = oracle_min_cvc(g, oracle_cap);
      j["value"] = w ? json(w->size()) : json(nullptr);
      j["witness"] = w ? json(*w) : json(json::array());
      if (!w) code = kNo;
    } else if (oracle_problem == "colouring") {
      const int chi = oracle_chromatic(g, oracle_cap);
      j["value"] = chi;
      j["witness"] = *try_colouring(g, chi, oracle_cap);
    } else if (oracle_problem == "matchingcut") {
      auto w = oracle_matching_cut(g, oracle_cap);
      json edges = json::array();
      if (w)
        for (const auto& [u, v] : *w) edges.push_back({u, v});
      j["value"] = w.has_value();
      j["witness"] = edges;
      if (!w) code = kNo;
    } else {
      throw ValidationError("unknown problem: " + oracle_problem);
    }
    std::cout << (as_json ? j.dump() : j.dump(2)) << '\n';
    return code;
  }

  if (analyze->parsed()) {
    const Graph g = parse_graph(read_file(analyze_file));
    json j;
    json parts = json::array();
    json bridges = json::array();
    for (const auto& comp : connected_components(g)) {
      const auto dec = decompose_ct(comp.graph);
      for (const auto& part : dec.parts) {
        std::vector<int> verts;
        for (int v : part.to_host) verts.push_back(comp.to_parent[v]);
        parts.push_back({{"kind", part.kind == PartKind::CType ? "C" : "T"},
                         {"vertices", verts}});
      }
      for (const auto& cb : dec.connecting)
        bridges.push_back({comp.to_parent[cb.edge.first],
                           comp.to_parent[cb.edge.second]});
    }
    j["parts"] = parts;
    j["connectingBridges"] = bridges;
    if (g.is_connected()) {
      const auto rep = check_structure_theorem(g, aq, ar, atd);
      json s;
      s["subcubic"] = rep.subcubic;
      s["quasiBridgeless"] = rep.quasi_bridgeless;
      s["free11qr"] = rep.free_11qr;
      s["free111r"] = rep.free_111r;
      s["treedepth"] = rep.treedepth ? json(*rep.treedepth) : json(nullptr);
      s["treedepthExact"] = rep.treedepth_exact_flag;
      s["boundQuadratic"] = rep.bound_quadratic;
      s["boundLinear"] = rep.bound_linear;
      s["premiseQuadratic"] = rep.premise_quadratic;
      s["premiseLinear"] = rep.premise_linear;
      s["conclusionQuadratic"] = rep.conclusion_quadratic;
      s["conclusionLinear"] = rep.conclusion_linear;
      s["inconclusive"] = rep.inconclusive;
      j["structure"] = s;
    } else {
      j["structure"] = nullptr;
    }
    std::cout << (as_json ? j.dump() : j.dump(2)) << '\n';
    return kOk;
  }

  if (classify->parsed()) {
    const Graph h = parse_graph(read_file(classify_file));
    const auto c = classify_h(h);
    json j;
    j["fvs"] = to_string(c.fvs);
    j["ifvs"] = to_string(c.ifvs);
    j["cvc"] = to_string(c.cvc);
    j["colouring"] = to_string(c.colouring);
    j["matchingCut"] = to_string(c.matching_cut);
    j["facts"] = {{"isPath", c.is_path},
                  {"isSubdividedClaw", c.is_subdivided_claw},
                  {"isSpider", c.is_spider4},
                  {"spiderLengths", c.spider_lengths},
                  {"hasCycle", c.has_cycle},
                  {"degree3PlusCount", c.degree3_plus_count},
                  {"maxDegree", c.max_degree},
                  {"containsFullSpider", c.contains_s2222},
                  {"smallTreeMaxDeg4", c.small_tree_max_deg4}};
    std::cout << (as_json ? j.dump() : j.dump(2)) << '\n';
    return kOk;
  }

  if (reduce_cmd->parsed()) {
    const auto f = parse_dimacs(read_file(reduce_in));
    const auto out = reduce(f);
    write_file(reduce_out, format_graph(out.graph));
    json j;
    j["threshold"] = out.threshold;
    j["formulaDigest"] = out.formula_digest;
    json slots = json::array();
    for (const auto& s : out.literal_map)
      slots.push_back({{"variable", s.variable},
                       {"occurrence", s.occurrence},
                       {"vertex", s.vertex}});
    j["literalMap"] = slots;
    j["vertices"] = out.graph.vertex_count();
    j["edges"] = out.graph.edge_count();
    write_file(reduce_sidecar.empty() ? reduce_out + ".json" : reduce_sidecar,
               j.dump(2) + "\n");
    if (as_json) std::cout << j.dump() << '\n';
    return kOk;
  }

  if (verify->parsed()) {
    const auto f = parse_dimacs(read_file(verify_in));
    const auto rep = verify_reduction(f);
    json j;
    j["satisfiable"] = rep.satisfiable;
    j["fvsAtMostThreshold"] = rep.fvs_at_most_threshold;
    j["ifvsAtMostThreshold"] = rep.ifvs_at_most_threshold;
    j["equivalenceHolds"] = rep.equivalence_holds;
    j["spiderFree"] = rep.spider_free;
    j["maxDegree"] = rep.max_degree;
    j["threshold"] = rep.threshold;
    j["vertices"] = rep.vertices;
    j["edges"] = rep.edges;
    std::cout << (as_json ? j.dump() : j.dump(2)) << '\n';
    return rep.equivalence_holds ? kOk : kNo;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  bool as_json = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--json") as_json = true;
  auto report = [&](const char* kind, const std::exception& e, int code) {
    if (as_json) {
      json j;
      j["error"] = kind;
      j["message"] = e.what();
      std::cout << j.dump() << '\n';
    } else {
      std::cerr << kind << ": " << e.what() << '\n';
    }
    return code;
  };
  try {
    return run(argc, argv);
  } catch (const CapacityError& e) {
    return report("capacity", e, kCapacity);
  } catch (const ParseError& e) {
    return report("parse", e, kUsage);
  } catch (const ValidationError& e) {
    return report("validation", e, kUsage);
  } catch (const std::exception& e) {
    return report("internal", e, kUsage);
  }
}

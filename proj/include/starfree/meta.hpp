#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starfree/graph.hpp"

namespace starfree {

// Decomposition of a connected graph into bridge-joined parts. Each part is
// a union of bridge-deletion components plus the bridges between them; parts
// are classified CType (subcubic, not a cactus) or TType (everything else:
// non-subcubic, or treewidth-<=2 shapes such as trees, cycles and cacti).
// Overlapping same-kind parts are merged, so every remaining bridge joins a
// CType part to a TType part.

enum class PartKind { CType, TType };

struct Part {
  Graph graph;               // part without the bridges that leave it
  PartKind kind;
  std::vector<int> to_host;  // part vertex -> original vertex
};

struct ConnectingBridge {
  Edge edge;  // original vertex ids
  int part_a;
  int part_b;
};

struct PartitionedInstance {
  std::vector<Part> parts;
  std::vector<ConnectingBridge> connecting;
};

/// ValidationError on disconnected input.
PartitionedInstance decompose_ct(const Graph& g);

struct ProblemKind {
  enum class Tag { Fvs, Ifvs, Cvc, Colouring, MatchingCut };
  Tag tag;
  int k = 3;  // colour count for Colouring

  static ProblemKind fvs() { return {Tag::Fvs}; }
  static ProblemKind ifvs() { return {Tag::Ifvs}; }
  static ProblemKind cvc() { return {Tag::Cvc}; }
  static ProblemKind colouring(int k) { return {Tag::Colouring, k}; }
  static ProblemKind matching_cut() { return {Tag::MatchingCut}; }
};

const char* to_string(ProblemKind::Tag t);

struct RouteEntry {
  int part;
  int size;            // vertices handled by this engine call
  std::string engine;  // e.g. "ifvs-subcubic", "oracle", "brooks"
};

struct SolveCaps {
  int oracle = 18;
  int matching_cut = 16;
  int branch = 64;
};

/// Result of solve(); witnesses are always re-validated before reporting.
struct SolveReport {
  std::string problem;
  int n = 0, m = 0;
  bool feasible = true;            // optimization problems: a witness exists
  std::optional<int> value;        // |witness| for FVS/IFVS/CVC
  std::optional<bool> decision;    // Colouring (k given) and MatchingCut
  std::vector<int> witness;        // vertex witness
  std::vector<Edge> edge_witness;  // matching cut witness
  std::vector<int> colouring;      // colour per vertex when applicable
  std::vector<RouteEntry> routes;
  bool validated = false;
  double time_ms = 0.0;
};

/// Optimal value / decision with a validated witness. Splits into connected
/// components, applies the per-problem bridge rule, solves parts with the
/// best applicable engine and merges. MatchingCut rejects disconnected
/// inputs; Cvc answers NO when more than one component has edges.
SolveReport solve(ProblemKind problem, const Graph& g,
                  const SolveCaps& caps = {});

struct StructureReport {
  bool connected = true;
  bool subcubic = false;
  bool quasi_bridgeless = false;
  bool free_11qr = false;   // no S_{1,1,q,r} subgraph
  bool free_111r = false;   // no S_{1,1,1,r} subgraph
  int q = 1, r = 1;
  std::optional<int> treedepth;  // absent when over the exact cap
  bool treedepth_exact_flag = false;
  int bound_quadratic = 0;  // 2(q+r+3)^2 + 6
  int bound_linear = 0;     // 2r + 2
  bool premise_quadratic = false;  // not subcubic, quasi-bridgeless, free_11qr
  bool premise_linear = false;     // not subcubic, free_111r
  bool conclusion_quadratic = true;  // td <= bound when premise holds
  bool conclusion_linear = true;
  bool inconclusive = false;  // premise held but treedepth was over cap
};

/// Evaluates the treedepth-bound premises and conclusions for the given
/// pattern parameters. ValidationError on disconnected input.
StructureReport check_structure_theorem(const Graph& g, int q, int r,
                                        int td_cap = 20);

enum class ComplexityRow { PolynomialTime, NPComplete, Open };

const char* to_string(ComplexityRow r);

struct HClassification {
  ComplexityRow fvs, ifvs, cvc, colouring, matching_cut;
  // detected facts
  bool is_path = false;
  bool is_subdivided_claw = false;
  bool is_spider4 = false;        // subdivided K_{1,4}
  std::vector<int> spider_lengths;  // descending, when is_spider4
  bool has_cycle = false;
  int degree3_plus_count = 0;
  int max_degree = 0;
  bool contains_s2222 = false;
  bool small_tree_max_deg4 = false;  // tree, <= 7 vertices, max degree <= 4
};

/// Known complexity rows for the five problems on h-subgraph-free graphs,
/// for a connected pattern h with at most 12 vertices. Inputs matching no
/// known condition report Open.
HClassification classify_h(const Graph& h);

}  // namespace starfree

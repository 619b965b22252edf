#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starfree/cnf.hpp"
#include "starfree/graph.hpp"

namespace starfree {

/// The 12-vertex variable gadget. Triangles x-x'-a and y-y'-b carry the two
/// positive occurrences, the diamond on {z,s,t,c} (z and c nonadjacent) the
/// negative one; p and q close a fourth disjoint cycle with c and pin the
/// small separators around every degree-4 vertex. x, y and z keep degree 2
/// so each can absorb two clause-cycle edges.
struct VariableGadget {
  Graph graph;
  // vertex ids inside `graph`
  int x, x_prime, a, y, y_prime, b, z, s, t, c, p, q;
};

/// Builds the gadget and verifies its reconstruction checklist by brute
/// force (disjoint cycles, the two independent feedback sets, the forbidden
/// pairs, forced-path and separator properties, degree budget). Throws
/// std::logic_error if any item fails.
VariableGadget build_variable_gadget();

struct LiteralSlot {
  int variable;    // 1-based
  int occurrence;  // 0 = first positive, 1 = second positive, 2 = negative
  int vertex;      // vertex id in the output graph
};

struct ReductionOutput {
  Graph graph;
  int threshold;  // 4 * variable count
  std::vector<LiteralSlot> literal_map;
  std::uint64_t formula_digest;
};

/// Feedback-vertex-set instance from a validated 2P1N formula: one gadget
/// per variable, a hexagon per size-3 clause and a square per size-2 clause,
/// alternate clause-cycle vertices identified with the x/y/z gadget slots.
/// The output has maximum degree 4 and no subdivided-K_{1,4} with all
/// tentacles of length 2 (both checked on every build).
ReductionOutput reduce(const CnfFormula& f);

struct ReductionReport {
  bool satisfiable = false;
  bool fvs_at_most_threshold = false;
  bool ifvs_at_most_threshold = false;
  bool equivalence_holds = false;  // sat <=> fvs <= 4n <=> ifvs <= 4n
  bool spider_free = false;
  int max_degree = 0;
  int threshold = 0;
  int vertices = 0;
  int edges = 0;
};

/// End-to-end check of the reduction on one formula: SAT decision vs the
/// threshold decisions for feedback vertex set and its independent variant.
/// The satisfiable direction is certified constructively (the assignment
/// yields an independent set of size exactly 4n); the unsatisfiable
/// direction by an exhaustive threshold search.
ReductionReport verify_reduction(const CnfFormula& f);

}  // namespace starfree

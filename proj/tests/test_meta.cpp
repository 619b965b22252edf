#include <doctest.h>

#include <algorithm>

#include "enumerate.hpp"
#include "starfree/blocks.hpp"
#include "starfree/graph.hpp"
#include "starfree/meta.hpp"
#include "starfree/oracles.hpp"

using namespace starfree;
using testsupport::from_edges;

namespace {

Graph two_k5_bridge() {
  Graph g(10);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) {
      g.add_edge(u, v);
      g.add_edge(5 + u, 5 + v);
    }
  g.add_edge(0, 5);
  return g;
}

}  // namespace

TEST_CASE("decompose_ct kinds and merging") {
  // fully subcubic 2-edge-connected non-cactus graph: one C part
  const auto pet = testsupport::petersen();
  auto dec = decompose_ct(pet);
  REQUIRE(dec.parts.size() == 1);
  CHECK(dec.parts[0].kind == PartKind::CType);
  CHECK(dec.connecting.empty());

  // two K5s joined by a proper bridge merge into a single T part
  dec = decompose_ct(two_k5_bridge());
  REQUIRE(dec.parts.size() == 1);
  CHECK(dec.parts[0].kind == PartKind::TType);
  CHECK(dec.parts[0].graph.vertex_count() == 10);
  CHECK(dec.connecting.empty());

  // K5 joined by a bridge to a subcubic non-cactus part: one T, one C
  Graph g(11);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
  // K4 minus an edge with a path, kept subcubic and non-cactus
  for (auto [u, v] :
       {std::pair{5, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 8}, {8, 9}, {9, 10}})
    g.add_edge(u, v);
  g.add_edge(0, 9);
  dec = decompose_ct(g);
  REQUIRE(dec.parts.size() >= 2);
  int c_parts = 0, t_parts = 0;
  for (const auto& p : dec.parts)
    (p.kind == PartKind::CType ? c_parts : t_parts) += 1;
  CHECK(c_parts >= 1);
  CHECK(t_parts >= 1);
  for (const auto& cb : dec.connecting)
    CHECK(dec.parts[cb.part_a].kind != dec.parts[cb.part_b].kind);

  CHECK_THROWS_AS(decompose_ct(from_edges(4, {{0, 1}, {2, 3}})),
                  ValidationError);
}

TEST_CASE("solve fvs via bridge deletion") {
  const Graph tt = from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  const auto rep = solve(ProblemKind::fvs(), tt);
  CHECK(rep.value == 2);
  CHECK(rep.validated);
  CHECK(oracle_min_fvs(tt).size() == 2);
}

TEST_CASE("solve ifvs across a bridge avoids C-side endpoints") {
  // very nice cactus (two triangles + bridge) -- bridge -- subdivided
  // Petersen; the bridge lands on vertex 16, which splits Petersen edge 0-1
  // so every degree stays at three
  const auto pet = testsupport::petersen();
  Graph h(17);
  for (auto [u, v] :
       {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}})
    h.add_edge(u, v);
  for (const auto& [u, v] : pet.edges())
    if (!(u == 0 && v == 1)) h.add_edge(6 + u, 6 + v);
  h.add_edge(6, 16);
  h.add_edge(7, 16);
  h.add_edge(1, 16);  // the connecting bridge
  REQUIRE(h.is_connected());
  REQUIRE(h.subcubic());
  const auto rep = solve(ProblemKind::ifvs(), h, {18, 16, 64});
  REQUIRE(rep.feasible);
  const auto whole = oracle_min_ifvs(h, 18);
  REQUIRE(whole);
  CHECK(*rep.value == static_cast<int>(whole->size()));
  CHECK(is_independent_set(h, rep.witness));
  CHECK(is_feedback_vertex_set(h, rep.witness));
}

TEST_CASE("solve ifvs reports K4 components as infeasible") {
  const auto rep = solve(ProblemKind::ifvs(), make_complete(4));
  CHECK_FALSE(rep.feasible);
}

TEST_CASE("solve handles disconnected inputs componentwise") {
  // two disjoint triangles
  const Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 0},
                                 {3, 4}, {4, 5}, {5, 3}});
  const auto fvs = solve(ProblemKind::fvs(), g);
  CHECK(fvs.value == 2);
  const auto ifvs = solve(ProblemKind::ifvs(), g);
  REQUIRE(ifvs.feasible);
  CHECK(*ifvs.value == 2);
  CHECK(is_independent_set(g, ifvs.witness));
  const auto col = solve(ProblemKind::colouring(3), g);
  CHECK(col.decision == true);
  CHECK(is_proper_colouring(g, col.colouring));
}

TEST_CASE("solve cvc forces proper bridge endpoints") {
  const Graph tt = from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  const auto rep = solve(ProblemKind::cvc(), tt);
  REQUIRE(rep.feasible);
  const auto whole = oracle_min_cvc(tt);
  REQUIRE(whole);
  CHECK(*rep.value == static_cast<int>(whole->size()));
  CHECK(std::binary_search(rep.witness.begin(), rep.witness.end(), 0));
  CHECK(std::binary_search(rep.witness.begin(), rep.witness.end(), 3));

  // disconnected: no unless only one component has edges
  CHECK_FALSE(solve(ProblemKind::cvc(), from_edges(4, {{0, 1}, {2, 3}}))
                  .feasible);
  const auto lonely = solve(ProblemKind::cvc(), from_edges(4, {{0, 1}}));
  CHECK(lonely.feasible);
  CHECK(*lonely.value == 1);
}

TEST_CASE("solve colouring merges across bridges") {
  // two C5s joined by a bridge are 3-colourable
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 1) % 5);
  }
  g.add_edge(0, 5);
  const auto rep = solve(ProblemKind::colouring(3), g);
  CHECK(rep.decision == true);
  CHECK(is_proper_colouring(g, rep.colouring));
  CHECK(solve(ProblemKind::colouring(2), g).decision == false);

  // K5 -- bridge -- K5 needs 5 colours; the merge walk must fix the clash
  const auto hard = solve(ProblemKind::colouring(5), two_k5_bridge());
  CHECK(hard.decision == true);
  CHECK(is_proper_colouring(two_k5_bridge(), hard.colouring));
}

TEST_CASE("solve matching cut") {
  const Graph tt = from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  const auto rep = solve(ProblemKind::matching_cut(), tt);
  CHECK(rep.decision == true);
  REQUIRE(rep.edge_witness.size() == 1);
  CHECK(rep.edge_witness[0] == Edge{0, 3});

  CHECK(solve(ProblemKind::matching_cut(), make_complete(4)).decision ==
        false);
  CHECK_THROWS_AS(solve(ProblemKind::matching_cut(),
                        from_edges(4, {{0, 1}, {2, 3}})),
                  ValidationError);
}

TEST_CASE("structure theorem report") {
  // K5: not subcubic, quasi-bridgeless, too small to contain the patterns
  auto rep = check_structure_theorem(make_complete(5), 2, 1);
  CHECK_FALSE(rep.subcubic);
  CHECK(rep.quasi_bridgeless);
  CHECK(rep.free_11qr);   // S_{1,1,2,1} has 6 vertices
  CHECK(rep.premise_quadratic);
  CHECK(rep.bound_quadratic == 2 * 6 * 6 + 6);
  CHECK(rep.conclusion_quadratic);  // td(K5)=5 <= 78
  CHECK(rep.treedepth == 5);

  // K5 contains K_{1,4}: the (1,1) premise can never hold off subcubic
  rep = check_structure_theorem(make_complete(5), 1, 1);
  CHECK_FALSE(rep.free_11qr);
  CHECK_FALSE(rep.premise_quadratic);

  // subcubic input: premises off
  rep = check_structure_theorem(testsupport::petersen(), 1, 1);
  CHECK(rep.subcubic);
  CHECK_FALSE(rep.premise_quadratic);
  CHECK_FALSE(rep.premise_linear);
}

TEST_CASE("classify_h reproduces the stated rows") {
  const auto p6 = classify_h(make_path(6));
  CHECK(p6.fvs == ComplexityRow::PolynomialTime);
  CHECK(p6.ifvs == ComplexityRow::PolynomialTime);
  CHECK(p6.cvc == ComplexityRow::PolynomialTime);
  CHECK(p6.colouring == ComplexityRow::PolynomialTime);
  CHECK(p6.matching_cut == ComplexityRow::PolynomialTime);

  const auto c4 = classify_h(make_cycle(4));
  CHECK(c4.fvs == ComplexityRow::NPComplete);
  CHECK(c4.cvc == ComplexityRow::NPComplete);
  CHECK(c4.colouring == ComplexityRow::NPComplete);
  CHECK(c4.matching_cut == ComplexityRow::NPComplete);

  const auto s2222 = classify_h(make_spider(2, 2, 2, 2));
  CHECK(s2222.fvs == ComplexityRow::NPComplete);
  CHECK(s2222.ifvs == ComplexityRow::NPComplete);
  CHECK(s2222.colouring == ComplexityRow::NPComplete);
  CHECK(s2222.cvc == ComplexityRow::Open);
  CHECK(s2222.matching_cut == ComplexityRow::Open);

  const auto k15 = classify_h(make_star(5));
  CHECK(k15.fvs == ComplexityRow::NPComplete);
  CHECK(k15.cvc == ComplexityRow::NPComplete);
  CHECK(k15.colouring == ComplexityRow::NPComplete);

  const auto s112r = classify_h(make_spider(1, 1, 2, 3));
  CHECK(s112r.fvs == ComplexityRow::PolynomialTime);
  CHECK(s112r.cvc == ComplexityRow::PolynomialTime);

  // S_{1,2,2,2}: one short leg only; no known row for any of the five
  const auto s1222 = classify_h(make_spider(1, 2, 2, 2));
  CHECK(s1222.fvs == ComplexityRow::Open);
  CHECK(s1222.cvc == ComplexityRow::Open);
  // 8-vertex tree, max degree 4: outside the small-tree window
  CHECK(s1222.colouring == ComplexityRow::Open);

  // a 7-vertex tree with two branch vertices: hard for feedback problems,
  // tractable for colouring by the small-tree row
  const Graph h_tree = from_edges(
      7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {1, 6}});
  const auto two_branch = classify_h(h_tree);
  CHECK(two_branch.fvs == ComplexityRow::NPComplete);
  CHECK(two_branch.colouring == ComplexityRow::PolynomialTime);
  CHECK(two_branch.cvc == ComplexityRow::Open);

  CHECK_THROWS_AS(classify_h(make_path(13)), CapacityError);
  CHECK_THROWS_AS(classify_h(from_edges(2, {})), ValidationError);
}

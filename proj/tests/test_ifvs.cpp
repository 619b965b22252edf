#include <doctest.h>

#include <algorithm>

#include "enumerate.hpp"
#include "starfree/blocks.hpp"
#include "starfree/graph.hpp"
#include "starfree/ifvs.hpp"
#include "starfree/oracles.hpp"

using namespace starfree;
using testsupport::from_edges;

TEST_CASE("min_fvs_exact matches the subset oracle on small graphs") {
  CHECK(min_fvs_exact(make_complete(4)).size() == 2);
  CHECK(min_fvs_exact(make_path(5)).empty());
  // a very nice cactus needs one vertex per cycle
  const Graph g = random_nice_cactus(12, 3);
  CHECK(min_fvs_exact(g).size() == oracle_min_fvs(g).size());
}

TEST_CASE("normalize_degree3 on forced shapes") {
  // triangle with a pendant path; the only degree-3 vertex is 2
  const Graph paw = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  auto f = normalize_degree3(paw, {0});
  CHECK(f == std::vector<int>{2});

  // already normalized sets come back unchanged
  CHECK(normalize_degree3(paw, {2}) == std::vector<int>{2});

  // theta graph: branch vertices 0,1 joined by paths through 2 / 3,4 / 5,6
  const Graph theta = from_edges(
      7, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 1}});
  f = normalize_degree3(theta, {3});
  REQUIRE(f.size() == 1);
  CHECK((f[0] == 0 || f[0] == 1));
  CHECK(is_feedback_vertex_set(theta, f));

  CHECK_THROWS_AS(normalize_degree3(make_cycle(4), {0}), ValidationError);
  CHECK_THROWS_AS(normalize_degree3(make_path(4), {}), ValidationError);
}

TEST_CASE("make_nice_cactus clears shared-edge cycles") {
  // two triangles sharing an edge, plus a pendant on each degree-2 vertex
  const Graph g = from_edges(
      6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 5}});
  REQUIRE(g.subcubic());
  const auto f0 = min_fvs_exact(g);
  REQUIRE(f0.size() == 1);
  TransformState st{&g, normalize_degree3(g, f0), {}};
  st.validate();
  st = make_nice_cactus(std::move(st));
  CHECK(st.j.size() == 1);  // exactly one vertex moves into J
  const Graph h = remove_vertices(g, st.j);
  const auto klass = cactus_classify(h);
  CHECK(klass != CactusClass::NotCactus);
  CHECK(klass != CactusClass::Cactus);  // nice or better

  // an input that is already a nice cactus returns immediately
  const Graph paw = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  TransformState st2{&paw, normalize_degree3(paw, min_fvs_exact(paw)), {}};
  st2 = make_nice_cactus(std::move(st2));
  CHECK(st2.j.empty());
}

TEST_CASE("complete_ifvs on a branching nice cactus") {
  // central C5 with two pendant triangles and a tree vertex in between
  Graph g(13);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  // triangle at 0 via bridge, triangle at 2 via a path through 10
  for (auto [u, v] :
       {std::pair{5, 6}, {6, 7}, {7, 5}, {0, 5}, {8, 9}, {9, 10}, {10, 8},
        {2, 11}, {11, 8}, {3, 12}})
    g.add_edge(u, v);
  REQUIRE(g.subcubic());
  REQUIRE(g.is_connected());
  const auto res = min_ifvs_subcubic(g);
  REQUIRE(res.outcome == IfvsResult::Outcome::Solution);
  CHECK(res.set.size() == oracle_min_fvs(g).size());
  CHECK(res.degree3_only);
  CHECK(is_independent_set(g, res.set));
  CHECK(is_feedback_vertex_set(g, res.set));
}

TEST_CASE("min_ifvs_subcubic endpoints") {
  CHECK(min_ifvs_subcubic(make_complete(4)).outcome ==
        IfvsResult::Outcome::NoIfvsK4);

  const auto cycle = min_ifvs_subcubic(make_cycle(6));
  REQUIRE(cycle.outcome == IfvsResult::Outcome::Solution);
  CHECK(cycle.set.size() == 1);
  CHECK_FALSE(cycle.degree3_only);

  const auto tree = min_ifvs_subcubic(make_path(7));
  CHECK(tree.set.empty());

  const auto pet = min_ifvs_subcubic(testsupport::petersen());
  REQUIRE(pet.outcome == IfvsResult::Outcome::Solution);
  CHECK(pet.set.size() == oracle_min_fvs(testsupport::petersen()).size());
  CHECK(pet.degree3_only);
  CHECK(is_independent_set(testsupport::petersen(), pet.set));

  CHECK_THROWS_AS(min_ifvs_subcubic(make_star(4)), ValidationError);
  CHECK_THROWS_AS(min_ifvs_subcubic(from_edges(4, {{0, 1}, {2, 3}})),
                  ValidationError);
}

TEST_CASE("very nice cactus route uses a degree-2 vertex and optimal size") {
  for (int n = 3; n <= 10; ++n) {
    for (const auto& g : testsupport::very_nice_cacti(n)) {
      const auto res = min_ifvs_subcubic(g);
      REQUIRE(res.outcome == IfvsResult::Outcome::Solution);
      CHECK(res.set.size() == cactus_cycles(g).size());
      CHECK(res.set.size() == oracle_min_fvs(g).size());
      CHECK_FALSE(res.degree3_only);
      CHECK(is_independent_set(g, res.set));
      CHECK(is_feedback_vertex_set(g, res.set));
    }
  }
}

TEST_CASE("subcubic pipeline matches the oracle on random graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = random_subcubic(6 + static_cast<int>(seed % 11),
                                    static_cast<int>(seed % 5), seed);
    if (!g.is_connected()) continue;
    if (g.vertex_count() == 4 && g.edge_count() == 6) continue;
    const auto res = min_ifvs_subcubic(g);
    REQUIRE(res.outcome == IfvsResult::Outcome::Solution);
    CHECK(res.set.size() == oracle_min_fvs(g).size());
    CHECK(is_independent_set(g, res.set));
    CHECK(is_feedback_vertex_set(g, res.set));
    CHECK(res.degree3_only ==
          (cactus_classify(g) != CactusClass::VeryNiceCactus));
  }
}

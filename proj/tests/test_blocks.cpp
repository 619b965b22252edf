#include <doctest.h>

#include <algorithm>

#include "enumerate.hpp"
#include "starfree/blocks.hpp"
#include "starfree/graph.hpp"

using namespace starfree;
using testsupport::all_graphs;
using testsupport::from_edges;

namespace {

// definition-level bridge check: deleting the edge splits its component
bool bridge_by_definition(const Graph& g, Edge e) {
  Graph h(g.vertex_count());
  for (const auto& [u, v] : g.edges())
    if (Edge{u, v} != e) h.add_edge(u, v);
  const auto dist = bfs_distances(h, {e.first});
  return dist[e.second] == -1;
}

}  // namespace

TEST_CASE("bridges on the named shapes") {
  const Graph p3 = make_path(3);
  auto d = bridges_and_blocks(p3);
  CHECK(d.bridges.size() == 2);
  CHECK(d.proper_bridges.empty());  // both bridges touch a leaf

  // two triangles joined by one edge
  const Graph tt = from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  d = bridges_and_blocks(tt);
  REQUIRE(d.bridges.size() == 1);
  CHECK(d.bridges[0] == Edge{0, 3});
  CHECK(d.proper_bridges == d.bridges);

  d = bridges_and_blocks(make_cycle(5));
  CHECK(d.bridges.empty());
  CHECK(d.blocks.size() == 1);
}

TEST_CASE("every edge lies in exactly one block") {
  const Graph g = from_edges(8, {{0, 1},
                                 {1, 2},
                                 {2, 0},
                                 {2, 3},
                                 {3, 4},
                                 {4, 5},
                                 {5, 3},
                                 {5, 6},
                                 {6, 7}});
  const auto d = bridges_and_blocks(g);
  std::size_t total = 0;
  for (const auto& es : d.block_edges) total += es.size();
  CHECK(total == static_cast<std::size_t>(g.edge_count()));
}

TEST_CASE("bridges agree with recomputation on every graph up to 7 vertices") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : all_graphs(n)) {
      const auto d = bridges_and_blocks(g);
      for (const auto& e : g.edges()) {
        const bool listed =
            std::binary_search(d.bridges.begin(), d.bridges.end(), e);
        CHECK(listed == bridge_by_definition(g, e));
      }
    }
  }
}

TEST_CASE("cactus classification") {
  CHECK(cactus_classify(make_cycle(4)) == CactusClass::VeryNiceCactus);

  // two triangles sharing one vertex: a cactus, but cycles share a vertex
  const Graph bowtie =
      from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  CHECK(cactus_classify(bowtie) == CactusClass::Cactus);

  CHECK(cactus_classify(make_complete(4)) == CactusClass::NotCactus);

  // two triangles joined by a bridge: all vertices on exactly one cycle
  const Graph tt = from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  CHECK(cactus_classify(tt) == CactusClass::VeryNiceCactus);

  // pendant path breaks the very-nice property
  const Graph paw = from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  CHECK(cactus_classify(paw) == CactusClass::NiceCactus);

  CHECK_THROWS_AS(cactus_classify(Graph(3)), ValidationError);
}

TEST_CASE("very nice cactus label matches explicit cycle membership, n <= 12") {
  // derived via the independent enumeration of subcubic very nice cacti
  for (int n = 3; n <= 12; ++n)
    for (const auto& g : testsupport::very_nice_cacti(n))
      CHECK(cactus_classify(g) == CactusClass::VeryNiceCactus);
}

TEST_CASE("two_edge_components") {
  const Graph tt = from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  const auto comps = two_edge_components(tt);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
  CHECK(comps[1] == std::vector<int>{3, 4, 5});
}

#include <doctest.h>

#include "enumerate.hpp"
#include "starfree/graph.hpp"

using namespace starfree;
using testsupport::from_edges;

TEST_CASE("parse_graph basic forms") {
  const Graph p3 = parse_graph("3\n0 1\n1 2\n");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));

  const Graph k4 = parse_graph("4\n0 1\n1 2\n2 3\n3 0\n0 2\n1 3\n");
  CHECK(k4.is_complete());
  CHECK(k4.edge_count() == 6);

  CHECK_THROWS_AS(parse_graph("2\n0 0\n"), ValidationError);  // self-loop
  CHECK_THROWS_AS(parse_graph("2\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("2\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("parse_graph comments, blanks, duplicates") {
  const Graph g = parse_graph("# header\n3\n\n0 1   # chatter\n0 1\n1 2\n");
  CHECK(g.edge_count() == 2);
}

TEST_CASE("format_graph round-trips with sorted edges") {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 0);
  const auto text = format_graph(g);
  CHECK(text == "4\n0 1\n0 2\n1 3\n");
  const Graph back = parse_graph(text);
  CHECK(back.edges() == g.edges());
}

TEST_CASE("connected_components splits and back-maps") {
  // P3 + C3, disjoint
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].graph.vertex_count() == 3);
  CHECK(comps[1].graph.vertex_count() == 3);
  CHECK(comps[1].graph.edge_count() == 3);
  CHECK(comps[1].to_parent == std::vector<int>{3, 4, 5});

  const auto one = connected_components(make_cycle(5));
  CHECK(one.size() == 1);
  CHECK(one[0].graph.edge_count() == 5);

  const auto singletons = connected_components(Graph(4));
  CHECK(singletons.size() == 4);
}

TEST_CASE("subdivide") {
  const Graph c6 = subdivide(make_cycle(3), 1);
  CHECK(c6.vertex_count() == 6);
  CHECK(c6.is_cycle_graph());

  const Graph k4s = subdivide(make_complete(4), 2);
  CHECK(k4s.vertex_count() == 16);
  CHECK(k4s.edge_count() == 18);

  const Graph p5 = subdivide(make_path(2), 3);
  CHECK(p5.vertex_count() == 5);
  CHECK(p5.max_degree() == 2);
  CHECK(p5.is_tree());
}

TEST_CASE("generators") {
  const Graph spider = make_spider(1, 1, 1, 1);
  CHECK(spider.vertex_count() == 5);
  CHECK(spider.degree(0) == 4);  // K_{1,4}

  const Graph s2222 = make_spider(2, 2, 2, 2);
  CHECK(s2222.vertex_count() == 9);
  CHECK(s2222.max_degree() == 4);

  const Graph star = make_star(5);
  CHECK(star.vertex_count() == 6);
  CHECK(star.degree(0) == 5);

  CHECK_THROWS_AS(make_spider(0, 1, 1, 1), ValidationError);
}

TEST_CASE("seeded generators are reproducible") {
  const Graph a = random_subcubic(20, 6, 42);
  const Graph b = random_subcubic(20, 6, 42);
  CHECK(a.edges() == b.edges());
  CHECK(a.subcubic());
  CHECK(a.is_connected());

  const Graph c = random_nice_cactus(14, 7);
  const Graph d = random_nice_cactus(14, 7);
  CHECK(c.edges() == d.edges());
  CHECK(c.is_connected());

  const Graph e = random_quasi_bridgeless(12, 3);
  CHECK(e.is_connected());
  CHECK(e.edges() == random_quasi_bridgeless(12, 3).edges());
}

TEST_CASE("label bookkeeping survives induced subgraphs") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.set_label(1, "mid");
  const Graph h = induced_subgraph(g, {1, 2});
  CHECK(h.label(0) == "mid");
  CHECK(h.label(1) == "");
}

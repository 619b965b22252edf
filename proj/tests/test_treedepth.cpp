#include <doctest.h>

#include <algorithm>

#include "enumerate.hpp"
#include "starfree/graph.hpp"
#include "starfree/treedepth.hpp"

using namespace starfree;
using testsupport::all_graphs;

namespace {

// oracle: plain recursion over all removal orders, no memo
int naive_td(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    int best = 0;
    for (const auto& c : comps) best = std::max(best, naive_td(c.graph));
    return best;
  }
  if (n == 1) return 1;
  int best = n;
  for (int v = 0; v < n; ++v)
    best = std::min(best, 1 + naive_td(remove_vertices(g, {v})));
  return best;
}

}  // namespace

TEST_CASE("treedepth on the named shapes") {
  CHECK(treedepth_exact(make_complete(1)) == 1);
  CHECK(treedepth_exact(make_complete(4)) == 4);
  // paths: ceil(log2(n+1)), cross-checked against the naive recursion
  const Graph p7 = make_path(7);
  CHECK(naive_td(p7) == 3);
  CHECK(treedepth_exact(p7) == 3);
  CHECK(treedepth_exact(make_path(8)) == 4);
}

TEST_CASE("treedepth matches the naive recursion up to 7 vertices") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : all_graphs(n))
      CHECK(treedepth_exact(g) == naive_td(g));
}

TEST_CASE("treedepth capacity and estimate fallback") {
  const Graph big = make_path(25);
  CHECK_THROWS_AS(treedepth_exact(big), CapacityError);
  const auto est = treedepth_estimate(big);
  CHECK_FALSE(est.exact);
  CHECK(est.value >= treedepth_exact(make_path(20), 20));  // upper bound
  CHECK(treedepth_estimate(make_path(7)).exact);
}

TEST_CASE("longest path on the named shapes") {
  CHECK(longest_path_length(make_cycle(5)) == 4);
  CHECK(longest_path_length(make_complete(4)) == 3);
  CHECK(longest_path_length(make_spider(1, 1, 1, 1)) == 2);  // K_{1,4}
  CHECK_THROWS_AS(longest_path_length(make_path(30)), CapacityError);
}

TEST_CASE("a graph of treedepth d has a path on d vertices, n <= 7") {
  // d vertices = d-1 edges; the edge-count form fails already on triangles
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : all_graphs(n))
      CHECK(longest_path_length(g) + 1 >= treedepth_exact(g));
}

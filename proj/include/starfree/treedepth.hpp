#pragma once

#include "starfree/graph.hpp"

namespace starfree {

/// Exact treedepth by memoized recursion over connected vertex subsets:
/// td(empty) = 0, td(K1) = 1, td(connected g) = 1 + min_v td(g - v),
/// td(disconnected) = max over components. Throws CapacityError when
/// vertex_count() > cap.
int treedepth_exact(const Graph& g, int cap = 20);

struct TreedepthEstimate {
  int value;
  bool exact;
};

/// treedepth_exact under the cap; otherwise a DFS-tree-height upper bound
/// flagged as not exact.
TreedepthEstimate treedepth_estimate(const Graph& g, int cap = 20);

/// Exact maximum path length in edges, by pruned DFS. CapacityError above cap.
int longest_path_length(const Graph& g, int cap = 20);

}  // namespace starfree

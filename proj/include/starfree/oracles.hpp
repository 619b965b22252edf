#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "starfree/graph.hpp"

namespace starfree {

// Reference solvers. Subset enumeration answers everything up to the subset
// cap with lexicographically least optimal witnesses; a cycle-branching
// search extends FVS/IFVS to larger sparse instances. Caps are parameters,
// not constants.

inline constexpr int kSubsetCap = 18;
inline constexpr int kBranchCap = 64;
inline constexpr int kMatchingCutCap = 16;

/// Minimum feedback vertex set. Subset route for n <= kSubsetCap, branching
/// route above it; CapacityError when n > cap.
std::vector<int> oracle_min_fvs(const Graph& g, int cap = kSubsetCap);

/// Minimum independent feedback vertex set, or nullopt if none exists.
std::optional<std::vector<int>> oracle_min_ifvs(const Graph& g,
                                                int cap = kSubsetCap);

/// Minimum connected vertex cover; nullopt when more than one component
/// contains edges. Isolated vertices are ignored.
std::optional<std::vector<int>> oracle_min_cvc(const Graph& g,
                                               int cap = kSubsetCap);

/// Minimum connected vertex cover constrained to contain `required`.
std::optional<std::vector<int>> oracle_min_cvc_with(
    const Graph& g, const std::vector<int>& required, int cap = kSubsetCap);

/// Chromatic number by iterative deepening over k with backtracking.
int oracle_chromatic(const Graph& g, int cap = kSubsetCap);

/// Proper k-colouring witness, or nullopt.
std::optional<std::vector<int>> try_colouring(const Graph& g, int k,
                                              int cap = kSubsetCap);

/// A matching cut of a connected graph, or nullopt. Enumerates vertex
/// bipartitions and keeps the ones whose crossing edges form a matching.
/// ValidationError on disconnected input.
std::optional<std::vector<Edge>> oracle_matching_cut(const Graph& g,
                                                     int cap = kMatchingCutCap);

// Threshold decisions used where exact minima are not needed (the branching
// search proves both directions).
bool fvs_decision(const Graph& g, int k);
bool ifvs_decision(const Graph& g, int k);

/// Minimum FVS via the cycle-branching search with a witness; an exact route
/// independent of the subset enumeration above, so the two cross-check.
std::vector<int> branching_min_fvs(const Graph& g);

// Witness validators, independent of the solver paths.
bool is_feedback_vertex_set(const Graph& g, const std::vector<int>& w);
bool is_independent_set(const Graph& g, const std::vector<int>& w);
bool is_vertex_cover(const Graph& g, const std::vector<int>& w);
bool induces_connected(const Graph& g, const std::vector<int>& w);
bool is_proper_colouring(const Graph& g, const std::vector<int>& colour);
bool is_matching(const Graph& g, const std::vector<Edge>& edges);
bool edge_removal_disconnects(const Graph& g, const std::vector<Edge>& edges);

}  // namespace starfree

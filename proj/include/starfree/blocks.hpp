#pragma once

#include <utility>
#include <vector>

#include "starfree/graph.hpp"

namespace starfree {

/// Blocks (maximal 2-connected subgraphs and bridge edges), bridges, and the
/// block-cut incidence, from one DFS with low-links.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;       // vertex set per block
  std::vector<std::vector<Edge>> block_edges; // edge set per block
  std::vector<Edge> bridges;
  std::vector<Edge> proper_bridges;  // bridges where neither endpoint is a leaf
  std::vector<int> cut_vertices;
  std::vector<std::pair<int, int>> block_cut_incidence;  // (block, cutvertex)
};

BlockDecomposition bridges_and_blocks(const Graph& g);

bool is_cut_vertex(const Graph& g, int v);

/// Components left after deleting all bridges, ascending by smallest member.
std::vector<std::vector<int>> two_edge_components(const Graph& g);

enum class CactusClass { NotCactus, Cactus, NiceCactus, VeryNiceCactus };

/// Strongest applicable class for a connected graph:
/// cactus = no two cycles share an edge, nice = none share a vertex,
/// very nice = every vertex lies on exactly one cycle.
/// Throws ValidationError on disconnected input.
CactusClass cactus_classify(const Graph& g);

const char* to_string(CactusClass c);

/// Vertex sets of the cycles of a cactus (its non-edge blocks).
std::vector<std::vector<int>> cactus_cycles(const Graph& g);

}  // namespace starfree

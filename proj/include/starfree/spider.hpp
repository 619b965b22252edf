#pragma once

#include <array>
#include <optional>
#include <vector>

#include "starfree/graph.hpp"

namespace starfree {

/// Tentacle lengths (in edges) of a subdivided K_{1,4}; canonical form is
/// sorted descending.
struct SpiderPattern {
  std::array<int, 4> lengths;  // descending

  static SpiderPattern of(int w, int x, int y, int z);
  int pattern_vertices() const {
    return 1 + lengths[0] + lengths[1] + lengths[2] + lengths[3];
  }
};

Graph spider_graph(const SpiderPattern& p);  // same layout as make_spider

/// Map from pattern vertex to host vertex; injective and edge preserving.
using Embedding = std::vector<int>;

bool embedding_valid(const Graph& host, const Graph& pattern,
                     const Embedding& emb);

/// Backtracking subgraph (not induced) search. Deterministic given the fixed
/// vertex orderings. Patterns above `pattern_cap` vertices raise
/// CapacityError; the search is exponential in pattern size.
std::optional<Embedding> contains_subgraph(const Graph& host,
                                           const Graph& pattern,
                                           int pattern_cap = 12);

struct SpiderEmbedding {
  int centre;
  std::array<std::vector<int>, 4> tentacles;  // host vertices, centre excluded

  Embedding as_embedding(const SpiderPattern& p) const;
};

/// Specialized spider search: for each candidate centre of degree >= 4,
/// grow four internally vertex-disjoint paths of at least the required
/// lengths. Agrees with contains_subgraph on spider_graph(p).
std::optional<SpiderEmbedding> contains_spider(const Graph& host,
                                               const SpiderPattern& p);

struct SpiderFreeResult {
  bool free;
  std::optional<SpiderEmbedding> witness;  // present when not free
};

SpiderFreeResult spider_free(const Graph& host, const SpiderPattern& p);

}  // namespace starfree

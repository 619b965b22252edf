#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starfree/errors.hpp"

namespace starfree {

using Edge = std::pair<int, int>;

/// Undirected simple graph with dense vertex ids 0..n-1.
/// No self-loops, no parallel edges; adjacency lists are kept sorted.
/// Graphs are cheap values: operations return new graphs rather than
/// mutating shared ones, so const references can be used concurrently.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  /// Adds {u,v}; duplicate edges collapse. Throws ValidationError on a
  /// self-loop or an out-of-range endpoint.
  void add_edge(int u, int v);

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool subcubic() const { return max_degree() <= 3; }

  /// Edges as (u,v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Optional per-vertex text labels (used for gadget terminals).
  void set_label(int v, const std::string& label);
  const std::string& label(int v) const;

  bool is_connected() const;
  bool is_acyclic() const;
  bool is_tree() const { return is_connected() && m_ == vertex_count() - 1; }
  bool is_cycle_graph() const;
  bool is_complete() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  int m_ = 0;
};

struct ComponentSplit {
  Graph graph;
  std::vector<int> to_parent;  // component vertex i is parent vertex to_parent[i]
};

/// Connected components in ascending order of their smallest vertex id.
std::vector<ComponentSplit> connected_components(const Graph& g);

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Induced subgraph after deleting `drop`; optional back-map to parent ids.
Graph remove_vertices(const Graph& g, const std::vector<int>& drop,
                      std::vector<int>* to_parent = nullptr);

/// Replaces every edge by a path with k internal vertices (k >= 1).
/// Original vertex ids are preserved; new ids follow in edge order.
Graph subdivide(const Graph& g, int k);

/// Parses the edge-list format: '#' lines are comments, the first
/// remaining line is the vertex count, each following line is "u v".
Graph parse_graph(const std::string& text);

/// Inverse of parse_graph; edges come out sorted lexicographically.
std::string format_graph(const Graph& g);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int leaves);  // K_{1,leaves}

/// Four paths of w,x,y,z edges sharing one endpoint (the degree-4 centre).
/// Vertex 0 is the centre; each tentacle is a consecutive id range.
Graph make_spider(int w, int x, int y, int z);

// Seeded random generators; identical seeds give identical graphs.
Graph random_nice_cactus(int target_n, std::uint64_t seed);
Graph random_subcubic(int n, int extra_edges, std::uint64_t seed);
Graph random_quasi_bridgeless(int target_n, std::uint64_t seed);

/// BFS distances from a set of sources (-1 for unreachable vertices).
std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources);

}  // namespace starfree

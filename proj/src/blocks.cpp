#include "starfree/blocks.hpp"

#include <algorithm>

namespace starfree {

namespace {

struct DfsState {
  const Graph& g;
  std::vector<int> disc, low, parent;
  std::vector<char> is_cut;
  std::vector<Edge> edge_stack;
  BlockDecomposition out;
  int timer = 0;

  explicit DfsState(const Graph& g)
      : g(g),
        disc(g.vertex_count(), -1),
        low(g.vertex_count(), 0),
        parent(g.vertex_count(), -1),
        is_cut(g.vertex_count(), 0) {}

  void pop_block(const Edge& until) {
    std::vector<Edge> es;
    for (;;) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      es.push_back(e);
      if (e == until) break;
    }
    std::vector<int> vs;
    for (const auto& [a, b] : es) {
      vs.push_back(a);
      vs.push_back(b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::sort(es.begin(), es.end());
    out.blocks.push_back(std::move(vs));
    out.block_edges.push_back(std::move(es));
  }

  void run(int root) {
    // iterative DFS; (vertex, index into adjacency)
    std::vector<std::pair<int, int>> stack;
    disc[root] = low[root] = timer++;
    stack.emplace_back(root, 0);
    int root_children = 0;
    while (!stack.empty()) {
      const int u = stack.back().first;
      if (stack.back().second < static_cast<int>(g.neighbors(u).size())) {
        int v = g.neighbors(u)[stack.back().second++];
        if (v == parent[u]) continue;
        if (disc[v] == -1) {
          parent[v] = u;
          Edge e{std::min(u, v), std::max(u, v)};
          edge_stack.push_back(e);
          disc[v] = low[v] = timer++;
          if (u == root) ++root_children;
          stack.emplace_back(v, 0);
        } else if (disc[v] < disc[u]) {
          edge_stack.push_back({std::min(u, v), std::max(u, v)});
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) break;
        int p = stack.back().first;
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= disc[p]) {
          if (p != root || root_children > 1) is_cut[p] = 1;
          pop_block({std::min(p, u), std::max(p, u)});
        }
        if (low[u] > disc[p])
          out.bridges.push_back({std::min(p, u), std::max(p, u)});
      }
    }
  }
};

}  // namespace

BlockDecomposition bridges_and_blocks(const Graph& g) {
  DfsState s(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (s.disc[v] == -1) s.run(v);
  std::sort(s.out.bridges.begin(), s.out.bridges.end());
  for (const auto& [u, v] : s.out.bridges)
    if (g.degree(u) > 1 && g.degree(v) > 1)
      s.out.proper_bridges.push_back({u, v});
  for (int v = 0; v < g.vertex_count(); ++v)
    if (s.is_cut[v]) s.out.cut_vertices.push_back(v);
  for (int b = 0; b < static_cast<int>(s.out.blocks.size()); ++b)
    for (int v : s.out.blocks[b])
      if (s.is_cut[v]) s.out.block_cut_incidence.emplace_back(b, v);
  return s.out;
}

bool is_cut_vertex(const Graph& g, int v) {
  const auto d = bridges_and_blocks(g);
  return std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), v);
}

std::vector<std::vector<int>> two_edge_components(const Graph& g) {
  const auto d = bridges_and_blocks(g);
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  auto is_bridge = [&](int u, int v) {
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(d.bridges.begin(), d.bridges.end(), e);
  };
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u))
        if (comp[v] == -1 && !is_bridge(u, v)) {
          comp[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }
  std::vector<std::vector<int>> members(count);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);
  return members;
}

CactusClass cactus_classify(const Graph& g) {
  if (!g.is_connected())
    throw ValidationError("cactus classification requires a connected graph");
  const auto d = bridges_and_blocks(g);
  // a block is a cycle iff it has as many edges as vertices
  std::vector<int> cycles_at(g.vertex_count(), 0);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto nv = d.blocks[b].size();
    const auto ne = d.block_edges[b].size();
    if (ne > nv) return CactusClass::NotCactus;  // some edge lies on two cycles
    if (ne == nv)
      for (int v : d.blocks[b]) ++cycles_at[v];
  }
  bool nice = true, very_nice = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (cycles_at[v] > 1) nice = false;
    if (cycles_at[v] != 1) very_nice = false;
  }
  if (!nice) return CactusClass::Cactus;
  return very_nice ? CactusClass::VeryNiceCactus : CactusClass::NiceCactus;
}

const char* to_string(CactusClass c) {
  switch (c) {
    case CactusClass::NotCactus: return "not-cactus";
    case CactusClass::Cactus: return "cactus";
    case CactusClass::NiceCactus: return "nice-cactus";
    case CactusClass::VeryNiceCactus: return "very-nice-cactus";
  }
  return "?";
}

std::vector<std::vector<int>> cactus_cycles(const Graph& g) {
  const auto d = bridges_and_blocks(g);
  std::vector<std::vector<int>> cycles;
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    if (d.block_edges[b].size() == d.blocks[b].size())
      cycles.push_back(d.blocks[b]);
  return cycles;
}

}  // namespace starfree

#include "starfree/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace starfree {

namespace {

struct TdSolver {
  std::vector<std::uint32_t> adj;
  std::unordered_map<std::uint32_t, int> memo;  // connected subsets only

  int solve(std::uint32_t mask) {
    if (mask == 0) return 0;
    // split into components first
    std::uint32_t rest = mask;
    int best = 0;
    while (rest) {
      std::uint32_t comp = rest & (~rest + 1);
      for (;;) {
        std::uint32_t grown = comp;
        std::uint32_t scan = comp;
        while (scan) {
          int v = std::countr_zero(scan);
          scan &= scan - 1;
          grown |= adj[v] & mask;
        }
        if (grown == comp) break;
        comp = grown;
      }
      best = std::max(best, solve_connected(comp));
      rest &= ~comp;
    }
    return best;
  }

  int solve_connected(std::uint32_t mask) {
    if (std::popcount(mask) == 1) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int best = std::popcount(mask);
    std::uint32_t scan = mask;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      best = std::min(best, 1 + solve(mask & ~(std::uint32_t{1} << v)));
      if (best == 1) break;
    }
    memo[mask] = best;
    return best;
  }
};

int dfs_height(const Graph& g, int root, std::vector<char>& seen) {
  // height of an arbitrary DFS tree bounds treedepth from above
  seen[root] = 1;
  int h = 1;
  for (int v : g.neighbors(root))
    if (!seen[v]) h = std::max(h, 1 + dfs_height(g, v, seen));
  return h;
}

}  // namespace

int treedepth_exact(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap || n > 31)
    throw CapacityError("treedepth_exact: " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(cap));
  TdSolver s;
  s.adj.assign(n, 0);
  for (const auto& [u, v] : g.edges()) {
    s.adj[u] |= std::uint32_t{1} << v;
    s.adj[v] |= std::uint32_t{1} << u;
  }
  const std::uint32_t full =
      n == 0 ? 0 : (n == 31 ? ~std::uint32_t{0} >> 1 : (std::uint32_t{1} << n) - 1);
  return s.solve(full);
}

TreedepthEstimate treedepth_estimate(const Graph& g, int cap) {
  if (g.vertex_count() <= cap) return {treedepth_exact(g, cap), true};
  std::vector<char> seen(g.vertex_count(), 0);
  int bound = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) bound = std::max(bound, dfs_height(g, v, seen));
  return {bound, false};
}

namespace {

struct PathSolver {
  const Graph& g;
  std::vector<char> used;
  int alive;  // vertices not yet on the current path
  int best = 0;

  explicit PathSolver(const Graph& g)
      : g(g), used(g.vertex_count(), 0), alive(g.vertex_count()) {}

  void extend(int v, int len) {
    best = std::max(best, len);
    if (len + alive <= best) return;  // even taking every free vertex loses
    for (int w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      --alive;
      extend(w, len + 1);
      used[w] = 0;
      ++alive;
    }
  }
};

}  // namespace

int longest_path_length(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw CapacityError("longest_path_length: " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(cap));
  PathSolver s(g);
  for (int v = 0; v < n; ++v) {
    s.used[v] = 1;
    --s.alive;
    s.extend(v, 0);
    s.used[v] = 0;
    ++s.alive;
  }
  return s.best;
}

}  // namespace starfree

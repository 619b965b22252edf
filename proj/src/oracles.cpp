#include "starfree/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace starfree {

namespace {

using Mask = std::uint64_t;

struct BitGraph {
  int n;
  std::vector<Mask> adj;

  explicit BitGraph(const Graph& g) : n(g.vertex_count()), adj(n, 0) {
    for (const auto& [u, v] : g.edges()) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
  }
  Mask full() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

bool subset_acyclic(const BitGraph& bg, Mask keep) {
  // peel vertices of induced degree <= 1
  for (bool changed = true; changed;) {
    changed = false;
    Mask scan = keep;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (std::popcount(bg.adj[v] & keep) <= 1) {
        keep &= ~(Mask{1} << v);
        changed = true;
      }
    }
  }
  return keep == 0;
}

bool subset_connected(const BitGraph& bg, Mask s) {
  if (s == 0) return true;
  Mask comp = s & (~s + 1);
  for (;;) {
    Mask grown = comp;
    Mask scan = comp;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      grown |= bg.adj[v] & s;
    }
    if (grown == comp) break;
    comp = grown;
  }
  return comp == s;
}

bool subset_independent(const BitGraph& bg, Mask s) {
  Mask scan = s;
  while (scan) {
    const int v = std::countr_zero(scan);
    scan &= scan - 1;
    if (bg.adj[v] & s) return false;
  }
  return true;
}

std::vector<int> mask_to_vec(Mask s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

/// Visits k-subsets of the free positions (those set in pool) in
/// lexicographic order; stops when visit returns true.
template <typename F>
bool for_each_subset_of_size(const std::vector<int>& pool, int k, F&& visit) {
  const int m = static_cast<int>(pool.size());
  if (k > m) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask s = 0;
    for (int i : idx) s |= Mask{1} << pool[i];
    if (visit(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// ---- cycle-branching search for FVS / IFVS on sparse instances ----

struct CycleBrancher {
  const Graph& g;
  const bool independent;
  std::vector<char> removed;    // chosen vertices, deleted from the graph
  std::vector<char> forbidden;  // excluded by branching or by independence
  std::vector<int> chosen;

  CycleBrancher(const Graph& g, bool independent)
      : g(g),
        independent(independent),
        removed(g.vertex_count(), 0),
        forbidden(g.vertex_count(), 0) {}

  // shortest cycle among non-removed vertices: for each edge, shortest
  // path between its endpoints avoiding that edge, plus the edge
  std::vector<int> shortest_cycle() const {
    std::vector<int> best;
    for (const auto& [eu, ev] : g.edges()) {
      if (removed[eu] || removed[ev]) continue;
      std::vector<int> prev(g.vertex_count(), -2);
      std::vector<int> queue{eu};
      prev[eu] = -1;
      bool found = false;
      for (std::size_t qi = 0; qi < queue.size() && !found; ++qi) {
        const int u = queue[qi];
        for (int w : g.neighbors(u)) {
          if (removed[w] || prev[w] != -2) continue;
          if (u == eu && w == ev) continue;  // skip the edge itself
          prev[w] = u;
          if (w == ev) {
            found = true;
            break;
          }
          queue.push_back(w);
        }
      }
      if (!found) continue;
      std::vector<int> cycle;
      for (int v = ev; v != -1; v = prev[v]) cycle.push_back(v);
      if (!best.empty() && cycle.size() >= best.size()) continue;
      best = std::move(cycle);
    }
    return best;
  }

  // vertex-disjoint cycles found greedily; each needs its own pick
  int packing_bound() {
    std::vector<char> saved = removed;
    int count = 0;
    for (;;) {
      auto cyc = shortest_cycle();
      if (cyc.empty()) break;
      ++count;
      for (int v : cyc) removed[v] = 1;
    }
    removed = saved;
    return count;
  }

  bool solve(int budget) {
    auto cyc = shortest_cycle();
    if (cyc.empty()) return true;
    if (budget <= 0) return false;
    if (packing_bound() > budget) return false;
    std::sort(cyc.begin(), cyc.end());
    std::vector<int> flipped;
    bool ok = false;
    for (int v : cyc) {
      if (forbidden[v]) continue;
      removed[v] = 1;
      chosen.push_back(v);
      std::vector<int> nbr_flipped;
      if (independent)
        for (int w : g.neighbors(v))
          if (!forbidden[w]) {
            forbidden[w] = 1;
            nbr_flipped.push_back(w);
          }
      if (solve(budget - 1)) {
        ok = true;
        break;
      }
      for (int w : nbr_flipped) forbidden[w] = 0;
      chosen.pop_back();
      removed[v] = 0;
      forbidden[v] = 1;  // later branches must avoid v
      flipped.push_back(v);
    }
    if (!ok)
      for (int v : flipped) forbidden[v] = 0;
    return ok;
  }
};

std::optional<std::vector<int>> branch_search(const Graph& g, int k,
                                              bool independent) {
  CycleBrancher b(g, independent);
  if (b.solve(k)) return b.chosen;
  return std::nullopt;
}

}  // namespace

std::vector<int> branching_min_fvs(const Graph& g) {
  if (g.is_acyclic()) return {};
  CycleBrancher probe(g, false);
  for (int k = probe.packing_bound();; ++k)
    if (auto got = branch_search(g, k, false)) {
      std::sort(got->begin(), got->end());
      return *got;
    }
}

std::vector<int> oracle_min_fvs(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw CapacityError("oracle_min_fvs: " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(cap));
  if (g.is_acyclic()) return {};
  if (n > kSubsetCap) return branching_min_fvs(g);
  BitGraph bg(g);
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int k = 1; k <= n; ++k) {
    Mask hit = 0;
    if (for_each_subset_of_size(pool, k, [&](Mask s) {
          if (subset_acyclic(bg, bg.full() & ~s)) {
            hit = s;
            return true;
          }
          return false;
        }))
      return mask_to_vec(hit);
  }
  return {};  // unreachable
}

std::optional<std::vector<int>> oracle_min_ifvs(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw CapacityError("oracle_min_ifvs: " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(cap));
  if (g.is_acyclic()) return std::vector<int>{};
  if (n > kSubsetCap) {
    CycleBrancher probe(g, true);
    for (int k = probe.packing_bound(); k <= n; ++k)
      if (auto got = branch_search(g, k, true)) return got;
    return std::nullopt;
  }
  BitGraph bg(g);
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int k = 1; k <= n; ++k) {
    Mask hit = 0;
    if (for_each_subset_of_size(pool, k, [&](Mask s) {
          if (subset_independent(bg, s) && subset_acyclic(bg, bg.full() & ~s)) {
            hit = s;
            return true;
          }
          return false;
        }))
      return mask_to_vec(hit);
  }
  return std::nullopt;
}

bool fvs_decision(const Graph& g, int k) {
  if (g.is_acyclic()) return true;
  if (k <= 0) return false;
  return branch_search(g, k, false).has_value();
}

bool ifvs_decision(const Graph& g, int k) {
  if (g.is_acyclic()) return true;
  if (k <= 0) return false;
  return branch_search(g, k, true).has_value();
}

namespace {

std::optional<std::vector<int>> min_cvc_masked(const Graph& g, Mask required,
                                               int cap) {
  const int n = g.vertex_count();
  if (n > cap || n > kSubsetCap)
    throw CapacityError("oracle_min_cvc: " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(cap));
  if (g.edge_count() == 0)
    return required == 0 ? std::optional<std::vector<int>>{std::vector<int>{}}
                         : std::nullopt;
  int edged_components = 0;
  for (const auto& c : connected_components(g))
    if (c.graph.edge_count() > 0) ++edged_components;
  if (edged_components > 1) return std::nullopt;
  BitGraph bg(g);
  std::vector<int> pool;
  for (int v = 0; v < n; ++v)
    if (!(required >> v & 1)) pool.push_back(v);
  const int base = std::popcount(required);
  auto feasible = [&](Mask s) {
    // cover: complement is an independent set
    Mask out = bg.full() & ~s;
    if (!subset_independent(bg, out)) return false;
    return subset_connected(bg, s);
  };
  for (int extra = 0; extra + base <= n; ++extra) {
    Mask hit = 0;
    if (for_each_subset_of_size(pool, extra, [&](Mask s) {
          if (feasible(s | required)) {
            hit = s | required;
            return true;
          }
          return false;
        }))
      return mask_to_vec(hit);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> oracle_min_cvc(const Graph& g, int cap) {
  return min_cvc_masked(g, 0, cap);
}

std::optional<std::vector<int>> oracle_min_cvc_with(
    const Graph& g, const std::vector<int>& required, int cap) {
  Mask r = 0;
  for (int v : required) r |= Mask{1} << v;
  return min_cvc_masked(g, r, cap);
}

namespace {

bool colour_backtrack(const Graph& g, const std::vector<int>& order,
                      std::size_t idx, int k, std::vector<int>& colour) {
  if (idx == order.size()) return true;
  const int v = order[idx];
  int used_new = 0;  // symmetry break: first unused colour may be tried once
  for (int c = 0; c < k; ++c) {
    bool clash = false;
    bool seen_c = false;
    for (int w : g.neighbors(v))
      if (colour[w] == c) {
        clash = true;
        break;
      }
    for (std::size_t j = 0; j < idx && !seen_c; ++j)
      if (colour[order[j]] == c) seen_c = true;
    if (!seen_c) {
      if (used_new) break;  // all fresh colours are interchangeable
      used_new = 1;
    }
    if (clash) continue;
    colour[v] = c;
    if (colour_backtrack(g, order, idx + 1, k, colour)) return true;
    colour[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> try_colouring(const Graph& g, int k,
                                              int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw CapacityError("try_colouring: " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(cap));
  if (k < 1) throw ValidationError("colour count must be positive");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<int> colour(n, -1);
  if (colour_backtrack(g, order, 0, k, colour)) return colour;
  return std::nullopt;
}

int oracle_chromatic(const Graph& g, int cap) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k)
    if (try_colouring(g, k, cap)) return k;
}

std::optional<std::vector<Edge>> oracle_matching_cut(const Graph& g, int cap) {
  if (!g.is_connected())
    throw ValidationError("matching cut is defined on connected graphs");
  const int n = g.vertex_count();
  if (n > cap || n > 63)
    throw CapacityError("oracle_matching_cut: " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(cap));
  if (n < 2) return std::nullopt;
  const auto es = g.edges();
  // vertex 0 stays on side A; enumerate the B sides
  for (Mask b = 1; b < (Mask{1} << (n - 1)); ++b) {
    const Mask side = b << 1;
    std::vector<Edge> crossing;
    std::vector<char> touched(n, 0);
    bool matching = true;
    for (const auto& [u, v] : es) {
      const bool cu = (side >> u) & 1, cv = (side >> v) & 1;
      if (cu == cv) continue;
      if (touched[u] || touched[v]) {
        matching = false;
        break;
      }
      touched[u] = touched[v] = 1;
      crossing.emplace_back(u, v);
    }
    if (matching) return crossing;  // connected, so crossing is nonempty
  }
  return std::nullopt;
}

bool is_feedback_vertex_set(const Graph& g, const std::vector<int>& w) {
  return remove_vertices(g, w).is_acyclic();
}

bool is_independent_set(const Graph& g, const std::vector<int>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (g.has_edge(w[i], w[j])) return false;
  return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& w) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : w) in[v] = 1;
  for (const auto& [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

bool induces_connected(const Graph& g, const std::vector<int>& w) {
  if (w.empty()) return true;
  return induced_subgraph(g, w).is_connected();
}

bool is_proper_colouring(const Graph& g, const std::vector<int>& colour) {
  if (static_cast<int>(colour.size()) != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges())
    if (colour[u] == colour[v]) return false;
  return true;
}

bool is_matching(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<char> touched(g.vertex_count(), 0);
  for (const auto& [u, v] : edges) {
    if (!g.has_edge(u, v)) return false;
    if (touched[u] || touched[v]) return false;
    touched[u] = touched[v] = 1;
  }
  return true;
}

bool edge_removal_disconnects(const Graph& g, const std::vector<Edge>& edges) {
  Graph h(g.vertex_count());
  auto dropped = [&](int u, int v) {
    for (const auto& [a, b] : edges)
      if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
  };
  for (const auto& [u, v] : g.edges())
    if (!dropped(u, v)) h.add_edge(u, v);
  return !h.is_connected();
}

}  // namespace starfree

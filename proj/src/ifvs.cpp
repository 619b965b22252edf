#include "starfree/ifvs.hpp"

#include <algorithm>
#include <stdexcept>

#include "starfree/blocks.hpp"
#include "starfree/oracles.hpp"

namespace starfree {

namespace {

bool set_contains(const std::vector<int>& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

void set_insert(std::vector<int>& s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

void set_erase(std::vector<int>& s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
}

bool all_degree3(const Graph& g, const std::vector<int>& s) {
  for (int v : s)
    if (g.degree(v) != 3) return false;
  return true;
}

std::vector<char> on_cycle_flags(const Graph& g) {
  std::vector<char> on(g.vertex_count(), 0);
  const auto d = bridges_and_blocks(g);
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    if (d.block_edges[b].size() >= d.blocks[b].size())
      for (int v : d.blocks[b]) on[v] = 1;
  return on;
}

}  // namespace

std::vector<int> min_fvs_exact(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw CapacityError("min_fvs_exact: " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(cap));
  // cycle-branching route, independent of the subset-enumeration oracle so
  // the two exact engines can cross-check each other
  return branching_min_fvs(g);
}

std::vector<int> normalize_degree3(const Graph& g, std::vector<int> f) {
  if (!g.is_connected() || !g.subcubic())
    throw ValidationError("normalize_degree3 needs a connected subcubic graph");
  if (g.is_tree() || g.is_cycle_graph())
    throw ValidationError(
        "normalize_degree3 is undefined on trees and cycles");
  std::sort(f.begin(), f.end());
  const auto on_cycle = on_cycle_flags(g);
  const std::vector<int> snapshot = f;
  for (int v : snapshot) {
    if (g.degree(v) == 3) continue;
    set_erase(f, v);
    if (!on_cycle[v]) continue;  // cycle-free members are simply dropped
    // walk the chain of degree-2 vertices both ways; every cycle through v
    // passes both endpoints, so the nearer one can stand in for v
    int best = -1, best_dist = 0;
    for (int start : g.neighbors(v)) {
      int prev = v, cur = start, dist = 1;
      while (g.degree(cur) == 2) {
        const auto& nb = g.neighbors(cur);
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++dist;
      }
      if (best == -1 || dist < best_dist ||
          (dist == best_dist && cur < best)) {
        best = cur;
        best_dist = dist;
      }
    }
    set_insert(f, best);
  }
  if (!is_feedback_vertex_set(g, f) || !all_degree3(g, f))
    throw std::logic_error("normalize_degree3 produced a bad set");
  return f;
}

void TransformState::validate() const {
  if (!is_feedback_vertex_set(*host, f))
    throw std::logic_error("transform invariant: F is not a feedback vertex set");
  if (!all_degree3(*host, f))
    throw std::logic_error("transform invariant: F has a member of degree != 3");
  for (int v : j)
    if (!set_contains(f, v))
      throw std::logic_error("transform invariant: J is not a subset of F");
  if (!is_independent_set(*host, j))
    throw std::logic_error("transform invariant: J is not independent");
  if (!remove_vertices(*host, j).is_connected())
    throw std::logic_error("transform invariant: host - J is disconnected");
}

namespace {

struct HostView {
  Graph h;                    // host - J
  std::vector<int> to_host;   // h vertex -> host vertex
  std::vector<int> to_h;      // host vertex -> h vertex or -1

  HostView(const Graph& host, const std::vector<int>& j)
      : to_h(host.vertex_count(), -1) {
    h = remove_vertices(host, j, &to_host);
    for (int i = 0; i < static_cast<int>(to_host.size()); ++i)
      to_h[to_host[i]] = i;
  }
};

// block of H with more edges than vertices (two cycles sharing an edge),
// translated to host ids; empty when H is already a cactus
std::vector<int> find_dense_block(const HostView& hv) {
  const auto d = bridges_and_blocks(hv.h);
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    if (d.block_edges[b].size() > d.blocks[b].size()) {
      std::vector<int> out;
      for (int v : d.blocks[b]) out.push_back(hv.to_host[v]);
      std::sort(out.begin(), out.end());
      return out;
    }
  return {};
}

}  // namespace

TransformState make_nice_cactus(TransformState state) {
  const Graph& g = *state.host;
  state.validate();
  for (;;) {
    HostView hv(g, state.j);
    const auto k_vertices = find_dense_block(hv);
    if (k_vertices.empty()) break;
    const auto in_k = [&](int host_v) {
      return std::binary_search(k_vertices.begin(), k_vertices.end(), host_v);
    };
    const auto deg_k = [&](int host_v) {
      int d = 0;
      for (int w : g.neighbors(host_v))
        if (in_k(w)) ++d;
      return d;
    };
    // articulation points of H, in host ids; H is fixed for this round
    std::vector<char> h_cut(g.vertex_count(), 0);
    {
      const auto d = bridges_and_blocks(hv.h);
      for (int v : d.cut_vertices) h_cut[hv.to_host[v]] = 1;
    }
    int r = -1;
    for (int v : k_vertices)
      if (set_contains(state.f, v)) {
        r = v;
        break;
      }
    if (r == -1)
      throw std::logic_error("feedback set misses a 2-connected block");

    // chain from r to the first K-degree-3 vertex, leaving through r's
    // lower-id neighbour in K
    std::vector<int> path;
    if (deg_k(r) == 2) {
      path.push_back(r);
      int prev = r, cur = -1;
      for (int w : g.neighbors(r))
        if (in_k(w)) {
          cur = w;
          break;
        }
      while (deg_k(cur) == 2) {
        path.push_back(cur);
        int next = -1;
        for (int w : g.neighbors(cur))
          if (in_k(w) && w != prev) {
            next = w;
            break;
          }
        prev = cur;
        cur = next;
      }
      path.push_back(cur);  // the vertex p
    }

    std::size_t at = 0;
    for (;;) {
      if (deg_k(r) == 3) {
        // all three neighbours live in K, so r has no neighbour in J and
        // K - r stays connected: r joins J
        set_insert(state.j, r);
        state.validate();
        break;
      }
      bool j_neighbour = false;
      for (int w : g.neighbors(r))
        if (set_contains(state.j, w)) j_neighbour = true;
      if (!j_neighbour && !h_cut[r]) {
        set_insert(state.j, r);
        state.validate();
        break;
      }
      // every cycle through r that avoids the rest of F is trapped on the
      // chain towards p, so the next degree-3 vertex there can replace r
      int rp = -1;
      std::size_t rp_at = at;
      for (std::size_t i = at + 1; i < path.size(); ++i)
        if (g.degree(path[i]) == 3) {
          rp = path[i];
          rp_at = i;
          break;
        }
      if (rp == -1)
        throw std::logic_error("no degree-3 replacement on the chain");
      set_erase(state.f, r);
      set_insert(state.f, rp);
      state.validate();
      r = rp;
      at = rp_at;
    }
  }
  return state;
}

namespace {

// host ids of the nearest-to-C vertex of every cycle other than `c_idx`
std::vector<int> nearest_set(const HostView& hv,
                             const std::vector<std::vector<int>>& cycles_host,
                             std::size_t c_idx) {
  std::vector<int> sources;
  for (int v : cycles_host[c_idx]) sources.push_back(hv.to_h[v]);
  const auto dist = bfs_distances(hv.h, sources);
  std::vector<int> out;
  for (std::size_t i = 0; i < cycles_host.size(); ++i) {
    if (i == c_idx) continue;
    int best = -1;
    bool tie = false;
    for (int v : cycles_host[i]) {
      const int d = dist[hv.to_h[v]];
      if (best == -1 || d < dist[hv.to_h[best]]) {
        best = v;
        tie = false;
      } else if (d == dist[hv.to_h[best]]) {
        tie = true;
      }
    }
    if (tie)
      throw std::logic_error("nearest cycle vertex is not unique");
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> complete_ifvs(const TransformState& state) {
  const Graph& g = *state.host;
  state.validate();
  HostView hv(g, state.j);
  const auto klass = cactus_classify(hv.h);
  if (klass != CactusClass::NiceCactus && klass != CactusClass::VeryNiceCactus)
    throw std::logic_error("host - J is not a nice cactus");

  // cycles of H in host ids
  std::vector<std::vector<int>> cycles_host;
  for (auto& cyc : cactus_cycles(hv.h)) {
    std::vector<int> c;
    for (int v : cyc) c.push_back(hv.to_host[v]);
    std::sort(c.begin(), c.end());
    cycles_host.push_back(std::move(c));
  }
  if (cycles_host.empty()) return state.j;  // J already hits every cycle

  std::vector<int> cycle_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < cycles_host.size(); ++i)
    for (int v : cycles_host[i]) cycle_of[v] = static_cast<int>(i);

  auto finish = [&](std::vector<int> result) {
    std::sort(result.begin(), result.end());
    if (!is_feedback_vertex_set(g, result))
      throw std::logic_error("completion is not a feedback vertex set");
    if (!is_independent_set(g, result))
      throw std::logic_error("completion is not independent");
    if (!all_degree3(g, result))
      throw std::logic_error("completion has a member of degree != 3");
    return result;
  };

  // a cycle vertex of degree 3 touching neither J nor another cycle closes
  // the set directly
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (cycle_of[v] == -1 || g.degree(v) != 3) continue;
    bool blocked = false;
    for (int w : g.neighbors(v)) {
      if (set_contains(state.j, w)) blocked = true;
      else if (cycle_of[w] != -1 && cycle_of[w] != cycle_of[v]) blocked = true;
    }
    if (blocked) continue;
    auto result = nearest_set(hv, cycles_host, cycle_of[v]);
    result.push_back(v);
    result.insert(result.end(), state.j.begin(), state.j.end());
    return finish(std::move(result));
  }

  // otherwise every vertex of H lies on a cycle
  if (klass != CactusClass::VeryNiceCactus)
    throw std::logic_error("expected host - J to be a very nice cactus");
  if (state.j.empty())
    throw std::logic_error("very nice cactus input should not reach here");

  const int jj = state.j.front();
  std::vector<int> nb = g.neighbors(jj);
  if (nb.size() != 3)
    throw std::logic_error("J member without three neighbours");
  for (int w : nb)
    if (cycle_of[w] == -1)
      throw std::logic_error("J neighbour off-cycle in a very nice cactus");

  std::vector<int> rest(state.j.begin() + 1, state.j.end());
  const bool same_cycle =
      cycle_of[nb[0]] == cycle_of[nb[1]] && cycle_of[nb[1]] == cycle_of[nb[2]];
  if (same_cycle) {
    // two of the three are nonadjacent unless the cycle is a triangle,
    // which together with jj would induce K4
    int va = -1, vb = -1;
    for (int i = 0; i < 3 && va == -1; ++i)
      for (int k = i + 1; k < 3; ++k)
        if (!g.has_edge(nb[i], nb[k])) {
          va = nb[i];
          vb = nb[k];
          break;
        }
    if (va == -1)
      throw std::logic_error("neighbours induce K4 with the J vertex");
    auto result = nearest_set(hv, cycles_host, cycle_of[va]);
    result.push_back(va);
    result.push_back(vb);
    result.insert(result.end(), rest.begin(), rest.end());
    return finish(std::move(result));
  }
  // pick v1 so the other two lie on different cycles
  int v1 = -1;
  for (int i = 0; i < 3 && v1 == -1; ++i) {
    const int a = nb[(i + 1) % 3], b = nb[(i + 2) % 3];
    if (cycle_of[a] != cycle_of[b]) v1 = nb[i];
  }
  if (v1 == -1) throw std::logic_error("no valid neighbour labelling");
  auto result = nearest_set(hv, cycles_host, cycle_of[v1]);
  result.push_back(v1);
  result.insert(result.end(), rest.begin(), rest.end());
  return finish(std::move(result));
}

IfvsResult min_ifvs_subcubic(const Graph& g) {
  if (!g.is_connected())
    throw ValidationError("min_ifvs_subcubic needs a connected graph");
  if (!g.subcubic())
    throw ValidationError("min_ifvs_subcubic needs a subcubic graph");
  const int n = g.vertex_count();
  if (n == 4 && g.edge_count() == 6)
    return {IfvsResult::Outcome::NoIfvsK4, {}, false, 2};
  if (g.is_acyclic()) return {IfvsResult::Outcome::Solution, {}, true, 0};

  if (cactus_classify(g) == CactusClass::VeryNiceCactus) {
    // one vertex per cycle, each farthest from vertex 0; attachment vertices
    // are nearest, never farthest, so the picks are pairwise nonadjacent
    const auto dist = bfs_distances(g, {0});
    std::vector<int> picks;
    for (const auto& cyc : cactus_cycles(g)) {
      int best = -1;
      for (int v : cyc)
        if (best == -1 || dist[v] > dist[best] ||
            (dist[v] == dist[best] && v < best))
          best = v;
      picks.push_back(best);
    }
    std::sort(picks.begin(), picks.end());
    if (!is_feedback_vertex_set(g, picks) || !is_independent_set(g, picks))
      throw std::logic_error("farthest-per-cycle selection failed");
    return {IfvsResult::Outcome::Solution, picks, all_degree3(g, picks),
            static_cast<int>(picks.size())};
  }

  const auto seed = min_fvs_exact(g);
  auto f = normalize_degree3(g, seed);
  if (f.size() != seed.size())
    throw std::logic_error("normalization changed the size of a minimum set");
  TransformState state{&g, std::move(f), {}};
  state = make_nice_cactus(std::move(state));
  auto result = complete_ifvs(state);
  if (result.size() != seed.size())
    throw std::logic_error("transformation changed the optimum size");
  return {IfvsResult::Outcome::Solution, result, true,
          static_cast<int>(seed.size())};
}

}  // namespace starfree

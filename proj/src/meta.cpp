#include "starfree/meta.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "starfree/blocks.hpp"
#include "starfree/ifvs.hpp"
#include "starfree/oracles.hpp"
#include "starfree/spider.hpp"
#include "starfree/treedepth.hpp"

namespace starfree {

const char* to_string(ProblemKind::Tag t) {
  switch (t) {
    case ProblemKind::Tag::Fvs: return "fvs";
    case ProblemKind::Tag::Ifvs: return "ifvs";
    case ProblemKind::Tag::Cvc: return "cvc";
    case ProblemKind::Tag::Colouring: return "colouring";
    case ProblemKind::Tag::MatchingCut: return "matchingcut";
  }
  return "?";
}

const char* to_string(ComplexityRow r) {
  switch (r) {
    case ComplexityRow::PolynomialTime: return "polynomial-time";
    case ComplexityRow::NPComplete: return "np-complete";
    case ComplexityRow::Open: return "open";
  }
  return "?";
}

namespace {

struct Stubbed {
  Graph graph;
  std::vector<int> to_host;
};

// bridge-deletion component plus its incident bridges (stub endpoints kept)
Stubbed component_with_stubs(const Graph& g, const std::vector<int>& comp,
                             const std::vector<Edge>& bridges) {
  std::vector<char> in_comp(g.vertex_count(), 0);
  for (int v : comp) in_comp[v] = 1;
  std::vector<int> verts = comp;
  std::vector<Edge> extra;
  for (const auto& [u, v] : bridges) {
    if (in_comp[u] == in_comp[v]) continue;
    verts.push_back(in_comp[u] ? v : u);
    extra.emplace_back(u, v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(verts.size()));
  for (int v : comp)
    for (int w : g.neighbors(v))
      if (in_comp[w] && v < w) h.add_edge(index[v], index[w]);
  for (const auto& [u, v] : extra) h.add_edge(index[u], index[v]);
  return {std::move(h), std::move(verts)};
}

bool is_cactus_shape(const Graph& g) {
  const auto c = cactus_classify(g);
  return c != CactusClass::NotCactus;
}

int uf_find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

PartitionedInstance decompose_ct(const Graph& g) {
  if (!g.is_connected())
    throw ValidationError("decompose_ct needs a connected graph");
  const auto comps = two_edge_components(g);
  const auto bridges = bridges_and_blocks(g).bridges;
  std::vector<int> comp_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i]) comp_of[v] = static_cast<int>(i);

  std::vector<PartKind> kind(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto sub = component_with_stubs(g, comps[i], bridges);
    kind[i] = (!sub.graph.subcubic() || is_cactus_shape(sub.graph))
                  ? PartKind::TType
                  : PartKind::CType;
  }

  std::vector<int> parent(comps.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [u, v] : bridges) {
    const int a = uf_find(parent, comp_of[u]);
    const int b = uf_find(parent, comp_of[v]);
    if (a != b && kind[a] == kind[b]) parent[a] = b;
  }

  // groups in ascending order of their smallest vertex
  std::vector<int> group_id(comps.size(), -1);
  std::vector<std::vector<int>> group_vertices;
  std::vector<PartKind> group_kind;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const int root = uf_find(parent, static_cast<int>(i));
    if (group_id[root] == -1) {
      group_id[root] = static_cast<int>(group_vertices.size());
      group_vertices.emplace_back();
      group_kind.push_back(kind[root]);
    }
    auto& verts = group_vertices[group_id[root]];
    verts.insert(verts.end(), comps[i].begin(), comps[i].end());
  }

  PartitionedInstance out;
  std::vector<int> part_of(g.vertex_count(), -1);
  for (std::size_t p = 0; p < group_vertices.size(); ++p) {
    auto verts = group_vertices[p];
    std::sort(verts.begin(), verts.end());
    for (int v : verts) part_of[v] = static_cast<int>(p);
    out.parts.push_back(
        {induced_subgraph(g, verts), group_kind[p], std::move(verts)});
  }
  for (const auto& [u, v] : bridges) {
    if (part_of[u] == part_of[v]) continue;
    if (out.parts[part_of[u]].kind == out.parts[part_of[v]].kind)
      throw std::logic_error("connecting bridge joins two parts of one kind");
    out.connecting.push_back({{u, v}, part_of[u], part_of[v]});
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void solve_fvs(const Graph& g, const SolveCaps& caps, SolveReport& rep) {
  // bridges lie on no cycle: delete them all and solve the pieces
  const auto comps = two_edge_components(g);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Graph sub = induced_subgraph(g, comps[i]);
    if (sub.is_acyclic()) continue;
    std::vector<int> local;
    if (sub.subcubic()) {
      local = min_fvs_exact(sub, caps.branch);
      rep.routes.push_back({static_cast<int>(i), sub.vertex_count(),
                            "fvs-branching"});
    } else if (sub.vertex_count() <= caps.oracle) {
      local = oracle_min_fvs(sub, caps.oracle);
      rep.routes.push_back({static_cast<int>(i), sub.vertex_count(),
                            "oracle-subset"});
    } else {
      throw CapacityError("fvs: part " + std::to_string(i) + " has " +
                          std::to_string(sub.vertex_count()) +
                          " vertices, over every engine cap");
    }
    for (int v : local) rep.witness.push_back(comps[i][v]);
  }
  std::sort(rep.witness.begin(), rep.witness.end());
  rep.value = static_cast<int>(rep.witness.size());
  rep.validated = is_feedback_vertex_set(g, rep.witness);
  if (!rep.validated) throw std::logic_error("fvs merge produced a bad witness");
}

void solve_ifvs(const Graph& g, const SolveCaps& caps, SolveReport& rep) {
  std::vector<char> bridge_end(g.vertex_count(), 0);
  for (const auto& comp : connected_components(g)) {
    const auto dec = decompose_ct(comp.graph);
    for (const auto& cb : dec.connecting) {
      bridge_end[comp.to_parent[cb.edge.first]] = 1;
      bridge_end[comp.to_parent[cb.edge.second]] = 1;
    }
    for (std::size_t p = 0; p < dec.parts.size(); ++p) {
      const auto& part = dec.parts[p];
      std::vector<int> local;
      if (part.kind == PartKind::CType) {
        const auto res = min_ifvs_subcubic(part.graph);
        if (res.outcome == IfvsResult::Outcome::NoIfvsK4) {
          rep.feasible = false;
          return;
        }
        if (!res.degree3_only)
          throw std::logic_error(
              "C-type part solution uses a vertex of degree < 3");
        local = res.set;
        rep.routes.push_back({static_cast<int>(p), part.graph.vertex_count(),
                              "ifvs-subcubic"});
      } else {
        if (part.graph.vertex_count() > caps.oracle)
          throw CapacityError("ifvs: T-type part " + std::to_string(p) +
                              " has " +
                              std::to_string(part.graph.vertex_count()) +
                              " vertices, over the oracle cap");
        auto got = oracle_min_ifvs(part.graph, caps.oracle);
        if (!got) {
          rep.feasible = false;
          return;
        }
        local = *got;
        rep.routes.push_back({static_cast<int>(p), part.graph.vertex_count(),
                              "oracle-subset"});
      }
      for (int v : local) rep.witness.push_back(comp.to_parent[part.to_host[v]]);
    }
  }
  std::sort(rep.witness.begin(), rep.witness.end());
  rep.value = static_cast<int>(rep.witness.size());
  // the C-type degree bound is supposed to keep bridge ends out of the
  // union; a violation here falsifies the merge argument, so fail loudly
  std::vector<char> picked(g.vertex_count(), 0);
  for (int v : rep.witness) picked[v] = 1;
  for (const auto& [u, v] : bridges_and_blocks(g).bridges)
    if (picked[u] && picked[v])
      throw std::logic_error("ifvs merge picked both ends of a bridge");
  rep.validated = is_feedback_vertex_set(g, rep.witness) &&
                  is_independent_set(g, rep.witness);
  if (!rep.validated)
    throw std::logic_error("ifvs merge produced a bad witness");
}

void solve_cvc(const Graph& g, const SolveCaps& caps, SolveReport& rep) {
  const auto comps = connected_components(g);
  int edged = -1;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].graph.edge_count() == 0) continue;
    if (edged != -1) {  // two components with edges: no connected cover
      rep.feasible = false;
      return;
    }
    edged = static_cast<int>(i);
  }
  if (edged == -1) {
    rep.value = 0;
    rep.validated = true;
    return;
  }
  const Graph& comp = comps[edged].graph;
  const auto& to_g = comps[edged].to_parent;
  const auto bridges = bridges_and_blocks(comp).bridges;
  std::vector<char> forced(comp.vertex_count(), 0);
  for (const auto& [u, v] : bridges) {
    // endpoints of degree >= 2 are unavoidable and keep the union connected
    if (comp.degree(u) >= 2) forced[u] = 1;
    if (comp.degree(v) >= 2) forced[v] = 1;
  }
  std::vector<char> picked(comp.vertex_count(), 0);
  const auto tec = two_edge_components(comp);
  for (std::size_t i = 0; i < tec.size(); ++i) {
    const auto sub = component_with_stubs(comp, tec[i], bridges);
    if (sub.graph.edge_count() == 0) continue;
    if (sub.graph.vertex_count() > caps.oracle)
      throw CapacityError("cvc: part " + std::to_string(i) + " has " +
                          std::to_string(sub.graph.vertex_count()) +
                          " vertices, over the oracle cap");
    std::vector<int> required;
    for (std::size_t j = 0; j < sub.to_host.size(); ++j)
      if (forced[sub.to_host[j]]) required.push_back(static_cast<int>(j));
    auto got = oracle_min_cvc_with(sub.graph, required, caps.oracle);
    if (!got) throw std::logic_error("constrained part cover is infeasible");
    for (int v : *got) picked[sub.to_host[v]] = 1;
    rep.routes.push_back({static_cast<int>(i), sub.graph.vertex_count(),
                          "oracle-subset"});
  }
  for (int v = 0; v < comp.vertex_count(); ++v)
    if (picked[v]) rep.witness.push_back(to_g[v]);
  rep.value = static_cast<int>(rep.witness.size());
  std::vector<int> local;
  for (int v = 0; v < comp.vertex_count(); ++v)
    if (picked[v]) local.push_back(v);
  rep.validated = is_vertex_cover(g, rep.witness) &&
                  induces_connected(comp, local);
  if (!rep.validated) throw std::logic_error("cvc merge produced a bad witness");
}

struct BrooksResult {
  int chromatic;
  std::vector<int> colouring;
  bool backtracked = false;
};

BrooksResult brooks_colour(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) return {1, std::vector<int>(n, 0)};
  // bipartite?
  std::vector<int> side(n, -1);
  bool bipartite = true;
  for (int s = 0; s < n && bipartite; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty() && bipartite) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  if (bipartite) return {2, side};
  if (n == 4 && g.edge_count() == 6) return {4, {0, 1, 2, 3}};
  // connected subcubic, not K4, not bipartite: three colours suffice
  std::vector<int> order;
  {
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v)
        if (!gone[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
      gone[pick] = 1;
      order.push_back(pick);
      for (int w : g.neighbors(pick))
        if (!gone[w]) --deg[w];
    }
    std::reverse(order.begin(), order.end());
  }
  std::vector<int> colour(n, -1);
  for (int v : order) {
    unsigned used = 0;
    for (int w : g.neighbors(v))
      if (colour[w] >= 0) used |= 1u << colour[w];
    int c = 0;
    while (used >> c & 1) ++c;
    colour[v] = c;
  }
  int hi = *std::max_element(colour.begin(), colour.end());
  if (hi <= 2) return {3, colour};
  // smallest-last can spend a fourth colour on regular graphs; fall back
  auto exact = try_colouring(g, 3, g.vertex_count());
  if (!exact) throw std::logic_error("Brooks bound failed on a subcubic part");
  return {3, *exact, true};
}

void solve_colouring(const Graph& g, int k, const SolveCaps& caps,
                     SolveReport& rep) {
  if (k < 1) throw ValidationError("colouring needs k >= 1");
  if (g.edge_count() == 0) {
    rep.decision = true;
    rep.colouring.assign(g.vertex_count(), 0);
    rep.validated = true;
    return;
  }
  if (k == 1) {
    rep.decision = false;
    rep.validated = true;
    return;
  }
  const auto comps = two_edge_components(g);
  std::vector<int> colour(g.vertex_count(), -1);
  std::vector<int> comp_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (int v : comps[i]) comp_of[v] = static_cast<int>(i);
    Graph sub = induced_subgraph(g, comps[i]);
    std::vector<int> local;
    if (sub.subcubic()) {
      auto br = brooks_colour(sub);
      if (br.chromatic > k) {
        rep.decision = false;
        rep.validated = true;
        return;
      }
      local = br.colouring;
      rep.routes.push_back({static_cast<int>(i), sub.vertex_count(),
                            br.backtracked ? "brooks+backtrack" : "brooks"});
    } else {
      if (sub.vertex_count() > caps.oracle)
        throw CapacityError("colouring: part " + std::to_string(i) + " has " +
                            std::to_string(sub.vertex_count()) +
                            " vertices, over the oracle cap");
      auto got = try_colouring(sub, k, caps.oracle);
      if (!got) {
        rep.decision = false;
        rep.validated = true;
        return;
      }
      local = *got;
      rep.routes.push_back({static_cast<int>(i), sub.vertex_count(),
                            "oracle-backtracking"});
    }
    for (std::size_t j = 0; j < comps[i].size(); ++j)
      colour[comps[i][j]] = local[j];
  }
  // merge: walk the bridge tree; on a clash swap two colours throughout the
  // child component (k >= 2, so a free colour always exists)
  const auto bridges = bridges_and_blocks(g).bridges;
  std::vector<std::vector<std::pair<int, Edge>>> tree(comps.size());
  for (const auto& [u, v] : bridges) {
    tree[comp_of[u]].push_back({comp_of[v], {u, v}});
    tree[comp_of[v]].push_back({comp_of[u], {v, u}});
  }
  std::vector<char> visited(comps.size(), 0);
  for (std::size_t root = 0; root < comps.size(); ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    std::vector<int> queue{static_cast<int>(root)};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int at = queue[qi];
      for (const auto& [next, edge] : tree[at]) {
        if (visited[next]) continue;
        visited[next] = 1;
        const auto [u, v] = edge;  // u in `at`, v in `next`
        if (colour[u] == colour[v]) {
          int swap_to = 0;
          while (swap_to == colour[u]) ++swap_to;  // k >= 2
          const int from = colour[v];
          for (int w : comps[next])
            if (colour[w] == from) colour[w] = swap_to;
            else if (colour[w] == swap_to) colour[w] = from;
        }
        queue.push_back(next);
      }
    }
  }
  rep.decision = true;
  rep.colouring = colour;
  rep.validated = is_proper_colouring(g, colour);
  if (!rep.validated)
    throw std::logic_error("colouring merge produced an improper colouring");
}

void solve_matching_cut(const Graph& g, const SolveCaps& caps,
                        SolveReport& rep) {
  if (!g.is_connected())
    throw ValidationError("matching cut is defined on connected graphs");
  const auto bd = bridges_and_blocks(g);
  if (!bd.proper_bridges.empty()) {
    rep.decision = true;
    rep.edge_witness = {bd.proper_bridges.front()};
    rep.routes.push_back({0, g.vertex_count(), "proper-bridge"});
  } else {
    auto got = oracle_matching_cut(g, caps.matching_cut);
    rep.routes.push_back({0, g.vertex_count(), "oracle-bipartitions"});
    rep.decision = got.has_value();
    if (got) rep.edge_witness = *got;
  }
  rep.validated = !*rep.decision ||
                  (is_matching(g, rep.edge_witness) &&
                   edge_removal_disconnects(g, rep.edge_witness));
  if (!rep.validated)
    throw std::logic_error("matching cut witness failed validation");
}

}  // namespace

SolveReport solve(ProblemKind problem, const Graph& g, const SolveCaps& caps) {
  const auto t0 = Clock::now();
  SolveReport rep;
  rep.problem = to_string(problem.tag);
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  switch (problem.tag) {
    case ProblemKind::Tag::Fvs: solve_fvs(g, caps, rep); break;
    case ProblemKind::Tag::Ifvs: solve_ifvs(g, caps, rep); break;
    case ProblemKind::Tag::Cvc: solve_cvc(g, caps, rep); break;
    case ProblemKind::Tag::Colouring:
      solve_colouring(g, problem.k, caps, rep);
      break;
    case ProblemKind::Tag::MatchingCut:
      solve_matching_cut(g, caps, rep);
      break;
  }
  rep.time_ms = ms_since(t0);
  return rep;
}

StructureReport check_structure_theorem(const Graph& g, int q, int r,
                                        int td_cap) {
  if (!g.is_connected())
    throw ValidationError("structure check needs a connected graph");
  if (q < 1 || r < 1) throw ValidationError("q and r must be positive");
  StructureReport rep;
  rep.q = q;
  rep.r = r;
  rep.subcubic = g.subcubic();
  rep.quasi_bridgeless = bridges_and_blocks(g).proper_bridges.empty();
  rep.free_11qr = spider_free(g, SpiderPattern::of(1, 1, q, r)).free;
  rep.free_111r = spider_free(g, SpiderPattern::of(1, 1, 1, r)).free;
  rep.bound_quadratic = 2 * (q + r + 3) * (q + r + 3) + 6;
  rep.bound_linear = 2 * r + 2;
  rep.premise_quadratic =
      !rep.subcubic && rep.quasi_bridgeless && rep.free_11qr;
  rep.premise_linear = !rep.subcubic && rep.free_111r;
  if (g.vertex_count() <= td_cap) {
    rep.treedepth = treedepth_exact(g, td_cap);
    rep.treedepth_exact_flag = true;
    if (rep.premise_quadratic)
      rep.conclusion_quadratic = *rep.treedepth <= rep.bound_quadratic;
    if (rep.premise_linear)
      rep.conclusion_linear = *rep.treedepth <= rep.bound_linear;
  } else if (rep.premise_quadratic || rep.premise_linear) {
    rep.inconclusive = true;
  }
  return rep;
}

HClassification classify_h(const Graph& h) {
  if (!h.is_connected())
    throw ValidationError("classify_h needs a connected pattern");
  if (h.vertex_count() > 12)
    throw CapacityError("classify_h: pattern cap is 12 vertices");
  HClassification out{};
  out.has_cycle = !h.is_acyclic();
  out.max_degree = h.max_degree();
  for (int v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) >= 3) ++out.degree3_plus_count;
  const bool tree = !out.has_cycle;
  out.is_path = tree && out.max_degree <= 2;
  if (tree && out.degree3_plus_count == 1) {
    int centre = -1;
    for (int v = 0; v < h.vertex_count(); ++v)
      if (h.degree(v) >= 3) centre = v;
    if (h.degree(centre) == 3) out.is_subdivided_claw = true;
    if (h.degree(centre) == 4) {
      out.is_spider4 = true;
      for (int start : h.neighbors(centre)) {
        int len = 1, prev = centre, cur = start;
        while (h.degree(cur) == 2) {
          const auto& nb = h.neighbors(cur);
          const int next = nb[0] == prev ? nb[1] : nb[0];
          prev = cur;
          cur = next;
          ++len;
        }
        out.spider_lengths.push_back(len);
      }
      std::sort(out.spider_lengths.rbegin(), out.spider_lengths.rend());
    }
  }
  const bool s11qr = out.is_spider4 && out.spider_lengths[2] == 1 &&
                     out.spider_lengths[3] == 1;
  out.contains_s2222 =
      contains_spider(h, SpiderPattern::of(2, 2, 2, 2)).has_value();
  out.small_tree_max_deg4 =
      tree && h.vertex_count() <= 7 && out.max_degree <= 4;

  const bool poly_base = out.is_path || out.is_subdivided_claw || s11qr;
  // a degree-5 vertex means the pattern contains K_{1,5}; hardness carries
  // over to the larger excluded pattern
  const bool contains_k15 = out.max_degree >= 5;

  const bool npc_fvs = out.has_cycle || out.degree3_plus_count >= 2 ||
                       contains_k15 || out.contains_s2222;
  const bool npc_cvc_mc = out.has_cycle || contains_k15;
  const bool npc_col = out.has_cycle || contains_k15 || out.contains_s2222;
  const bool poly_col = poly_base || out.small_tree_max_deg4;

  auto row = [](bool poly, bool npc) {
    if (poly && npc)
      throw std::logic_error("pattern classified both tractable and hard");
    if (poly) return ComplexityRow::PolynomialTime;
    if (npc) return ComplexityRow::NPComplete;
    return ComplexityRow::Open;
  };
  out.fvs = row(poly_base, npc_fvs);
  out.ifvs = out.fvs;
  out.cvc = row(poly_base, npc_cvc_mc);
  out.matching_cut = out.cvc;
  out.colouring = row(poly_col, npc_col);
  return out;
}

}  // namespace starfree

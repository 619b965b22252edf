#include "starfree/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "starfree/oracles.hpp"
#include "starfree/spider.hpp"

namespace starfree {

namespace {

// frozen gadget edge set over x,x',a,y,y',b,z,s,t,c,p,q = 0..11
constexpr int kX = 0, kXp = 1, kA = 2, kY = 3, kYp = 4, kB = 5, kZ = 6,
              kS = 7, kT = 8, kC = 9, kP = 10, kQ = 11;

constexpr std::pair<int, int> kGadgetEdges[] = {
    {kX, kXp}, {kX, kA},  {kXp, kA},                        // triangle xx'a
    {kY, kYp}, {kY, kB},  {kYp, kB},                        // triangle yy'b
    {kZ, kS},  {kZ, kT},  {kS, kT},  {kS, kC}, {kT, kC},    // diamond zstc
    {kA, kP},  {kA, kQ},  {kB, kP},  {kB, kQ},              // hub spokes
    {kC, kP},  {kC, kQ},  {kP, kQ},                         // fourth cycle
};

bool separates(const Graph& g, const std::vector<int>& cut, int inside,
               const std::vector<int>& expected_side) {
  Graph h = remove_vertices(g, cut);
  std::vector<int> keep;
  for (int v = 0, i = 0; v < g.vertex_count(); ++v) {
    if (std::find(cut.begin(), cut.end(), v) != cut.end()) continue;
    keep.push_back(v);
    (void)i;
  }
  // component of `inside` in h, mapped back
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  std::vector<char> seen(h.vertex_count(), 0);
  std::vector<int> stack{pos[inside]};
  seen[pos[inside]] = 1;
  std::vector<int> side;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    side.push_back(keep[u]);
    for (int w : h.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(side.begin(), side.end());
  auto want = expected_side;
  std::sort(want.begin(), want.end());
  return side == want && side.size() < keep.size();
}

bool on_cycle_avoiding(const Graph& g, int v, int avoid) {
  // is v on any cycle of g - avoid?
  Graph h = remove_vertices(g, {avoid});
  const int hv = v - (v > avoid ? 1 : 0);
  for (int w : h.neighbors(hv)) {
    // path from hv to w avoiding the edge hv-w closes a cycle through hv
    std::vector<int> prev(h.vertex_count(), -2);
    prev[hv] = -1;
    std::vector<int> queue{hv};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int x : h.neighbors(u)) {
        if (u == hv && x == w) continue;
        if (prev[x] != -2) continue;
        prev[x] = u;
        queue.push_back(x);
      }
    }
    if (prev[w] != -2) return true;
  }
  return false;
}

void run_checklist(const VariableGadget& gd) {
  const Graph& g = gd.graph;
  auto fail = [](const std::string& what) {
    throw std::logic_error("variable gadget checklist failed: " + what);
  };

  // four vertex-disjoint cycles: the two triangles, z-s-t and c-p-q
  for (const auto& cyc : {std::vector<int>{gd.x, gd.x_prime, gd.a},
                          {gd.y, gd.y_prime, gd.b},
                          {gd.z, gd.s, gd.t},
                          {gd.c, gd.p, gd.q}})
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]))
        fail("expected disjoint cycle is missing an edge");

  // the diamond: z,s,t,c with exactly the z-c pair nonadjacent
  if (!(g.has_edge(gd.z, gd.s) && g.has_edge(gd.z, gd.t) &&
        g.has_edge(gd.s, gd.t) && g.has_edge(gd.s, gd.c) &&
        g.has_edge(gd.t, gd.c) && !g.has_edge(gd.z, gd.c)))
    fail("diamond shape");

  // both canonical solutions are independent feedback vertex sets of size 4
  const std::vector<int> true_set{gd.x, gd.y, gd.p, gd.t};
  const std::vector<int> false_set{gd.z, gd.a, gd.b, gd.c};
  for (const auto& s : {true_set, false_set})
    if (!is_feedback_vertex_set(g, s) || !is_independent_set(g, s))
      fail("canonical solution is not an independent feedback vertex set");
  if (oracle_min_fvs(g).size() != 4) fail("minimum feedback size is not 4");

  // no size-4 feedback set contains {x,z} or {y,z}
  for (int first : {gd.x, gd.y}) {
    std::vector<int> others;
    for (int v = 0; v < 12; ++v)
      if (v != first && v != gd.z) others.push_back(v);
    for (std::size_t i = 0; i < others.size(); ++i)
      for (std::size_t j = i + 1; j < others.size(); ++j)
        if (is_feedback_vertex_set(
                g, {first, gd.z, others[i], others[j]}))
          fail("a size-4 feedback set contains a forbidden pair");
  }

  // every cycle through x passes a; every cycle through y passes b
  if (on_cycle_avoiding(g, gd.x, gd.a)) fail("cycle through x avoids a");
  if (on_cycle_avoiding(g, gd.y, gd.b)) fail("cycle through y avoids b");

  // separator checklist around the degree-4 vertices
  if (!separates(g, {gd.a, gd.b, gd.c}, gd.p, {gd.p, gd.q}))
    fail("{a,b,c} does not cut off {p,q}");
  if (!separates(g, {gd.x, gd.p, gd.q}, gd.a, {gd.a, gd.x_prime}))
    fail("{x,p,q} does not cut off a");
  if (!separates(g, {gd.y, gd.p, gd.q}, gd.b, {gd.b, gd.y_prime}))
    fail("{y,p,q} does not cut off b");
  if (!separates(g, {gd.z, gd.p, gd.q}, gd.c, {gd.c, gd.s, gd.t}))
    fail("{z,p,q} does not cut off c");
  // x, y, z get their 3-cuts from a/b/c plus the two clause edges; inside
  // the bare gadget that reads as: removing a (resp. b, c) strands them
  if (!separates(g, {gd.a}, gd.x, {gd.x, gd.x_prime})) fail("a strands x");
  if (!separates(g, {gd.b}, gd.y, {gd.y, gd.y_prime})) fail("b strands y");
  if (!separates(g, {gd.c}, gd.z, {gd.z, gd.s, gd.t})) fail("c strands z");

  // degree budget: the clause slots sit at degree 2, everything else <= 4
  for (int v : {gd.x, gd.y, gd.z})
    if (g.degree(v) != 2) fail("clause slot degree is not 2");
  if (g.max_degree() > 4) fail("gadget degree exceeds 4");
}

}  // namespace

VariableGadget build_variable_gadget() {
  VariableGadget gd;
  gd.graph = Graph(12);
  for (const auto& [u, v] : kGadgetEdges) gd.graph.add_edge(u, v);
  gd.x = kX;
  gd.x_prime = kXp;
  gd.a = kA;
  gd.y = kY;
  gd.y_prime = kYp;
  gd.b = kB;
  gd.z = kZ;
  gd.s = kS;
  gd.t = kT;
  gd.c = kC;
  gd.p = kP;
  gd.q = kQ;
  const char* names[12] = {"x", "x'", "a", "y", "y'", "b",
                           "z", "s",  "t", "c", "p",  "q"};
  for (int v = 0; v < 12; ++v) gd.graph.set_label(v, names[v]);
  run_checklist(gd);
  return gd;
}

ReductionOutput reduce(const CnfFormula& f) {
  validate_2p1n(f);
  const auto gadget = build_variable_gadget();
  const int n = f.num_vars;

  std::vector<Edge> edges;
  int total = 12 * n;  // gadget copies first, clause vertices appended
  for (int i = 0; i < n; ++i)
    for (const auto& [u, v] : kGadgetEdges)
      edges.emplace_back(12 * i + u, 12 * i + v);

  // slot vertex per (variable, occurrence); occurrences consumed in clause
  // order: first positive -> x, second positive -> y, negative -> z
  auto slot_vertex = [&](int var, int occurrence) {
    const int base = 12 * (var - 1);
    return occurrence == 0 ? base + kX : occurrence == 1 ? base + kY
                                                         : base + kZ;
  };
  std::vector<int> positive_seen(n + 1, 0);
  ReductionOutput out;
  std::vector<std::vector<int>> clause_cycles;
  for (const auto& clause : f.clauses) {
    std::vector<int> cycle;
    for (int lit : clause) {
      const int var = std::abs(lit);
      const int occ = lit > 0 ? positive_seen[var]++ : 2;
      const int vertex = slot_vertex(var, occ);
      out.literal_map.push_back({var, occ, vertex});
      cycle.push_back(vertex);   // literal slot
      cycle.push_back(total++);  // fresh connector vertex
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    clause_cycles.push_back(std::move(cycle));
  }

  Graph g(total);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  for (int i = 0; i < n; ++i) {
    const std::string tag = "v" + std::to_string(i + 1) + ".";
    for (int v = 0; v < 12; ++v)
      g.set_label(12 * i + v, tag + gadget.graph.label(v));
  }

  if (g.max_degree() > 4)
    throw std::logic_error("reduction output exceeds degree 4");
  if (contains_spider(g, SpiderPattern::of(2, 2, 2, 2)))
    throw std::logic_error("reduction output contains a full spider");

  out.graph = std::move(g);
  out.threshold = 4 * n;
  out.formula_digest = formula_digest(f);
  return out;
}

ReductionReport verify_reduction(const CnfFormula& f) {
  const auto sat = sat_2p1n(f);
  const auto red = reduce(f);
  const Graph& g = red.graph;

  ReductionReport rep;
  rep.satisfiable = sat.has_value();
  rep.threshold = red.threshold;
  rep.vertices = g.vertex_count();
  rep.edges = g.edge_count();
  rep.max_degree = g.max_degree();
  rep.spider_free = !contains_spider(g, SpiderPattern::of(2, 2, 2, 2));

  bool constructive_ok = false;
  if (sat) {
    // the assignment-driven set certifies both thresholds constructively
    std::vector<int> witness;
    for (int i = 0; i < f.num_vars; ++i) {
      const int base = 12 * i;
      if ((*sat)[i])
        witness.insert(witness.end(),
                       {base + kX, base + kY, base + kP, base + kT});
      else
        witness.insert(witness.end(),
                       {base + kZ, base + kA, base + kB, base + kC});
    }
    constructive_ok = static_cast<int>(witness.size()) == red.threshold &&
                      is_feedback_vertex_set(g, witness) &&
                      is_independent_set(g, witness);
  }
  if (constructive_ok) {
    rep.fvs_at_most_threshold = true;
    rep.ifvs_at_most_threshold = true;
  } else {
    rep.fvs_at_most_threshold = fvs_decision(g, red.threshold);
    rep.ifvs_at_most_threshold = ifvs_decision(g, red.threshold);
  }
  rep.equivalence_holds = (rep.satisfiable == rep.fvs_at_most_threshold) &&
                          (rep.satisfiable == rep.ifvs_at_most_threshold);
  return rep;
}

}  // namespace starfree

#include "starfree/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace starfree {

namespace {

std::uint64_t next64(std::uint64_t& state) {
  // splitmix64; pinned here so seeded generators are stable across platforms
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int pick(std::uint64_t& state, int bound) {
  return static_cast<int>(next64(state) % static_cast<std::uint64_t>(bound));
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw ValidationError("vertex count must be nonnegative");
  adj_.resize(n);
}

void Graph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw ValidationError("edge endpoint out of range: " + std::to_string(u) +
                          " " + std::to_string(v));
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;  // already lexicographic: u ascending, adj sorted
}

void Graph::set_label(int v, const std::string& label) {
  if (labels_.empty()) labels_.resize(adj_.size());
  labels_[v] = label;
}

const std::string& Graph::label(int v) const {
  static const std::string kEmpty;
  if (labels_.empty()) return kEmpty;
  return labels_[v];
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

bool Graph::is_acyclic() const {
  // n - m == number of components exactly for forests
  const int n = vertex_count();
  std::vector<char> seen(n, 0);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return m_ == n - components;
}

bool Graph::is_cycle_graph() const {
  if (vertex_count() < 3 || !is_connected()) return false;
  for (int v = 0; v < vertex_count(); ++v)
    if (degree(v) != 2) return false;
  return true;
}

bool Graph::is_complete() const {
  const int n = vertex_count();
  return m_ == n * (n - 1) / 2;
}

std::vector<ComponentSplit> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u))
        if (comp[v] == -1) {
          comp[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }
  std::vector<std::vector<int>> members(count);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);
  std::vector<ComponentSplit> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c)
    out.push_back({induced_subgraph(g, members[c]), members[c]});
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    index[vertices[i]] = i;
  Graph h(static_cast<int>(vertices.size()));
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      int j = index[w];
      if (j > i) h.add_edge(i, j);
    }
    if (!g.label(vertices[i]).empty()) h.set_label(i, g.label(vertices[i]));
  }
  return h;
}

Graph remove_vertices(const Graph& g, const std::vector<int>& drop,
                      std::vector<int>* to_parent) {
  std::vector<char> dropped(g.vertex_count(), 0);
  for (int v : drop) dropped[v] = 1;
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!dropped[v]) keep.push_back(v);
  if (to_parent) *to_parent = keep;
  return induced_subgraph(g, keep);
}

Graph subdivide(const Graph& g, int k) {
  if (k < 1) throw ValidationError("subdivision count must be positive");
  const auto es = g.edges();
  Graph h(g.vertex_count() + k * static_cast<int>(es.size()));
  int next = g.vertex_count();
  for (const auto& [u, v] : es) {
    int prev = u;
    for (int i = 0; i < k; ++i) {
      h.add_edge(prev, next);
      prev = next++;
    }
    h.add_edge(prev, v);
  }
  return h;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n)) {
        std::string tok;
        std::istringstream probe(line);
        if (!(probe >> tok)) continue;  // blank or comment-only line
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected vertex count");
      }
      if (n < 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": vertex count must be nonnegative");
      std::string extra;
      if (ls >> extra)
        throw ParseError("line " + std::to_string(lineno) +
                         ": trailing tokens after vertex count");
      g = Graph(n);
      continue;
    }
    int u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected \"u v\"");
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) +
                       ": trailing tokens after edge");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(lineno) +
                       ": endpoint out of range");
    if (u == v)
      throw ValidationError("line " + std::to_string(lineno) + ": self-loop");
    g.add_edge(u, v);
  }
  if (n < 0) throw ParseError("missing vertex count");
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph make_path(int n) {
  if (n < 1) throw ValidationError("path needs at least one vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw ValidationError("cycle needs at least three vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_complete(int n) {
  if (n < 1) throw ValidationError("complete graph needs at least one vertex");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_star(int leaves) {
  if (leaves < 1) throw ValidationError("star needs at least one leaf");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph make_spider(int w, int x, int y, int z) {
  const int lens[4] = {w, x, y, z};
  for (int l : lens)
    if (l < 1) throw ValidationError("spider tentacle lengths must be >= 1");
  Graph g(1 + w + x + y + z);
  int next = 1;
  for (int l : lens) {
    int prev = 0;
    for (int i = 0; i < l; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

Graph random_nice_cactus(int target_n, std::uint64_t seed) {
  if (target_n < 3) throw ValidationError("nice cactus generator needs n >= 3");
  std::uint64_t state = seed;
  const int first = 3 + pick(state, std::min(4, target_n - 2));
  std::vector<Edge> es;
  int n = first;
  for (int i = 0; i < first; ++i) es.emplace_back(i, (i + 1) % first);
  while (n < target_n) {
    const int room = target_n - n;
    const int anchor = pick(state, n);
    if (room >= 3 && pick(state, 3) != 0) {
      // attach a fresh cycle by a bridge; cycles stay vertex disjoint
      const int len = 3 + pick(state, std::min(4, room - 2));
      for (int i = 0; i < len; ++i) es.emplace_back(n + i, n + (i + 1) % len);
      es.emplace_back(anchor, n);
      n += len;
    } else {
      es.emplace_back(anchor, n);  // pendant vertex
      n += 1;
    }
  }
  Graph g(n);
  for (const auto& [u, v] : es) g.add_edge(u, v);
  return g;
}

Graph random_subcubic(int n, int extra_edges, std::uint64_t seed) {
  if (n < 1) throw ValidationError("subcubic generator needs n >= 1");
  std::uint64_t state = seed;
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u)
      if (g.degree(u) < 3) open.push_back(u);
    g.add_edge(open[pick(state, static_cast<int>(open.size()))], v);
  }
  int added = 0, attempts = 0;
  while (added < extra_edges && attempts < 20 * (extra_edges + 1)) {
    ++attempts;
    int u = pick(state, n), v = pick(state, n);
    if (u == v || g.degree(u) >= 3 || g.degree(v) >= 3 || g.has_edge(u, v))
      continue;
    g.add_edge(u, v);
    ++added;
  }
  return g;
}

Graph random_quasi_bridgeless(int target_n, std::uint64_t seed) {
  if (target_n < 3)
    throw ValidationError("quasi-bridgeless generator needs n >= 3");
  std::uint64_t state = seed;
  std::vector<Edge> es;
  // glue 2-connected blocks at shared vertices, so no edge is a bridge
  auto add_block = [&](int anchor, int fresh, int n) {
    // block on {anchor} + fresh new vertices: cycle, sometimes with chords
    std::vector<int> ring{anchor};
    for (int i = 0; i < fresh; ++i) ring.push_back(n + i);
    const int len = static_cast<int>(ring.size());
    for (int i = 0; i < len; ++i)
      es.emplace_back(std::min(ring[i], ring[(i + 1) % len]),
                      std::max(ring[i], ring[(i + 1) % len]));
    if (len >= 4 && pick(state, 2) == 0)
      for (int i = 0; i + 2 < len; i += 2)
        es.emplace_back(std::min(ring[i], ring[i + 2]),
                        std::max(ring[i], ring[i + 2]));
  };
  int n = 0;
  {
    const int fresh = std::min(target_n, 3 + pick(state, 3));
    std::vector<int> ring;
    for (int i = 0; i < fresh; ++i) ring.push_back(i);
    for (int i = 0; i < fresh; ++i)
      es.emplace_back(std::min(ring[i], ring[(i + 1) % fresh]),
                      std::max(ring[i], ring[(i + 1) % fresh]));
    n = fresh;
  }
  while (n < target_n) {
    const int room = target_n - n;
    const int fresh = std::min(room, 2 + pick(state, 3));
    add_block(pick(state, n), fresh, n);
    n += fresh;
  }
  Graph g(n);
  for (const auto& [u, v] : es)
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  for (int s : sources) {
    dist[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

}  // namespace starfree

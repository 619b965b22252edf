#include "starfree/spider.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace starfree {

SpiderPattern SpiderPattern::of(int w, int x, int y, int z) {
  SpiderPattern p{{w, x, y, z}};
  for (int l : p.lengths)
    if (l < 1) throw ValidationError("spider tentacle lengths must be >= 1");
  std::sort(p.lengths.begin(), p.lengths.end(), std::greater<int>());
  return p;
}

Graph spider_graph(const SpiderPattern& p) {
  return make_spider(p.lengths[0], p.lengths[1], p.lengths[2], p.lengths[3]);
}

bool embedding_valid(const Graph& host, const Graph& pattern,
                     const Embedding& emb) {
  if (static_cast<int>(emb.size()) != pattern.vertex_count()) return false;
  std::vector<char> used(host.vertex_count(), 0);
  for (int h : emb) {
    if (h < 0 || h >= host.vertex_count() || used[h]) return false;
    used[h] = 1;
  }
  for (const auto& [u, v] : pattern.edges())
    if (!host.has_edge(emb[u], emb[v])) return false;
  return true;
}

namespace {

struct SubgraphSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;    // pattern vertices, most-constrained first
  std::vector<int> map;      // pattern -> host, -1 unset
  std::vector<char> used;    // host vertices taken

  bool place(std::size_t idx) {
    if (idx == order.size()) return true;
    const int pv = order[idx];
    // collect already-mapped pattern neighbours
    std::vector<int> anchors;
    for (int pw : pattern.neighbors(pv))
      if (map[pw] != -1) anchors.push_back(map[pw]);
    const int pd = pattern.degree(pv);
    auto try_host = [&](int hv) {
      if (used[hv] || host.degree(hv) < pd) return false;
      for (int a : anchors)
        if (!host.has_edge(hv, a)) return false;
      used[hv] = 1;
      map[pv] = hv;
      if (place(idx + 1)) return true;
      used[hv] = 0;
      map[pv] = -1;
      return false;
    };
    if (!anchors.empty()) {
      // candidates restricted to neighbours of the first anchor
      for (int hv : host.neighbors(anchors[0]))
        if (try_host(hv)) return true;
    } else {
      for (int hv = 0; hv < host.vertex_count(); ++hv)
        if (try_host(hv)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> contains_subgraph(const Graph& host,
                                           const Graph& pattern,
                                           int pattern_cap) {
  const int pn = pattern.vertex_count();
  if (pn > pattern_cap)
    throw CapacityError("contains_subgraph: pattern has " +
                        std::to_string(pn) + " vertices, cap " +
                        std::to_string(pattern_cap));
  if (pn > host.vertex_count() || pattern.edge_count() > host.edge_count())
    return std::nullopt;
  SubgraphSearch s{host, pattern, {}, std::vector<int>(pn, -1),
                   std::vector<char>(host.vertex_count(), 0)};
  // order: highest degree first, then append remaining by connectivity so
  // every later vertex touches an earlier one where possible
  std::vector<int> by_degree(pn);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    if (pattern.degree(a) != pattern.degree(b))
      return pattern.degree(a) > pattern.degree(b);
    return a < b;
  });
  std::vector<char> placed(pn, 0);
  for (int seed : by_degree) {
    if (placed[seed]) continue;
    s.order.push_back(seed);
    placed[seed] = 1;
    for (std::size_t i = s.order.size() - 1; i < s.order.size(); ++i)
      for (int w : pattern.neighbors(s.order[i]))
        if (!placed[w]) {
          placed[w] = 1;
          s.order.push_back(w);
        }
  }
  if (s.place(0)) return Embedding(s.map);
  return std::nullopt;
}

Embedding SpiderEmbedding::as_embedding(const SpiderPattern& p) const {
  Embedding emb;
  emb.push_back(centre);
  for (int t = 0; t < 4; ++t)
    for (int i = 0; i < p.lengths[t]; ++i) emb.push_back(tentacles[t][i]);
  return emb;
}

namespace {

struct SpiderSearch {
  const Graph& host;
  const SpiderPattern& p;
  std::vector<char> used;
  SpiderEmbedding emb;

  // grow tentacle t from `from` until `left` more vertices are placed
  bool grow(int t, int from, int left) {
    if (left == 0) return place_tentacle(t + 1);
    for (int w : host.neighbors(from)) {
      if (used[w]) continue;
      used[w] = 1;
      emb.tentacles[t].push_back(w);
      if (grow(t, w, left - 1)) return true;
      emb.tentacles[t].pop_back();
      used[w] = 0;
    }
    return false;
  }

  bool place_tentacle(int t) {
    if (t == 4) return true;
    return grow(t, emb.centre, p.lengths[t]);
  }

  bool from_centre(int c) {
    used.assign(host.vertex_count(), 0);
    used[c] = 1;
    emb.centre = c;
    for (auto& v : emb.tentacles) v.clear();
    return place_tentacle(0);
  }
};

}  // namespace

std::optional<SpiderEmbedding> contains_spider(const Graph& host,
                                               const SpiderPattern& p) {
  std::vector<int> centres;
  for (int v = 0; v < host.vertex_count(); ++v)
    if (host.degree(v) >= 4) centres.push_back(v);
  std::sort(centres.begin(), centres.end(), [&](int a, int b) {
    if (host.degree(a) != host.degree(b))
      return host.degree(a) > host.degree(b);
    return a < b;
  });
  SpiderSearch s{host, p, {}, {}};
  for (int c : centres)
    if (s.from_centre(c)) return s.emb;
  return std::nullopt;
}

SpiderFreeResult spider_free(const Graph& host, const SpiderPattern& p) {
  auto w = contains_spider(host, p);
  if (w) return {false, std::move(w)};
  return {true, std::nullopt};
}

}  // namespace starfree

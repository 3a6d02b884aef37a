#include "isoreg/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace isoreg {

namespace {

using Colouring = std::vector<int>;

// One refinement pass over both graphs with a shared signature table, so the
// colour ids stay comparable across g and h. Returns false if the colour class
// sizes of g and h diverge.
bool refine(const Graph& g, const Graph& h, Colouring& cg, Colouring& ch, int& colours) {
  const std::size_t n = g.order();
  while (true) {
    std::vector<std::vector<int>> sig_g(n), sig_h(n);
    auto signature = [&](const Graph& x, const Colouring& c, Vertex v) {
      std::vector<int> s{c[v]};
      for (Vertex w : x.neighbours(v)) s.push_back(c[w]);
      std::sort(s.begin() + 1, s.end());
      return s;
    };
    for (Vertex v = 0; v < n; ++v) {
      sig_g[v] = signature(g, cg, v);
      sig_h[v] = signature(h, ch, v);
    }
    std::map<std::vector<int>, std::pair<int, int>> table;  // sig -> (count g, count h)
    for (const auto& s : sig_g) ++table[s].first;
    for (const auto& s : sig_h) ++table[s].second;
    for (const auto& [s, counts] : table)
      if (counts.first != counts.second) return false;
    std::map<std::vector<int>, int> ids;
    int next = 0;
    for (const auto& [s, counts] : table) ids[s] = next++;
    for (Vertex v = 0; v < n; ++v) {
      cg[v] = ids[sig_g[v]];
      ch[v] = ids[sig_h[v]];
    }
    if (next == colours) return true;
    colours = next;
  }
}

bool search(const Graph& g, const Graph& h, Colouring cg, Colouring ch, int colours,
            std::vector<Vertex>& perm) {
  if (!refine(g, h, cg, ch, colours)) return false;
  const std::size_t n = g.order();
  if (static_cast<std::size_t>(colours) == n) {
    std::vector<Vertex> by_colour(n);
    for (Vertex w = 0; w < n; ++w) by_colour[ch[w]] = w;
    for (Vertex v = 0; v < n; ++v) perm[v] = by_colour[cg[v]];
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (g.adjacent(u, v) != h.adjacent(perm[u], perm[v])) return false;
    return true;
  }
  std::vector<int> size(colours, 0);
  for (int c : cg) ++size[c];
  int target = -1;
  for (int c = 0; c < colours; ++c)
    if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
  Vertex v = 0;
  while (cg[v] != target) ++v;
  for (Vertex w = 0; w < n; ++w) {
    if (ch[w] != target) continue;
    Colouring ng = cg, nh = ch;
    ng[v] = colours;
    nh[w] = colours;
    if (search(g, h, std::move(ng), std::move(nh), colours + 1, perm)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  const std::size_t n = g.order();
  std::vector<Vertex> perm(n);
  if (!search(g, h, Colouring(n, 0), Colouring(n, 0), 1, perm)) return std::nullopt;
  return perm;
}

std::uint64_t invariant_hash(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> keys;
  keys.reserve(n * (n - 1) / 2);
  std::vector<Word> common(g.words_per_row());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      auto ru = g.row(u), rv = g.row(v);
      for (std::size_t w = 0; w < common.size(); ++w) common[w] = ru[w] & rv[w];
      std::uint64_t size = popcount(common), inner = 0;
      for (Vertex x : bits_to_vertices(common)) inner += popcount_and(g.row(x), common);
      keys.push_back((std::uint64_t{g.adjacent(u, v)} << 62) | (size << 40) | (inner / 2));
    }
  std::sort(keys.begin(), keys.end());
  std::uint64_t hash = 1469598103934665603ull ^ n ^ (g.edge_count() << 20);
  for (auto k : keys) hash = (hash ^ k) * 1099511628211ull;
  return hash;
}

}  // namespace isoreg

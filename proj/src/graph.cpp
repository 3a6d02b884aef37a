#include "isoreg/graph.hpp"

#include <queue>

namespace isoreg {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
  if (n < 1 || n > kMaxOrder)
    throw Error("graph order " + std::to_string(n) + " outside [1, " +
                std::to_string(kMaxOrder) + "]");
}

void Graph::set_edge(Vertex u, Vertex v) noexcept {
  bits_[u * words_ + (v >> 6)] |= Word{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= Word{1} << (u & 63);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= g_.order() || v >= g_.order())
    throw Error("edge endpoint out of range");
  if (u == v) throw Error("loops are not allowed");
  g_.set_edge(u, v);
  return *this;
}

Graph Graph::from_predicate(std::size_t n,
                            const std::function<bool(Vertex, Vertex)>& adjacent) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adjacent(u, v)) g.set_edge(u, v);
  return g;
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::size_t Graph::degree(Vertex v) const noexcept { return popcount(row(v)); }

std::size_t Graph::common_neighbours(Vertex u, Vertex v) const noexcept {
  return popcount_and(row(u), row(v));
}

std::vector<Vertex> Graph::neighbours(Vertex v) const { return bits_to_vertices(row(v)); }

std::size_t Graph::edge_count() const noexcept { return popcount(bits_) / 2; }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbours(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        g.set_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

Graph Graph::relabelled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw Error("relabelling has wrong length");
  Graph g(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) g.set_edge(perm[u], perm[v]);
  return g;
}

std::vector<Vertex> bits_to_vertices(std::span<const Word> bits) {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    Word x = bits[w];
    while (x) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<int> distances_from(const Graph& g, Vertex v) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbours(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  for (int d : distances_from(g, 0))
    if (d < 0) return false;
  return true;
}

bool is_automorphism(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) return false;
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : perm) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
  return true;
}

}  // namespace isoreg

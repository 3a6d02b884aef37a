#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isoreg {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphBuilder;

// Undirected simple graph on vertices 0..n-1 stored as a symmetric bit matrix.
// Rows are padded to whole 64-bit words; padding bits are always zero.
// Instances are immutable once built.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  // Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  // Graph whose edges are the unordered pairs {u,v}, u<v, with adjacent(u,v).
  static Graph from_predicate(std::size_t n,
                              const std::function<bool(Vertex, Vertex)>& adjacent);
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  std::span<const Word> row(Vertex v) const noexcept {
    return {bits_.data() + v * words_, words_};
  }

  std::size_t degree(Vertex v) const noexcept;
  std::size_t common_neighbours(Vertex u, Vertex v) const noexcept;
  std::vector<Vertex> neighbours(Vertex v) const;
  std::size_t edge_count() const noexcept;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Induced subgraph on `vertices`, relabelled 0..|vertices|-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  // Image of this graph under the vertex map v -> perm[v].
  Graph relabelled(std::span<const Vertex> perm) const;

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> bits_;

  void set_edge(Vertex u, Vertex v) noexcept;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}

  GraphBuilder& add_edge(Vertex u, Vertex v);
  std::size_t order() const noexcept { return g_.order(); }
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

inline std::size_t popcount_and(std::span<const Word> a,
                                 std::span<const Word> b) noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

inline std::size_t popcount(std::span<const Word> a) noexcept {
  std::size_t c = 0;
  for (Word w : a) c += std::popcount(w);
  return c;
}

// Sorted vertex list of a bit set.
std::vector<Vertex> bits_to_vertices(std::span<const Word> bits);

bool is_connected(const Graph& g);

// BFS distances from v; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, Vertex v);

// Rotation automorphism check: perm must map edges to edges.
bool is_automorphism(const Graph& g, std::span<const Vertex> perm);

}  // namespace isoreg

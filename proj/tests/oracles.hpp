// Independent reference implementations used by the tests. They work on a
// plain boolean matrix and never call the library's analysis code.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoreg/constructions.hpp"
#include "isoreg/graph.hpp"

namespace oracle {

using isoreg::Graph;
using isoreg::Vertex;
using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const Graph& g) {
  Matrix a(g.order(), std::vector<bool>(g.order()));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) a[u][v] = g.adjacent(u, v);
  return a;
}

// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
inline Graph kneser_petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  return Graph::from_predicate(10, [&](Vertex u, Vertex v) {
    auto [a, b] = pairs[u];
    auto [c, d] = pairs[v];
    return a != c && a != d && b != c && b != d;
  });
}

inline int common(const Matrix& a, int u, int v) {
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += a[u][w] && a[v][w];
  return c;
}

// (n,k,lambda,mu) by direct counting; classes with no pairs report 0.
inline std::optional<std::array<long, 4>> srg(const Graph& g) {
  auto a = matrix(g);
  const int n = static_cast<int>(a.size());
  long k = std::count(a[0].begin(), a[0].end(), true);
  long lam = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    if (std::count(a[u].begin(), a[u].end(), true) != k) return std::nullopt;
    for (int v = u + 1; v < n; ++v) {
      long& slot = a[u][v] ? lam : mu;
      long c = common(a, u, v);
      if (slot >= 0 && slot != c) return std::nullopt;
      slot = c;
    }
  }
  return std::array<long, 4>{n, k, std::max(lam, 0L), std::max(mu, 0L)};
}

inline int valency(const Graph& g, const std::vector<Vertex>& S) {
  int c = 0;
  for (Vertex w = 0; w < g.order(); ++w) {
    bool all = true;
    for (Vertex s : S) all = all && g.adjacent(s, w);
    c += all;
  }
  return c;
}

inline int edges_within(const Graph& g, const std::vector<Vertex>& S) {
  int e = 0;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j) e += g.adjacent(S[i], S[j]);
  return e;
}

// For at most three vertices the type is fixed by size and edge count.
// Returns {(size, edges) -> valency} when the graph is 3-isoregular.
inline std::optional<std::map<std::pair<int, int>, int>> iso3_profile(const Graph& g) {
  std::map<std::pair<int, int>, int> seen;
  const Vertex n = static_cast<Vertex>(g.order());
  auto visit = [&](std::vector<Vertex> S) {
    std::pair<int, int> key{static_cast<int>(S.size()), edges_within(g, S)};
    int val = valency(g, S);
    auto [it, fresh] = seen.emplace(key, val);
    return fresh || it->second == val;
  };
  for (Vertex a = 0; a < n; ++a) {
    if (!visit({a})) return std::nullopt;
    for (Vertex b = a + 1; b < n; ++b) {
      if (!visit({a, b})) return std::nullopt;
      for (Vertex c = b + 1; c < n; ++c)
        if (!visit({a, b, c})) return std::nullopt;
    }
  }
  return seen;
}

// Valencies of {x, y, z} grouped by the number of edges among them.
// Index 3/2/1/0 = K3/K1,2/K2+K1/3K1. Absent when some group is not constant;
// empty groups give 0.
inline std::optional<std::array<int, 4>> pair_params(const Graph& g, Vertex x, Vertex y) {
  std::array<int, 4> val{-1, -1, -1, -1};
  for (Vertex z = 0; z < g.order(); ++z) {
    if (z == x || z == y) continue;
    int e = edges_within(g, {x, y, z});
    int v = valency(g, {x, y, z});
    if (val[e] >= 0 && val[e] != v) return std::nullopt;
    val[e] = v;
  }
  for (int& v : val) v = std::max(v, 0);
  return val;
}

inline int max_clique(const Graph& g) {
  const int n = static_cast<int>(g.order());
  int best = 0;
  std::vector<int> cur;
  auto grow = [&](auto&& self, int from) -> void {
    best = std::max<int>(best, static_cast<int>(cur.size()));
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int c : cur) ok = ok && g.adjacent(c, v);
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  grow(grow, 0);
  return best;
}

// Sorted adjacency eigenvalues (numerical).
inline std::vector<double> spectrum(const Graph& g) {
  const int n = static_cast<int>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) a(u, v) = g.adjacent(u, v) ? 1.0 : 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline std::vector<double> distinct(const std::vector<double>& ev, double tol = 1e-7) {
  std::vector<double> d;
  for (double x : ev)
    if (d.empty() || std::abs(x - d.back()) > tol) d.push_back(x);
  return d;
}

// All (Q,R,W,V) in the box with every relation holding, by plain search.
struct Tuple {
  long Q, R, W, V;
  bool operator==(const Tuple&) const = default;
  auto operator<=>(const Tuple&) const = default;
};

inline std::vector<Tuple> box_solutions(long n, long k, long l, long m) {
  std::vector<Tuple> out;
  const long far = n - 2 * k + m - 2;
  for (long R = 0; R <= std::min(l, m - 1); ++R)
    for (long Q = 0; Q <= std::max(l - 1, 0L); ++Q)
      for (long W = 0; W <= std::min(l, m); ++W)
        for (long V = 0; V <= m; ++V) {
          if (l * (l - Q - 1) != R * (k - l - 1)) continue;
          if (l * m * (k - 2 * l + Q) != W * (k - m) * (k - l - 1)) continue;
          if (W * (k - m) != m * (l - R)) continue;
          if (m * (k - 2 - 2 * l + R) != V * far) continue;
          out.push_back({Q, R, W, V});
        }
  return out;
}

// Graphs used throughout: the named registry, complements, and small
// standard graphs (some irregular, some trivially strongly regular).
struct Entry {
  std::string name;
  Graph graph;
};

inline std::vector<Entry> corpus() {
  using namespace isoreg;
  std::vector<Entry> c;
  for (auto ref : all_named_graphs()) {
    Graph g = build_named(ref);
    c.push_back({named_graph_tag(ref), g});
    c.push_back({"co-" + named_graph_tag(ref), complement(g)});
  }
  c.push_back({"paley5", paley(5)});
  c.push_back({"T5", triangular(5)});
  c.push_back({"T6", triangular(6)});
  c.push_back({"L(K44)", line_graph(complete_bipartite(4, 4))});
  c.push_back({"K6", complete_graph(6)});
  c.push_back({"3K2", disjoint_union(complete_graph(2), 3)});
  c.push_back({"K33", complete_bipartite(3, 3)});
  c.push_back({"C6", cycle_graph(6)});
  c.push_back({"C7", cycle_graph(7)});
  c.push_back({"P4", path_graph(4)});
  c.push_back({"K3xK3", cartesian_product(complete_graph(3), complete_graph(3))});
  c.push_back({"K13", complete_bipartite(1, 3)});
  c.push_back({"circ8", circulant(8, ResidueSet(8, {1, 7, 2, 6}))});
  return c;
}

}  // namespace oracle

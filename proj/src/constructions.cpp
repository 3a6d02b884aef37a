#include "isoreg/constructions.hpp"

#include <array>
#include <charconv>

namespace isoreg {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Graph circulant(int n, const ResidueSet& S) {
  if (n < 2) throw Error("circulant needs n >= 2");
  if (S.modulus() != n) throw Error("S has the wrong modulus");
  if (S.contains(0)) throw Error("S must not contain 0");
  if (!S.is_symmetric()) throw Error("S is not closed under negation");
  return Graph::from_predicate(n, [&](Vertex u, Vertex v) {
    return S.contains(static_cast<long long>(v) - u);
  });
}

Graph bicirculant(const BicirculantSymbol& sym) {
  sym.validate();
  const int n = sym.n;
  return Graph::from_predicate(2 * n, [&](Vertex a, Vertex b) {
    // a < b, so a is a u-vertex whenever the pair is mixed
    if (b < static_cast<Vertex>(n)) return sym.S.contains(static_cast<long long>(b) - a);
    if (a >= static_cast<Vertex>(n)) return sym.Sp.contains(static_cast<long long>(b) - a);
    return sym.T.contains(static_cast<long long>(b - n) - a);
  });
}

Graph tricirculant(const TricirculantSymbol& sym) {
  sym.validate();
  const int n = sym.n;
  return Graph::from_predicate(3 * n, [&](Vertex x, Vertex y) {
    int ox = static_cast<int>(x) / n, oy = static_cast<int>(y) / n;
    long long ix = static_cast<int>(x) % n, iy = static_cast<int>(y) % n;
    if (ox == oy) return sym.S[ox].contains(iy - ix);
    if (oy == (ox + 1) % 3) return sym.T[ox].contains(iy - ix);
    return sym.T[oy].contains(ix - iy);
  });
}

Graph paley(int p) {
  if (!is_prime(p)) throw Error("paley: " + std::to_string(p) + " is not prime");
  if (p % 4 != 1) throw Error("paley: p must be 1 mod 4");
  std::vector<long long> squares;
  for (long long x = 1; x < p; ++x) squares.push_back(x * x % p);
  return circulant(p, ResidueSet(p, squares));
}

Graph triangular(int m) {
  if (m < 3) throw Error("triangular graph needs m >= 3");
  std::vector<std::array<int, 2>> pairs;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) pairs.push_back({a, b});
  return Graph::from_predicate(pairs.size(), [&](Vertex u, Vertex v) {
    const auto& p = pairs[u];
    const auto& q = pairs[v];
    return p[0] == q[0] || p[0] == q[1] || p[1] == q[0] || p[1] == q[1];
  });
}

Graph complement(const Graph& g) {
  return Graph::from_predicate(g.order(), [&](Vertex u, Vertex v) { return !g.adjacent(u, v); });
}

Graph line_graph(const Graph& g) {
  auto e = g.edges();
  if (e.empty()) throw Error("line graph of an edgeless graph is empty");
  return Graph::from_predicate(e.size(), [&](Vertex a, Vertex b) {
    return e[a].first == e[b].first || e[a].first == e[b].second ||
           e[a].second == e[b].first || e[a].second == e[b].second;
  });
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  return Graph::from_predicate(g.order() * m, [&](Vertex x, Vertex y) {
    Vertex gx = x / m, hx = x % m, gy = y / m, hy = y % m;
    return (gx == gy && h.adjacent(hx, hy)) || (hx == hy && g.adjacent(gx, gy));
  });
}

Graph complete_graph(std::size_t n) {
  return Graph::from_predicate(n, [](Vertex, Vertex) { return true; });
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  return Graph::from_predicate(a + b, [a](Vertex u, Vertex v) { return (u < a) != (v < a); });
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("cycle needs n >= 3");
  return Graph::from_predicate(n, [n](Vertex u, Vertex v) {
    return v == u + 1 || (u == 0 && v == n - 1);
  });
}

Graph path_graph(std::size_t n) {
  return Graph::from_predicate(n, [](Vertex u, Vertex v) { return v == u + 1; });
}

Graph disjoint_union(const Graph& g, std::size_t copies) {
  const std::size_t m = g.order();
  return Graph::from_predicate(m * copies, [&](Vertex u, Vertex v) {
    return u / m == v / m && g.adjacent(u % m, v % m);
  });
}

// PG(1,4) = {inf, 0, 1, w, w^2} with 1 + w = w^2. The fibre over x is
// {(x,0),(x,1),(x,2)}; voltages live in D6 acting on Z3. Edges at inf carry
// the identity; 0 -- w^i carries tau_i; w^i -- w^j carries tau_k where
// w^k = w^i + w^j, i.e. {i,j,k} = {0,1,2}. Each tau is an involution, so the
// direction in which a voltage is read does not matter. Reading tau_i as the
// reflection fixing i also yields GQ(2,2), but then the two sample triads
// {(inf,0),(0,1),(1,1)} and {(inf,0),(0,1),(w,2)} fall in the same class; the
// reflection fixing -1-i separates them (3 and 1 common neighbours).
Graph gq22_voltage() {
  constexpr int kInf = 0, kZero = 1;
  auto vertex = [](int x, int i) { return static_cast<Vertex>(3 * x + mod(i, 3)); };
  auto tau = [](int k, int j) { return mod(2 * (-1 - k) - j, 3); };
  auto power_index = [](int i) { return 2 + i; };  // w^i -> point index
  GraphBuilder b(15);
  for (int x = 0; x < 5; ++x)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) b.add_edge(vertex(x, i), vertex(x, j));
  for (int y = 1; y < 5; ++y)
    for (int i = 0; i < 3; ++i) b.add_edge(vertex(kInf, i), vertex(y, i));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.add_edge(vertex(kZero, j), vertex(power_index(i), tau(i, j)));
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k) {
      int third = 3 - i - k;
      for (int j = 0; j < 3; ++j)
        b.add_edge(vertex(power_index(i), j), vertex(power_index(k), tau(third, j)));
    }
  return std::move(b).build();
}

Vertex gq22_vertex(std::string_view x, int i) {
  static constexpr std::array<std::string_view, 5> names = {"inf", "0", "1", "w", "w2"};
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == x) return static_cast<Vertex>(3 * k + mod(i, 3));
  throw Error("unknown point of PG(1,4): " + std::string(x));
}

BicirculantSymbol petersen_symbol() {
  return {5, ResidueSet(5, {1, -1}), ResidueSet(5, {2, -2}), ResidueSet(5, {0})};
}
BicirculantSymbol clebsch_symbol() {
  return {8, ResidueSet(8, {1, -1, 4}), ResidueSet(8, {3, -3, 4}), ResidueSet(8, {0, 2})};
}
BicirculantSymbol k4xk4_symbol() {
  return {8, ResidueSet(8, {1, -1}), ResidueSet(8, {3, -3}), ResidueSet(8, {0, 1, 3, 4})};
}
BicirculantSymbol shrikhande_a_symbol() {
  return {8, ResidueSet(8, {1, -1}), ResidueSet(8, {3, -3}), ResidueSet(8, {0, 1, -1, 4})};
}
BicirculantSymbol shrikhande_b_symbol() {
  return {8, ResidueSet(8, {1, -1, 2, -2}), ResidueSet(8, {2, -2, 3, -3}), ResidueSet(8, {1, 3})};
}

std::optional<NamedGraphRef> parse_named_graph(std::string_view tag) {
  static const std::array<std::pair<std::string_view, NamedGraph>, 9> table = {{
      {"c5", NamedGraph::C5},
      {"petersen", NamedGraph::Petersen},
      {"clebsch", NamedGraph::Clebsch},
      {"k4xk4", NamedGraph::K4xK4},
      {"shrikhande-a", NamedGraph::ShrikhandeA},
      {"shrikhande-b", NamedGraph::ShrikhandeB},
      {"gq22", NamedGraph::GQ22},
      {"t6-complement", NamedGraph::T6Complement},
      {"t7", NamedGraph::T7},
  }};
  for (auto [name, tag_value] : table)
    if (name == tag) return NamedGraphRef{tag_value, 0};
  if (tag == "shrikhande") return NamedGraphRef{NamedGraph::ShrikhandeA, 0};
  constexpr std::string_view paley_prefix = "paley-";
  if (tag.substr(0, paley_prefix.size()) == paley_prefix) {
    auto digits = tag.substr(paley_prefix.size());
    int p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
      return NamedGraphRef{NamedGraph::Paley, p};
  }
  return std::nullopt;
}

std::string named_graph_tag(NamedGraphRef ref) {
  switch (ref.tag) {
    case NamedGraph::C5: return "c5";
    case NamedGraph::Petersen: return "petersen";
    case NamedGraph::Clebsch: return "clebsch";
    case NamedGraph::K4xK4: return "k4xk4";
    case NamedGraph::ShrikhandeA: return "shrikhande-a";
    case NamedGraph::ShrikhandeB: return "shrikhande-b";
    case NamedGraph::GQ22: return "gq22";
    case NamedGraph::T6Complement: return "t6-complement";
    case NamedGraph::T7: return "t7";
    case NamedGraph::Paley: return "paley-" + std::to_string(ref.parameter);
  }
  throw Error("unknown named graph");
}

Graph build_named(NamedGraphRef ref) {
  switch (ref.tag) {
    case NamedGraph::C5: return circulant(5, ResidueSet(5, {1, 4}));
    case NamedGraph::Petersen: return bicirculant(petersen_symbol());
    case NamedGraph::Clebsch: return bicirculant(clebsch_symbol());
    case NamedGraph::K4xK4: return bicirculant(k4xk4_symbol());
    case NamedGraph::ShrikhandeA: return bicirculant(shrikhande_a_symbol());
    case NamedGraph::ShrikhandeB: return bicirculant(shrikhande_b_symbol());
    case NamedGraph::GQ22: return gq22_voltage();
    case NamedGraph::T6Complement: return complement(triangular(6));
    case NamedGraph::T7: return triangular(7);
    case NamedGraph::Paley: return paley(ref.parameter);
  }
  throw Error("unknown named graph");
}

std::vector<NamedGraphRef> all_named_graphs() {
  return {{NamedGraph::C5},          {NamedGraph::Petersen},    {NamedGraph::Clebsch},
          {NamedGraph::K4xK4},       {NamedGraph::ShrikhandeA}, {NamedGraph::ShrikhandeB},
          {NamedGraph::GQ22},        {NamedGraph::T6Complement}, {NamedGraph::T7},
          {NamedGraph::Paley, 13},   {NamedGraph::Paley, 17}};
}

}  // namespace isoreg

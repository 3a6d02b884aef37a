#include <numeric>
#include <random>

#include "doctest.h"
#include "isoreg/constructions.hpp"
#include "isoreg/graph_io.hpp"
#include "isoreg/isomorphism.hpp"
#include "oracles.hpp"

using namespace isoreg;

namespace {

bool same_edges(const Graph& a, const Graph& b) { return a == b; }

std::vector<Vertex> rotation(std::size_t orbits, std::size_t n) {
  std::vector<Vertex> p(orbits * n);
  for (std::size_t a = 0; a < orbits; ++a)
    for (std::size_t i = 0; i < n; ++i) p[a * n + i] = static_cast<Vertex>(a * n + (i + 1) % n);
  return p;
}

ResidueSet random_symmetric(std::mt19937& rng, int n) {
  std::vector<long long> e;
  for (int i = 1; 2 * i <= n; ++i)
    if (rng() & 1) {
      e.push_back(i);
      e.push_back(n - i);
    }
  return ResidueSet(n, e);
}

ResidueSet random_subset(std::mt19937& rng, int n) {
  std::vector<long long> e;
  for (int i = 0; i < n; ++i)
    if (rng() & 1) e.push_back(i);
  return ResidueSet(n, e);
}

}  // namespace

TEST_CASE("graph construction limits") {
  CHECK_THROWS_AS(Graph(0), Error);
  CHECK_THROWS_AS(Graph(Graph::kMaxOrder + 1), Error);
  CHECK_NOTHROW(Graph(Graph::kMaxOrder));
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), Error);
  CHECK_THROWS_AS(b.add_edge(0, 3), Error);
}

TEST_CASE("adjacency is symmetric with an empty diagonal") {
  for (const auto& e : oracle::corpus()) {
    const auto& g = e.graph;
    for (Vertex u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
  }
}

TEST_CASE("circulant") {
  CHECK(is_isomorphic(circulant(5, ResidueSet(5, {1, 4})), cycle_graph(5)));
  CHECK(circulant(4, ResidueSet(4, {})).edge_count() == 0);
  CHECK(circulant(6, ResidueSet(6, {1, 2, 3, 4, 5})) == complete_graph(6));
  CHECK_THROWS_AS(circulant(5, ResidueSet(5, {0, 1, 4})), Error);
  CHECK_THROWS_AS(circulant(5, ResidueSet(5, {1})), Error);
}

TEST_CASE("bicirculant examples") {
  auto clebsch = bicirculant(BicirculantSymbol::parse("bi:n=8;S=1,-1,4;Sp=3,-3,4;T=0,2"));
  CHECK(oracle::srg(clebsch) == std::array<long, 4>{16, 5, 0, 2});
  auto k4k4 = bicirculant(BicirculantSymbol::parse("bi:n=8;S=1,-1;Sp=3,-3;T=0,1,3,4"));
  CHECK(is_isomorphic(k4k4, cartesian_product(complete_graph(4), complete_graph(4))));
  auto petersen = bicirculant(BicirculantSymbol::parse("bi:n=5;S=1,-1;Sp=2,-2;T=0"));
  CHECK(is_isomorphic(petersen, oracle::kneser_petersen()));
  CHECK(petersen_symbol().to_string() == "bi:n=5;S=1,4;Sp=2,3;T=0");
}

TEST_CASE("bicirculant rejects invalid symbols") {
  BicirculantSymbol s{5, ResidueSet(5, {1}), ResidueSet(5, {2, 3}), ResidueSet(5, {0})};
  CHECK_THROWS_AS(bicirculant(s), Error);
  s.S = ResidueSet(5, {0, 1, 4});
  CHECK_THROWS_AS(bicirculant(s), Error);
  s.S = ResidueSet(6, {1, 5});
  CHECK_THROWS_AS(bicirculant(s), Error);
  CHECK_THROWS_AS(BicirculantSymbol::parse("bi:n=5;S=1,4;Sp=2,3"), Error);
  CHECK_THROWS_AS(BicirculantSymbol::parse("bi:n=5;S=1,x;Sp=2,3;T=0"), Error);
  CHECK_THROWS_AS(BicirculantSymbol::parse("tri:n=5;S=1,4;Sp=2,3;T=0"), Error);
}

TEST_CASE("symbol text round-trips") {
  for (const char* text : {"bi:n=8;S=1,4,7;Sp=3,4,5;T=0,2", "bi:n=5;S=;Sp=1,2,3,4;T=",
                           "tri:n=5;S0=;S1=1,4;S2=2,3;T01=0,1,3;T12=0;T20=1,2,3"}) {
    std::string t = text;
    if (t.rfind("bi:", 0) == 0)
      CHECK(BicirculantSymbol::parse(t).to_string() == t);
    else
      CHECK(TricirculantSymbol::parse(t).to_string() == t);
  }
  CHECK(BicirculantSymbol::parse("bi:n=8;S=-1,1,4;Sp=3,-3,4;T=2,0").to_string() ==
        "bi:n=8;S=1,4,7;Sp=3,4,5;T=0,2");
}

TEST_CASE("tricirculant") {
  TricirculantSymbol empty;
  empty.n = 3;
  for (int a = 0; a < 3; ++a) empty.S[a] = empty.T[a] = ResidueSet(3, {});
  CHECK(tricirculant(empty).order() == 9);
  CHECK(tricirculant(empty).edge_count() == 0);

  auto s = TricirculantSymbol::parse("tri:n=5;S0=1,2,3,4;S1=1,2,3,4;S2=1,2,3,4;T01=;T12=;T20=");
  CHECK(tricirculant(s) == disjoint_union(complete_graph(5), 3));

  // (a,i) ~ (a+1,j) iff j-i in T_a
  auto t = tricirculant(TricirculantSymbol::parse("tri:n=4;S0=;S1=;S2=;T01=1;T12=;T20="));
  CHECK(t.adjacent(0, 4 + 1));
  CHECK(t.adjacent(3, 4 + 0));
  CHECK_FALSE(t.adjacent(1, 4 + 1));
  CHECK(t.edge_count() == 4);
}

TEST_CASE("rotation is a semiregular automorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial % 9;
    BicirculantSymbol b{n, random_symmetric(rng, n), random_symmetric(rng, n), random_subset(rng, n)};
    CHECK(is_automorphism(bicirculant(b), rotation(2, n)));
    TricirculantSymbol t;
    t.n = n;
    for (int a = 0; a < 3; ++a) {
      t.S[a] = random_symmetric(rng, n);
      t.T[a] = random_subset(rng, n);
    }
    CHECK(is_automorphism(tricirculant(t), rotation(3, n)));
  }
  for (int n : {5, 6, 9}) {
    ResidueSet S(n, {1, n - 1, 2, n - 2});
    CHECK(is_automorphism(circulant(n, S), rotation(1, n)));
  }
}

TEST_CASE("complement symbol under the same labelling") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 12;
    BicirculantSymbol b{n, random_symmetric(rng, n), random_symmetric(rng, n), random_subset(rng, n)};
    auto c = b.complement();
    CHECK(c.S == b.S.hat());
    CHECK(c.Sp == b.Sp.hat());
    CHECK(c.T == b.T.complement());
    CHECK(same_edges(bicirculant(c), complement(bicirculant(b))));
  }
}

TEST_CASE("multiplier and translation invariance") {
  std::mt19937 rng(3);
  std::vector<BicirculantSymbol> syms = {petersen_symbol(), clebsch_symbol(), k4xk4_symbol(),
                                         shrikhande_a_symbol(), shrikhande_b_symbol()};
  for (int trial = 0; trial < 12; ++trial) {
    int n = 5 + trial % 9;
    syms.push_back({n, random_symmetric(rng, n), random_symmetric(rng, n), random_subset(rng, n)});
  }
  for (const auto& b : syms) {
    const Graph g = bicirculant(b);
    for (int a = 1; a < b.n; ++a) {
      if (std::gcd(a, b.n) != 1) continue;
      BicirculantSymbol m{b.n, b.S.scaled(a), b.Sp.scaled(a), b.T.scaled(a)};
      CHECK(is_isomorphic(bicirculant(m), g));
    }
    for (int c = 0; c < b.n; ++c) {
      BicirculantSymbol t{b.n, b.S, b.Sp, b.T.translated(c)};
      CHECK(is_isomorphic(bicirculant(t), g));
    }
  }
}

TEST_CASE("paley") {
  CHECK(is_isomorphic(paley(5), cycle_graph(5)));
  CHECK(oracle::srg(paley(13)) == std::array<long, 4>{13, 6, 2, 3});
  CHECK(oracle::srg(paley(17)) == std::array<long, 4>{17, 8, 3, 4});
  CHECK_THROWS_AS(paley(15), Error);
  CHECK_THROWS_AS(paley(7), Error);
}

TEST_CASE("triangular") {
  CHECK(is_isomorphic(triangular(5), complement(oracle::kneser_petersen())));
  CHECK(oracle::srg(triangular(6)) == std::array<long, 4>{15, 8, 4, 4});
  CHECK(oracle::srg(triangular(7)) == std::array<long, 4>{21, 10, 5, 4});
  CHECK(is_isomorphic(triangular(6), line_graph(complete_graph(6))));
  CHECK_THROWS_AS(triangular(2), Error);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)).edge_count() == 0);
  auto p = oracle::kneser_petersen();
  CHECK(complement(complement(p)) == p);
  CHECK(is_isomorphic(complement(triangular(6)), gq22_voltage()));
}

TEST_CASE("line graph and cartesian product") {
  CHECK(is_isomorphic(line_graph(complete_bipartite(4, 4)),
                      cartesian_product(complete_graph(4), complete_graph(4))));
  CHECK(is_isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle_graph(4)));
  CHECK(is_isomorphic(line_graph(cycle_graph(5)), cycle_graph(5)));
}

TEST_CASE("gq22 voltage construction") {
  auto g = gq22_voltage();
  CHECK(g.order() == 15);
  for (Vertex v = 0; v < 15; ++v) CHECK(g.degree(v) == 6);
  CHECK(is_isomorphic(g, complement(triangular(6))));
  CHECK(is_isomorphic(g, complement(line_graph(complete_graph(6)))));

  std::vector<Vertex> a = {gq22_vertex("inf", 0), gq22_vertex("0", 1), gq22_vertex("1", 1)};
  std::vector<Vertex> b = {gq22_vertex("inf", 0), gq22_vertex("0", 1), gq22_vertex("w", 2)};
  CHECK(oracle::edges_within(g, a) == 0);
  CHECK(oracle::edges_within(g, b) == 0);
  // Independent triples here have 1 or 3 common neighbours.
  CHECK(oracle::valency(g, a) == 3);
  CHECK(g.adjacent(gq22_vertex("inf", 1), a[0]));
  CHECK(g.adjacent(gq22_vertex("inf", 1), a[1]));
  CHECK(g.adjacent(gq22_vertex("inf", 1), a[2]));
  CHECK(oracle::valency(g, b) == 1);

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i != j)
        for (const char* x : {"inf", "0", "1", "w", "w2"})
          CHECK(g.adjacent(gq22_vertex(x, i), gq22_vertex(x, j)));
      CHECK(g.adjacent(gq22_vertex("inf", i), gq22_vertex("w", j)) == (i == j));
    }
  CHECK_THROWS_AS(gq22_vertex("2", 0), Error);
}

TEST_CASE("isomorphism") {
  auto a = build_named(*parse_named_graph("shrikhande-a"));
  auto b = build_named(*parse_named_graph("shrikhande-b"));
  auto perm = find_isomorphism(a, b);
  REQUIRE(perm);
  for (Vertex u = 0; u < 16; ++u)
    for (Vertex v = 0; v < 16; ++v) CHECK(a.adjacent(u, v) == b.adjacent((*perm)[u], (*perm)[v]));
  CHECK(is_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  CHECK_FALSE(is_isomorphic(a, cartesian_product(complete_graph(4), complete_graph(4))));
  CHECK_FALSE(is_isomorphic(cycle_graph(5), cycle_graph(6)));
  CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), 2)));
}

TEST_CASE("isomorphism under random relabelling") {
  std::mt19937 rng(5);
  for (const auto& e : oracle::corpus()) {
    std::vector<Vertex> p(e.graph.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Graph h = e.graph.relabelled(p);
    CHECK(is_isomorphic(e.graph, h));
    CHECK(invariant_hash(e.graph) == invariant_hash(h));
  }
}

TEST_CASE("graph6 round-trip") {
  for (const auto& e : oracle::corpus()) CHECK(decode_graph6(encode_graph6(e.graph)) == e.graph);
  CHECK(encode_graph6(oracle::kneser_petersen()).size() == 1 + 8);
  CHECK(decode_graph6(">>graph6<<" + encode_graph6(complete_graph(4)) + "\n") == complete_graph(4));
  Graph big = cycle_graph(100);
  CHECK(decode_graph6(encode_graph6(big)) == big);
  CHECK(encode_graph6(complete_graph(2)) == "A_");
}

TEST_CASE("graph6 rejects malformed input") {
  std::string s = encode_graph6(oracle::kneser_petersen());
  std::string bad_len = s;
  bad_len[0] = static_cast<char>(bad_len[0] + 1);
  CHECK_THROWS_AS(decode_graph6(bad_len), Error);
  CHECK_THROWS_AS(decode_graph6(s.substr(0, s.size() - 1)), Error);
  CHECK_THROWS_AS(decode_graph6(""), Error);
  CHECK_THROWS_AS(decode_graph6("B\x01"), Error);
  // K3 is "Bw"; "Bx" sets a padding bit.
  CHECK(decode_graph6("Bw") == complete_graph(3));
  CHECK_THROWS_AS(decode_graph6("Bx"), Error);
}

TEST_CASE("named registry") {
  for (auto ref : all_named_graphs()) {
    auto tag = named_graph_tag(ref);
    auto back = parse_named_graph(tag);
    REQUIRE(back);
    CHECK(named_graph_tag(*back) == tag);
  }
  CHECK_FALSE(parse_named_graph("nonsense"));
  CHECK(oracle::srg(build_named(*parse_named_graph("paley-29"))) == std::array<long, 4>{29, 14, 6, 7});
}

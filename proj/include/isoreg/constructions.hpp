#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isoreg/graph.hpp"
#include "isoreg/symbols.hpp"

namespace isoreg {

// u ~ v iff (v - u mod n) in S.
Graph circulant(int n, const ResidueSet& S);

// Vertices 0..n-1 form the u-orbit, n..2n-1 the w-orbit.
// u_i ~ u_j iff j-i in S, w_i ~ w_j iff j-i in Sp, u_i ~ w_j iff j-i in T.
Graph bicirculant(const BicirculantSymbol& sym);

// Orbit a occupies a*n .. a*n+n-1; (a,i) ~ (a+1,j) iff j-i in T[a].
Graph tricirculant(const TricirculantSymbol& sym);

Graph paley(int p);

// Vertices are the 2-subsets of {1..m} in lexicographic order, adjacent iff they meet.
Graph triangular(int m);

Graph complement(const Graph& g);
Graph line_graph(const Graph& g);
Graph cartesian_product(const Graph& g, const Graph& h);

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

// Disjoint union of `copies` copies of g.
Graph disjoint_union(const Graph& g, std::size_t copies);

// 3-fold voltage cover of K5 over PG(1,4) with triangles in the fibres; the
// point graph of GQ(2,2). Vertex (x,i) has index 3*x+i with x ordered
// (inf, 0, 1, w, w^2).
Graph gq22_voltage();

// Vertex index of (x,i) in gq22_voltage(); x in {"inf","0","1","w","w2"}.
Vertex gq22_vertex(std::string_view x, int i);

enum class NamedGraph {
  C5,
  Petersen,
  Clebsch,
  K4xK4,
  ShrikhandeA,
  ShrikhandeB,
  GQ22,
  T6Complement,
  T7,
  Paley,
};

struct NamedGraphRef {
  NamedGraph tag;
  int parameter = 0;  // prime for Paley
};

std::optional<NamedGraphRef> parse_named_graph(std::string_view tag);
std::string named_graph_tag(NamedGraphRef ref);
Graph build_named(NamedGraphRef ref);
std::vector<NamedGraphRef> all_named_graphs();

// Bicirculant symbols of the named 8-bicirculants and of the Petersen graph.
BicirculantSymbol petersen_symbol();
BicirculantSymbol clebsch_symbol();
BicirculantSymbol k4xk4_symbol();
BicirculantSymbol shrikhande_a_symbol();
BicirculantSymbol shrikhande_b_symbol();

bool is_prime(long long p);

}  // namespace isoreg

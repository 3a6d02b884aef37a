#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoreg/graph.hpp"
#include "json.hpp"

namespace isoreg {

// Isomorphism type of a graph on at most four vertices. The code is the
// smallest upper-triangle adjacency bit vector over all vertex orderings,
// with bit order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3).
struct IsoType {
  int size = 0;
  std::uint8_t code = 0;

  std::string name() const;  // "K3", "K1,2", "K2+K1", "3K1", "P4", ...
  bool operator==(const IsoType&) const = default;
  auto operator<=>(const IsoType&) const = default;
};

// All isomorphism types of the given size, ordered by code.
std::vector<IsoType> iso_types_of_size(int size);
IsoType iso_type_named(const std::string& name);

// Number of vertices adjacent to every member of S.
std::size_t subset_valency(const Graph& g, std::span<const Vertex> S);
IsoType iso_type(const Graph& g, std::span<const Vertex> S);

struct IsoWitness {
  IsoType type;
  std::vector<Vertex> first, second;
  std::size_t first_valency = 0, second_valency = 0;
};

struct IsoregularityResult {
  bool isoregular = false;
  std::optional<IsoWitness> witness;  // set iff !isoregular
};

// Enumerates every j-subset, j <= k. On failure the witness has the smallest
// size j, then the type with the most edges (largest code), and pairs the
// lexicographically first subset of that type with the first one whose
// valency differs from it.
IsoregularityResult is_k_isoregular(const Graph& g, int k);

struct ProfileEntry {
  IsoType type;
  std::size_t valency = 0;
  std::size_t subsets = 0;  // 0 means the type does not occur (vacuous)
  bool vacuous() const noexcept { return subsets == 0; }
};

struct IsoProfile {
  int k = 0;
  std::vector<ProfileEntry> entries;  // by size, then code

  // Valency for a type; vacuous types report 0.
  std::size_t valency(const IsoType& t) const;
  std::size_t valency(const std::string& type_name) const;
};

std::optional<IsoProfile> iso_profile(const Graph& g, int k);

// A value measured over a vertex class; vacuous when the class was empty.
struct LocalValue {
  std::size_t value = 0;
  bool vacuous = true;
  bool operator==(const LocalValue&) const = default;
};

struct EdgeLocalParams {
  LocalValue Q, R, W;
};

struct NonEdgeLocalParams {
  LocalValue Rp, Wp, V;
};

// (Q,R,W) if the edge (x,y) is 3-isoregular.
std::optional<EdgeLocalParams> edge_iso_params(const Graph& g, Vertex x, Vertex y);
// (R',W',V) if the non-edge (x,z) is 3-isoregular.
std::optional<NonEdgeLocalParams> nonedge_iso_params(const Graph& g, Vertex x, Vertex z);

struct LocalReport {
  Vertex x = 0;
  std::optional<Vertex> edge_witness;     // first y with (x,y) a 3-isoregular edge
  std::optional<Vertex> nonedge_witness;  // first z with (x,z) a 3-isoregular non-edge
  std::optional<EdgeLocalParams> edge_params;
  std::optional<NonEdgeLocalParams> nonedge_params;
  bool locally_isoregular() const { return edge_witness && nonedge_witness; }
};

LocalReport is_locally_3isoregular_at(const Graph& g, Vertex x);

// Cells D^i_j = Gamma_i(x) ∩ Gamma_j(y) for i,j in {1,2}.
struct DPartition {
  std::vector<Vertex> d11, d12, d21, d22;
};

DPartition d_partition(const Graph& g, Vertex x, Vertex y);

struct TVertexWitness {
  int size = 0;
  IsoType type;
  std::array<Vertex, 2> first_pair{}, second_pair{};
  std::size_t first_count = 0, second_count = 0;
};

struct TVertexResult {
  bool holds = false;
  std::optional<TVertexWitness> witness;
};

// For j <= t and every j-vertex type, the number of j-subsets of that type
// containing {u,v} depends only on whether u = v, u ~ v, or u !~ v.
TVertexResult t_vertex_condition(const Graph& g, int t);

// Gamma_1(v) and Gamma_2(v) strongly regular with parameters independent of v.
// Requires a nontrivial strongly regular graph.
bool subconstituent_characterization(const Graph& g);

nlohmann::json to_json(const IsoWitness& w);
nlohmann::json to_json(const IsoProfile& p);
nlohmann::json to_json(const EdgeLocalParams& p);
nlohmann::json to_json(const NonEdgeLocalParams& p);
nlohmann::json to_json(const LocalReport& r);
nlohmann::json to_json(const TVertexWitness& w);

}  // namespace isoreg

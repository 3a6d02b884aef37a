#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isoreg/graph.hpp"

namespace isoreg {

// Returns perm with g.adjacent(u,v) == h.adjacent(perm[u], perm[v]) for all u,v,
// or nullopt when g and h are not isomorphic. Exact; uses joint colour
// refinement with individualisation and backtracking, intended for n <= 64.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

// Isomorphism-invariant fingerprint used to bucket graphs before exact tests:
// order, edge count, and the sorted multisets of (adjacency, |common
// neighbourhood|, edges inside the common neighbourhood) over all pairs.
std::uint64_t invariant_hash(const Graph& g);

}  // namespace isoreg

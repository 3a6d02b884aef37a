#pragma once

#include <optional>
#include <string>

#include "isoreg/bigint.hpp"
#include "isoreg/graph.hpp"
#include "isoreg/surd.hpp"

namespace isoreg {

struct SrgParams {
  Int n, k, lambda, mu;

  // Range invariants: n >= 1, 0 <= k <= n-1, 0 <= lambda <= k-1 (or 0 when k = 0),
  // 0 <= mu <= k. Does not test the counting identity.
  bool in_range() const;
  // 0 < mu < k < n-1: both the graph and its complement are connected.
  bool is_nontrivial() const;

  std::string to_string() const;  // "(16,5,0,2)"

  bool operator==(const SrgParams&) const = default;
  auto operator<=>(const SrgParams&) const = default;
};

nlohmann::json to_json(const SrgParams& p);
SrgParams params_from_json(const nlohmann::json& j);

// (n,k,lambda,mu) if g is strongly regular. Pairs classes with no members
// (no edges, or no non-edges) report lambda = 0 resp. mu = 0.
std::optional<SrgParams> srg_params(const Graph& g);

// k(k - lambda - 1) == mu(n - 1 - k)
bool verify_identity(const SrgParams& p);

// (n, n-k-1, n-2-2k+mu, n-2k+lambda)
SrgParams complement_params(const SrgParams& p);

struct Spectrum {
  Surd k, r, s;  // r >= s
  Int discriminant;  // (lambda-mu)^2 + 4(k-mu)
};

// Throws Error for trivial parameter sets.
Spectrum eigenvalues(const SrgParams& p);

// 1 + k/m where -m is the smallest eigenvalue; an upper bound on clique size.
Surd hoffman_bound(const SrgParams& p);

// Induced subgraph on the vertices at distance exactly i (1 or 2) from v.
Graph subconstituent(const Graph& g, Vertex v, int i);

bool is_nontrivial_srg(const Graph& g);

}  // namespace isoreg

#include "isoreg/srg.hpp"

#include "isoreg/constructions.hpp"

namespace isoreg {

bool SrgParams::in_range() const {
  if (n < 1 || k < 0 || k > n - 1) return false;
  if (lambda < 0 || mu < 0 || mu > k) return false;
  return k == 0 ? lambda == 0 : lambda <= k - 1;
}

bool SrgParams::is_nontrivial() const { return in_range() && 0 < mu && mu < k && k < n - 1; }

std::string SrgParams::to_string() const {
  return "(" + n.str() + "," + k.str() + "," + lambda.str() + "," + mu.str() + ")";
}

nlohmann::json to_json(const SrgParams& p) {
  return {{"n", int_to_json(p.n)},
          {"k", int_to_json(p.k)},
          {"lambda", int_to_json(p.lambda)},
          {"mu", int_to_json(p.mu)}};
}

SrgParams params_from_json(const nlohmann::json& j) {
  return {int_from_json(j.at("n")), int_from_json(j.at("k")), int_from_json(j.at("lambda")),
          int_from_json(j.at("mu"))};
}

std::optional<SrgParams> srg_params(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t k = g.degree(0);
  std::optional<std::size_t> lambda, mu;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != k) return std::nullopt;
    for (Vertex v = u + 1; v < n; ++v) {
      std::size_t c = g.common_neighbours(u, v);
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot)
        slot = c;
      else if (*slot != c)
        return std::nullopt;
    }
  }
  return SrgParams{Int(n), Int(k), Int(lambda.value_or(0)), Int(mu.value_or(0))};
}

bool verify_identity(const SrgParams& p) {
  return p.k * (p.k - p.lambda - 1) == p.mu * (p.n - 1 - p.k);
}

SrgParams complement_params(const SrgParams& p) {
  return {p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lambda};
}

Spectrum eigenvalues(const SrgParams& p) {
  if (!p.is_nontrivial() || !verify_identity(p))
    throw Error("eigenvalues need a feasible nontrivial parameter set, got " + p.to_string());
  Int diff = p.lambda - p.mu;
  Int disc = diff * diff + 4 * (p.k - p.mu);
  Surd root(0, 1, disc, 1);
  Surd half = Surd::rational(1, 2);
  return {Surd(p.k), (Surd(diff) + root) * half, (Surd(diff) - root) * half, disc};
}

Surd hoffman_bound(const SrgParams& p) {
  Spectrum sp = eigenvalues(p);
  Surd m = -sp.s;
  if (m.sign() <= 0) throw Error("smallest eigenvalue is not negative");
  return Surd(1) + Surd(p.k) / m;
}

Graph subconstituent(const Graph& g, Vertex v, int i) {
  if (i != 1 && i != 2) throw Error("subconstituent index must be 1 or 2");
  if (v >= g.order()) throw Error("vertex out of range");
  auto dist = distances_from(g, v);
  std::vector<Vertex> layer;
  for (Vertex u = 0; u < g.order(); ++u)
    if (dist[u] == i) layer.push_back(u);
  if (layer.empty())
    throw Error("no vertex at distance " + std::to_string(i) + " from " + std::to_string(v));
  return g.induced(layer);
}

bool is_nontrivial_srg(const Graph& g) {
  if (g.order() < 2 || !srg_params(g)) return false;
  return is_connected(g) && is_connected(complement(g));
}

}  // namespace isoreg

#include "isoreg/isoregularity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "isoreg/combinatorics.hpp"
#include "isoreg/srg.hpp"

namespace isoreg {

namespace {

constexpr int pair_index(int a, int b) { return b * (b - 1) / 2 + a; }  // a < b

struct TypeTables {
  // canonical[size][raw code]
  std::array<std::vector<std::uint8_t>, 5> canonical;

  TypeTables() {
    for (int j = 0; j <= 4; ++j) {
      int pairs = j * (j - 1) / 2;
      canonical[j].resize(std::size_t{1} << pairs);
      for (unsigned raw = 0; raw < canonical[j].size(); ++raw) {
        std::array<int, 4> perm{0, 1, 2, 3};
        unsigned best = raw;
        do {
          unsigned code = 0;
          for (int b = 1; b < j; ++b)
            for (int a = 0; a < b; ++a)
              if ((raw >> pair_index(a, b)) & 1u) {
                int x = std::min(perm[a], perm[b]), y = std::max(perm[a], perm[b]);
                code |= 1u << pair_index(x, y);
              }
          best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.begin() + j));
        canonical[j][raw] = static_cast<std::uint8_t>(best);
      }
    }
  }
};

const TypeTables& tables() {
  static const TypeTables t;
  return t;
}

unsigned raw_code(const Graph& g, std::span<const Vertex> S) {
  unsigned code = 0;
  for (std::size_t b = 1; b < S.size(); ++b)
    for (std::size_t a = 0; a < b; ++a)
      if (g.adjacent(S[a], S[b])) code |= 1u << pair_index(static_cast<int>(a), static_cast<int>(b));
  return code;
}

std::size_t valency_unchecked(const Graph& g, std::span<const Vertex> S) {
  const std::size_t words = g.words_per_row();
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) {
    Word acc = ~Word{0};
    for (Vertex v : S) acc &= g.row(v)[w];
    total += std::popcount(acc);
  }
  return total;
}

void check_subset(const Graph& g, std::span<const Vertex> S) {
  if (S.empty()) throw Error("vertex set must be non-empty");
  std::vector<Vertex> sorted(S.begin(), S.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("vertex set has repeated vertices");
  if (sorted.back() >= g.order()) throw Error("vertex out of range");
}

LocalValue merge(std::optional<std::size_t>& slot, std::size_t value, bool& consistent) {
  if (!slot)
    slot = value;
  else if (*slot != value)
    consistent = false;
  return {};
}

LocalValue finish(const std::optional<std::size_t>& slot) {
  return slot ? LocalValue{*slot, false} : LocalValue{0, true};
}

nlohmann::json local_value_json(const LocalValue& v) {
  if (v.vacuous) return {{"value", 0}, {"vacuous", true}};
  return {{"value", v.value}, {"vacuous", false}};
}

nlohmann::json vertices_json(const std::vector<Vertex>& s) { return s; }

}  // namespace

std::string IsoType::name() const {
  int pairs = size * (size - 1) / 2;
  std::array<int, 4> deg{};
  int edges = 0;
  for (int b = 1; b < size; ++b)
    for (int a = 0; a < b; ++a)
      if ((code >> pair_index(a, b)) & 1u) {
        ++deg[a];
        ++deg[b];
        ++edges;
      }
  (void)pairs;
  std::sort(deg.begin(), deg.begin() + size);
  switch (size) {
    case 1: return "K1";
    case 2: return edges ? "K2" : "2K1";
    case 3: {
      static const char* names[] = {"3K1", "K2+K1", "K1,2", "K3"};
      return names[edges];
    }
    case 4:
      switch (edges) {
        case 0: return "4K1";
        case 1: return "K2+2K1";
        case 2: return deg[0] == 0 ? "K1,2+K1" : "2K2";
        case 3:
          if (deg[3] == 3) return "K1,3";
          return deg[0] == 0 ? "K3+K1" : "P4";
        case 4: return deg[3] == 3 ? "paw" : "C4";
        case 5: return "K4-e";
        case 6: return "K4";
      }
  }
  throw Error("invalid iso type");
}

std::vector<IsoType> iso_types_of_size(int size) {
  if (size < 1 || size > 4) throw Error("iso types are defined for sizes 1..4");
  std::vector<std::uint8_t> codes(tables().canonical[size].begin(), tables().canonical[size].end());
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<IsoType> out;
  for (auto c : codes) out.push_back({size, c});
  return out;
}

IsoType iso_type_named(const std::string& name) {
  for (int j = 1; j <= 4; ++j)
    for (const auto& t : iso_types_of_size(j))
      if (t.name() == name) return t;
  throw Error("unknown iso type '" + name + "'");
}

std::size_t subset_valency(const Graph& g, std::span<const Vertex> S) {
  check_subset(g, S);
  return valency_unchecked(g, S);
}

IsoType iso_type(const Graph& g, std::span<const Vertex> S) {
  check_subset(g, S);
  if (S.size() > 4) throw Error("iso types are defined for at most 4 vertices");
  int j = static_cast<int>(S.size());
  return {j, tables().canonical[j][raw_code(g, S)]};
}

IsoregularityResult is_k_isoregular(const Graph& g, int k) {
  if (k < 1 || k > 4) throw Error("k must be in 1..4");
  const auto& canon = tables().canonical;
  for (int j = 1; j <= k; ++j) {
    struct Seen {
      std::size_t valency;
      std::vector<Vertex> subset;
      std::optional<std::pair<std::vector<Vertex>, std::size_t>> violation;
    };
    std::map<std::uint8_t, Seen, std::greater<>> seen;
    for_each_subset(g.order(), j, [&](std::span<const Vertex> S) {
      std::uint8_t code = canon[j][raw_code(g, S)];
      std::size_t val = valency_unchecked(g, S);
      auto [it, inserted] = seen.try_emplace(code, Seen{val, {S.begin(), S.end()}, std::nullopt});
      if (!inserted && !it->second.violation && it->second.valency != val)
        it->second.violation.emplace(std::vector<Vertex>(S.begin(), S.end()), val);
      return true;
    });
    for (const auto& [code, s] : seen)
      if (s.violation)
        return {false, IsoWitness{{j, code}, s.subset, s.violation->first, s.valency, s.violation->second}};
  }
  return {true, std::nullopt};
}

std::size_t IsoProfile::valency(const IsoType& t) const {
  for (const auto& e : entries)
    if (e.type == t) return e.valency;
  throw Error("type " + t.name() + " is not in the profile");
}

std::size_t IsoProfile::valency(const std::string& type_name) const {
  return valency(iso_type_named(type_name));
}

std::optional<IsoProfile> iso_profile(const Graph& g, int k) {
  if (!is_k_isoregular(g, k).isoregular) return std::nullopt;
  const auto& canon = tables().canonical;
  IsoProfile profile{k, {}};
  for (int j = 1; j <= k; ++j) {
    std::map<std::uint8_t, ProfileEntry> found;
    for (const auto& t : iso_types_of_size(j)) found[t.code] = ProfileEntry{t, 0, 0};
    for_each_subset(g.order(), j, [&](std::span<const Vertex> S) {
      auto& e = found[canon[j][raw_code(g, S)]];
      if (e.subsets++ == 0) e.valency = valency_unchecked(g, S);
      return true;
    });
    for (auto& [code, e] : found) profile.entries.push_back(e);
  }
  return profile;
}

std::optional<EdgeLocalParams> edge_iso_params(const Graph& g, Vertex x, Vertex y) {
  if (x >= g.order() || y >= g.order()) throw Error("vertex out of range");
  if (x == y || !g.adjacent(x, y)) throw Error("edge_iso_params needs an edge");
  std::optional<std::size_t> q, r, w;
  bool ok = true;
  for (Vertex z = 0; z < g.order() && ok; ++z) {
    if (z == x || z == y) continue;
    const std::array<Vertex, 3> s{x, y, z};
    std::size_t val = valency_unchecked(g, s);
    int links = g.adjacent(x, z) + g.adjacent(y, z);
    merge(links == 2 ? q : (links == 1 ? r : w), val, ok);
  }
  if (!ok) return std::nullopt;
  return EdgeLocalParams{finish(q), finish(r), finish(w)};
}

std::optional<NonEdgeLocalParams> nonedge_iso_params(const Graph& g, Vertex x, Vertex z) {
  if (x >= g.order() || z >= g.order()) throw Error("vertex out of range");
  if (x == z || g.adjacent(x, z)) throw Error("nonedge_iso_params needs a non-edge");
  std::optional<std::size_t> rp, wp, v;
  bool ok = true;
  for (Vertex u = 0; u < g.order() && ok; ++u) {
    if (u == x || u == z) continue;
    const std::array<Vertex, 3> s{x, z, u};
    std::size_t val = valency_unchecked(g, s);
    int links = g.adjacent(x, u) + g.adjacent(z, u);
    merge(links == 2 ? rp : (links == 1 ? wp : v), val, ok);
  }
  if (!ok) return std::nullopt;
  return NonEdgeLocalParams{finish(rp), finish(wp), finish(v)};
}

LocalReport is_locally_3isoregular_at(const Graph& g, Vertex x) {
  if (x >= g.order()) throw Error("vertex out of range");
  LocalReport report;
  report.x = x;
  for (Vertex y = 0; y < g.order(); ++y) {
    if (y == x) continue;
    if (g.adjacent(x, y)) {
      if (report.edge_witness) continue;
      if (auto p = edge_iso_params(g, x, y)) {
        report.edge_witness = y;
        report.edge_params = p;
      }
    } else if (!report.nonedge_witness) {
      if (auto p = nonedge_iso_params(g, x, y)) {
        report.nonedge_witness = y;
        report.nonedge_params = p;
      }
    }
  }
  return report;
}

DPartition d_partition(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw Error("d_partition needs distinct vertices");
  auto dx = distances_from(g, x), dy = distances_from(g, y);
  DPartition p;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dx[v] == 1 && dy[v] == 1) p.d11.push_back(v);
    if (dx[v] == 1 && dy[v] == 2) p.d12.push_back(v);
    if (dx[v] == 2 && dy[v] == 1) p.d21.push_back(v);
    if (dx[v] == 2 && dy[v] == 2) p.d22.push_back(v);
  }
  return p;
}

TVertexResult t_vertex_condition(const Graph& g, int t) {
  if (t < 2 || t > 4) throw Error("t must be in 2..4");
  const std::size_t n = g.order();
  if (n > 256) throw Error("t_vertex_condition is limited to 256 vertices");
  const auto& canon = tables().canonical;
  for (int j = 1; j <= t; ++j) {
    auto types = iso_types_of_size(j);
    std::array<int, 64> slot{};
    for (std::size_t i = 0; i < types.size(); ++i) slot[types[i].code] = static_cast<int>(i);
    const std::size_t nt = types.size();
    std::vector<std::uint32_t> counts(n * n * nt, 0);
    auto at = [&](Vertex u, Vertex v) { return counts.data() + (std::size_t{u} * n + v) * nt; };
    for_each_subset(n, j, [&](std::span<const Vertex> S) {
      int s = slot[canon[j][raw_code(g, S)]];
      for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = a; b < S.size(); ++b) ++at(S[a], S[b])[s];
      return true;
    });
    // class 0: u = v, 1: adjacent, 2: non-adjacent
    std::array<std::optional<std::array<Vertex, 2>>, 3> reference;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u; v < n; ++v) {
        int cls = u == v ? 0 : (g.adjacent(u, v) ? 1 : 2);
        if (!reference[cls]) {
          reference[cls] = std::array<Vertex, 2>{u, v};
          continue;
        }
        auto [ru, rv] = *reference[cls];
        const auto* ref = at(ru, rv);
        const auto* cur = at(u, v);
        for (std::size_t s = 0; s < nt; ++s)
          if (ref[s] != cur[s])
            return {false, TVertexWitness{j, types[s], {ru, rv}, {u, v}, ref[s], cur[s]}};
      }
  }
  return {true, std::nullopt};
}

bool subconstituent_characterization(const Graph& g) {
  auto p = srg_params(g);
  if (!p || !is_nontrivial_srg(g))
    throw Error("subconstituent characterization needs a nontrivial strongly regular graph");
  std::optional<SrgParams> first, second;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto a = srg_params(subconstituent(g, v, 1));
    auto b = srg_params(subconstituent(g, v, 2));
    if (!a || !b) return false;
    if (!first) {
      first = a;
      second = b;
    } else if (*first != *a || *second != *b) {
      return false;
    }
  }
  return true;
}

nlohmann::json to_json(const IsoWitness& w) {
  return {{"type", w.type.name()},
          {"size", w.type.size},
          {"first", vertices_json(w.first)},
          {"first_valency", w.first_valency},
          {"second", vertices_json(w.second)},
          {"second_valency", w.second_valency}};
}

nlohmann::json to_json(const IsoProfile& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& e : p.entries)
    j[e.type.name()] = {{"valency", e.valency}, {"subsets", e.subsets}, {"vacuous", e.vacuous()}};
  return j;
}

nlohmann::json to_json(const EdgeLocalParams& p) {
  return {{"Q", local_value_json(p.Q)}, {"R", local_value_json(p.R)}, {"W", local_value_json(p.W)}};
}

nlohmann::json to_json(const NonEdgeLocalParams& p) {
  return {{"Rp", local_value_json(p.Rp)},
          {"Wp", local_value_json(p.Wp)},
          {"V", local_value_json(p.V)}};
}

nlohmann::json to_json(const LocalReport& r) {
  nlohmann::json j = {{"vertex", r.x}, {"locally_3isoregular", r.locally_isoregular()}};
  j["edge"] = r.edge_witness ? nlohmann::json{{"y", *r.edge_witness}, {"params", to_json(*r.edge_params)}}
                             : nlohmann::json(nullptr);
  j["nonedge"] = r.nonedge_witness
                     ? nlohmann::json{{"z", *r.nonedge_witness}, {"params", to_json(*r.nonedge_params)}}
                     : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const TVertexWitness& w) {
  return {{"size", w.size},
          {"type", w.type.name()},
          {"first_pair", w.first_pair},
          {"first_count", w.first_count},
          {"second_pair", w.second_pair},
          {"second_count", w.second_count}};
}

}  // namespace isoreg

#include "isoreg/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <thread>

#include "isoreg/constructions.hpp"
#include "isoreg/graph_io.hpp"
#include "isoreg/isomorphism.hpp"
#include "isoreg/paramtheory.hpp"

namespace isoreg {

std::vector<ResidueSet> symmetric_subsets(int n, std::optional<int> size) {
  if (n < 2) throw Error("symmetric_subsets needs n >= 2");
  if (n > 64) throw Error("symmetric_subsets supports n <= 64");
  std::vector<std::uint64_t> classes;
  for (int i = 1; 2 * i < n; ++i) classes.push_back((1ull << i) | (1ull << (n - i)));
  if (n % 2 == 0) classes.push_back(1ull << (n / 2));
  if (classes.size() > 24) throw Error("symmetric_subsets: too many subsets for n = " + std::to_string(n));
  std::vector<ResidueSet> out;
  for (std::uint64_t pick = 0; pick < (1ull << classes.size()); ++pick) {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (pick >> c & 1) mask |= classes[c];
    if (size && std::popcount(mask) != *size) continue;
    out.push_back(ResidueSet::from_mask(n, mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string symbol_text(const SymbolVariant& s) {
  return std::visit([](const auto& x) { return x.to_string(); }, s);
}

Graph build_symbol(const SymbolVariant& s) {
  if (const auto* b = std::get_if<BicirculantSymbol>(&s)) return bicirculant(*b);
  return tricirculant(std::get<TricirculantSymbol>(s));
}

namespace {

using Mask = std::uint64_t;

Mask full_mask(int n) { return n == 64 ? ~0ull : (1ull << n) - 1; }

// Bit j of the result is bit j-i of m, indices mod n.
Mask rot(Mask m, int i, int n) {
  if (i == 0) return m;
  return ((m << i) | (m >> (n - i))) & full_mask(n);
}

Mask negate(Mask m, int n) {
  Mask r = m & 1;
  for (int i = 1; i < n; ++i)
    if (m >> i & 1) r |= 1ull << (n - i);
  return r;
}

struct Measured {
  int k = 0, lambda = -1, mu = -1;
};

// Strong regularity of a graph invariant under the rotation of every orbit;
// pairs through one head vertex per orbit represent all pairs.
std::optional<Measured> measure(const Mask* rows, int N, int n) {
  Measured m;
  m.k = std::popcount(rows[0]);
  for (int h = n; h < N; h += n)
    if (std::popcount(rows[h]) != m.k) return std::nullopt;
  for (int h = 0; h < N; h += n) {
    for (int v = 0; v < N; ++v) {
      if (v == h) continue;
      int c = std::popcount(rows[h] & rows[v]);
      int& slot = (rows[h] >> v & 1) ? m.lambda : m.mu;
      if (slot < 0)
        slot = c;
      else if (slot != c)
        return std::nullopt;
    }
  }
  if (m.lambda < 0) m.lambda = 0;
  if (m.mu < 0) m.mu = 0;
  return m;
}

struct Found {
  SymbolVariant symbol;
  SrgParams params;
};

struct Tally {
  std::uint64_t candidates = 0, trivial = 0;
  std::vector<Found> found;
};

SrgParams to_params(int N, const Measured& m) { return {N, m.k, m.lambda, m.mu}; }

void record(Tally& t, int N, const Measured& m, const std::optional<SrgParams>& target,
            auto&& make_symbol) {
  SrgParams p = to_params(N, m);
  if (!p.is_nontrivial()) {
    ++t.trivial;
    return;
  }
  if (target && p != *target) return;
  t.found.push_back({make_symbol(), p});
}

// Connection-set sizes allowed by the spec; masks are generated on demand.
struct TSizes {
  int n = 0;
  std::optional<int> only;
  bool allowed(int t) const { return t >= 0 && t <= n && (!only || t == *only); }
  std::uint64_t count(int t) const {
    std::uint64_t c = 1;
    for (int i = 1; i <= t; ++i) c = c * (n - t + i) / i;
    return c;
  }
};

// Every n-bit mask with t bits set, increasing (n < 64).
template <class F>
void for_each_mask(int n, int t, F&& f) {
  if (t == 0) {
    f(Mask{0});
    return;
  }
  const Mask end = 1ull << n;
  for (Mask m = (1ull << t) - 1; m < end;) {
    f(m);
    const Mask c = m & (~m + 1), r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

void check_spec(const SearchSpec& s) {
  if (s.orbits != 2 && s.orbits != 3) throw Error("search: orbit count must be 2 or 3");
  if (s.n < 2) throw Error("search: n must be at least 2");
  const int N = s.orbits * s.n;
  if (s.orbits == 2 && N > kMaxBicircOrder)
    throw CapExceeded("search: bicirculant order " + std::to_string(N) + " exceeds " +
                          std::to_string(kMaxBicircOrder),
                      0);
  if (s.orbits == 3 && N > kMaxTricircOrder)
    throw CapExceeded("search: tricirculant order " + std::to_string(N) + " exceeds " +
                          std::to_string(kMaxTricircOrder),
                      0);
  if (s.target && s.target->n != N)
    throw Error("search: target order " + s.target->n.str() + " differs from " + std::to_string(N));
  if (s.target && (s.target->k < 0 || s.target->k >= N || s.target->lambda < 0 || s.target->mu < 0))
    throw Error("search: target " + s.target->to_string() + " is not a parameter set on " +
                std::to_string(N) + " vertices");
  if (s.s_prime_is_hat && s.orbits != 2) throw Error("search: S' = S-hat applies to bicirculants");
}

// ------------------------------------------------------------ bicirculants

struct BiPlan {
  std::vector<ResidueSet> S, Sp;
  std::vector<std::pair<std::size_t, std::size_t>> units;  // (S index, Sp index)
  TSizes T;
};

BiPlan bi_plan(const SearchSpec& s) {
  BiPlan p;
  p.S = symmetric_subsets(s.n, s.s_size);
  if (s.s_prime_is_hat) {
    for (std::size_t i = 0; i < p.S.size(); ++i) {
      p.Sp.push_back(p.S[i].hat());
      p.units.emplace_back(i, i);
    }
  } else {
    p.Sp = p.S;
    for (std::size_t i = 0; i < p.S.size(); ++i)
      for (std::size_t j = 0; j < p.Sp.size(); ++j) p.units.emplace_back(i, j);
  }
  if (s.prune)
    std::erase_if(p.units, [&](auto u) { return p.S[u.first].size() != p.Sp[u.second].size(); });
  p.T = {s.n, s.t_size};
  return p;
}

std::vector<int> bi_t_sizes(const SearchSpec& s, const BiPlan& p, std::size_t unit) {
  std::vector<int> out;
  const int d = static_cast<int>(p.S[p.units[unit].first].size());
  for (int t = 0; t <= s.n; ++t) {
    if (!p.T.allowed(t)) continue;
    if (s.prune && s.target && s.target->k != d + t) continue;
    out.push_back(t);
  }
  return out;
}

void bi_unit(const SearchSpec& s, const BiPlan& p, std::size_t unit, Tally& tally) {
  const int n = s.n, N = 2 * n;
  const auto& S = p.S[p.units[unit].first];
  const auto& Sp = p.Sp[p.units[unit].second];
  std::vector<Mask> base(N), rows(N);
  const Mask ms = S.mask(), msp = Sp.mask();
  for (int i = 0; i < n; ++i) {
    base[i] = rot(ms, i, n);
    base[n + i] = rot(msp, i, n) << n;
  }
  for (int t : bi_t_sizes(s, p, unit)) {
    for_each_mask(n, t, [&](Mask mt) {
      ++tally.candidates;
      const Mask neg = negate(mt, n);
      for (int i = 0; i < n; ++i) {
        rows[i] = base[i] | (rot(mt, i, n) << n);
        rows[n + i] = base[n + i] | rot(neg, i, n);
      }
      if (auto m = measure(rows.data(), N, n))
        record(tally, N, *m, s.target, [&] {
          return SymbolVariant{BicirculantSymbol{n, S, Sp, ResidueSet::from_mask(n, mt)}};
        });
    });
  }
}

// ----------------------------------------------------------- tricirculants

struct TriPlan {
  std::vector<ResidueSet> S;
  std::vector<std::array<std::size_t, 3>> units;
  TSizes T;
};

TriPlan tri_plan(const SearchSpec& s) {
  TriPlan p;
  p.S = symmetric_subsets(s.n, s.s_size);
  for (std::size_t a = 0; a < p.S.size(); ++a)
    for (std::size_t b = 0; b < p.S.size(); ++b)
      for (std::size_t c = 0; c < p.S.size(); ++c) p.units.push_back({a, b, c});
  p.T = {s.n, s.t_size};
  return p;
}

// Size triples (t01, t12, t20); orbit a has degree |S_a| + t_a + t_{a-1}.
std::vector<std::array<int, 3>> tri_t_sizes(const SearchSpec& s, const TriPlan& p,
                                            std::size_t unit) {
  std::array<int, 3> sz;
  for (int a = 0; a < 3; ++a) sz[a] = static_cast<int>(p.S[p.units[unit][a]].size());
  std::vector<std::array<int, 3>> out;
  const int n = s.n;
  auto ok = [&](int t) { return p.T.allowed(t); };
  for (int t0 = 0; t0 <= n; ++t0) {
    if (!ok(t0)) continue;
    for (int t1 = 0; t1 <= n; ++t1) {
      if (!ok(t1)) continue;
      if (!s.prune) {
        for (int t2 = 0; t2 <= n; ++t2)
          if (ok(t2)) out.push_back({t0, t1, t2});
        continue;
      }
      const int d = sz[1] + t1 + t0;
      if (s.target && s.target->k != d) continue;
      const int t2 = d - sz[2] - t1;
      if (ok(t2) && sz[0] + t0 + t2 == d) out.push_back({t0, t1, t2});
    }
  }
  return out;
}

void tri_unit(const SearchSpec& s, const TriPlan& p, std::size_t unit, Tally& tally) {
  const int n = s.n, N = 3 * n;
  std::array<ResidueSet, 3> S;
  std::vector<Mask> base(N), rows(N);
  for (int a = 0; a < 3; ++a) {
    S[a] = p.S[p.units[unit][a]];
    const Mask m = S[a].mask();
    for (int i = 0; i < n; ++i) base[a * n + i] = rot(m, i, n) << (a * n);
  }
  std::array<Mask, 3> T, neg;
  auto emit = [&] {
    ++tally.candidates;
    for (int a = 0; a < 3; ++a) {
      const int next = (a + 1) % 3, prev = (a + 2) % 3;
      for (int i = 0; i < n; ++i)
        rows[a * n + i] = base[a * n + i] | (rot(T[a], i, n) << (next * n)) |
                          (rot(neg[prev], i, n) << (prev * n));
    }
    if (auto m = measure(rows.data(), N, n))
      record(tally, N, *m, s.target, [&] {
        TricirculantSymbol sym;
        sym.n = n;
        for (int a = 0; a < 3; ++a) {
          sym.S[a] = S[a];
          sym.T[a] = ResidueSet::from_mask(n, T[a]);
        }
        return SymbolVariant{sym};
      });
  };
  for (auto [t0, t1, t2] : tri_t_sizes(s, p, unit))
    for_each_mask(n, t0, [&](Mask a) {
      T[0] = a;
      neg[0] = negate(a, n);
      for_each_mask(n, t1, [&](Mask b) {
        T[1] = b;
        neg[1] = negate(b, n);
        for_each_mask(n, t2, [&](Mask c) {
          T[2] = c;
          neg[2] = negate(c, n);
          emit();
        });
      });
    });
}

std::uint64_t count_candidates(const SearchSpec& s) {
  std::uint64_t total = 0;
  auto add = [&](std::uint64_t x) {
    total = (x > kMaxCandidates || total > kMaxCandidates - x) ? kMaxCandidates + 1 : total + x;
  };
  if (s.orbits == 2) {
    auto p = bi_plan(s);
    for (std::size_t u = 0; u < p.units.size(); ++u)
      for (int t : bi_t_sizes(s, p, u)) add(p.T.count(t));
  } else {
    auto p = tri_plan(s);
    // The size triples depend only on the three |S_a|.
    std::map<std::array<std::size_t, 3>, std::uint64_t> memo;
    for (std::size_t u = 0; u < p.units.size(); ++u) {
      std::array<std::size_t, 3> key;
      for (int a = 0; a < 3; ++a) key[a] = p.S[p.units[u][a]].size();
      auto it = memo.find(key);
      if (it == memo.end()) {
        std::uint64_t c = 0;
        for (auto [t0, t1, t2] : tri_t_sizes(s, p, u)) {
          std::uint64_t x = p.T.count(t0) * p.T.count(t1);
          x = (x > kMaxCandidates) ? kMaxCandidates + 1 : x * p.T.count(t2);
          c = (c > kMaxCandidates || x > kMaxCandidates - c) ? kMaxCandidates + 1 : c + x;
        }
        it = memo.emplace(key, c).first;
      }
      add(it->second);
    }
  }
  return total;
}

// Static strided sharding over units; the merged result is sorted later, so
// it does not depend on the worker count.
template <class Plan, class Unit>
Tally run_units(const SearchSpec& s, const Plan& plan, std::size_t units, Unit unit_fn) {
  unsigned jobs = std::max(1u, std::min<unsigned>(s.jobs, static_cast<unsigned>(std::max<std::size_t>(units, 1))));
  std::vector<Tally> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t u = w; u < units; u += jobs) unit_fn(s, plan, u, parts[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Tally all;
  for (auto& t : parts) {
    all.candidates += t.candidates;
    all.trivial += t.trivial;
    std::move(t.found.begin(), t.found.end(), std::back_inserter(all.found));
  }
  return all;
}

SearchResult finish(const SearchSpec& spec, Tally tally) {
  std::sort(tally.found.begin(), tally.found.end(),
            [](const Found& a, const Found& b) { return a.symbol < b.symbol; });
  SearchResult r;
  r.spec = spec;
  r.stats.candidates = tally.candidates;
  r.stats.trivial_srg = tally.trivial;
  r.stats.srg = tally.found.size();

  struct ClassData {
    Graph rep;
    std::uint64_t hash;
    std::optional<IsoProfile> profile;
  };
  std::vector<ClassData> data;
  std::vector<IsoClass> classes;
  std::map<std::uint64_t, std::vector<std::size_t>> buckets;

  std::vector<Survivor> all;
  for (auto& f : tally.found) {
    Graph g = build_symbol(f.symbol);
    auto measured = srg_params(g);
    if (!measured || *measured != f.params)
      throw Error("search: fast check disagrees with srg_params on " + symbol_text(f.symbol));
    Survivor sv{f.symbol, f.params, false, std::nullopt, 0, encode_graph6(g)};
    std::optional<std::size_t> cls;
    const std::uint64_t h = invariant_hash(g);
    if (spec.dedup)
      for (std::size_t c : buckets[h])
        if (is_isomorphic(data[c].rep, g)) {
          cls = c;
          break;
        }
    if (!cls) {
      cls = classes.size();
      auto profile = iso_profile(g, 3);
      classes.push_back({*cls, symbol_text(f.symbol), f.params, profile.has_value(), 0, std::nullopt});
      data.push_back({std::move(g), h, std::move(profile)});
      buckets[h].push_back(*cls);
    }
    ++classes[*cls].members;
    sv.iso_class = *cls;
    sv.iso3 = classes[*cls].iso3;
    sv.profile = data[*cls].profile;
    if (sv.iso3) ++r.stats.iso3;
    all.push_back(std::move(sv));
  }

  // Keep the listed classes, renumbered in order of first member.
  std::vector<std::optional<std::size_t>> renumber(classes.size());
  for (auto& c : classes)
    if (!spec.require3iso || c.iso3) {
      renumber[c.id] = r.classes.size();
      r.classes.push_back(c);
      r.classes.back().id = r.classes.size() - 1;
    }
  for (auto& sv : all)
    if (renumber[sv.iso_class]) {
      sv.iso_class = *renumber[sv.iso_class];
      r.survivors.push_back(std::move(sv));
    }

  std::size_t paired = 0;
  for (std::size_t old = 0; old < classes.size(); ++old) {
    if (!renumber[old]) continue;
    Graph co = complement(data[old].rep);
    auto it = buckets.find(invariant_hash(co));
    if (it == buckets.end()) continue;
    for (std::size_t c : it->second)
      if (renumber[c] && is_isomorphic(data[c].rep, co)) {
        r.classes[*renumber[old]].complement_class = *renumber[c];
        if (c != old) ++paired;
        break;
      }
  }
  r.stats.classes = r.classes.size();
  r.stats.complement_classes = r.classes.size() - paired / 2;
  return r;
}

}  // namespace

std::uint64_t candidate_count(const SearchSpec& spec) {
  check_spec(spec);
  return count_candidates(spec);
}

namespace {

void check_caps(const SearchSpec& spec) {
  check_spec(spec);
  if (spec.require3iso && spec.orbits * spec.n > 64)
    throw CapExceeded("search: 3-isoregularity runs need order <= 64", 0);
  const std::uint64_t c = count_candidates(spec);
  if (c > kMaxCandidates)
    throw CapExceeded("search: more than " + std::to_string(kMaxCandidates) +
                          " candidates; refusing to truncate",
                      c);
}

}  // namespace

SearchResult search_bicirculant(const SearchSpec& spec) {
  if (spec.orbits != 2) throw Error("search_bicirculant: orbit count must be 2");
  check_caps(spec);
  auto plan = bi_plan(spec);
  return finish(spec, run_units(spec, plan, plan.units.size(), bi_unit));
}

SearchResult search_tricirculant_srg(const SearchSpec& spec) {
  if (spec.orbits != 3) throw Error("search_tricirculant_srg: orbit count must be 3");
  check_caps(spec);
  auto plan = tri_plan(spec);
  return finish(spec, run_units(spec, plan, plan.units.size(), tri_unit));
}

SearchResult search_tricirculant_srg(int n, const SrgParams& target, unsigned jobs) {
  SearchSpec s;
  s.orbits = 3;
  s.n = n;
  s.target = target;
  s.jobs = jobs;
  return search_tricirculant_srg(s);
}

NonexistenceReport confirm_nonexistence_bicirc_odd(int n, unsigned jobs) {
  if (n % 2 == 0) throw Error("confirm_nonexistence_bicirc_odd: n must be odd");
  if (n < 5 || n > 13) throw Error("confirm_nonexistence_bicirc_odd: n must lie in [5, 13]");
  SearchSpec s;
  s.n = n;
  s.prune = false;
  s.jobs = jobs;
  NonexistenceReport rep;
  rep.result = search_bicirculant(s);

  // 2n - 1 = (2m+1)^2
  std::optional<long long> m;
  for (long long x = 1; x * x <= 2 * n - 1; x += 2)
    if (x * x == 2 * n - 1 && x >= 3) m = (x - 1) / 2;

  rep.no_iso3 = rep.result.stats.iso3 == 0;
  rep.structure_ok = true;
  for (const auto& sv : rep.result.survivors) {
    const auto& b = std::get<BicirculantSymbol>(sv.symbol);
    OddStructureCheck c;
    c.symbol = b.to_string();
    c.s_prime_is_hat = b.Sp == b.S.hat();
    c.order_ok = m.has_value();
    if (m) {
      auto fam = bicirc_odd_family(*m);
      const long long t = static_cast<long long>(b.T.size());
      if (sv.params == fam.params)
        c.t_size_ok = t == *m * *m;
      else if (sv.params == complement_params(fam.params))
        c.t_size_ok = t == (*m + 1) * (*m + 1);
    }
    rep.structure_ok = rep.structure_ok && c.ok();
    rep.structure.push_back(c);
  }
  return rep;
}

// ------------------------------------------------------------------- JSON

nlohmann::json to_json(const SearchSpec& s) {
  nlohmann::json j{{"orbits", s.orbits},           {"n", s.n},
                   {"s_prime_is_hat", s.s_prime_is_hat}, {"require3iso", s.require3iso},
                   {"dedup", s.dedup},             {"prune", s.prune}};
  j["target"] = s.target ? to_json(*s.target) : nlohmann::json(nullptr);
  j["s_size"] = s.s_size ? nlohmann::json(*s.s_size) : nlohmann::json(nullptr);
  j["t_size"] = s.t_size ? nlohmann::json(*s.t_size) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const Survivor& s) {
  nlohmann::json j{{"type", "survivor"},
                   {"symbol", symbol_text(s.symbol)},
                   {"params", to_json(s.params)},
                   {"iso3", s.iso3},
                   {"class", s.iso_class},
                   {"graph6", s.graph6}};
  if (s.profile) j["profile"] = to_json(*s.profile);
  return j;
}

nlohmann::json to_json(const IsoClass& c) {
  nlohmann::json j{{"id", c.id},
                   {"representative", c.representative},
                   {"params", to_json(c.params)},
                   {"iso3", c.iso3},
                   {"members", c.members}};
  j["complement_class"] = c.complement_class ? nlohmann::json(*c.complement_class) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SearchStats& s) {
  return {{"candidates", s.candidates}, {"trivial_srg", s.trivial_srg},
          {"srg", s.srg},               {"iso3", s.iso3},
          {"classes", s.classes},       {"complement_classes", s.complement_classes}};
}

nlohmann::json to_json(const OddStructureCheck& c) {
  return {{"symbol", c.symbol},
          {"s_prime_is_hat", c.s_prime_is_hat},
          {"order_ok", c.order_ok},
          {"t_size_ok", c.t_size_ok}};
}

nlohmann::json summary_json(const SearchResult& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) classes.push_back(to_json(c));
  return {{"type", "summary"}, {"spec", to_json(r.spec)}, {"stats", to_json(r.stats)}, {"classes", classes}};
}

void write_jsonl(std::ostream& out, const SearchResult& r) {
  for (const auto& s : r.survivors) out << to_json(s).dump() << '\n';
  out << summary_json(r).dump() << '\n';
}

}  // namespace isoreg

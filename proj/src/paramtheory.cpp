#include "isoreg/paramtheory.hpp"

#include <algorithm>
#include <thread>

#include "isoreg/constructions.hpp"
#include "isoreg/isoregularity.hpp"

namespace isoreg {

// ---------------------------------------------------------------- families

BicircOddFamily bicirc_odd_family(const Int& m) {
  if (m < 1) throw Error("bicirc_odd_family needs m >= 1");
  SrgParams p{2 * (2 * m * m + 2 * m + 1), m * (2 * m + 1), m * m - 1, m * m};
  return {p, m * (m + 1), m * m};
}

std::vector<LeungMaTuple> leung_ma_families(const Int& m) {
  const Int m2 = m * m;
  return {
      {"a", 2 * m2 + 2 * m + 1, m2, m2 + m, m2 - 1, m2, m >= 1},
      {"b", 2 * m2, m2, m2 - m, m2 - m, m2 - m, m >= 2},
      {"c", 2 * m2, m2, m2 + m, m2 + m, m2 + m, m >= 3},
      {"d+", 2 * m2, m2 + m, m2, m2 + m, m2 + m, m >= 2},
      {"d-", 2 * m2, m2 - m, m2, m2 - m, m2 - m, m >= 2},
  };
}

namespace {

TricircFamilyMember tri_member(int family, const Int& s, SrgParams p) {
  TricircFamilyMember t;
  t.family = family;
  t.s = s;
  t.params = p;
  t.valid = p.in_range() && p.is_nontrivial();
  Int diff = p.lambda - p.mu;
  t.discriminant = diff * diff + 4 * (p.k - p.mu);
  if (t.discriminant >= 0) {
    Int r = isqrt(t.discriminant);
    if (r * r == t.discriminant) t.discriminant_root = r;
  }
  return t;
}

}  // namespace

std::array<TricircFamilyMember, 2> tricirc_families(const Int& s) {
  return {tri_member(1, s,
                     {3 * (12 * s * s + 9 * s + 2), (4 * s + 1) * (3 * s + 1), s * (4 * s + 3),
                      s * (4 * s + 1)}),
          tri_member(2, s, {3 * (3 * s * s - 3 * s + 1), s * (3 * s - 1), s * s + s - 1, s * s})};
}

// ------------------------------------------------------------------ solver

bool LocalParamSolution::agrees_with(const LocalParamSolution& o) const {
  if (Q != o.Q || R != o.R || W != o.W || q_vacuous != o.q_vacuous) return false;
  return v_vacuous || o.v_vacuous || V == o.V;
}

nlohmann::json to_json(const LocalParamSolution& s) {
  nlohmann::json j = {{"Q", int_to_json(s.Q)},
                      {"R", int_to_json(s.R)},
                      {"W", int_to_json(s.W)},
                      {"V", int_to_json(s.V)},
                      {"Q_vacuous", s.q_vacuous},
                      {"V_vacuous", s.v_vacuous}};
  if (!s.trace.empty()) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [k, v] : s.trace) t[k] = int_to_json(v);
    j["trace"] = t;
  }
  return j;
}

nlohmann::json to_json(const EdgeParamSolution& s) {
  return {{"Q", int_to_json(s.Q)},
          {"R", int_to_json(s.R)},
          {"W", int_to_json(s.W)},
          {"Q_vacuous", s.q_vacuous}};
}

namespace {

void require_feasible(const SrgParams& p) {
  if (!p.is_nontrivial() || !verify_identity(p))
    throw Error("need a feasible nontrivial parameter set, got " + p.to_string());
}

// n - 2k + mu - 2: vertices at distance 2 from both ends of a non-edge.
Int nonedge_far_cell(const SrgParams& p) { return p.n - 2 * p.k + p.mu - 2; }

struct EdgePart {
  Int Q, W;
  bool q_vacuous;
};

// Q and W from R via the edge relations; nullopt when not integral, out of
// bounds, or the second relation fails. w_cap bounds W from above.
std::optional<EdgePart> edge_part(const SrgParams& p, const Int& R, const Int& w_cap) {
  const Int& k = p.k;
  const Int& l = p.lambda;
  const Int& mu = p.mu;
  EdgePart e{0, 0, l == 0};
  if (l == 0) {
    if (R * (k - l - 1) != 0) return std::nullopt;
  } else {
    Int num = l * (l - 1) - R * (k - l - 1);
    if (!divides(l, num)) return std::nullopt;
    e.Q = num / l;
    if (e.Q < 0 || e.Q > l - 1) return std::nullopt;
  }
  Int wnum = mu * (l - R);
  if (!divides(k - mu, wnum)) return std::nullopt;
  e.W = wnum / (k - mu);
  if (e.W < 0 || e.W > w_cap) return std::nullopt;
  if (l * mu * (k - 2 * l + e.Q) != e.W * (k - mu) * (k - l - 1)) return std::nullopt;
  return e;
}

// R only matters through R(k-lambda-1) = lambda(lambda-1-Q), so R must be a
// multiple of lambda / gcd(lambda, k-lambda-1); other values fail at Q.
Int r_step(const SrgParams& p) {
  if (p.lambda == 0) return 1;
  return p.lambda / gcd(p.lambda, p.k - p.lambda - 1);
}

}  // namespace

std::vector<LocalParamSolution> feasible_local_params(const SrgParams& p) {
  require_feasible(p);
  std::vector<LocalParamSolution> out;
  const Int r_max = std::min(p.lambda, Int(p.mu - 1));
  const Int w_cap = std::min(p.lambda, p.mu);
  const Int far = nonedge_far_cell(p);
  const Int step = r_step(p);
  for (Int R = 0; R <= r_max; R += step) {
    auto e = edge_part(p, R, w_cap);
    if (!e) continue;
    Int vnum = p.mu * (p.k - 2 - 2 * p.lambda + R);
    LocalParamSolution s{e->Q, R, e->W, 0, e->q_vacuous, far == 0, {}};
    if (far == 0) {
      if (vnum != 0) continue;
    } else {
      if (!divides(far, vnum)) continue;
      s.V = vnum / far;
      if (s.V < 0 || s.V > p.mu) continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<EdgeParamSolution> feasible_edge_params(const SrgParams& p) {
  require_feasible(p);
  std::vector<EdgeParamSolution> out;
  const Int step = r_step(p);
  for (Int R = 0; R <= p.lambda; R += step)
    if (auto e = edge_part(p, R, p.lambda)) out.push_back({e->Q, R, e->W, e->q_vacuous});
  return out;
}

bool edge_relations_check(const SrgParams& p, const Int& Q, const Int& R, const Int& W) {
  const Int& k = p.k;
  const Int& l = p.lambda;
  const Int& mu = p.mu;
  return l * (l - Q - 1) == R * (k - l - 1) &&
         l * mu * (k - 2 * l + Q) == W * (k - mu) * (k - l - 1) && W * (k - mu) == mu * (l - R);
}

bool nonedge_relations_check(const SrgParams& p, const Int& Rp, const Int& Wp, const Int& V) {
  const Int& k = p.k;
  const Int& l = p.lambda;
  const Int& mu = p.mu;
  if (mu == 0) return false;
  // Second relation multiplied through by mu to stay in the integers.
  return mu * (l - Rp) == (k - mu) * Wp &&
         mu * mu * (k - 2 - 2 * l + Rp) == V * (k * (k - l - 1) - mu * (k - mu + 1));
}

LocalParamSolution even_m_candidates(const Int& m, char family) {
  if (m < 2 || m % 2 != 0) throw Error("even_m_candidates needs an even m >= 2");
  const Int m2 = m * m;
  if (family == 'b') return {(m2 - m) / 2, (m2 - 2 * m) / 2, (m2 - m) / 2, (m2 - 2 * m) / 2, false, false, {}};
  if (family == 'c') return {(m2 + m) / 2, (m2 + 2 * m) / 2, (m2 + m) / 2, (m2 + 2 * m) / 2, false, false, {}};
  throw Error("family must be 'b' or 'c'");
}

// ------------------------------------------------------------ certificates

std::string claim_tag(Claim c) {
  switch (c) {
    case Claim::BicircOdd: return "bicirc-odd";
    case Claim::FamilyB: return "family-b";
    case Claim::FamilyC: return "family-c";
    case Claim::Tri1: return "tri1";
    case Claim::Tri2: return "tri2";
  }
  return "?";
}

std::optional<Claim> parse_claim(std::string_view tag) {
  for (Claim c : {Claim::BicircOdd, Claim::FamilyB, Claim::FamilyC, Claim::Tri1, Claim::Tri2})
    if (claim_tag(c) == tag) return c;
  return std::nullopt;
}

std::vector<long long> claim_indices(Claim c, long long first, long long last) {
  std::vector<long long> out;
  for (long long i = first; i <= last; ++i) {
    if ((c == Claim::FamilyB || c == Claim::FamilyC) && (i % 2 == 0 || i < 3)) continue;
    if (c == Claim::BicircOdd && i < 1) continue;
    out.push_back(i);
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Contradiction: return "CONTRADICTION";
    case Verdict::Solution: return "SOLUTION";
    case Verdict::Degenerate: return "DEGENERATE";
    case Verdict::Open: return "OPEN";
  }
  return "?";
}

namespace {

using nlohmann::json;

json J(const Int& x) { return int_to_json(x); }

struct Frac {
  Int num, den;
  bool integral() const { return divides(den, num); }
  Int value() const { return num / den; }
};

json frac_json(const Frac& f) {
  if (f.integral()) return J(f.value());
  Int g = gcd(f.num, f.den);
  Int n = f.num / g, d = f.den / g;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return n.str() + "/" + d.str();
}

json divisibility(std::string claim, const Int& divisor, const Int& dividend) {
  return {{"kind", "DIVISIBILITY"},
          {"claim", std::move(claim)},
          {"divisor", J(divisor)},
          {"dividend", J(dividend)},
          {"divides", divides(divisor, dividend)}};
}

json coprime(std::string claim, const Int& a, const Int& b) {
  return {{"kind", "DIVISIBILITY"}, {"claim", std::move(claim)}, {"gcd", {J(a), J(b)}},
          {"value", J(gcd(a, b))}};
}

bool compare(const Int& a, const std::string& op, const Int& b) {
  if (op == "<") return a < b;
  if (op == "<=") return a <= b;
  if (op == ">") return a > b;
  if (op == ">=") return a >= b;
  if (op == "==") return a == b;
  throw Error("unknown comparison '" + op + "'");
}

json inequality(std::string claim, const Int& lhs, const std::string& op, const Int& rhs) {
  return {{"kind", "INEQUALITY"}, {"claim", std::move(claim)}, {"lhs", J(lhs)},
          {"op", op},             {"rhs", J(rhs)},             {"holds", compare(lhs, op, rhs)}};
}

json hoffman(std::string claim, const SrgParams& p, const Int& clique) {
  Surd bound = hoffman_bound(p);
  return {{"kind", "HOFFMAN_CLIQUE"}, {"claim", std::move(claim)}, {"params", to_json(p)},
          {"clique", J(clique)},      {"bound", bound.to_string()}, {"exceeds", Surd(clique) > bound}};
}

struct FarCount {
  Int far, forced, shared;
  bool contradiction;
};

FarCount far_count(const SrgParams& p, const Int& W) {
  FarCount f;
  f.far = nonedge_far_cell(p);
  f.forced = p.k - 1 - p.lambda - p.mu + W;
  f.shared = 2 * (p.k - p.mu);
  f.contradiction = f.forced < 0 || f.forced > f.far ||
                    (f.forced == f.far && f.far >= 2 && f.shared > std::max(p.lambda, p.mu));
  return f;
}

json neighbourhood_count(const SrgParams& p, const Int& W) {
  FarCount f = far_count(p, W);
  return {{"kind", "NEIGHBOURHOOD_COUNT"},
          {"claim",
           "for a 3-isoregular non-edge (x,z), each neighbour of x not adjacent to z has "
           "k-1-lambda-mu+W neighbours among the far cell; filling the far cell forces two far "
           "vertices to share every vertex adjacent to exactly one of x,z"},
          {"params", to_json(p)},
          {"W", J(W)},
          {"far", J(f.far)},
          {"forced", J(f.forced)},
          {"shared", J(f.shared)},
          {"contradiction", f.contradiction}};
}

json graph_check(std::string claim, const std::string& tag, const SrgParams& p,
                 const std::string& property, json expected) {
  json j = {{"kind", "GRAPH_CHECK"}, {"claim", std::move(claim)}, {"graph", tag},
            {"params", to_json(p)},  {"property", property}};
  if (!expected.is_null()) j["expected"] = std::move(expected);
  j["holds"] = check_step(j);
  return j;
}

bool graph_property(const Graph& g, const std::string& property, const json& step) {
  if (property == "no_3isoregular_edge" || property == "no_3isoregular_nonedge") {
    bool edges = property == "no_3isoregular_edge";
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (g.adjacent(u, v) != edges) continue;
        bool iso = edges ? edge_iso_params(g, u, v).has_value() : nonedge_iso_params(g, u, v).has_value();
        if (iso) return false;
      }
    return true;
  }
  if (property == "edge_params") {
    const json& e = step.at("expected");
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (!g.adjacent(u, v)) continue;
        auto ep = edge_iso_params(g, u, v);
        if (!ep || ep->Q.value != e.at("Q").get<std::size_t>() ||
            ep->R.value != e.at("R").get<std::size_t>() ||
            ep->W.value != e.at("W").get<std::size_t>())
          return false;
      }
    return true;
  }
  throw Error("unknown graph property '" + property + "'");
}

bool is_graph_level(const json& step) {
  const auto& kind = step.at("kind").get_ref<const std::string&>();
  return kind == "HOFFMAN_CLIQUE" || kind == "NEIGHBOURHOOD_COUNT" || kind == "GRAPH_CHECK";
}

enum class Mode { Edge, Local };

struct Evaluation {
  json values = json::object();
  std::optional<json> kill;       // first failing step, graph-level ones included
  bool arithmetic_ok = false;     // passes every integrality, bound and relation check
  std::optional<LocalParamSolution> tuple;  // set when arithmetic_ok
};

// Derives Q, W (and V) from R through the relations and checks, in order: the
// edge quantities and the second edge relation, the clique forced by Q =
// lambda-1, then (Local mode) the non-edge bounds, V, the cliques forced on
// the non-edge side, and the neighbourhood count.
Evaluation evaluate(const SrgParams& p, const Int& R, Mode mode) {
  const Int& k = p.k;
  const Int& l = p.lambda;
  const Int& mu = p.mu;
  Evaluation ev;
  std::optional<json> graph_kill;
  auto fail = [&](json step) {
    if (is_graph_level(step)) {
      if (!graph_kill) graph_kill = std::move(step);
      return false;
    }
    ev.kill = graph_kill ? *graph_kill : std::move(step);
    return true;
  };
  auto bounded = [&](const std::string& name, const Int& v, const std::string& op, const Int& rhs,
                     const std::string& why) {
    if (compare(v, op, rhs)) return false;
    return fail(inequality(name + " " + op + " " + rhs.str() + " (" + why + ")", v, op, rhs));
  };

  ev.values["R"] = J(R);
  if (bounded("R", R, ">=", 0, "valency")) return ev;
  if (bounded("R", R, "<=", l, "common neighbours of an edge")) return ev;

  Int Q = 0;
  if (l > 0) {
    Frac q{l * (l - 1) - R * (k - l - 1), l};
    ev.values["Q"] = frac_json(q);
    if (!q.integral())
      if (fail(divisibility("Q = (lambda(lambda-1) - R(k-lambda-1))/lambda must be an integer", l,
                            q.num)))
        return ev;
    if (q.integral()) Q = q.value();
  } else {
    ev.values["Q"] = 0;
    if (R != 0 && fail(inequality("lambda = 0 forces R(k-1) = 0", R * (k - 1), "==", 0))) return ev;
  }
  if (ev.values["Q"].is_number()) {
    if (bounded("Q", Q, ">=", 0, "valency")) return ev;
    if (l > 0 && bounded("Q", Q, "<=", l - 1, "a triangle's apex has lambda-1 other candidates"))
      return ev;
  }

  Frac w{mu * (l - R), k - mu};
  ev.values["W"] = frac_json(w);
  if (!w.integral() && fail(divisibility("W = mu(lambda-R)/(k-mu) must be an integer", k - mu, w.num)))
    return ev;
  Int W = w.integral() ? w.value() : Int(0);
  if (w.integral()) {
    if (bounded("W", W, ">=", 0, "valency")) return ev;
    if (bounded("W", W, "<=", l, "common neighbours of an edge")) return ev;
    Int lhs = l * mu * (k - 2 * l + Q), rhs = W * (k - mu) * (k - l - 1);
    if (lhs != rhs &&
        fail(inequality("lambda mu (k-2lambda+Q) = W(k-mu)(k-lambda-1)", lhs, "==", rhs)))
      return ev;
  }
  bool arithmetic = ev.values["Q"].is_number() && w.integral() && !graph_kill;
  if (l > 0 && Q == l - 1 && arithmetic) {
    json h = hoffman("Q = lambda-1 makes the common neighbours of an edge and its ends a clique",
                     p, l + 2);
    if (h["exceeds"].get<bool>()) fail(std::move(h));
  }

  LocalParamSolution t{Q, R, W, 0, l == 0, false, {}};
  if (mode == Mode::Local && !ev.kill) {
    if (bounded("R", R, "<=", mu - 1, "common neighbours of a non-edge, less one")) return ev;
    if (bounded("W", W, "<=", mu, "common neighbours of a non-edge")) return ev;
    Int far = nonedge_far_cell(p);
    Int vnum = mu * (k - 2 - 2 * l + R);
    if (far == 0) {
      ev.values["V"] = nullptr;
      t.v_vacuous = true;
      if (vnum != 0 &&
          fail(inequality("empty far cell forces mu(k-2-2lambda+R) = 0", vnum, "==", 0)))
        return ev;
    } else {
      Frac v{vnum, far};
      ev.values["V"] = frac_json(v);
      if (!v.integral() &&
          fail(divisibility("V = mu(k-2-2lambda+R)/(n-2k+mu-2) must be an integer", far, vnum)))
        return ev;
      if (v.integral()) {
        t.V = v.value();
        if (bounded("V", t.V, ">=", 0, "valency")) return ev;
        if (bounded("V", t.V, "<=", mu, "common neighbours of a non-edge")) return ev;
      }
    }
    if (!graph_kill && W == l - (k - mu - 1)) {
      json h = hoffman(
          "lambda-W = k-mu-1 makes x with its neighbours outside the other end's neighbourhood a "
          "clique",
          p, k - mu + 1);
      if (h["exceeds"].get<bool>()) fail(std::move(h));
    }
    if (!graph_kill && R == mu - 1) {
      json h = hoffman("R = mu-1 makes x with the common neighbours of a non-edge a clique", p,
                       mu + 1);
      if (h["exceeds"].get<bool>()) fail(std::move(h));
    }
    if (!graph_kill && far_count(p, W).contradiction) fail(neighbourhood_count(p, W));
  }
  if (ev.kill) return ev;
  ev.arithmetic_ok = true;
  ev.tuple = t;
  if (graph_kill) ev.kill = graph_kill;
  return ev;
}

struct Builder {
  Instance inst;
  json derivation = json::array();
  json branches = json::array();
  std::vector<LocalParamSolution> arithmetic;  // tuples passing every arithmetic check
  std::vector<std::pair<LocalParamSolution, json>> graph_killed;
  std::vector<LocalParamSolution> survivors;
  json extra = json::object();

  Builder(Claim c, long long index, const SrgParams& p) {
    inst.claim = c;
    inst.index = index;
    inst.params = p;
  }

  void branch(json label, const Evaluation& ev, std::optional<json> kill) {
    json b = std::move(label);
    b["values"] = ev.values;
    b["killed_by"] = kill ? *kill : json(nullptr);
    branches.push_back(std::move(b));
    if (ev.arithmetic_ok) {
      arithmetic.push_back(*ev.tuple);
      if (kill)
        graph_killed.emplace_back(*ev.tuple, *kill);
      else
        survivors.push_back(*ev.tuple);
    }
  }

  static bool same(const LocalParamSolution& a, const LocalParamSolution& b, bool with_v) {
    return with_v ? a.agrees_with(b) : (a.Q == b.Q && a.R == b.R && a.W == b.W);
  }

  // Compares the tuples that passed every arithmetic check with the solver.
  void oracle(const std::vector<LocalParamSolution>& solver, bool with_v) {
    json js = json::array();
    for (const auto& s : solver) {
      json t = to_json(s);
      if (!with_v) {
        t.erase("V");
        t.erase("V_vacuous");
      }
      js.push_back(t);
    }
    bool equal = solver.size() == arithmetic.size();
    for (const auto& s : solver) {
      bool found = false;
      for (const auto& a : arithmetic) found = found || same(s, a, with_v);
      equal = equal && found;
    }
    std::string status;
    if (!equal)
      status = "MISMATCH";
    else if (solver.empty())
      status = "EMPTY";
    else if (survivors.empty())
      status = "GRAPH_LEVEL";
    else
      status = inst.verdict == Verdict::Solution ? "MATCH" : "MISMATCH";
    json kills = json::array();
    for (const auto& [t, step] : graph_killed) {
      json e = with_v ? to_json(t) : to_json(EdgeParamSolution{t.Q, t.R, t.W, t.q_vacuous});
      kills.push_back({{"tuple", e}, {"kind", step["kind"]}});
    }
    inst.oracle_status = status;
    extra["oracle"] = {{"solver", js}, {"graph_level_kills", kills}, {"status", status}};
  }

  Instance finish(std::string note = {}) {
    json body = {{"index", inst.index},
                 {"params", to_json(inst.params)},
                 {"verdict", verdict_name(inst.verdict)}};
    if (!note.empty()) body["note"] = note;
    for (auto& [k, v] : extra.items())
      if (k != "oracle") body[k] = v;
    body["derivation"] = derivation;
    body["branches"] = branches;
    body["solution"] = inst.solution ? to_json(*inst.solution) : json(nullptr);
    body["oracle"] = extra.contains("oracle") ? extra["oracle"]
                                              : json{{"status", "NONE"}};
    if (inst.oracle_status.empty()) inst.oracle_status = "NONE";
    inst.body = std::move(body);
    return std::move(inst);
  }

  void settle() {
    if (!survivors.empty())
      inst.verdict = Verdict::Open;
    else
      inst.verdict = Verdict::Contradiction;
  }
};

Instance local_family(Claim c, long long index, const SrgParams& p,
                      std::vector<std::pair<Int, Int>> alpha_r, json derivation) {
  Builder b(c, index, p);
  b.derivation = std::move(derivation);
  for (const auto& [alpha, R] : alpha_r) {
    Evaluation ev = evaluate(p, R, Mode::Local);
    b.branch({{"alpha", J(alpha)}}, ev, ev.kill);
  }
  b.settle();
  b.oracle(feasible_local_params(p), true);
  return b.finish();
}

}  // namespace

Instance certify_bicirc_odd(long long m) {
  if (m < 1) throw Error("certify_bicirc_odd needs m >= 1");
  const Int M = m;
  SrgParams p = bicirc_odd_family(M).params;
  if (m == 1) {
    Builder b(Claim::BicircOdd, m, p);
    b.derivation.push_back(graph_check("m = 1 is the Petersen graph, which has no 3-isoregular non-edge",
                                       "petersen", p, "no_3isoregular_nonedge", nullptr));
    b.inst.verdict = Verdict::Degenerate;
    b.oracle(feasible_local_params(p), true);
    return b.finish("m = 1 is settled on the graph itself");
  }
  json d = json::array();
  d.push_back(coprime("gcd(m-1, m) = 1, so m divides m^2-2-Q: Q+2 = alpha*m, R = (m-1)(m-alpha)",
                      M - 1, M));
  d.push_back(inequality("Q >= 0 gives alpha*m >= 2, so alpha >= 1", M, ">=", 2));
  d.push_back(inequality("R >= 0 gives alpha <= m", M - 1, ">", 0));
  std::vector<std::pair<Int, Int>> ar;
  for (Int a = 1; a <= M; ++a) ar.emplace_back(a, (M - 1) * (M - a));
  return local_family(Claim::BicircOdd, m, p, std::move(ar), std::move(d));
}

Instance certify_family_b(long long m) {
  if (m < 3 || m % 2 == 0) throw Error("certify_family_b needs an odd m >= 3");
  const Int M = m;
  SrgParams p = leung_ma_families(M)[1].params();
  json d = json::array();
  d.push_back(coprime("gcd(m+1, m) = 1, so m divides R: R = alpha*m", M + 1, M));
  Int r_max = std::min(p.lambda, Int(p.mu - 1));
  Int a_max = r_max / M;
  d.push_back(inequality("R <= min(lambda, mu-1) bounds alpha*m", a_max * M, "<=", r_max));
  d.push_back(inequality("so alpha <= " + a_max.str(), (a_max + 1) * M, ">", r_max));
  d.push_back(coprime("gcd(m, m+2) = 1 for odd m, so m+2 must divide m-2+alpha*m", M, M + 2));
  std::vector<std::pair<Int, Int>> ar;
  for (Int a = 0; a <= a_max; ++a) ar.emplace_back(a, a * M);
  return local_family(Claim::FamilyB, m, p, std::move(ar), std::move(d));
}

Instance certify_family_c(long long m) {
  if (m < 3 || m % 2 == 0) throw Error("certify_family_c needs an odd m >= 3");
  const Int M = m;
  SrgParams p = leung_ma_families(M)[2].params();
  json d = json::array();
  d.push_back(coprime("gcd(m-1, m) = 1, so m divides R: R = alpha*m", M - 1, M));
  Int r_max = std::min(p.lambda, Int(p.mu - 1));
  Int a_max = r_max / M;
  d.push_back(inequality("R <= min(lambda, mu-1) bounds alpha*m", a_max * M, "<=", r_max));
  d.push_back(inequality("so alpha <= " + a_max.str(), (a_max + 1) * M, ">", r_max));
  d.push_back(coprime("gcd(m, m-2) = 1 for odd m, so m-2 must divide alpha*m-m-2", M, M - 2));
  std::vector<std::pair<Int, Int>> ar;
  for (Int a = 0; a <= a_max; ++a) ar.emplace_back(a, a * M);
  return local_family(Claim::FamilyC, m, p, std::move(ar), std::move(d));
}

namespace {

json discriminant_json(const TricircFamilyMember& t) {
  return {{"value", J(t.discriminant)},
          {"square", t.discriminant_root.has_value()},
          {"root", t.discriminant_root ? J(*t.discriminant_root) : json(nullptr)}};
}

void edge_oracle(Builder& b, const SrgParams& p) {
  std::vector<LocalParamSolution> solver;
  for (const auto& e : feasible_edge_params(p)) solver.push_back({e.Q, e.R, e.W, 0, e.q_vacuous, false, {}});
  b.oracle(solver, false);
}

}  // namespace

Instance certify_tri_family1(long long s_) {
  const Int s = s_;
  auto member = tricirc_families(s)[0];
  const SrgParams& p = member.params;
  Builder b(Claim::Tri1, s_, p);
  b.extra["discriminant"] = discriminant_json(member);
  if (s == 0) {
    b.inst.verdict = Verdict::Degenerate;
    return b.finish("s = 0 gives (6,1,0,0), a disjoint union of three edges");
  }
  b.derivation.push_back(coprime(
      "gcd(4s+3, 4(2s+1)) = 1, so Q = 4s^2+3s-1-4alpha(2s+1) and R = alpha(4s+3)", 4 * s + 3,
      4 * (2 * s + 1)));
  b.derivation.push_back(coprime("gcd(s(4s+3), 2s+1) = 1, so alpha = s - beta(2s+1) and W = beta s(4s+3)",
                                 s * (4 * s + 3), 2 * s + 1));
  b.derivation.push_back(inequality("s(4s+3) > 0, so W >= 0 gives beta >= 0", s * (4 * s + 3), ">", 0));
  Int beta_max = floor_div(s, 2 * s + 1);
  auto r_of = [&](const Int& beta) { return -(4 * s + 3) * (2 * beta * s - s + beta); };
  b.derivation.push_back(inequality("R decreases in beta: its slope -(4s+3)(2s+1) is negative",
                                    -(4 * s + 3) * (2 * s + 1), "<", 0));
  b.derivation.push_back(inequality("R < 0 at beta = " + Int(beta_max + 1).str() + ", so beta <= " +
                                        beta_max.str(),
                                    r_of(beta_max + 1), "<", 0));
  for (Int beta = 0; beta <= beta_max; ++beta) {
    Int alpha = s - beta * (2 * s + 1);
    Evaluation ev = evaluate(p, r_of(beta), Mode::Edge);
    b.branch({{"beta", J(beta)}, {"alpha", J(alpha)}}, ev, ev.kill);
    if (ev.arithmetic_ok && !ev.kill) {
      LocalParamSolution sol = *ev.tuple;
      sol.trace = {{"alpha", alpha}, {"beta", beta}};
      b.inst.solution = sol;
    }
  }
  if (b.survivors.size() == 1 && s == -1) {
    b.inst.verdict = Verdict::Solution;
    const auto& sol = *b.inst.solution;
    b.derivation.push_back(graph_check(
        "s = -1: every edge of the complement of T(6) is 3-isoregular with these values",
        "t6-complement", p, "edge_params", {{"Q", J(sol.Q)}, {"R", J(sol.R)}, {"W", J(sol.W)}}));
  } else {
    b.settle();
    if (!b.survivors.empty()) b.inst.solution.reset();
  }
  edge_oracle(b, p);
  return b.finish();
}

Instance certify_tri_family2(long long s_) {
  const Int s = s_;
  auto member = tricirc_families(s)[1];
  const SrgParams& p = member.params;
  Builder b(Claim::Tri2, s_, p);
  b.extra["discriminant"] = discriminant_json(member);
  if (s == 1) {
    b.inst.verdict = Verdict::Degenerate;
    return b.finish("s = 1 gives (3,2,1,1), the triangle, with no edge inside an orbit");
  }
  if (s == 0 || s == -1) {
    b.inst.verdict = Verdict::Degenerate;
    return b.finish("s = " + s.str() + " gives lambda = -1");
  }
  const Int c = s * s + s - 1;
  b.derivation.push_back(coprime(
      "gcd(s^2+s-1, 2s(s-1)) = 1, so Q = s^2+s-2-2alpha s(s-1) and R = alpha(s^2+s-1)", c,
      2 * s * (s - 1)));
  b.derivation.push_back(inequality("s^2+s-1 > 0, so R >= 0 gives alpha >= 0", c, ">", 0));
  b.derivation.push_back(inequality(
      "s(s^2+s-1)(2s-1) > 0, so W = -(alpha-1)s(s^2+s-1)/(2s-1) >= 0 gives alpha <= 1",
      s * c * (2 * s - 1), ">", 0));
  for (Int alpha = 0; alpha <= 1; ++alpha) {
    Evaluation ev = evaluate(p, alpha * c, Mode::Edge);
    std::optional<json> kill = ev.kill;
    if (!kill && ev.arithmetic_ok) {
      SrgParams t7 = *srg_params(triangular(7));
      if (p == t7) {
        json g = graph_check("the parameters are those of T(7), which has no 3-isoregular edge",
                             "t7", p, "no_3isoregular_edge", nullptr);
        if (g["holds"].get<bool>()) kill = std::move(g);
      }
    }
    b.branch({{"alpha", J(alpha)}}, ev, kill);
  }
  b.settle();
  edge_oracle(b, p);
  return b.finish();
}

Instance certify(Claim c, long long index) {
  switch (c) {
    case Claim::BicircOdd: return certify_bicirc_odd(index);
    case Claim::FamilyB: return certify_family_b(index);
    case Claim::FamilyC: return certify_family_c(index);
    case Claim::Tri1: return certify_tri_family1(index);
    case Claim::Tri2: return certify_tri_family2(index);
  }
  throw Error("unknown claim");
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json inst = nlohmann::json::array();
  for (const auto& i : instances) inst.push_back(i.body);
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [v, n] : verdict_counts()) counts[verdict_name(v)] = n;
  return {{"format", "isoreg-certificate/1"},
          {"claim", claim_tag(claim)},
          {"range", {first, last}},
          {"summary", counts},
          {"instances", inst}};
}

std::map<Verdict, std::size_t> Certificate::verdict_counts() const {
  std::map<Verdict, std::size_t> out;
  for (const auto& i : instances) ++out[i.verdict];
  return out;
}

Certificate certify_range(Claim c, long long first, long long last, unsigned jobs) {
  auto idx = claim_indices(c, first, last);
  Certificate cert{c, first, last, std::vector<Instance>(idx.size())};
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, idx.size()))));
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < idx.size(); i += jobs) cert.instances[i] = certify(c, idx[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return cert;
}

bool check_step(const nlohmann::json& step) {
  const auto& kind = step.at("kind").get_ref<const std::string&>();
  if (kind == "DIVISIBILITY") {
    if (step.contains("gcd")) {
      Int g = gcd(int_from_json(step["gcd"][0]), int_from_json(step["gcd"][1]));
      return g == int_from_json(step.at("value"));
    }
    return divides(int_from_json(step.at("divisor")), int_from_json(step.at("dividend"))) ==
           step.at("divides").get<bool>();
  }
  if (kind == "INEQUALITY")
    return compare(int_from_json(step.at("lhs")), step.at("op").get<std::string>(),
                   int_from_json(step.at("rhs"))) == step.at("holds").get<bool>();
  if (kind == "HOFFMAN_CLIQUE") {
    SrgParams p = params_from_json(step.at("params"));
    Surd bound = hoffman_bound(p);
    return bound.to_string() == step.at("bound").get<std::string>() &&
           (Surd(int_from_json(step.at("clique"))) > bound) == step.at("exceeds").get<bool>();
  }
  if (kind == "NEIGHBOURHOOD_COUNT") {
    SrgParams p = params_from_json(step.at("params"));
    FarCount f = far_count(p, int_from_json(step.at("W")));
    return f.far == int_from_json(step.at("far")) && f.forced == int_from_json(step.at("forced")) &&
           f.shared == int_from_json(step.at("shared")) &&
           f.contradiction == step.at("contradiction").get<bool>();
  }
  if (kind == "GRAPH_CHECK") {
    auto ref = parse_named_graph(step.at("graph").get<std::string>());
    if (!ref) return false;
    Graph g = build_named(*ref);
    auto measured = srg_params(g);
    if (!measured || *measured != params_from_json(step.at("params"))) return false;
    bool value = graph_property(g, step.at("property").get<std::string>(), step);
    return !step.contains("holds") || value == step["holds"].get<bool>();
  }
  throw Error("unknown step kind '" + kind + "'");
}

namespace {

void collect_steps(const nlohmann::json& inst, std::vector<const nlohmann::json*>& out) {
  for (const auto& s : inst.at("derivation")) out.push_back(&s);
  for (const auto& b : inst.at("branches"))
    if (!b.at("killed_by").is_null()) out.push_back(&b["killed_by"]);
}

}  // namespace

ReplayReport replay(const nlohmann::json& cert) {
  ReplayReport r;
  auto problem = [&](std::string s) { r.problems.push_back(std::move(s)); };
  try {
    if (cert.value("format", "") != "isoreg-certificate/1") problem("unknown certificate format");
    auto claim = parse_claim(cert.at("claim").get<std::string>());
    if (!claim) {
      problem("unknown claim");
      return r;
    }
    long long first = cert.at("range")[0].get<long long>();
    long long last = cert.at("range")[1].get<long long>();
    auto idx = claim_indices(*claim, first, last);
    const auto& insts = cert.at("instances");
    if (insts.size() != idx.size()) problem("instance count does not cover the range");
    for (std::size_t i = 0; i < insts.size(); ++i) {
      const auto& inst = insts[i];
      long long index = inst.at("index").get<long long>();
      std::string where = claim_tag(*claim) + " index " + std::to_string(index);
      if (i < idx.size() && idx[i] != index) problem(where + ": out of order or outside the range");
      ++r.instances;
      ++r.verdicts[inst.at("verdict").get<std::string>()];
      std::vector<const nlohmann::json*> steps;
      collect_steps(inst, steps);
      for (const auto* s : steps)
        if (!check_step(*s)) problem(where + ": step fails: " + s->value("claim", "?"));
      const std::string verdict = inst.at("verdict").get<std::string>();
      if (verdict == "CONTRADICTION")
        for (const auto& b : inst.at("branches"))
          if (b.at("killed_by").is_null()) problem(where + ": a branch survives a contradiction");
      Instance again = certify(*claim, index);
      if (again.body != inst) problem(where + ": re-derivation differs from the recorded instance");
    }
  } catch (const std::exception& e) {
    problem(std::string("malformed certificate: ") + e.what());
  }
  r.ok = r.problems.empty();
  return r;
}

}  // namespace isoreg

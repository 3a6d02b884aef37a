#include "isoreg/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "isoreg/constructions.hpp"
#include "isoreg/graph_io.hpp"
#include "isoreg/isoregularity.hpp"
#include "isoreg/paramtheory.hpp"
#include "isoreg/search.hpp"
#include "isoreg/srg.hpp"

namespace isoreg::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

bool starts_with(const std::string& s, std::string_view p) { return s.rfind(p, 0) == 0; }

std::string trim(std::string s) {
  auto ws = [](char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

std::pair<long long, long long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b: " + text);
  try {
    std::size_t used = 0;
    long long a = std::stoll(text.substr(0, dots), &used);
    if (used != dots) throw UsageError("bad range start: " + text);
    std::string rest = text.substr(dots + 2);
    long long b = std::stoll(rest, &used);
    if (used != rest.size()) throw UsageError("bad range end: " + text);
    if (a > b) throw UsageError("empty range: " + text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("bad range: " + text);
  }
}

SrgParams parse_params(std::string text) {
  for (char& c : text)
    if (c == '(' || c == ')') c = ' ';
  std::vector<Int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    try {
      v.emplace_back(item);
    } catch (const std::exception&) {
      throw UsageError("bad parameter value: " + item);
    }
  }
  if (v.size() != 4) throw UsageError("parameters need four values n,k,lambda,mu");
  return {v[0], v[1], v[2], v[3]};
}

unsigned default_jobs() {
  if (const char* e = std::getenv("ISOREG_JOBS")) {
    try {
      int j = std::stoi(e);
      if (j >= 1) return static_cast<unsigned>(j);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

json graph_header(const LoadedGraph& g) {
  return {{"graph", g.label}, {"graph6", encode_graph6(g.graph)}, {"order", g.graph.order()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

LoadedGraph load_graph(const std::string& spec) {
  if (auto ref = parse_named_graph(spec)) return {build_named(*ref), named_graph_tag(*ref)};
  if (starts_with(spec, "bi:")) {
    auto s = BicirculantSymbol::parse(spec);
    return {bicirculant(s), s.to_string()};
  }
  if (starts_with(spec, "tri:")) {
    auto s = TricirculantSymbol::parse(spec);
    return {tricirculant(s), s.to_string()};
  }
  if (starts_with(spec, "circ:")) {
    auto s = CirculantSymbol::parse(spec);
    return {circulant(s.n, s.S), s.to_string()};
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream f(spec, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return {decode_graph6(trim(ss.str())), "graph6"};
  }
  try {
    return {decode_graph6(spec), "graph6"};
  } catch (const Error& e) {
    throw Error("'" + spec + "' is not a known graph tag, symbol, file or valid graph6 (" + e.what() + ")");
  }
}

namespace {

// ------------------------------------------------------------------ verbs

int do_build(const std::string& spec, const std::string& format, const std::string& path,
             std::ostream& out) {
  auto g = load_graph(spec);
  std::string text;
  if (format == "graph6") {
    text = encode_graph6(g.graph) + "\n";
  } else if (format == "dot") {
    text = to_dot(g.graph);
  } else {
    json j = graph_header(g);
    j["edges"] = g.graph.edges();
    text = dump(j);
  }
  emit(out, path, text);
  return kOk;
}

int do_check(const std::string& what, const std::string& spec, int k, int t,
             std::optional<long long> vertex, std::ostream& out) {
  auto g = load_graph(spec);
  json r = graph_header(g);
  r["check"] = what;
  bool holds = false;
  if (what == "srg") {
    auto p = srg_params(g.graph);
    holds = p.has_value();
    r["srg"] = holds;
    if (p) {
      r["params"] = to_json(*p);
      r["nontrivial"] = p->is_nontrivial();
      if (p->is_nontrivial()) {
        auto e = eigenvalues(*p);
        r["eigenvalues"] = {{"k", e.k.to_string()}, {"r", e.r.to_string()}, {"s", e.s.to_string()}};
        r["discriminant"] = int_to_json(e.discriminant);
        r["hoffman_bound"] = hoffman_bound(*p).to_string();
      }
    }
  } else if (what == "isoreg") {
    if (k < 1 || k > 4) throw UsageError("--k must lie in 1..4");
    auto res = is_k_isoregular(g.graph, k);
    holds = res.isoregular;
    r["k"] = k;
    r["isoregular"] = holds;
    if (holds)
      r["profile"] = to_json(*iso_profile(g.graph, k));
    else
      r["witness"] = to_json(*res.witness);
  } else if (what == "local3") {
    const long long n = static_cast<long long>(g.graph.order());
    if (vertex) {
      if (*vertex < 0 || *vertex >= n) throw UsageError("--vertex out of range");
      auto rep = is_locally_3isoregular_at(g.graph, static_cast<Vertex>(*vertex));
      holds = rep.locally_isoregular();
      r["report"] = to_json(rep);
    } else {
      json per = json::array();
      std::size_t count = 0;
      for (Vertex x = 0; x < n; ++x) {
        auto rep = is_locally_3isoregular_at(g.graph, x);
        count += rep.locally_isoregular();
        per.push_back(to_json(rep));
      }
      holds = count == static_cast<std::size_t>(n);
      r["locally_isoregular_vertices"] = count;
      r["vertices"] = per;
    }
    r["locally_isoregular"] = holds;
  } else if (what == "tvertex") {
    if (t < 2 || t > 4) throw UsageError("--t must lie in 2..4");
    auto res = t_vertex_condition(g.graph, t);
    holds = res.holds;
    r["t"] = t;
    r["holds"] = holds;
    if (res.witness) r["witness"] = to_json(*res.witness);
  } else {
    throw UsageError("unknown check: " + what);
  }
  out << dump(r);
  return holds ? kOk : kFails;
}

int do_params(const std::vector<std::string>& values, bool edge_only, std::ostream& out) {
  if (values.size() != 4) throw UsageError("params solve needs n k lambda mu");
  std::vector<Int> v;
  for (const auto& s : values) {
    try {
      v.emplace_back(s);
    } catch (const std::exception&) {
      throw UsageError("bad parameter value: " + s);
    }
  }
  SrgParams p{v[0], v[1], v[2], v[3]};
  json r{{"params", to_json(p)}, {"mode", edge_only ? "edge" : "local"}};
  json sols = json::array();
  if (edge_only)
    for (const auto& s : feasible_edge_params(p)) sols.push_back(to_json(s));
  else
    for (const auto& s : feasible_local_params(p)) sols.push_back(to_json(s));
  r["solutions"] = sols;
  out << dump(r);
  return kOk;
}

bool claim_holds(const Certificate& c) {
  for (const auto& i : c.instances)
    if (i.verdict == Verdict::Open || i.oracle_status == "MISMATCH") return false;
  return true;
}

int do_certify(const std::string& claim_text, const std::string& range, const std::string& path,
               unsigned jobs, std::ostream& out) {
  auto claim = parse_claim(claim_text);
  if (!claim) throw UsageError("unknown claim: " + claim_text);
  auto [a, b] = parse_range(range);
  auto cert = certify_range(*claim, a, b, jobs);
  std::string text = cert.to_json().dump() + "\n";
  if (!path.empty() && path != "-") {
    emit(out, path, text);
    json s{{"claim", claim_tag(*claim)}, {"range", {a, b}}, {"file", path}};
    json counts = json::object();
    for (auto [v, n] : cert.verdict_counts()) counts[verdict_name(v)] = n;
    s["verdicts"] = counts;
    s["holds"] = claim_holds(cert);
    out << dump(s);
  } else {
    out << text;
  }
  return claim_holds(cert) ? kOk : kFails;
}

int do_search(const std::string& kind, SearchSpec spec, const std::optional<std::string>& params,
              bool confirm_odd, const std::string& path, std::ostream& out) {
  if (params) spec.target = parse_params(*params);
  std::ostringstream text;
  int code = kOk;
  if (kind == "bicirc") {
    spec.orbits = 2;
    if (confirm_odd) {
      auto rep = confirm_nonexistence_bicirc_odd(spec.n, spec.jobs);
      write_jsonl(text, rep.result);
      json checks = json::array();
      for (const auto& c : rep.structure) checks.push_back(to_json(c));
      text << json{{"type", "odd_structure"},
                   {"n", spec.n},
                   {"no_iso3", rep.no_iso3},
                   {"structure_ok", rep.structure_ok},
                   {"checks", checks}}
                  .dump()
           << '\n';
      code = rep.holds() ? kOk : kFails;
    } else {
      write_jsonl(text, search_bicirculant(spec));
    }
  } else if (kind == "tricirc") {
    spec.orbits = 3;
    if (confirm_odd) throw UsageError("--confirm-odd applies to bicirc");
    write_jsonl(text, search_tricirculant_srg(spec));
  } else {
    throw UsageError("unknown search kind: " + kind);
  }
  emit(out, path, text.str());
  return code;
}

json tri_member_json(const TricircFamilyMember& m) {
  json j{{"family", m.family},
         {"s", int_to_json(m.s)},
         {"params", to_json(m.params)},
         {"valid", m.valid},
         {"discriminant", int_to_json(m.discriminant)}};
  j["discriminant_root"] = m.discriminant_root ? int_to_json(*m.discriminant_root) : json(nullptr);
  return j;
}

int do_families(const std::string& which, long long max, std::ostream& out) {
  if (max < 1) throw UsageError("--max must be positive");
  json rows = json::array();
  if (which == "thm22") {
    for (long long m = 1; m <= max; ++m) {
      auto f = bicirc_odd_family(m);
      rows.push_back({{"m", m},
                      {"params", to_json(f.params)},
                      {"S_size", int_to_json(f.S_size)},
                      {"T_size", int_to_json(f.T_size)}});
    }
  } else if (which == "lm93") {
    for (long long m = 1; m <= max; ++m)
      for (const auto& t : leung_ma_families(m))
        rows.push_back({{"m", m},
                        {"family", t.family},
                        {"n", int_to_json(t.n)},
                        {"c", int_to_json(t.c)},
                        {"d", int_to_json(t.d)},
                        {"lambda", int_to_json(t.lambda)},
                        {"mu", int_to_json(t.mu)},
                        {"in_range", t.in_range},
                        {"params", to_json(t.params())}});
  } else if (which == "tri") {
    for (long long s = -max; s <= max; ++s)
      for (const auto& m : tricirc_families(s)) rows.push_back(tri_member_json(m));
  } else {
    throw UsageError("unknown family table: " + which);
  }
  out << dump(json{{"table", which}, {"max", max}, {"rows", rows}});
  return kOk;
}

int do_replay(const std::string& path, std::ostream& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  json cert;
  try {
    cert = json::parse(f);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed certificate: ") + e.what());
  }
  auto rep = replay(cert);
  out << dump(json{{"file", path},
                   {"ok", rep.ok},
                   {"instances", rep.instances},
                   {"verdicts", rep.verdicts},
                   {"problems", rep.problems}});
  return rep.ok ? kOk : kFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strongly regular and 3-isoregular multicirculant toolkit", "isoreg"};
  app.require_subcommand(1);
  unsigned jobs = default_jobs();
  std::string output;
  int code = kOk;
  std::function<int()> action;

  auto* build = app.add_subcommand("build", "Construct a graph");
  std::string build_spec, format = "graph6";
  build->add_option("graph", build_spec, "Named graph, symbol text or graph6")->required();
  build->add_option("--format", format)->check(CLI::IsMember({"graph6", "dot", "json"}));
  build->add_option("-o,--output", output);
  build->callback([&] { action = [&] { return do_build(build_spec, format, output, out); }; });

  auto* check = app.add_subcommand("check", "Check a property of a graph");
  std::string check_kind, check_spec;
  int k = 3, t = 3;
  std::optional<long long> vertex;
  check->add_option("property", check_kind)->required()->check(
      CLI::IsMember({"srg", "isoreg", "local3", "tvertex"}));
  check->add_option("graph", check_spec)->required();
  check->add_option("--k", k);
  check->add_option("--t", t);
  check->add_option("--vertex", vertex);
  check->callback([&] { action = [&] { return do_check(check_kind, check_spec, k, t, vertex, out); }; });

  auto* params = app.add_subcommand("params", "Local parameter solver");
  std::string params_verb;
  std::vector<std::string> params_values;
  bool edge_only = false;
  params->add_option("verb", params_verb)->required()->check(CLI::IsMember({"solve"}));
  params->add_option("values", params_values, "n k lambda mu")->expected(4)->required();
  params->add_flag("--edge", edge_only, "Edge relations only");
  params->callback([&] { action = [&] { return do_params(params_values, edge_only, out); }; });

  auto* certify = app.add_subcommand("certify", "Write a nonexistence certificate");
  std::string claim, range;
  certify->add_option("claim", claim)->required()->check(
      CLI::IsMember({"bicirc-odd", "family-b", "family-c", "tri1", "tri2"}));
  certify->add_option("--range", range, "a..b")->required();
  certify->add_option("-o,--output", output);
  certify->add_option("--jobs", jobs);
  certify->callback([&] { action = [&] { return do_certify(claim, range, output, jobs, out); }; });

  auto* search = app.add_subcommand("search", "Exhaustive multicirculant search");
  std::string search_kind;
  SearchSpec spec;
  std::optional<std::string> target;
  std::optional<int> s_size, t_size;
  bool no_prune = false, no_dedup = false, confirm_odd = false;
  search->add_option("kind", search_kind)->required()->check(CLI::IsMember({"bicirc", "tricirc"}));
  search->add_option("--n", spec.n)->required();
  search->add_option("--params", target, "n,k,lambda,mu");
  search->add_flag("--iso3", spec.require3iso, "List 3-isoregular survivors only");
  search->add_option("--s-size", s_size);
  search->add_option("--t-size", t_size);
  search->add_flag("--hat", spec.s_prime_is_hat, "Only symbols [S, S-hat, T]");
  search->add_flag("--no-prune", no_prune);
  search->add_flag("--no-dedup", no_dedup);
  search->add_flag("--confirm-odd", confirm_odd, "Unconstrained odd-n run with structure checks");
  search->add_option("--jobs", jobs);
  search->add_option("-o,--output", output);
  search->callback([&] {
    action = [&] {
      spec.s_size = s_size;
      spec.t_size = t_size;
      spec.prune = !no_prune;
      spec.dedup = !no_dedup;
      spec.jobs = jobs;
      return do_search(search_kind, spec, target, confirm_odd, output, out);
    };
  });

  auto* families = app.add_subcommand("families", "Parameter tables");
  std::string which;
  long long max = 10;
  families->add_option("table", which)->required()->check(CLI::IsMember({"thm22", "lm93", "tri"}));
  families->add_option("--max", max);
  families->callback([&] { action = [&] { return do_families(which, max, out); }; });

  auto* rp = app.add_subcommand("replay", "Re-check a certificate");
  std::string cert_path;
  rp->add_option("certificate", cert_path)->required();
  rp->callback([&] { action = [&] { return do_replay(cert_path, out); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (jobs < 1) jobs = 1;
  try {
    code = action();
  } catch (const CapExceeded& e) {
    err << "isoreg: " << e.what();
    if (e.estimate()) err << " (estimate " << e.estimate() << ")";
    err << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "isoreg: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}

}  // namespace isoreg::cli

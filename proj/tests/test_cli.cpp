#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "isoreg/cli.hpp"
#include "isoreg/constructions.hpp"
#include "isoreg/graph_io.hpp"
#include "isoreg/isomorphism.hpp"
#include "json.hpp"

using namespace isoreg;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("isoreg-test-" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("check isoreg") {
  auto c = run({"check", "isoreg", "clebsch"});
  CHECK(c.code == cli::kOk);
  auto j = c.j();
  CHECK(j["isoregular"] == true);
  CHECK(j["profile"]["K1,2"]["valency"] == 0);
  CHECK(j["profile"]["3K1"]["valency"] == 1);
  CHECK(j["graph6"] == encode_graph6(build_named(*parse_named_graph("clebsch"))));

  auto s = run({"check", "isoreg", "shrikhande-a"});
  CHECK(s.code == cli::kFails);
  auto w = s.j()["witness"];
  CHECK(w["type"] == "K1,2");
  CHECK(w["first_valency"] != w["second_valency"]);

  CHECK(run({"check", "isoreg", "petersen"}).code == cli::kFails);
  CHECK(run({"check", "isoreg", "petersen", "--k", "2"}).code == cli::kOk);
}

TEST_CASE("check srg, local3 and tvertex") {
  auto s = run({"check", "srg", "bi:n=8;S=1,4,7;Sp=3,4,5;T=0,2"});
  CHECK(s.code == cli::kOk);
  CHECK(s.j()["params"] == json{{"n", 16}, {"k", 5}, {"lambda", 0}, {"mu", 2}});
  CHECK(run({"check", "srg", "circ:n=5;S=1,4"}).code == cli::kOk);
  CHECK(run({"check", "srg", "circ:n=7;S=1,6"}).code == cli::kFails);
  CHECK(run({"check", "local3", "gq22"}).code == cli::kFails);
  CHECK(run({"check", "local3", "clebsch"}).code == cli::kOk);
  auto t = run({"check", "tvertex", "petersen", "--t", "2", "--vertex", "0"});
  CHECK(t.code == cli::kOk);
  CHECK(t.j()["holds"] == true);
}

TEST_CASE("graph inputs") {
  auto g = build_named(*parse_named_graph("k4xk4"));
  auto a = run({"check", "srg", encode_graph6(g)});
  CHECK(a.code == cli::kOk);
  CHECK(a.j()["params"]["k"] == 6);

  auto path = temp("k4xk4.g6");
  std::ofstream(path) << ">>graph6<<" << encode_graph6(g) << "\n";
  CHECK(run({"check", "srg", path.string()}).code == cli::kOk);
  std::filesystem::remove(path);

  auto bad = run({"check", "srg", "no-such-graph"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("no-such-graph") != std::string::npos);
  CHECK(run({"check", "srg", "bi:n=8;S=1;Sp=3,5;T=0"}).code == cli::kUsage);
}

TEST_CASE("build") {
  auto g6 = run({"build", "petersen"});
  CHECK(g6.code == cli::kOk);
  CHECK(is_isomorphic(decode_graph6(g6.out), build_named(*parse_named_graph("petersen"))));
  auto dot = run({"build", "c5", "--format", "dot"});
  CHECK(dot.out.find("graph") != std::string::npos);
  CHECK(dot.out.find("--") != std::string::npos);
  auto j = run({"build", "paley-13", "--format", "json"}).j();
  CHECK(j["order"] == 13);
  CHECK(run({"build", "c5", "--format", "xml"}).code == cli::kUsage);
}

TEST_CASE("params solve") {
  auto a = run({"params", "solve", "36", "21", "12", "12"}).j();
  REQUIRE(a["solutions"].size() == 2);
  CHECK(a["solutions"][1]["V"] == 12);
  auto e = run({"params", "solve", "21", "10", "5", "4", "--edge"}).j();
  REQUIRE(e["solutions"].size() == 1);
  CHECK(e["solutions"][0]["R"] == 5);
  CHECK(run({"params", "solve", "10", "3", "1", "1"}).code == cli::kUsage);
}

TEST_CASE("certify and replay") {
  auto c = run({"certify", "bicirc-odd", "--range", "2..200"});
  CHECK(c.code == cli::kOk);
  auto j = c.j();
  CHECK(j["summary"]["CONTRADICTION"] == 199);

  auto path = temp("cert.json");
  auto w = run({"certify", "family-c", "--range", "3..41", "-o", path.string()});
  CHECK(w.code == cli::kOk);
  auto r = run({"replay", path.string()});
  CHECK(r.code == cli::kOk);

  auto doc = json::parse(slurp(path));
  doc["instances"][0]["verdict"] = "OPEN";
  std::ofstream(path) << doc.dump();
  CHECK(run({"replay", path.string()}).code == cli::kFails);
  std::filesystem::remove(path);

  CHECK(run({"certify", "family-q", "--range", "1..3"}).code == cli::kUsage);
  CHECK(run({"certify", "tri1", "--range", "3"}).code == cli::kUsage);
}

TEST_CASE("output does not depend on jobs") {
  auto a = run({"certify", "tri2", "--range", "-30..30", "--jobs", "1"});
  auto b = run({"certify", "tri2", "--range", "-30..30", "--jobs", "3"});
  CHECK(a.code == cli::kOk);
  CHECK_FALSE(a.out.empty());
  CHECK(a.out == b.out);
  auto s1 = run({"search", "bicirc", "--n", "8", "--jobs", "1"});
  auto s4 = run({"search", "bicirc", "--n", "8", "--jobs", "4"});
  CHECK(s1.code == cli::kOk);
  CHECK(s1.out == s4.out);
}

TEST_CASE("search") {
  auto r = run({"search", "bicirc", "--n", "5", "--params", "10,3,0,1"});
  CHECK(r.code == cli::kOk);
  std::istringstream in(r.out);
  std::string line, last;
  int lines = 0;
  while (std::getline(in, line)) {
    auto j = json::parse(line);
    if (j.contains("graph6")) {
      CHECK(is_isomorphic(decode_graph6(j["graph6"].get<std::string>()),
                          build_named(*parse_named_graph("petersen"))));
    }
    last = line;
    ++lines;
  }
  CHECK(lines == 11);
  CHECK(json::parse(last)["stats"]["classes"] == 1);

  auto t = run({"search", "tricirc", "--n", "5", "--params", "15,6,1,3"});
  CHECK(t.code == cli::kOk);
  auto odd = run({"search", "bicirc", "--n", "7", "--confirm-odd"});
  CHECK(odd.code == cli::kOk);
  auto big = run({"search", "bicirc", "--n", "20", "--no-prune"});
  CHECK(big.code == cli::kUsage);
  CHECK_FALSE(big.err.empty());
}

TEST_CASE("families") {
  auto t = run({"families", "thm22", "--max", "3"}).j();
  REQUIRE(t["rows"].size() == 3);
  CHECK(t["rows"][1]["params"]["n"] == 26);
  CHECK(run({"families", "lm93", "--max", "4"}).code == cli::kOk);
  CHECK(run({"families", "tri", "--max", "4"}).code == cli::kOk);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"check"}).code == cli::kUsage);
  CHECK(run({"check", "isoreg"}).code == cli::kUsage);
}

namespace {

json schema(const std::string& name) {
  std::ifstream in(std::string(ISOREG_SOURCE_DIR) + "/docs/schemas/" + name + ".schema.json");
  REQUIRE(in);
  return json::parse(in);
}

bool has_required(const json& doc, const json& node) {
  for (const auto& key : node.value("required", json::array()))
    if (!doc.contains(key.get<std::string>())) return false;
  return true;
}

}  // namespace

TEST_CASE("reports carry the keys their schemas require") {
  auto cert = schema("certificate");
  auto c = run({"certify", "tri2", "--range", "-5..5"}).j();
  CHECK(has_required(c, cert));
  for (const auto& i : c["instances"]) CHECK(has_required(i, cert["$defs"]["instance"]));

  auto rec = schema("search-record");
  std::istringstream in(run({"search", "bicirc", "--n", "5", "--confirm-odd"}).out);
  std::string line;
  std::set<std::string> kinds;
  while (std::getline(in, line)) {
    auto j = json::parse(line);
    auto kind = j["type"].get<std::string>();
    kinds.insert(kind);
    CHECK(has_required(j, rec["$defs"][kind]));
  }
  CHECK(kinds == std::set<std::string>{"survivor", "summary", "odd_structure"});

  auto chk = schema("check-report");
  for (std::vector<std::string> args : {std::vector<std::string>{"check", "srg", "petersen"},
                                        {"check", "isoreg", "clebsch"},
                                        {"check", "local3", "gq22"},
                                        {"check", "tvertex", "c5", "--t", "3"}})
    CHECK(has_required(run(args).j(), chk));
  CHECK(has_required(run({"params", "solve", "16", "6", "2", "2"}).j(), schema("params-report")));
}

#include "doctest.h"
#include "isoreg/constructions.hpp"
#include "isoreg/isomorphism.hpp"
#include "isoreg/srg.hpp"
#include "oracles.hpp"

using namespace isoreg;

namespace {

double to_double(const Surd& x) {
  double a = x.a().convert_to<double>(), b = x.b().convert_to<double>();
  double d = x.d().convert_to<double>(), c = x.c().convert_to<double>();
  return (a + b * std::sqrt(d)) / c;
}

Graph named(const char* tag) { return build_named(*parse_named_graph(tag)); }

std::array<long, 4> as_array(const SrgParams& p) {
  return {p.n.convert_to<long>(), p.k.convert_to<long>(), p.lambda.convert_to<long>(),
          p.mu.convert_to<long>()};
}

}  // namespace

TEST_CASE("srg_params on named graphs") {
  CHECK(srg_params(named("petersen")) == SrgParams{10, 3, 0, 1});
  CHECK(srg_params(named("clebsch")) == SrgParams{16, 5, 0, 2});
  CHECK(srg_params(named("k4xk4")) == SrgParams{16, 6, 2, 2});
  CHECK(srg_params(named("shrikhande-a")) == SrgParams{16, 6, 2, 2});
  CHECK(srg_params(named("shrikhande-b")) == SrgParams{16, 6, 2, 2});
  CHECK(srg_params(named("gq22")) == SrgParams{15, 6, 1, 3});
  CHECK(srg_params(named("t7")) == SrgParams{21, 10, 5, 4});
  CHECK_FALSE(srg_params(path_graph(4)));
}

TEST_CASE("srg_params agrees with direct counting on the corpus") {
  for (const auto& e : oracle::corpus()) {
    INFO(e.name);
    auto mine = srg_params(e.graph);
    auto ref = oracle::srg(e.graph);
    REQUIRE(mine.has_value() == ref.has_value());
    if (mine) {
      CHECK(as_array(*mine) == *ref);
      CHECK(verify_identity(*mine));
    }
  }
}

TEST_CASE("verify_identity") {
  CHECK(verify_identity({16, 6, 2, 2}));
  CHECK(verify_identity({10, 3, 0, 1}));
  CHECK_FALSE(verify_identity({10, 3, 1, 1}));
}

TEST_CASE("complement_params") {
  CHECK(complement_params({16, 5, 0, 2}) == SrgParams{16, 10, 6, 6});
  CHECK(complement_params({10, 3, 0, 1}) == SrgParams{10, 6, 3, 4});
  for (const auto& e : oracle::corpus()) {
    auto p = srg_params(e.graph);
    if (!p || !p->is_nontrivial()) continue;
    INFO(e.name);
    CHECK(complement_params(complement_params(*p)) == *p);
    CHECK(srg_params(complement(e.graph)) == complement_params(*p));
  }
}

TEST_CASE("eigenvalues") {
  auto e = eigenvalues({16, 6, 2, 2});
  CHECK(e.k == Surd(6));
  CHECK(e.r == Surd(2));
  CHECK(e.s == Surd(-2));

  auto c = eigenvalues({5, 2, 0, 1});
  CHECK(c.r == Surd(-1, 1, 5, 2));
  CHECK(c.s == Surd(-1, -1, 5, 2));
  CHECK(c.r.to_string() == "(-1+sqrt(5))/2");

  CHECK_THROWS_AS(eigenvalues({6, 5, 4, 0}), Error);
}

TEST_CASE("eigenvalues of the odd bicirculant family") {
  for (Int m = 1; m <= 60; ++m) {
    SrgParams p{2 * (2 * m * m + 2 * m + 1), m * (2 * m + 1), m * m - 1, m * m};
    CHECK(verify_identity(p));
    auto e = eigenvalues(p);
    CHECK(e.discriminant == (2 * m + 1) * (2 * m + 1));
    CHECK(e.r == Surd(m));
    CHECK(e.s == Surd(-(m + 1)));
  }
}

TEST_CASE("eigenvalue sum and product") {
  for (const auto& e : oracle::corpus()) {
    auto p = srg_params(e.graph);
    if (!p || !p->is_nontrivial()) continue;
    auto ev = eigenvalues(*p);
    CHECK(ev.r + ev.s == Surd(p->lambda - p->mu));
    CHECK(ev.r * ev.s == Surd(p->mu - p->k));
    CHECK(ev.r > ev.s);
  }
}

TEST_CASE("eigenvalues match the adjacency spectrum") {
  for (const auto& e : oracle::corpus()) {
    auto p = srg_params(e.graph);
    if (!p || !p->is_nontrivial()) continue;
    INFO(e.name);
    auto d = oracle::distinct(oracle::spectrum(e.graph));
    auto ev = eigenvalues(*p);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == doctest::Approx(to_double(ev.s)).epsilon(1e-9));
    CHECK(d[1] == doctest::Approx(to_double(ev.r)).epsilon(1e-9));
    CHECK(d[2] == doctest::Approx(to_double(ev.k)).epsilon(1e-9));
  }
}

TEST_CASE("hoffman bound") {
  CHECK(hoffman_bound({16, 6, 2, 2}) == Surd(4));
  CHECK(hoffman_bound({10, 3, 0, 1}) == Surd::rational(5, 2));
  for (Int m = 2; m <= 30; ++m) {
    SrgParams p{4 * m * m, 2 * m * m + m, m * m + m, m * m + m};
    CHECK(hoffman_bound(p) == Surd(2 + 2 * m));
  }
  CHECK_THROWS_AS(hoffman_bound({6, 5, 4, 0}), Error);
}

TEST_CASE("cliques respect the hoffman bound") {
  for (const auto& e : oracle::corpus()) {
    auto p = srg_params(e.graph);
    if (!p || !p->is_nontrivial() || e.graph.order() > 28) continue;
    INFO(e.name);
    CHECK(Surd(oracle::max_clique(e.graph)) <= hoffman_bound(*p));
  }
  CHECK(oracle::max_clique(named("k4xk4")) == 4);
}

TEST_CASE("subconstituents") {
  auto p13 = subconstituent(paley(13), 0, 1);
  CHECK(p13.order() == 6);
  CHECK(is_isomorphic(p13, circulant(6, ResidueSet(6, {1, 5}))));
  auto c = subconstituent(named("clebsch"), 3, 1);
  CHECK(c.order() == 5);
  CHECK(c.edge_count() == 0);
  CHECK(is_isomorphic(subconstituent(named("gq22"), 0, 1), disjoint_union(complete_graph(2), 3)));
  CHECK(subconstituent(named("petersen"), 0, 2).order() == 6);
  CHECK_THROWS_AS(subconstituent(named("petersen"), 0, 3), Error);
}

TEST_CASE("is_nontrivial_srg") {
  CHECK_FALSE(is_nontrivial_srg(complete_graph(6)));
  CHECK_FALSE(is_nontrivial_srg(disjoint_union(complete_graph(2), 3)));
  CHECK_FALSE(is_nontrivial_srg(complete_bipartite(3, 3)));
  CHECK_FALSE(is_nontrivial_srg(path_graph(4)));
  CHECK(is_nontrivial_srg(named("petersen")));
  CHECK(is_nontrivial_srg(cycle_graph(5)));
  for (const auto& e : oracle::corpus()) {
    auto p = srg_params(e.graph);
    bool expect = p && is_connected(e.graph) && is_connected(complement(e.graph));
    CHECK(is_nontrivial_srg(e.graph) == expect);
    if (p) CHECK(p->is_nontrivial() == expect);
  }
}

TEST_CASE("params JSON") {
  auto j = to_json(SrgParams{16, 5, 0, 2});
  CHECK(j.dump() == R"({"k":5,"lambda":0,"mu":2,"n":16})");
  CHECK(params_from_json(j) == SrgParams{16, 5, 0, 2});
  CHECK(SrgParams{16, 5, 0, 2}.to_string() == "(16,5,0,2)");
}

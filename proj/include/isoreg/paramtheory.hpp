#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoreg/bigint.hpp"
#include "isoreg/srg.hpp"
#include "json.hpp"

namespace isoreg {

// ---------------------------------------------------------------- families

struct BicircOddFamily {
  SrgParams params;
  Int S_size, T_size;
};

// ((2(2m^2+2m+1), m(2m+1), m^2-1, m^2), m(m+1), m^2), m >= 1.
BicircOddFamily bicirc_odd_family(const Int& m);

// A partial difference triple (n; c, d; lambda, mu) in Z_n; the bicirculant
// has c = |T|, d = |S| = |S'| and parameters (2n, c+d, lambda, mu).
struct LeungMaTuple {
  std::string family;  // "a", "b", "c", "d+", "d-"
  Int n, c, d, lambda, mu;
  bool in_range = false;  // m satisfies the family's lower bound

  SrgParams params() const { return {2 * n, c + d, lambda, mu}; }
};

std::vector<LeungMaTuple> leung_ma_families(const Int& m);

struct TricircFamilyMember {
  int family = 1;  // 1 or 2
  Int s;
  SrgParams params;
  bool valid = false;  // entries in range and the graph would be nontrivial
  Int discriminant;    // (lambda-mu)^2 + 4(k-mu)
  std::optional<Int> discriminant_root;  // set iff the discriminant is a square
};

std::array<TricircFamilyMember, 2> tricirc_families(const Int& s);

// ------------------------------------------------------------------ solver

struct LocalParamSolution {
  Int Q, R, W, V;
  bool q_vacuous = false;  // lambda = 0: no triangle through an edge
  bool v_vacuous = false;  // no vertex at distance 2 from both ends of a non-edge
  std::map<std::string, Int> trace;  // alpha, beta when produced by a certifier

  bool same_values(const LocalParamSolution& o) const {
    return Q == o.Q && R == o.R && W == o.W && V == o.V && q_vacuous == o.q_vacuous &&
           v_vacuous == o.v_vacuous;
  }
  // Equal, except that a vacuous V on either side matches any V.
  bool agrees_with(const LocalParamSolution& o) const;
};

struct EdgeParamSolution {
  Int Q, R, W;
  bool q_vacuous = false;
  bool operator==(const EdgeParamSolution&) const = default;
};

nlohmann::json to_json(const LocalParamSolution& s);
nlohmann::json to_json(const EdgeParamSolution& s);

// All (Q,R,W,V) with R = R', W = W' satisfying the edge relations
//   lambda(lambda-Q-1) = R(k-lambda-1)
//   lambda mu (k-2lambda+Q) = W(k-mu)(k-lambda-1)
//   W(k-mu) = mu(lambda-R)
// and the non-edge relation
//   mu(k-2-2lambda+R) = V (k(k-lambda-1)/mu - k + mu - 1)
// with 0 <= Q <= lambda-1, 0 <= R <= min(lambda, mu-1), 0 <= W <= min(lambda, mu),
// 0 <= V <= mu. Ordered by R. Requires a feasible nontrivial parameter set.
std::vector<LocalParamSolution> feasible_local_params(const SrgParams& p);

// (Q,R,W) satisfying the three edge relations with 0 <= Q <= lambda-1,
// 0 <= R <= lambda, 0 <= W <= lambda.
std::vector<EdgeParamSolution> feasible_edge_params(const SrgParams& p);

bool edge_relations_check(const SrgParams& p, const Int& Q, const Int& R, const Int& W);
bool nonedge_relations_check(const SrgParams& p, const Int& Rp, const Int& Wp, const Int& V);

// Candidate values for even m: family 'b' or 'c'.
LocalParamSolution even_m_candidates(const Int& m, char family);

// ------------------------------------------------------------ certificates

enum class Claim { BicircOdd, FamilyB, FamilyC, Tri1, Tri2 };

std::string claim_tag(Claim c);
std::optional<Claim> parse_claim(std::string_view tag);
// Indices the claim covers in [first, last]: odd m for families b and c.
std::vector<long long> claim_indices(Claim c, long long first, long long last);

enum class Verdict { Contradiction, Solution, Degenerate, Open };
std::string verdict_name(Verdict v);

struct Instance {
  Claim claim{};
  long long index = 0;
  SrgParams params;
  Verdict verdict = Verdict::Open;
  std::optional<LocalParamSolution> solution;
  std::string oracle_status;  // EMPTY, GRAPH_LEVEL, MATCH, MISMATCH, NONE
  nlohmann::json body;        // full serialized instance
};

Instance certify_bicirc_odd(long long m);
Instance certify_family_b(long long m);
Instance certify_family_c(long long m);
Instance certify_tri_family1(long long s);
Instance certify_tri_family2(long long s);
Instance certify(Claim c, long long index);

struct Certificate {
  Claim claim{};
  long long first = 0, last = 0;
  std::vector<Instance> instances;  // ordered by index

  nlohmann::json to_json() const;
  std::map<Verdict, std::size_t> verdict_counts() const;
};

// Instances are computed on `jobs` threads and ordered by index.
Certificate certify_range(Claim c, long long first, long long last, unsigned jobs = 1);

// Re-evaluates one serialized step; true iff its recorded outcome is correct.
bool check_step(const nlohmann::json& step);

struct ReplayReport {
  bool ok = false;
  std::size_t instances = 0;
  std::vector<std::string> problems;
  std::map<std::string, std::size_t> verdicts;
};

// Re-derives every instance, compares it with the serialized one, and
// re-checks each recorded step.
ReplayReport replay(const nlohmann::json& certificate);

}  // namespace isoreg

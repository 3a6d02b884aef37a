#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "isoreg/graph.hpp"
#include "isoreg/isoregularity.hpp"
#include "isoreg/srg.hpp"
#include "isoreg/symbols.hpp"
#include "json.hpp"

namespace isoreg {

// Hard limits. A spec outside them is refused with a size estimate.
inline constexpr int kMaxBicircOrder = 64;      // 2n
inline constexpr int kMaxTricircOrder = 40;     // 3n
inline constexpr std::uint64_t kMaxCandidates = 400'000'000;

// Symmetric subsets of Z_n \ {0}, in lexicographic order of their sorted
// element lists. A size that cannot be realised gives an empty list.
std::vector<ResidueSet> symmetric_subsets(int n, std::optional<int> size = std::nullopt);

struct SearchSpec {
  int orbits = 2;  // 2 or 3
  int n = 0;
  std::optional<SrgParams> target;
  std::optional<int> s_size;  // |S| (and |S'|); for tricirculants every |S_a|
  std::optional<int> t_size;  // |T|
  bool s_prime_is_hat = false;  // only symbols [S, S-hat, T]
  bool require3iso = false;
  bool dedup = true;
  // Skip candidates that cannot be regular (unequal orbit degrees, or a
  // degree different from the target's k).
  bool prune = true;
  unsigned jobs = 1;
};

using SymbolVariant = std::variant<BicirculantSymbol, TricirculantSymbol>;

std::string symbol_text(const SymbolVariant& s);
Graph build_symbol(const SymbolVariant& s);

struct Survivor {
  SymbolVariant symbol;
  SrgParams params;
  bool iso3 = false;
  std::optional<IsoProfile> profile;  // set iff iso3
  std::size_t iso_class = 0;          // index into SearchResult::classes
  std::string graph6;
};

struct IsoClass {
  std::size_t id = 0;
  std::string representative;  // symbol text of the first member
  SrgParams params;
  bool iso3 = false;
  std::size_t members = 0;
  // Class of the complement, when it is among the results.
  std::optional<std::size_t> complement_class;
};

struct SearchStats {
  std::uint64_t candidates = 0;    // symbols whose graph was tested
  std::uint64_t trivial_srg = 0;   // strongly regular but trivial, not listed
  std::uint64_t srg = 0;           // nontrivial SRG survivors
  std::uint64_t iso3 = 0;          // of which 3-isoregular
  std::size_t classes = 0;         // isomorphism classes of listed survivors
  std::size_t complement_classes = 0;  // classes up to complementation
};

struct SearchResult {
  SearchSpec spec;
  std::vector<Survivor> survivors;  // ordered by symbol
  std::vector<IsoClass> classes;    // ordered by first member
  SearchStats stats;
};

// Thrown when the spec exceeds a hard limit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t estimate)
      : Error(what), estimate_(estimate) {}
  std::uint64_t estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t estimate_;
};

// Number of candidates the spec would enumerate.
std::uint64_t candidate_count(const SearchSpec& spec);

SearchResult search_bicirculant(const SearchSpec& spec);
SearchResult search_tricirculant_srg(const SearchSpec& spec);
SearchResult search_tricirculant_srg(int n, const SrgParams& target, unsigned jobs = 1);

// Structure every nontrivial strongly regular n-bicirculant with n odd is
// expected to have, checked per survivor.
struct OddStructureCheck {
  std::string symbol;
  bool s_prime_is_hat = false;
  bool order_ok = false;   // 2n = (2m+1)^2 + 1
  bool t_size_ok = false;  // |T| = m^2, or (m+1)^2 for the complementary parameters
  bool ok() const { return s_prime_is_hat && order_ok && t_size_ok; }
};

struct NonexistenceReport {
  SearchResult result;
  std::vector<OddStructureCheck> structure;  // one per survivor
  bool no_iso3 = false;
  bool structure_ok = false;
  bool holds() const { return no_iso3 && structure_ok; }
};

// Unconstrained search over every [S, S', T] for odd n in [5, 13].
NonexistenceReport confirm_nonexistence_bicirc_odd(int n, unsigned jobs = 1);

nlohmann::json to_json(const SearchSpec& s);
nlohmann::json to_json(const Survivor& s);
nlohmann::json to_json(const IsoClass& c);
nlohmann::json to_json(const SearchStats& s);
nlohmann::json to_json(const OddStructureCheck& c);
// Summary record: spec, stats and classes.
nlohmann::json summary_json(const SearchResult& r);
// One survivor per line, then the summary record.
void write_jsonl(std::ostream& out, const SearchResult& r);

}  // namespace isoreg

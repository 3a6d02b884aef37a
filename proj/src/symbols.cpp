#include "isoreg/symbols.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace isoreg {

namespace {

int reduce(long long r, int n) {
  long long m = r % n;
  if (m < 0) m += n;
  return static_cast<int>(m);
}

void check_modulus(int n) {
  if (n < 1) throw Error("modulus must be positive, got " + std::to_string(n));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long long parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error("malformed integer '" + std::string(s) + "'");
  return v;
}

// Parses "key=value;key=value" after the "<kind>:" prefix.
std::map<std::string, std::string> parse_fields(std::string_view text,
                                                std::string_view kind) {
  std::string prefix = std::string(kind) + ":";
  if (text.substr(0, prefix.size()) != prefix)
    throw Error("symbol text must start with '" + prefix + "'");
  text.remove_prefix(prefix.size());
  std::map<std::string, std::string> fields;
  for (auto part : split(text, ';')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string_view::npos)
      throw Error("malformed symbol field '" + std::string(part) + "'");
    std::string key(part.substr(0, eq));
    if (!fields.emplace(key, std::string(part.substr(eq + 1))).second)
      throw Error("duplicate symbol field '" + key + "'");
  }
  return fields;
}

ResidueSet parse_set(const std::map<std::string, std::string>& fields,
                     const std::string& key, int n) {
  auto it = fields.find(key);
  if (it == fields.end()) throw Error("symbol is missing field '" + key + "'");
  std::vector<long long> vals;
  if (!it->second.empty())
    for (auto tok : split(it->second, ',')) vals.push_back(parse_int(tok));
  return ResidueSet(n, vals);
}

int parse_modulus(const std::map<std::string, std::string>& fields) {
  auto it = fields.find("n");
  if (it == fields.end()) throw Error("symbol is missing field 'n'");
  long long n = parse_int(it->second);
  if (n < 1 || n > static_cast<long long>(Graph::kMaxOrder))
    throw Error("symbol modulus out of range");
  return static_cast<int>(n);
}

void check_keys(const std::map<std::string, std::string>& fields,
                std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : fields)
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return k == a; }))
      throw Error("unknown symbol field '" + k + "'");
}

void check_within_set(const ResidueSet& s, int n, const char* name) {
  if (s.modulus() != n) throw Error(std::string(name) + " has the wrong modulus");
  if (s.contains(0)) throw Error(std::string(name) + " must not contain 0");
  if (!s.is_symmetric()) throw Error(std::string(name) + " is not closed under negation");
}

}  // namespace

ResidueSet::ResidueSet(int modulus, std::span<const long long> elements) : n_(modulus) {
  check_modulus(n_);
  for (long long r : elements) elems_.push_back(reduce(r, n_));
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

ResidueSet::ResidueSet(int modulus, std::initializer_list<long long> elements)
    : ResidueSet(modulus, std::span<const long long>(elements.begin(), elements.size())) {}

ResidueSet ResidueSet::from_mask(int modulus, std::uint64_t mask) {
  std::vector<long long> e;
  for (int i = 0; i < modulus && i < 64; ++i)
    if ((mask >> i) & 1u) e.push_back(i);
  return ResidueSet(modulus, e);
}

bool ResidueSet::contains(long long r) const noexcept {
  if (n_ == 0) return false;
  return std::binary_search(elems_.begin(), elems_.end(), reduce(r, n_));
}

bool ResidueSet::is_symmetric() const { return negated() == *this; }

ResidueSet ResidueSet::negated() const { return scaled(-1); }

ResidueSet ResidueSet::scaled(long long a) const {
  std::vector<long long> e;
  for (int r : elems_) e.push_back(static_cast<long long>(reduce(a, n_)) * r);
  return ResidueSet(n_, e);
}

ResidueSet ResidueSet::translated(long long c) const {
  std::vector<long long> e;
  for (int r : elems_) e.push_back(r + c);
  return ResidueSet(n_, e);
}

ResidueSet ResidueSet::complement() const {
  std::vector<long long> e;
  for (int r = 0; r < n_; ++r)
    if (!contains(r)) e.push_back(r);
  return ResidueSet(n_, e);
}

ResidueSet ResidueSet::hat() const {
  std::vector<long long> e;
  for (int r = 1; r < n_; ++r)
    if (!contains(r)) e.push_back(r);
  return ResidueSet(n_, e);
}

std::uint64_t ResidueSet::mask() const {
  if (n_ > 64) throw Error("residue mask needs modulus <= 64");
  std::uint64_t m = 0;
  for (int r : elems_) m |= std::uint64_t{1} << r;
  return m;
}

std::string ResidueSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i]);
  }
  return out;
}

void BicirculantSymbol::validate() const {
  check_modulus(n);
  check_within_set(S, n, "S");
  check_within_set(Sp, n, "Sp");
  if (T.modulus() != n) throw Error("T has the wrong modulus");
}

BicirculantSymbol BicirculantSymbol::complement() const {
  return {n, S.hat(), Sp.hat(), T.complement()};
}

std::string BicirculantSymbol::to_string() const {
  return "bi:n=" + std::to_string(n) + ";S=" + S.to_string() + ";Sp=" + Sp.to_string() +
         ";T=" + T.to_string();
}

BicirculantSymbol BicirculantSymbol::parse(std::string_view text) {
  auto f = parse_fields(text, "bi");
  check_keys(f, {"n", "S", "Sp", "T"});
  BicirculantSymbol sym;
  sym.n = parse_modulus(f);
  sym.S = parse_set(f, "S", sym.n);
  sym.Sp = parse_set(f, "Sp", sym.n);
  sym.T = parse_set(f, "T", sym.n);
  sym.validate();
  return sym;
}

void TricirculantSymbol::validate() const {
  check_modulus(n);
  static const char* within[] = {"S0", "S1", "S2"};
  for (int a = 0; a < 3; ++a) {
    check_within_set(S[a], n, within[a]);
    if (T[a].modulus() != n) throw Error("connection set has the wrong modulus");
  }
}

std::string TricirculantSymbol::to_string() const {
  return "tri:n=" + std::to_string(n) + ";S0=" + S[0].to_string() + ";S1=" +
         S[1].to_string() + ";S2=" + S[2].to_string() + ";T01=" + T[0].to_string() +
         ";T12=" + T[1].to_string() + ";T20=" + T[2].to_string();
}

TricirculantSymbol TricirculantSymbol::parse(std::string_view text) {
  auto f = parse_fields(text, "tri");
  check_keys(f, {"n", "S0", "S1", "S2", "T01", "T12", "T20"});
  TricirculantSymbol sym;
  sym.n = parse_modulus(f);
  sym.S[0] = parse_set(f, "S0", sym.n);
  sym.S[1] = parse_set(f, "S1", sym.n);
  sym.S[2] = parse_set(f, "S2", sym.n);
  sym.T[0] = parse_set(f, "T01", sym.n);
  sym.T[1] = parse_set(f, "T12", sym.n);
  sym.T[2] = parse_set(f, "T20", sym.n);
  sym.validate();
  return sym;
}

std::string CirculantSymbol::to_string() const {
  return "circ:n=" + std::to_string(n) + ";S=" + S.to_string();
}

CirculantSymbol CirculantSymbol::parse(std::string_view text) {
  auto f = parse_fields(text, "circ");
  check_keys(f, {"n", "S"});
  CirculantSymbol sym;
  sym.n = parse_modulus(f);
  sym.S = parse_set(f, "S", sym.n);
  check_within_set(sym.S, sym.n, "S");
  return sym;
}

}  // namespace isoreg

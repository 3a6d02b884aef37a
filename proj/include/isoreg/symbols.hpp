#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isoreg/graph.hpp"

namespace isoreg {

// Subset of Z_n, kept sorted with every element reduced into [0, n).
class ResidueSet {
 public:
  ResidueSet() = default;
  ResidueSet(int modulus, std::span<const long long> elements);
  ResidueSet(int modulus, std::initializer_list<long long> elements);

  static ResidueSet from_mask(int modulus, std::uint64_t mask);

  int modulus() const noexcept { return n_; }
  const std::vector<int>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(long long r) const noexcept;

  bool is_symmetric() const;
  ResidueSet negated() const;
  ResidueSet scaled(long long a) const;
  ResidueSet translated(long long c) const;
  // Z_n \ A
  ResidueSet complement() const;
  // Z_n^# \ A, written A-hat
  ResidueSet hat() const;

  // Bit i set iff i is in the set; requires modulus <= 64.
  std::uint64_t mask() const;

  std::string to_string() const;  // "0,2,5"

  bool operator==(const ResidueSet&) const = default;
  auto operator<=>(const ResidueSet&) const = default;

 private:
  int n_ = 0;
  std::vector<int> elems_;
};

struct BicirculantSymbol {
  int n = 0;
  ResidueSet S;
  ResidueSet Sp;
  ResidueSet T;

  // Validates S = -S, Sp = -Sp, 0 not in S or Sp, matching moduli.
  void validate() const;

  // Symbol of the complement under the same labelling: [S-hat, Sp-hat, T^c].
  BicirculantSymbol complement() const;

  // "bi:n=8;S=1,4,7;Sp=3,4,5;T=0,2"
  std::string to_string() const;
  static BicirculantSymbol parse(std::string_view text);

  bool operator==(const BicirculantSymbol&) const = default;
  auto operator<=>(const BicirculantSymbol&) const = default;
};

// Three orbits O_0, O_1, O_2 with within-orbit sets S[a] and connection sets
// T[0] = T01, T[1] = T12, T[2] = T20 (orbit a to orbit a+1 mod 3).
struct TricirculantSymbol {
  int n = 0;
  ResidueSet S[3];
  ResidueSet T[3];

  void validate() const;
  std::string to_string() const;
  static TricirculantSymbol parse(std::string_view text);

  bool operator==(const TricirculantSymbol&) const = default;
  auto operator<=>(const TricirculantSymbol&) const = default;
};

struct CirculantSymbol {
  int n = 0;
  ResidueSet S;

  std::string to_string() const;
  static CirculantSymbol parse(std::string_view text);
};

}  // namespace isoreg

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "isoreg/graph.hpp"

namespace isoreg {

// Calls fn(span) for every j-subset of {0..n-1} in lexicographic order.
// Stops early and returns false if fn returns false.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t j, Fn&& fn) {
  if (j > n) return true;
  std::vector<Vertex> s(j);
  for (std::size_t i = 0; i < j; ++i) s[i] = static_cast<Vertex>(i);
  while (true) {
    if (!fn(std::span<const Vertex>(s))) return false;
    std::size_t i = j;
    while (i > 0 && s[i - 1] == n - j + i - 1) --i;
    if (i == 0) return true;
    ++s[i - 1];
    for (std::size_t t = i; t < j; ++t) s[t] = s[t - 1] + 1;
  }
}

inline unsigned long long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace isoreg

#include "isoreg/bigint.hpp"

#include <limits>

#include "isoreg/graph.hpp"

namespace isoreg {

nlohmann::json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw Error("malformed integer string '" + s + "'");
    return Int(s);
  }
  throw Error("expected an integer");
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw Error("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(const Int& a, const Int& b) { return a - b * floor_div(a, b); }

bool divides(const Int& d, const Int& x) {
  if (d == 0) return x == 0;
  return x % d == 0;
}

Int gcd(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  while (y != 0) {
    Int t = x % y;
    x = y;
    y = t;
  }
  return x;
}

Int isqrt(const Int& x) {
  if (x < 0) throw Error("isqrt of a negative number");
  return boost::multiprecision::sqrt(x);
}

std::pair<Int, Int> squarefree_split(const Int& x) {
  if (x < 0) throw Error("squarefree_split of a negative number");
  if (x == 0) return {Int(0), Int(0)};
  Int f = 1, d = 1, rest = x;
  for (Int p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) f *= p;
    if (e % 2) d *= p;
  }
  d *= rest;
  return {f, d};
}

}  // namespace isoreg

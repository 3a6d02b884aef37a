#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "json.hpp"

namespace isoreg {

using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int& x) { return x.str(); }

// JSON number when the value fits in int64, decimal string otherwise.
nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);

// Floor division and non-negative remainder.
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);
bool divides(const Int& d, const Int& x);
Int gcd(const Int& a, const Int& b);
Int isqrt(const Int& x);

// x = f^2 * d with d squarefree, x >= 0. Returns {f, d}.
std::pair<Int, Int> squarefree_split(const Int& x);

}  // namespace isoreg

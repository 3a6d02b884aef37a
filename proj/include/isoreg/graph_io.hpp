#pragma once

#include <string>
#include <string_view>

#include "isoreg/graph.hpp"

namespace isoreg {

// graph6: N(n) followed by the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, each byte + 63.
// An optional ">>graph6<<" header and trailing newline are accepted on input.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace isoreg

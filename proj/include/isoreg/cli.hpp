#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isoreg/graph.hpp"

namespace isoreg::cli {

// Exit codes: 0 the claim holds or the result was produced, 1 the claim
// fails (a witness is reported), 2 usage or input error.
inline constexpr int kOk = 0, kFails = 1, kUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct LoadedGraph {
  Graph graph;
  std::string label;  // named tag, symbol text, or "graph6"
};

// A named tag ("petersen", "paley13"), symbol text ("bi:...", "tri:...",
// "circ:..."), a file holding graph6, or a graph6 string.
LoadedGraph load_graph(const std::string& spec);

}  // namespace isoreg::cli

#include "isoreg/graph_io.hpp"

namespace isoreg {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6)
      out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out += static_cast<char>(((n >> shift) & 63) + 63);
  }
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw Error("graph6: byte outside the printable range");
  return v;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_order(out, n);
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = filled = 0;
      }
    }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error("graph6: empty input");
  std::size_t n = 0, pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw Error("graph6: truncated order header");
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text[k]));
    pos = 8;
  } else {
    if (text.size() < 4) throw Error("graph6: truncated order header");
    for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text[k]));
    if (n <= 62) throw Error("graph6: non-canonical order header");
    pos = 4;
  }
  if (n < 1 || n > Graph::kMaxOrder)
    throw Error("graph6: order " + std::to_string(n) + " is outside the supported range");
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw Error("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                std::to_string(text.size() - pos));
  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  if (k % 6 != 0) {
    int last = sextet(text[pos + bytes - 1]);
    if (last & ((1 << (6 - k % 6)) - 1)) throw Error("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace isoreg

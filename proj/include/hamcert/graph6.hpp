#pragma once

#include <string>
#include <string_view>

#include "hamcert/errors.hpp"
#include "hamcert/graph.hpp"

namespace hamcert {

// graph6 codec, single-byte order field only (n <= 62). Bits are the upper
// triangle in column order (0,1),(0,2),(1,2),(0,3),... packed six per byte,
// most significant first, each byte offset by 63.

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// Padding bits in the final byte are ignored. Throws ParseError naming the
// offending byte offset.
inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n == 63) throw ParseError("multi-byte graph6 order field is not supported", 0);
  if (n < 1) throw ParseError("graph6 order must be at least 1", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() < expected) throw ParseError("truncated graph6 bit stream", text.size());
  if (text.size() > expected) throw ParseError("trailing bytes after graph6 bit stream", expected);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace hamcert

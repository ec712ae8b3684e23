#pragma once

// graph6 (single-byte header, n <= 62) and plain edge-list codecs.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ore/graph.hpp"

namespace ore {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Number of data bytes after the header for an n-vertex graph.
constexpr std::size_t graph6_body_length(std::size_t n) {
  return n == 0 ? 0 : (n * (n - 1) / 2 + 5) / 6;
}

/// Strict graph6 decoder: rejects bytes outside 63..126, wrong lengths and
/// nonzero padding bits. Upper-triangle bits are read column by column:
/// (0,1), (0,2), (1,2), (0,3), ...
inline Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("byte out of graph6 range", i);
  }
  const std::size_t n = static_cast<unsigned char>(line[0]) - 63;
  if (n > kGraph6MaxOrder) throw ParseError("multi-byte graph6 header is not supported", 0);
  const std::size_t body = graph6_body_length(n);
  if (line.size() != 1 + body) {
    throw ParseError("expected " + std::to_string(1 + body) + " bytes for n = " + std::to_string(n) +
                         ", got " + std::to_string(line.size()),
                     std::min(line.size(), 1 + body));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const unsigned value = static_cast<unsigned char>(line[1 + bit / 6]) - 63U;
      if (value & (1U << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  }
  for (; bit < body * 6; ++bit) {
    const unsigned value = static_cast<unsigned char>(line[1 + bit / 6]) - 63U;
    if (value & (1U << (5 - bit % 6))) throw ParseError("nonzero graph6 padding bit", 1 + bit / 6);
  }
  return Graph::from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw GraphError("graph6 writer supports n <= 62");
  std::string out(1 + graph6_body_length(n), static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out;
}

inline constexpr std::size_t kEdgeListMaxOrder = 1U << 16;

/// "n m" header then m lines "u v" with 0-based ids.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list header must be \"n m\"", 0);
  if (n > static_cast<long long>(kEdgeListMaxOrder)) throw ParseError("vertex count too large", 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i),
                       static_cast<std::size_t>(std::max<std::streamoff>(0, in.tellg())));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("more edges than the header declares", 0);
  return Graph::from_edges(static_cast<std::size_t>(n), std::span<const std::pair<Vertex, Vertex>>(edges));
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// True when the first non-empty line looks like graph6: every byte in
/// 63..126 and no whitespace.
inline bool looks_like_graph6(std::string_view text) {
  const auto start = text.find_first_not_of("\r\n");
  if (start == std::string_view::npos) return false;
  auto line = text.substr(start, text.find_first_of("\r\n", start) - start);
  if (line.empty()) return false;
  for (char ch : line) {
    const auto c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) return false;
  }
  return true;
}

/// Non-empty lines of a graph6 stream, decoded in order.
inline std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_graph6(line));
    pos = end + 1;
  }
  return out;
}

}  // namespace ore

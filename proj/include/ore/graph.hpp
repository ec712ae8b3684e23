#pragma once

// Immutable simple undirected graph over dense vertex ids 0..n-1.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ore {

using Vertex = std::uint32_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list; duplicates collapse, loops and
  /// out-of-range ids throw GraphError.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
      if (a >= n || b >= n) {
        throw GraphError("vertex id out of range: (" + std::to_string(a) + "," +
                         std::to_string(b) + ") with n=" + std::to_string(n));
      }
      if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
      g.set_bit(a, b);
      g.set_bit(b, a);
    }
    g.finish();
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
  }

  static Graph edgeless(std::size_t n) {
    Graph g(n);
    g.finish();
    return g;
  }

  std::size_t order() const noexcept { return n_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  /// Neighbors of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }

  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::size_t min_degree() const noexcept {
    std::size_t best = n_ == 0 ? 0 : degree(0);
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// Row bitset of v, `words()` 64-bit words long.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + v * words_, words_};
  }
  std::size_t words() const noexcept { return words_; }

  bool contains(Vertex v) const noexcept { return v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

  void set_bit(Vertex u, Vertex v) { rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  void finish() {
    offsets_.assign(n_ + 1, 0);
    for (Vertex u = 0; u < n_; ++u) {
      std::size_t count = 0;
      for (std::size_t w = 0; w < words_; ++w) count += std::popcount(rows_[u * words_ + w]);
      offsets_[u + 1] = offsets_[u] + count;
    }
    adjacency_.resize(offsets_[n_]);
    for (Vertex u = 0; u < n_; ++u) {
      std::size_t pos = offsets_[u];
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = rows_[u * words_ + w];
        while (bits != 0) {
          adjacency_[pos++] = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
        }
      }
    }
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Sorted set of distinct vertex ids, validated against a vertex count.
class VertexSubset {
 public:
  VertexSubset() = default;

  /// Sorts and validates; duplicates or ids >= n throw GraphError.
  VertexSubset(std::vector<Vertex> ids, std::size_t n) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
      throw GraphError("vertex subset contains a duplicate id");
    }
    if (!ids_.empty() && ids_.back() >= n) {
      throw GraphError("vertex subset id " + std::to_string(ids_.back()) + " out of range");
    }
  }

  std::span<const Vertex> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  Vertex operator[](std::size_t i) const noexcept { return ids_[i]; }
  bool contains(Vertex v) const noexcept { return std::binary_search(ids_.begin(), ids_.end(), v); }

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
  friend auto operator<=>(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<Vertex> ids_;
};

struct InducedSubgraph {
  Graph graph;
  /// original[new_id] is the id in the parent graph.
  std::vector<Vertex> original;

  /// Parent id -> new id; throws if the parent id is not in the subset.
  Vertex new_id(Vertex parent) const {
    auto it = std::lower_bound(original.begin(), original.end(), parent);
    if (it == original.end() || *it != parent) throw GraphError("vertex not in induced subgraph");
    return static_cast<Vertex>(it - original.begin());
  }
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& subset) {
  if (!subset.empty() && subset.ids().back() >= g.order()) {
    throw GraphError("subset is not valid for this graph");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  const auto ids = subset.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (g.adjacent(ids[i], ids[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return {Graph::from_edges(ids.size(), std::span<const std::pair<Vertex, Vertex>>(edges)),
          std::vector<Vertex>(ids.begin(), ids.end())};
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> block;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      block.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

/// The empty graph counts as connected.
inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace ore

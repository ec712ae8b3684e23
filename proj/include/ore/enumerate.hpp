#pragma once

// Graph sources for exhaustive and randomized verification, and a brute-force
// canonical form for isomorphism dedupe of small graphs.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ore/graph.hpp"

namespace ore {

inline constexpr std::size_t kMaxEnumerationOrder = 6;
inline constexpr std::size_t kMaxCanonicalOrder = 8;

/// Vertex pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
inline std::vector<std::pair<Vertex, Vertex>> upper_triangle_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  return pairs;
}

/// Every labeled simple graph on n vertices, indexed by edge bitmask
/// (bit b set iff the b-th upper-triangle pair is an edge).
class LabeledGraphs {
 public:
  explicit LabeledGraphs(std::size_t n) : n_(n), pairs_(upper_triangle_pairs(n)) {
    if (n > kMaxEnumerationOrder) {
      throw GraphError("labeled enumeration is limited to n <= 6; supply graph6 input instead");
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << pairs_.size(); }

  Graph at(std::uint64_t mask) const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t b = 0; b < pairs_.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) edges.push_back(pairs_[b]);
    }
    return Graph::from_edges(n_, std::span<const std::pair<Vertex, Vertex>>(edges));
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const LabeledGraphs* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}
    Graph operator*() const { return owner_->at(mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const LabeledGraphs* owner_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  std::size_t n_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

inline LabeledGraphs all_labeled_graphs(std::size_t n) { return LabeledGraphs(n); }

/// Lexicographically smallest upper-triangle bit string ('0'/'1', graph6 pair
/// order) over all relabelings. Equal forms iff isomorphic.
inline std::string canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxCanonicalOrder) throw GraphError("canonical_form is limited to n <= 8");
  const auto pairs = upper_triangle_pairs(n);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::string best(pairs.size(), '2');
  std::string current(pairs.size(), '0');
  do {
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      current[b] = g.adjacent(perm[pairs[b].first], perm[pairs[b].second]) ? '1' : '0';
    }
    if (current < best) best = current;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// G(n, p): each pair is an edge independently with probability p.
template <typename Rng>
Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& pr : upper_triangle_pairs(n)) {
    if (coin(rng)) edges.push_back(pr);
  }
  return Graph::from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

/// G(n, p) conditioned on connectivity, by rejection.
template <typename Rng>
Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  if (n > 1 && p <= 0.0) throw GraphError("p must be positive for a connected sample");
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

}  // namespace ore

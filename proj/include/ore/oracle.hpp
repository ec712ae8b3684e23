#pragma once

// Exact exponential-time baselines for desk-scale verification. Each
// operation refuses inputs above its vertex budget.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ore/construct.hpp"
#include "ore/graph.hpp"

namespace ore {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  static constexpr std::size_t kHamiltonian = 12;
  static constexpr std::size_t kLongestPath = 12;
  static constexpr std::size_t kMinLeafTree = 10;
};

namespace detail {

inline void require_budget(const Graph& g, std::size_t limit, const char* what) {
  if (g.order() > limit) {
    throw BudgetExceeded(std::string(what) + " oracle is limited to n <= " + std::to_string(limit) +
                         ", got n = " + std::to_string(g.order()));
  }
}

// reach[mask * n + v]: some path visits exactly `mask` and ends at v. With
// `anchored`, paths must start at vertex 0.
inline std::vector<std::uint8_t> path_table(const Graph& g, bool anchored) {
  const std::size_t n = g.order();
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::uint8_t> reach(full * n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!anchored || v == 0) reach[(std::size_t{1} << v) * n + v] = 1;
  }
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (Vertex v = 0; v < n; ++v) {
      if (!reach[mask * n + v]) continue;
      for (Vertex w : g.neighbors(v)) {
        if (mask & (std::size_t{1} << w)) continue;
        reach[(mask | (std::size_t{1} << w)) * n + w] = 1;
      }
    }
  }
  return reach;
}

inline std::vector<Vertex> trace_back(const Graph& g, const std::vector<std::uint8_t>& reach,
                                      std::size_t mask, Vertex end) {
  const std::size_t n = g.order();
  std::vector<Vertex> seq{end};
  while (mask != (std::size_t{1} << end)) {
    const std::size_t prev = mask & ~(std::size_t{1} << end);
    for (Vertex u : g.neighbors(end)) {
      if ((prev & (std::size_t{1} << u)) && reach[prev * n + u]) {
        mask = prev;
        end = u;
        break;
      }
    }
    seq.push_back(end);
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace detail

/// Hamilton cycle by subset dynamic programming; n = 1 and n = 2 follow the
/// degenerate-cycle convention (a vertex, an edge).
inline std::optional<std::vector<Vertex>> hamiltonian_exact(const Graph& g) {
  detail::require_budget(g, OracleBudget::kHamiltonian, "hamiltonicity");
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  if (n == 2) {
    if (g.adjacent(0, 1)) return std::vector<Vertex>{0, 1};
    return std::nullopt;
  }
  const auto reach = detail::path_table(g, /*anchored=*/true);
  const std::size_t full = (std::size_t{1} << n) - 1;
  for (Vertex v : g.neighbors(0)) {
    if (reach[full * n + v]) return detail::trace_back(g, reach, full, v);
  }
  return std::nullopt;
}

/// A path of maximum order.
inline Path longest_path_exact(const Graph& g) {
  detail::require_budget(g, OracleBudget::kLongestPath, "longest path");
  const std::size_t n = g.order();
  if (n == 0) return {};
  const auto reach = detail::path_table(g, /*anchored=*/false);
  std::size_t best_mask = 1;
  Vertex best_end = 0;
  int best_bits = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    const int bits = std::popcount(mask);
    if (bits <= best_bits) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (reach[mask * n + v]) {
        best_mask = mask;
        best_end = v;
        best_bits = bits;
        break;
      }
    }
  }
  return Path{detail::trace_back(g, reach, best_mask, best_end)};
}

struct MinLeafTree {
  std::size_t leaf_count = 0;
  std::vector<Edge> edges;
};

namespace detail {

// Branch and bound over edge inclusion/exclusion. A vertex whose tree degree
// plus undecided incident edges is at most one must end as a leaf, which
// bounds the leaf count from below.
class MinLeafSearch {
 public:
  explicit MinLeafSearch(const Graph& g) : n_(g.order()), edges_(g.edges()) {
    avail_deg_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) avail_deg_[v] = g.degree(v);
    std::size_t pendant = 0;
    for (Vertex v = 0; v < n_; ++v) pendant += g.degree(v) == 1 ? 1 : 0;
    floor_ = std::max<std::size_t>(2, pendant);
  }

  MinLeafTree run() {
    std::vector<Vertex> comp(n_);
    for (Vertex v = 0; v < n_; ++v) comp[v] = v;
    recurse(0, comp);
    return {best_, best_edges_};
  }

 private:
  std::size_t forced_leaves() const {
    std::size_t forced = 0;
    for (Vertex v = 0; v < n_; ++v) forced += avail_deg_[v] <= 1 ? 1 : 0;
    return forced;
  }

  // Tree edges plus undecided edges from index `next` still span the graph.
  bool still_connected(std::size_t next) const {
    std::vector<Vertex> parent(n_);
    for (Vertex v = 0; v < n_; ++v) parent[v] = v;
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::size_t joins = 0;
    auto join = [&](const Edge& e) {
      const Vertex a = find(e.u);
      const Vertex b = find(e.v);
      if (a != b) {
        parent[a] = b;
        ++joins;
      }
    };
    for (const Edge& e : chosen_) join(e);
    for (std::size_t i = next; i < edges_.size(); ++i) join(edges_[i]);
    return joins + 1 == n_;
  }

  void recurse(std::size_t next, std::vector<Vertex>& comp) {
    if (best_ == floor_) return;
    if (chosen_.size() + 1 == n_) {
      const std::size_t leaves = count_leaves(n_, chosen_);
      if (leaves < best_) {
        best_ = leaves;
        best_edges_ = chosen_;
      }
      return;
    }
    if (next == edges_.size()) return;
    if (std::max(forced_leaves(), std::size_t{2}) >= best_) return;

    const Edge e = edges_[next];
    const Vertex cu = comp[e.u];
    const Vertex cv = comp[e.v];
    if (cu != cv) {
      std::vector<Vertex> saved = comp;
      for (Vertex& c : comp) {
        if (c == cv) c = cu;
      }
      chosen_.push_back(e);
      recurse(next + 1, comp);
      chosen_.pop_back();
      comp = std::move(saved);
    }
    --avail_deg_[e.u];
    --avail_deg_[e.v];
    if (still_connected(next + 1)) recurse(next + 1, comp);
    ++avail_deg_[e.u];
    ++avail_deg_[e.v];
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<Edge> chosen_;
  std::vector<std::size_t> avail_deg_;
  std::size_t floor_ = 2;
  std::size_t best_ = std::numeric_limits<std::size_t>::max();
  std::vector<Edge> best_edges_;
};

}  // namespace detail

/// Minimum leaf count over all spanning trees with one optimal tree; empty
/// for disconnected graphs. A single vertex has 0 leaves.
inline std::optional<MinLeafTree> min_leaf_spanning_tree_exact(const Graph& g) {
  detail::require_budget(g, OracleBudget::kMinLeafTree, "minimum-leaf spanning tree");
  const std::size_t n = g.order();
  if (n == 0) return MinLeafTree{};
  if (!is_connected(g)) return std::nullopt;
  if (n == 1) return MinLeafTree{};
  const Path longest = longest_path_exact(g);
  if (longest.size() == n) {
    MinLeafTree t;
    for (std::size_t i = 1; i < n; ++i) t.edges.emplace_back(longest.vertices[i - 1], longest.vertices[i]);
    std::sort(t.edges.begin(), t.edges.end());
    t.leaf_count = 2;
    return t;
  }
  return detail::MinLeafSearch(g).run();
}

}  // namespace ore

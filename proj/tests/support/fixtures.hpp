#pragma once

// Named graphs and brute-force reference routines for tests. Nothing here
// calls into the engine or the oracle module.

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ore/graph.hpp"

namespace ore::testing {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

inline Graph make(std::size_t n, const Pairs& edges) {
  return Graph::from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

inline Graph cycle_graph(std::size_t n) {
  Pairs e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return make(n, e);
}

inline Graph path_graph(std::size_t n) {
  Pairs e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make(n, e);
}

inline Graph complete_graph(std::size_t n) {
  Pairs e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make(n, e);
}

/// K_{1,leaves} with center 0.
inline Graph star_graph(std::size_t leaves) {
  Pairs e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make(leaves + 1, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Pairs e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, static_cast<Vertex>(a + j));
  return make(a + b, e);
}

/// Outer 5-cycle 0..4, spokes i - (i+5), inner pentagram 5..9.
inline Graph petersen_graph() {
  Pairs e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return make(10, e);
}

inline Graph two_k2() { return make(4, {{0, 1}, {2, 3}}); }

/// Isomorphism by trying every relabeling.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool same = true;
    for (Vertex u = 0; u < a.order() && same; ++u)
      for (Vertex v = u + 1; v < a.order() && same; ++v)
        same = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Hamiltonicity by trying every vertex order (vertex 0 fixed first), with
/// the order-1 and order-2 cycle conventions.
inline bool brute_hamiltonian(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  if (n == 1) return true;
  if (n == 2) return g.adjacent(0, 1);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = g.adjacent(perm[i], perm[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

/// Longest path order by depth-first search from every vertex.
inline std::size_t brute_longest_path_order(const Graph& g) {
  std::size_t best = 0;
  std::vector<bool> on(g.order(), false);
  auto dfs = [&](auto&& self, Vertex v, std::size_t len) -> void {
    best = std::max(best, len);
    for (Vertex w : g.neighbors(v)) {
      if (on[w]) continue;
      on[w] = true;
      self(self, w, len + 1);
      on[w] = false;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    on[s] = true;
    dfs(dfs, s, 1);
    on[s] = false;
  }
  return best;
}

/// Minimum leaf count over all (n-1)-edge subsets that form spanning trees.
/// Empty for disconnected graphs. Intended for n <= 7.
inline std::optional<std::size_t> brute_min_leaf(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  if (m + 1 < n) return std::nullopt;
  std::optional<std::size_t> best;
  std::vector<bool> pick(m, false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(n - 1), pick.end(), true);
  do {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    std::vector<std::size_t> deg(n, 0);
    bool acyclic = true;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!pick[i]) continue;
      const Vertex a = find(edges[i].u);
      const Vertex b = find(edges[i].v);
      if (a == b) acyclic = false;
      parent[a] = b;
      ++deg[edges[i].u];
      ++deg[edges[i].v];
    }
    if (!acyclic) continue;
    const auto leaves = static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 1U));
    if (!best || leaves < *best) best = leaves;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

/// Vertex ids remapped by `perm` (new id of v is perm[v]).
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Pairs e;
  for (const Edge& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
  return make(g.order(), e);
}

}  // namespace ore::testing

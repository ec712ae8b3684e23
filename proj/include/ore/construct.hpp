#pragma once

// Rotation-extension engine: grows maximal paths, closes them into cycles via
// endpoint edges or crossing chords, absorbs outside vertices, and when it
// stalls extracts an induced pattern whose nonadjacent pair falls below the
// degree-sum threshold.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ore/conditions.hpp"
#include "ore/graph.hpp"
#include "ore/patterns.hpp"

namespace ore {

/// Thrown when a proof step produces something the argument rules out.
class InternalInvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simple path v_1 ... v_p, oriented from front to back.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

struct HamiltonCycleCert {
  /// Cyclic order of all n vertices.
  std::vector<Vertex> cycle;
};

struct KTreeCert {
  std::vector<Edge> edges;
  std::size_t leaf_count = 0;
};

enum class WitnessKind : std::uint8_t { PatternPair, DisconnectedPattern, PreconditionFailure };

constexpr std::string_view witness_kind_label(WitnessKind k) {
  switch (k) {
    case WitnessKind::PatternPair: return "PATTERN_PAIR";
    case WitnessKind::DisconnectedPattern: return "DISCONNECTED_PATTERN";
    case WitnessKind::PreconditionFailure: return "PRECONDITION";
  }
  return "?";
}

/// Machine-checkable refutation of the degree-sum hypothesis.
struct ViolationWitness {
  WitnessKind kind = WitnessKind::PatternPair;
  VertexSubset subset;  // four vertices for the pattern kinds, empty otherwise
  std::optional<PatternId> pattern;
  std::optional<Edge> pair;
  std::int64_t degree_sum = 0;
  std::int64_t threshold = 0;
  std::optional<Precondition> label;
};

/// Result for n <= 3, decided exhaustively.
struct SmallVerdict {
  std::optional<HamiltonCycleCert> cycle;
};

using HamiltonResult = std::variant<HamiltonCycleCert, ViolationWitness, SmallVerdict>;
using TreeResult = std::variant<KTreeCert, ViolationWitness>;

struct ClosedCycle {
  std::vector<Vertex> cycle;
};
struct LongerPath {
  Path path;
};
struct Stuck {};
using RotationOutcome = std::variant<ClosedCycle, LongerPath, Stuck>;

/// Work counters for the engine.
struct EngineStats {
  std::size_t iterations = 0;
  std::size_t adjacency_probes = 0;
};

// ---------------------------------------------------------------------------
// Validation

inline bool is_path(const Graph& g, const Path& p) {
  std::vector<bool> seen(g.order(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

/// Neither endpoint has a neighbor off the path.
inline bool is_maximal_path(const Graph& g, const Path& p) {
  if (p.size() == 0 || !is_path(g, p)) return false;
  std::vector<bool> on(g.order(), false);
  for (Vertex v : p.vertices) on[v] = true;
  for (Vertex end : {p.front(), p.back()}) {
    for (Vertex w : g.neighbors(end)) {
      if (!on[w]) return false;
    }
  }
  return true;
}

/// Empty optional when the certificate is valid, else the reason.
inline std::optional<std::string> validate_cycle(const Graph& g, const HamiltonCycleCert& cert) {
  const std::size_t n = g.order();
  if (n == 0) return "the empty graph has no cycle";
  if (cert.cycle.size() != n) return "cycle does not cover every vertex";
  std::vector<bool> seen(n, false);
  for (Vertex v : cert.cycle) {
    if (v >= n || seen[v]) return "cycle repeats a vertex or uses an invalid id";
    seen[v] = true;
  }
  if (n == 1) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = cert.cycle[i];
    const Vertex b = cert.cycle[(i + 1) % n];
    if (!g.adjacent(a, b)) {
      return "non-edge " + std::to_string(a) + "-" + std::to_string(b) + " on cycle";
    }
  }
  return std::nullopt;
}

inline std::size_t count_leaves(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 1U));
}

inline std::optional<std::string> validate_tree(const Graph& g, const KTreeCert& cert,
                                                std::optional<int> k = std::nullopt) {
  const std::size_t n = g.order();
  if (n == 0) {
    if (!cert.edges.empty() || cert.leaf_count != 0) return "empty graph must give empty tree";
    return std::nullopt;
  }
  if (cert.edges.size() != n - 1) return "tree must have n - 1 edges";
  std::vector<Vertex> parent(n);
  for (Vertex v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : cert.edges) {
    if (e.v >= n || e.u == e.v || !g.adjacent(e.u, e.v)) return "tree edge not in graph";
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) return "tree contains a cycle";
    parent[a] = b;
  }
  if (count_leaves(n, cert.edges) != cert.leaf_count) return "leaf count mismatch";
  if (k && cert.leaf_count > static_cast<std::size_t>(*k)) return "tree has more than k leaves";
  return std::nullopt;
}

inline std::optional<std::string> validate_witness(const Graph& g, const ViolationWitness& w) {
  if (w.kind == WitnessKind::PreconditionFailure) {
    if (!w.label) return "precondition witness without label";
    switch (*w.label) {
      case Precondition::TooFewVertices:
        if (g.order() >= 4) return "graph has at least four vertices";
        break;
      case Precondition::NoDegreeTwoVertex:
        if (g.max_degree() >= 2) return "graph has a vertex of degree two";
        break;
      case Precondition::Disconnected:
        if (is_connected(g)) return "graph is connected";
        break;
    }
    return std::nullopt;
  }
  if (w.subset.size() != 4) return "pattern witness needs four vertices";
  if (w.subset.ids().back() >= g.order()) return "subset out of range";
  if (!w.pattern || !w.pair) return "pattern witness missing pattern or pair";
  const auto cls = classify_quadruple(induced_subgraph(g, w.subset).graph);
  if (cls != w.pattern) return "subset does not induce the claimed pattern";
  const Edge e = *w.pair;
  if (!w.subset.contains(e.u) || !w.subset.contains(e.v) || e.u == e.v) {
    return "pair not inside subset";
  }
  if (g.adjacent(e.u, e.v)) return "pair is adjacent";
  if (w.degree_sum != static_cast<std::int64_t>(g.degree(e.u) + g.degree(e.v))) {
    return "degree sum mismatch";
  }
  if (w.degree_sum >= w.threshold) return "degree sum meets the threshold";
  if (w.kind == WitnessKind::DisconnectedPattern && is_connected(g)) {
    return "disconnected-pattern witness on a connected graph";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Engine steps

/// Extends both ends of `path` greedily (smallest free neighbor first) until
/// neither endpoint has a neighbor off the path.
inline Path extend_to_maximal(const Graph& g, Path path, EngineStats* stats = nullptr) {
  std::vector<bool> on(g.order(), false);
  for (Vertex v : path.vertices) on[v] = true;
  std::deque<Vertex> seq(path.vertices.begin(), path.vertices.end());
  auto free_neighbor = [&](Vertex end) -> std::optional<Vertex> {
    for (Vertex w : g.neighbors(end)) {
      if (stats) ++stats->adjacency_probes;
      if (!on[w]) return w;
    }
    return std::nullopt;
  };
  while (auto w = free_neighbor(seq.back())) {
    on[*w] = true;
    seq.push_back(*w);
  }
  while (auto w = free_neighbor(seq.front())) {
    on[*w] = true;
    seq.push_front(*w);
  }
  return Path{{seq.begin(), seq.end()}};
}

inline Path grow_maximal_path(const Graph& g, Vertex start, EngineStats* stats = nullptr) {
  if (start >= g.order()) throw GraphError("start vertex out of range");
  return extend_to_maximal(g, Path{{start}}, stats);
}

/// Opens the cycle at the lexicographically smallest edge (y1, y2) with y1 on
/// the cycle and y2 off it: the result is the cycle minus one cycle edge at y1,
/// plus y1y2. Empty when no such edge exists.
inline std::optional<Path> absorb_into_cycle(const Graph& g, const std::vector<Vertex>& cycle,
                                             EngineStats* stats = nullptr) {
  std::vector<bool> on(g.order(), false);
  for (Vertex v : cycle) on[v] = true;
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex y1 : sorted) {
    for (Vertex y2 : g.neighbors(y1)) {
      if (stats) ++stats->adjacency_probes;
      if (on[y2]) continue;
      const auto at = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), y1) - cycle.begin());
      Path out;
      out.vertices.reserve(cycle.size() + 1);
      for (std::size_t s = 1; s < cycle.size(); ++s) out.vertices.push_back(cycle[(at + s) % cycle.size()]);
      out.vertices.push_back(y1);
      out.vertices.push_back(y2);
      return out;
    }
  }
  return std::nullopt;
}

namespace detail {

inline RotationOutcome close_or_absorb(const Graph& g, std::vector<Vertex> cycle, EngineStats* stats) {
  if (cycle.size() == g.order()) return ClosedCycle{std::move(cycle)};
  if (auto longer = absorb_into_cycle(g, cycle, stats)) return LongerPath{std::move(*longer)};
  return ClosedCycle{std::move(cycle)};
}

/// Smallest 0-based j >= 2 with x_0 ~ x_j and x_{j-1} ~ x_{p-1}.
inline std::optional<std::size_t> crossing_chord(const Graph& g, const Path& p, EngineStats* stats) {
  const auto& x = p.vertices;
  for (std::size_t j = 2; j + 1 < x.size(); ++j) {
    if (stats) stats->adjacency_probes += 2;
    if (g.adjacent(x.front(), x[j]) && g.adjacent(x[j - 1], x.back())) return j;
  }
  return std::nullopt;
}

}  // namespace detail

/// One rotation step on a maximal path. An endpoint edge (or a path of one or
/// two vertices, which is a degenerate cycle) closes directly; otherwise the
/// smallest crossing chord x_1x_i, x_{i-1}x_p gives the cycle
/// x_1 ... x_{i-1} x_p x_{p-1} ... x_i. A closed cycle that misses some
/// vertex absorbs an outside neighbor and comes back as a LongerPath.
inline RotationOutcome try_rotate_or_close(const Graph& g, const Path& p, EngineStats* stats = nullptr) {
  const auto& x = p.vertices;
  if (x.empty()) throw GraphError("empty path");
  if (stats) ++stats->adjacency_probes;
  if (x.size() <= 2 || g.adjacent(x.front(), x.back())) {
    return detail::close_or_absorb(g, x, stats);
  }
  const auto j = detail::crossing_chord(g, p, stats);
  if (!j) return Stuck{};
  std::vector<Vertex> cycle(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(*j));
  cycle.insert(cycle.end(), x.rbegin(), x.rend() - static_cast<std::ptrdiff_t>(*j));
  return detail::close_or_absorb(g, std::move(cycle), stats);
}

struct EngineOutcome {
  /// Either a cycle (when `closed`) or the final stuck maximal path.
  std::vector<Vertex> sequence;
  bool closed = false;
};

/// Grow from vertex 0 and rotate until a closed cycle or a stuck path.
/// Every non-stuck round lengthens the path, so at most n rounds run.
inline EngineOutcome run_rotation_engine(const Graph& g, EngineStats* stats = nullptr) {
  Path p = grow_maximal_path(g, 0, stats);
  for (;;) {
    if (stats) ++stats->iterations;
    auto step = try_rotate_or_close(g, p, stats);
    if (auto* closed = std::get_if<ClosedCycle>(&step)) return {std::move(closed->cycle), true};
    if (auto* longer = std::get_if<LongerPath>(&step)) {
      if (longer->path.size() <= p.size()) throw InternalInvariantBreach("absorption did not lengthen the path");
      p = extend_to_maximal(g, std::move(longer->path), stats);
      continue;
    }
    return {std::move(p.vertices), false};
  }
}

// ---------------------------------------------------------------------------
// Witnesses

namespace detail {

inline ViolationWitness pattern_witness(const Graph& g, WitnessKind kind, std::vector<Vertex> quad,
                                        Edge pair, std::int64_t threshold) {
  ViolationWitness w;
  w.kind = kind;
  w.subset = VertexSubset(std::move(quad), g.order());
  w.pattern = classify_quadruple(induced_subgraph(g, w.subset).graph);
  w.pair = pair;
  w.degree_sum = static_cast<std::int64_t>(g.degree(pair.u) + g.degree(pair.v));
  w.threshold = threshold;
  return w;
}

inline ViolationWitness precondition_witness(Precondition label, std::int64_t threshold) {
  ViolationWitness w;
  w.kind = WitnessKind::PreconditionFailure;
  w.label = label;
  w.threshold = threshold;
  return w;
}

inline void require_pattern(const ViolationWitness& w, PatternSet allowed, const char* where) {
  if (!w.pattern || !allowed.contains(*w.pattern)) {
    throw InternalInvariantBreach(std::string("unexpected induced subgraph in ") + where);
  }
  if (w.degree_sum >= w.threshold) {
    throw InternalInvariantBreach(std::string("witness pair meets the threshold in ") + where);
  }
}

}  // namespace detail

/// Refutes the hypothesis from a stuck maximal path x_1 ... x_p (no endpoint
/// edge, no crossing chord, p >= 3, G connected).
///
/// With d(x_1) >= 2 (reversing P if only x_p qualifies) and i the smallest
/// index >= 3 with x_1 ~ x_i, the set {x_1, x_{i-1}, x_i, x_p} induces
/// K_{1,2}∪K_1, K_{1,3}, K_3∪K_1 or K_{1,3}+e, and since the predecessors of
/// N(x_1) avoid N(x_p) and x_p, d(x_1) + d(x_p) <= p - 1. With both endpoint
/// degrees 1 the set {x_1, x_2, x_3, x_p} gives K_{1,2}∪K_1 (p >= 5) or P_4
/// (p = 4); for p = 3 an outside neighbor y of x_2 gives K_{1,3}.
inline ViolationWitness extract_witness(const Graph& g, Path p, std::int64_t threshold) {
  if (!is_maximal_path(g, p)) throw GraphError("extract_witness needs a maximal path");
  if (p.size() < 3) throw GraphError("extract_witness needs at least three path vertices");
  if (g.adjacent(p.front(), p.back())) throw GraphError("path endpoints are adjacent");
  if (detail::crossing_chord(g, p, nullptr)) throw GraphError("path has a crossing chord");
  if (!is_connected(g)) throw GraphError("extract_witness needs a connected graph");

  if (g.degree(p.front()) < 2 && g.degree(p.back()) >= 2) {
    std::reverse(p.vertices.begin(), p.vertices.end());
  }
  const auto& x = p.vertices;
  const Edge ends(x.front(), x.back());

  if (g.degree(x.front()) >= 2) {
    std::size_t j = 2;
    while (j + 1 < x.size() && !g.adjacent(x.front(), x[j])) ++j;
    if (j + 1 >= x.size()) throw InternalInvariantBreach("no chord from x_1 despite degree >= 2");
    auto w = detail::pattern_witness(g, WitnessKind::PatternPair, {x.front(), x[j - 1], x[j], x.back()},
                                     ends, threshold);
    detail::require_pattern(w,
                            {PatternId::K12_UNION_K1, PatternId::K13, PatternId::K3_UNION_K1,
                             PatternId::K13_PLUS_E},
                            "the chord case");
    return w;
  }

  if (x.size() >= 4) {
    auto w = detail::pattern_witness(g, WitnessKind::PatternPair, {x[0], x[1], x[2], x.back()}, ends,
                                     threshold);
    detail::require_pattern(
        w, {x.size() == 4 ? PatternId::P4 : PatternId::K12_UNION_K1}, "the degree-one case");
    return w;
  }

  // p == 3: the path cannot reach the rest of the graph except through x_2.
  std::optional<Vertex> outside;
  for (Vertex y : g.neighbors(x[1])) {
    if (y != x[0] && y != x[2]) {
      outside = y;
      break;
    }
  }
  if (!outside) throw InternalInvariantBreach("no outside neighbor of the middle vertex");
  auto w = detail::pattern_witness(g, WitnessKind::PatternPair, {x[0], x[1], x[2], *outside}, ends,
                                   threshold);
  detail::require_pattern(w, {PatternId::K13}, "the three-vertex case");
  return w;
}

// ---------------------------------------------------------------------------
// Constructions

namespace detail {

inline std::optional<HamiltonCycleCert> small_cycle(const Graph& g) {
  switch (g.order()) {
    case 1: return HamiltonCycleCert{{0}};
    case 2:
      if (g.adjacent(0, 1)) return HamiltonCycleCert{{0, 1}};
      return std::nullopt;
    case 3:
      if (g.edge_count() == 3) return HamiltonCycleCert{{0, 1, 2}};
      return std::nullopt;
    default: return std::nullopt;
  }
}

}  // namespace detail

/// Hamilton cycle or a witness that the degree-sum hypothesis fails.
/// Graphs with n <= 3 get a SmallVerdict decided directly.
inline HamiltonResult find_hamilton_cycle(const Graph& g, EngineStats* stats = nullptr) {
  const std::size_t n = g.order();
  const auto threshold = static_cast<std::int64_t>(n);
  if (n <= 3) return SmallVerdict{detail::small_cycle(g)};

  const auto components = connected_components(g);
  if (components.size() > 1) {
    Vertex v = 0;
    while (v < n && g.degree(v) < 2) ++v;
    if (v == n) return detail::precondition_witness(Precondition::NoDegreeTwoVertex, threshold);
    const auto nb = g.neighbors(v);
    const Vertex x = nb[0];
    const Vertex y = nb[1];
    std::vector<bool> in_component(n, false);
    for (const auto& block : components) {
      if (std::binary_search(block.begin(), block.end(), v)) {
        for (Vertex u : block) in_component[u] = true;
      }
    }
    Vertex z = 0;
    while (in_component[z]) ++z;
    auto w = detail::pattern_witness(g, WitnessKind::DisconnectedPattern, {x, y, v, z}, Edge(v, z), threshold);
    detail::require_pattern(w, {PatternId::K12_UNION_K1, PatternId::K3_UNION_K1}, "the disconnected case");
    return w;
  }

  auto outcome = run_rotation_engine(g, stats);
  if (outcome.closed) {
    if (outcome.sequence.size() != n) throw InternalInvariantBreach("closed cycle on a connected graph is not spanning");
    return HamiltonCycleCert{std::move(outcome.sequence)};
  }
  return extract_witness(g, Path{std::move(outcome.sequence)}, threshold);
}

/// Spanning tree containing every edge of `p`; off-path vertices attach
/// breadth-first from the path. At most n - p + 2 leaves.
inline KTreeCert path_to_spanning_tree(const Graph& g, const Path& p) {
  if (!is_connected(g)) throw GraphError("path_to_spanning_tree needs a connected graph");
  if (p.size() == 0 || !is_path(g, p)) throw GraphError("not a path in the graph");
  KTreeCert tree;
  std::vector<bool> in_tree(g.order(), false);
  std::deque<Vertex> queue;
  for (std::size_t i = 0; i < p.size(); ++i) {
    in_tree[p.vertices[i]] = true;
    queue.push_back(p.vertices[i]);
    if (i > 0) tree.edges.emplace_back(p.vertices[i - 1], p.vertices[i]);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (in_tree[w]) continue;
      in_tree[w] = true;
      tree.edges.emplace_back(u, w);
      queue.push_back(w);
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  tree.leaf_count = count_leaves(g.order(), tree.edges);
  return tree;
}

/// Spanning tree with at most k leaves, or a witness that the degree-sum
/// hypothesis with threshold n - k + 1 fails.
inline TreeResult build_k_ended_tree(const Graph& g, int k, EngineStats* stats = nullptr) {
  const std::int64_t threshold = detail::tree_threshold(g, k);
  const std::size_t n = g.order();
  if (n == 0) return KTreeCert{};
  if (!is_connected(g)) return detail::precondition_witness(Precondition::Disconnected, threshold);

  auto outcome = run_rotation_engine(g, stats);
  Path p{std::move(outcome.sequence)};
  if (outcome.closed && p.size() != n) {
    throw InternalInvariantBreach("closed cycle on a connected graph is not spanning");
  }
  if (static_cast<std::int64_t>(p.size()) >= static_cast<std::int64_t>(n) - k + 2) {
    return path_to_spanning_tree(g, p);
  }
  return extract_witness(g, std::move(p), threshold);
}

}  // namespace ore

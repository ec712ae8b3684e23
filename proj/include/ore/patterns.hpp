#pragma once

// The five 4-vertex induced patterns that scope the degree-sum conditions,
// and enumeration of their occurrences in a graph.

#include <algorithm>
#include <array>
#include <initializer_list>
#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "ore/graph.hpp"

namespace ore {

enum class PatternId : std::uint8_t {
  K12_UNION_K1,  // path on three vertices plus an isolated vertex
  K3_UNION_K1,   // triangle plus an isolated vertex
  K13,           // claw
  K13_PLUS_E,    // claw plus one leaf-leaf edge (the "paw")
  P4,
};

inline constexpr std::array<PatternId, 5> kAllPatterns = {
    PatternId::K12_UNION_K1, PatternId::K3_UNION_K1, PatternId::K13, PatternId::K13_PLUS_E,
    PatternId::P4};

enum class PatternFamily : std::uint8_t {
  Five,       // K_{1,2}+K_1, K_3+K_1, K_{1,3}, K_{1,3}+e, P_4
  Corollary,  // K_{1,2}+K_1, (K_{1,2}+K_1)+e, K_{1,3}+e
};

/// Display name, e.g. "K_{1,3}+e".
constexpr std::string_view pattern_name(PatternId id) {
  switch (id) {
    case PatternId::K12_UNION_K1: return "K_{1,2}∪K_1";
    case PatternId::K3_UNION_K1: return "K_3∪K_1";
    case PatternId::K13: return "K_{1,3}";
    case PatternId::K13_PLUS_E: return "K_{1,3}+e";
    case PatternId::P4: return "P_4";
  }
  return "?";
}

/// Identifier-style token, e.g. "K13_PLUS_E".
constexpr std::string_view pattern_token(PatternId id) {
  switch (id) {
    case PatternId::K12_UNION_K1: return "K12_UNION_K1";
    case PatternId::K3_UNION_K1: return "K3_UNION_K1";
    case PatternId::K13: return "K13";
    case PatternId::K13_PLUS_E: return "K13_PLUS_E";
    case PatternId::P4: return "P4";
  }
  return "?";
}

constexpr std::string_view family_name(PatternFamily f) {
  return f == PatternFamily::Five ? "five" : "corollary";
}

/// Canonically labeled copy of each pattern.
inline Graph reference_graph(PatternId id) {
  switch (id) {
    case PatternId::K12_UNION_K1: return Graph::from_edges(4, {{0, 1}, {1, 2}});
    case PatternId::K3_UNION_K1: return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    case PatternId::K13: return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    case PatternId::K13_PLUS_E: return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}});
    case PatternId::P4: return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  }
  throw GraphError("unknown pattern id");
}

namespace detail {

// Pair order used for the 6-bit encoding of a 4-vertex graph.
inline constexpr std::array<std::pair<int, int>, 6> kQuadPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Each of the five target degree sequences pins down one graph up to
// isomorphism; every other 4-vertex graph maps to none.
inline std::optional<PatternId> classify_degrees(std::array<int, 4> deg) {
  std::sort(deg.begin(), deg.end());
  using D = std::array<int, 4>;
  if (deg == D{0, 1, 1, 2}) return PatternId::K12_UNION_K1;
  if (deg == D{0, 2, 2, 2}) return PatternId::K3_UNION_K1;
  if (deg == D{1, 1, 1, 3}) return PatternId::K13;
  if (deg == D{1, 1, 2, 2}) return PatternId::P4;
  if (deg == D{1, 2, 2, 3}) return PatternId::K13_PLUS_E;
  return std::nullopt;
}

inline std::optional<PatternId> classify_mask(unsigned mask) {
  std::array<int, 4> deg{};
  for (std::size_t b = 0; b < kQuadPairs.size(); ++b) {
    if (mask & (1U << b)) {
      ++deg[kQuadPairs[b].first];
      ++deg[kQuadPairs[b].second];
    }
  }
  return classify_degrees(deg);
}

inline const std::array<std::optional<PatternId>, 64>& mask_table() {
  static const auto table = [] {
    std::array<std::optional<PatternId>, 64> t{};
    for (unsigned m = 0; m < 64; ++m) t[m] = classify_mask(m);
    return t;
  }();
  return table;
}

}  // namespace detail

/// Classifies a 4-vertex graph; throws GraphError for any other order.
inline std::optional<PatternId> classify_quadruple(const Graph& h) {
  if (h.order() != 4) throw GraphError("classify_quadruple needs exactly 4 vertices");
  std::array<int, 4> deg{};
  for (Vertex v = 0; v < 4; ++v) deg[v] = static_cast<int>(h.degree(v));
  return detail::classify_degrees(deg);
}

/// Set of pattern ids, indexed by the enum value.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<PatternId> ids) {
    for (PatternId id : ids) insert(id);
  }
  void insert(PatternId id) { bits_.set(static_cast<std::size_t>(id)); }
  bool contains(PatternId id) const { return bits_.test(static_cast<std::size_t>(id)); }
  std::size_t size() const { return bits_.count(); }
  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::bitset<5> bits_;
};

/// Patterns obtained from `base` by adding one edge between nonadjacent vertices.
inline PatternSet plus_edge_expansions(PatternId base) {
  const Graph g = reference_graph(base);
  PatternSet out;
  for (auto [a, b] : detail::kQuadPairs) {
    if (g.adjacent(a, b)) continue;
    auto edges = g.edges();
    edges.emplace_back(a, b);
    if (auto id = classify_quadruple(Graph::from_edges(4, std::span<const Edge>(edges)))) {
      out.insert(*id);
    }
  }
  return out;
}

inline PatternSet family_members(PatternFamily family) {
  if (family == PatternFamily::Five) {
    PatternSet all;
    for (PatternId id : kAllPatterns) all.insert(id);
    return all;
  }
  PatternSet out = plus_edge_expansions(PatternId::K12_UNION_K1);
  out.insert(PatternId::K12_UNION_K1);
  out.insert(PatternId::K13_PLUS_E);
  return out;
}

struct PatternOccurrence {
  VertexSubset subset;
  PatternId pattern{};
  /// Nonadjacent pairs inside the subset, sorted.
  std::vector<Edge> nonadjacent_pairs;

  friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

/// Calls fn(occurrence) for each 4-subset (lexicographic order) that induces a
/// pattern in the family.
template <typename Fn>
void for_each_occurrence(const Graph& g, PatternFamily family, Fn&& fn) {
  const std::size_t n = g.order();
  if (n < 4) return;
  const PatternSet members = family_members(family);
  const auto& table = detail::mask_table();
  std::array<Vertex, 4> q{};
  for (q[0] = 0; q[0] < n; ++q[0]) {
    for (q[1] = q[0] + 1; q[1] < n; ++q[1]) {
      const unsigned b01 = g.adjacent(q[0], q[1]) ? 1U : 0U;
      for (q[2] = q[1] + 1; q[2] < n; ++q[2]) {
        const unsigned b012 = b01 | (g.adjacent(q[0], q[2]) ? 2U : 0U) |
                              (g.adjacent(q[1], q[2]) ? 8U : 0U);
        for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
          const unsigned mask = b012 | (g.adjacent(q[0], q[3]) ? 4U : 0U) |
                                (g.adjacent(q[1], q[3]) ? 16U : 0U) |
                                (g.adjacent(q[2], q[3]) ? 32U : 0U);
          const auto id = table[mask];
          if (!id || !members.contains(*id)) continue;
          PatternOccurrence occ;
          occ.subset = VertexSubset({q.begin(), q.end()}, n);
          occ.pattern = *id;
          for (std::size_t b = 0; b < detail::kQuadPairs.size(); ++b) {
            if (!(mask & (1U << b))) {
              occ.nonadjacent_pairs.emplace_back(q[detail::kQuadPairs[b].first],
                                                 q[detail::kQuadPairs[b].second]);
            }
          }
          std::sort(occ.nonadjacent_pairs.begin(), occ.nonadjacent_pairs.end());
          fn(std::move(occ));
        }
      }
    }
  }
}

inline std::vector<PatternOccurrence> pattern_occurrences(const Graph& g, PatternFamily family) {
  std::vector<PatternOccurrence> out;
  for_each_occurrence(g, family, [&](PatternOccurrence occ) { out.push_back(std::move(occ)); });
  return out;
}

struct ConstrainedPair {
  Edge pair;
  /// Lexicographically first occurrence containing the pair.
  PatternOccurrence first;

  friend bool operator==(const ConstrainedPair&, const ConstrainedPair&) = default;
};

/// Nonadjacent pairs that sit together in some induced pattern, sorted by pair.
inline std::vector<ConstrainedPair> constrained_pairs(const Graph& g, PatternFamily family) {
  std::map<Edge, PatternOccurrence> first;
  for_each_occurrence(g, family, [&](PatternOccurrence occ) {
    for (const Edge& e : occ.nonadjacent_pairs) first.try_emplace(e, occ);
  });
  std::vector<ConstrainedPair> out;
  out.reserve(first.size());
  for (auto& [pair, occ] : first) out.push_back({pair, std::move(occ)});
  return out;
}

}  // namespace ore

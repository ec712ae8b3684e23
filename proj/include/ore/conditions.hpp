#pragma once

// Degree-sum hypothesis checkers: the pattern-restricted conditions for Hamilton
// cycles and k-ended spanning trees, plus the classical Dirac / Ore baselines.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ore/graph.hpp"
#include "ore/patterns.hpp"

namespace ore {

enum class Precondition : std::uint8_t { TooFewVertices, NoDegreeTwoVertex, Disconnected };

constexpr std::string_view precondition_label(Precondition p) {
  switch (p) {
    case Precondition::TooFewVertices: return "TOO_FEW_VERTICES";
    case Precondition::NoDegreeTwoVertex: return "NO_DEGREE_TWO_VERTEX";
    case Precondition::Disconnected: return "DISCONNECTED";
  }
  return "?";
}

/// A nonadjacent pair whose degree sum is below the threshold.
struct Violation {
  Edge pair;
  std::int64_t degree_sum = 0;
  /// First induced pattern containing the pair; empty for classical checks.
  std::optional<PatternOccurrence> occurrence;
};

struct ConditionReport {
  bool satisfied = false;
  /// n for Hamilton conditions, n - k + 1 for tree conditions.
  std::int64_t threshold = 0;
  /// No constrained pair existed at all.
  bool vacuous = false;
  std::vector<Violation> violations;
  /// Vertices with 2 d(v) < n; only the Dirac check fills this.
  std::vector<Vertex> degree_violations;
  std::vector<Precondition> precondition_failures;

  std::vector<Edge> violation_pairs() const {
    std::vector<Edge> out;
    out.reserve(violations.size());
    for (const auto& v : violations) out.push_back(v.pair);
    return out;
  }
};

namespace detail {

inline std::int64_t degree_sum(const Graph& g, Edge e) {
  return static_cast<std::int64_t>(g.degree(e.u) + g.degree(e.v));
}

inline void finalize(ConditionReport& r) {
  r.satisfied = r.violations.empty() && r.degree_violations.empty() &&
                r.precondition_failures.empty();
}

inline ConditionReport check_pattern_pairs(const Graph& g, PatternFamily family,
                                           std::int64_t threshold) {
  ConditionReport r;
  r.threshold = threshold;
  const auto pairs = constrained_pairs(g, family);
  r.vacuous = pairs.empty();
  for (const auto& cp : pairs) {
    const std::int64_t sum = degree_sum(g, cp.pair);
    if (sum < threshold) r.violations.push_back({cp.pair, sum, cp.first});
  }
  return r;
}

inline ConditionReport check_all_pairs(const Graph& g, std::int64_t threshold) {
  ConditionReport r;
  r.threshold = threshold;
  r.vacuous = true;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      r.vacuous = false;
      const Edge e(u, v);
      const std::int64_t sum = degree_sum(g, e);
      if (sum < threshold) r.violations.push_back({e, sum, std::nullopt});
    }
  }
  return r;
}

inline std::int64_t tree_threshold(const Graph& g, int k) {
  if (k < 2) throw GraphError("k must be at least 2, got " + std::to_string(k));
  return static_cast<std::int64_t>(g.order()) - k + 1;
}

}  // namespace detail

/// d(x) + d(y) >= n over every nonadjacent pair inside an induced pattern of
/// the family; also records the n >= 4 and "some vertex of degree >= 2"
/// preconditions.
inline ConditionReport check_hamilton_condition(const Graph& g, PatternFamily family) {
  ConditionReport r =
      detail::check_pattern_pairs(g, family, static_cast<std::int64_t>(g.order()));
  if (g.order() < 4) r.precondition_failures.push_back(Precondition::TooFewVertices);
  if (g.max_degree() < 2) r.precondition_failures.push_back(Precondition::NoDegreeTwoVertex);
  detail::finalize(r);
  return r;
}

/// d(x) + d(y) >= n - k + 1 over the constrained pairs; G must be connected.
inline ConditionReport check_tree_condition(const Graph& g, int k, PatternFamily family) {
  ConditionReport r = detail::check_pattern_pairs(g, family, detail::tree_threshold(g, k));
  if (!is_connected(g)) r.precondition_failures.push_back(Precondition::Disconnected);
  detail::finalize(r);
  return r;
}

enum class ClassicalKind : std::uint8_t { Dirac, Ore, OreTree };

/// Classical baselines. Dirac: 2 d(v) >= n for every v. Ore: all nonadjacent
/// pairs reach n. OreTree: all nonadjacent pairs reach n - k + 1 on a
/// connected graph.
inline ConditionReport check_classical(const Graph& g, ClassicalKind kind, int k = 2) {
  const auto n = static_cast<std::int64_t>(g.order());
  ConditionReport r;
  switch (kind) {
    case ClassicalKind::Dirac:
      r.threshold = n;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (2 * static_cast<std::int64_t>(g.degree(v)) < n) r.degree_violations.push_back(v);
      }
      break;
    case ClassicalKind::Ore:
      r = detail::check_all_pairs(g, n);
      break;
    case ClassicalKind::OreTree:
      r = detail::check_all_pairs(g, detail::tree_threshold(g, k));
      if (!is_connected(g)) r.precondition_failures.push_back(Precondition::Disconnected);
      break;
  }
  detail::finalize(r);
  return r;
}

}  // namespace ore

#pragma once

// Survey engine: runs every checker, oracle and constructor on a stream of
// graphs, cross-checks them, and tallies the results.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "ore/conditions.hpp"
#include "ore/construct.hpp"
#include "ore/enumerate.hpp"
#include "ore/io.hpp"
#include "ore/oracle.hpp"

namespace ore {

enum class Verdict : std::uint8_t { Satisfied, Violated, Precondition };

constexpr std::string_view verdict_label(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Violated: return "violated";
    case Verdict::Precondition: return "precondition";
  }
  return "?";
}

inline Verdict verdict_of(const ConditionReport& r) {
  if (!r.precondition_failures.empty()) return Verdict::Precondition;
  return r.satisfied ? Verdict::Satisfied : Verdict::Violated;
}

struct SurveyOptions {
  std::vector<int> ks{2, 3, 4};
  bool connected_only = false;
  /// Count isomorphism classes (n <= 8 only) for the comparison tallies.
  bool dedupe = false;
  unsigned workers = 1;
};

struct TreeColumns {
  int k = 2;
  Verdict ore_tree = Verdict::Violated;
  Verdict thm2_five = Verdict::Violated;
  Verdict thm2_corollary = Verdict::Violated;
  /// "tree:<leaves>" or "witness:<kind>[:<pattern or label>]".
  std::string constructor;
  bool consistent = true;
};

struct SurveyRow {
  std::string graph6;
  std::size_t n = 0;
  bool connected = false;
  bool skipped = false;
  std::string skip_reason;

  Verdict dirac = Verdict::Violated;
  Verdict ore = Verdict::Violated;
  Verdict thm1_five = Verdict::Violated;
  Verdict thm1_corollary = Verdict::Violated;
  std::vector<TreeColumns> trees;

  bool hamiltonian = false;
  std::optional<std::size_t> min_leaf_count;  // empty when disconnected
  std::string cycle_constructor;

  bool thm1_consistent = true;
  bool baseline_consistent = true;
  std::vector<std::string> problems;

  bool consistent() const {
    return thm1_consistent && baseline_consistent &&
           std::all_of(trees.begin(), trees.end(), [](const TreeColumns& t) { return t.consistent; });
  }
};

struct Counterexample {
  std::size_t row = 0;
  std::string graph6;
  std::string reason;
};

struct SurveyReport {
  std::vector<int> ks;
  std::vector<SurveyRow> rows;
  /// Row count per "thm1_five/ore/hamiltonian" combination.
  std::map<std::string, std::size_t> aggregates;
  std::vector<Counterexample> counterexamples;
  std::size_t skipped = 0;
  /// Graphs satisfying the pattern-restricted Hamilton condition but not Ore's.
  std::size_t thm1_not_ore = 0;
  std::size_t thm1_not_ore_hamiltonian = 0;
  std::optional<std::size_t> isomorphism_classes;
  std::optional<std::size_t> thm1_not_ore_classes;
  double elapsed_seconds = 0.0;

  bool ok() const { return counterexamples.empty(); }
};

namespace detail {

inline std::string describe(const ViolationWitness& w) {
  std::string out = "witness:" + std::string(witness_kind_label(w.kind));
  if (w.pattern) out += ":" + std::string(pattern_token(*w.pattern));
  if (w.label) out += ":" + std::string(precondition_label(*w.label));
  return out;
}

inline void flag(SurveyRow& row, bool& slot, std::string problem) {
  slot = false;
  row.problems.push_back(std::move(problem));
}

}  // namespace detail

/// Evaluates one graph. Graphs beyond the oracle budget come back skipped.
inline SurveyRow survey_row(const Graph& g, const std::vector<int>& ks) {
  SurveyRow row;
  row.n = g.order();
  row.graph6 = g.order() <= kGraph6MaxOrder ? write_graph6(g) : std::string("-");
  row.connected = is_connected(g);
  if (g.order() > OracleBudget::kMinLeafTree) {
    row.skipped = true;
    row.skip_reason = "oracle budget exceeded (n > " + std::to_string(OracleBudget::kMinLeafTree) + ")";
    return row;
  }

  row.dirac = verdict_of(check_classical(g, ClassicalKind::Dirac));
  row.ore = verdict_of(check_classical(g, ClassicalKind::Ore));
  row.thm1_five = verdict_of(check_hamilton_condition(g, PatternFamily::Five));
  row.thm1_corollary = verdict_of(check_hamilton_condition(g, PatternFamily::Corollary));

  row.hamiltonian = hamiltonian_exact(g).has_value();
  if (auto t = min_leaf_spanning_tree_exact(g)) row.min_leaf_count = t->leaf_count;

  // Hamilton constructor.
  const HamiltonResult ham = find_hamilton_cycle(g);
  bool constructed_cycle = false;
  std::optional<HamiltonCycleCert> cert;
  if (const auto* c = std::get_if<HamiltonCycleCert>(&ham)) {
    row.cycle_constructor = "cycle";
    cert = *c;
  } else if (const auto* s = std::get_if<SmallVerdict>(&ham)) {
    row.cycle_constructor = s->cycle ? "small:cycle" : "small:none";
    cert = s->cycle;
  } else {
    const auto& w = std::get<ViolationWitness>(ham);
    row.cycle_constructor = detail::describe(w);
    if (auto err = validate_witness(g, w)) detail::flag(row, row.thm1_consistent, "invalid witness: " + *err);
  }
  if (cert) {
    constructed_cycle = true;
    if (auto err = validate_cycle(g, *cert)) detail::flag(row, row.thm1_consistent, "invalid cycle: " + *err);
    if (!row.hamiltonian) detail::flag(row, row.thm1_consistent, "cycle certificate where the oracle finds none");
  }
  if (row.thm1_five == Verdict::Satisfied || row.thm1_corollary == Verdict::Satisfied) {
    if (!row.hamiltonian) detail::flag(row, row.thm1_consistent, "Hamilton condition holds but graph is not Hamiltonian");
    if (!constructed_cycle) detail::flag(row, row.thm1_consistent, "Hamilton condition holds but constructor gave no cycle");
  }
  if (row.n >= 1 && (row.ore == Verdict::Satisfied || row.dirac == Verdict::Satisfied) &&
      !row.hamiltonian) {
    detail::flag(row, row.baseline_consistent, "classical condition holds but graph is not Hamiltonian");
  }

  for (int k : ks) {
    TreeColumns tc;
    tc.k = k;
    tc.ore_tree = verdict_of(check_classical(g, ClassicalKind::OreTree, k));
    tc.thm2_five = verdict_of(check_tree_condition(g, k, PatternFamily::Five));
    tc.thm2_corollary = verdict_of(check_tree_condition(g, k, PatternFamily::Corollary));
    const std::string tag = " (k=" + std::to_string(k) + ")";
    const bool within_k = row.min_leaf_count && *row.min_leaf_count <= static_cast<std::size_t>(k);

    const TreeResult tree = build_k_ended_tree(g, k);
    std::optional<std::size_t> built_leaves;
    if (const auto* t = std::get_if<KTreeCert>(&tree)) {
      tc.constructor = "tree:" + std::to_string(t->leaf_count);
      built_leaves = t->leaf_count;
      if (auto err = validate_tree(g, *t, k)) detail::flag(row, tc.consistent, "invalid tree" + tag + ": " + *err);
    } else {
      const auto& w = std::get<ViolationWitness>(tree);
      tc.constructor = detail::describe(w);
      if (auto err = validate_witness(g, w)) detail::flag(row, tc.consistent, "invalid tree witness" + tag + ": " + *err);
    }
    if (tc.thm2_five == Verdict::Satisfied || tc.thm2_corollary == Verdict::Satisfied) {
      if (!within_k) detail::flag(row, tc.consistent, "tree condition holds but no k-ended spanning tree" + tag);
      if (!built_leaves || *built_leaves > static_cast<std::size_t>(k)) {
        detail::flag(row, tc.consistent, "tree condition holds but constructor gave no k-ended tree" + tag);
      }
    }
    if (tc.ore_tree == Verdict::Satisfied && !within_k) {
      detail::flag(row, tc.consistent, "classical tree condition holds but no k-ended spanning tree" + tag);
    }
    row.trees.push_back(std::move(tc));
  }
  return row;
}

/// Surveys `graphs` in order. Rows are independent, so `workers` > 1 splits
/// them across threads; output order always matches input order.
inline SurveyReport survey(const std::vector<Graph>& graphs, const SurveyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<const Graph*> selected;
  for (const Graph& g : graphs) {
    if (!options.connected_only || is_connected(g)) selected.push_back(&g);
  }

  SurveyReport report;
  report.ks = options.ks;
  report.rows.resize(selected.size());
  const unsigned workers = std::max(1U, options.workers);
  std::atomic<std::size_t> next{0};
  const std::function<void()> work = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      report.rows[i] = survey_row(*selected[i], options.ks);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  std::set<std::string> classes;
  std::set<std::string> not_ore_classes;
  bool can_dedupe = options.dedupe;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const SurveyRow& row = report.rows[i];
    if (row.skipped) {
      ++report.skipped;
      continue;
    }
    const std::string key = "thm1_five=" + std::string(verdict_label(row.thm1_five)) +
                            ",ore=" + std::string(verdict_label(row.ore)) +
                            ",hamiltonian=" + (row.hamiltonian ? "true" : "false");
    ++report.aggregates[key];
    const bool not_ore = row.thm1_five == Verdict::Satisfied && row.ore != Verdict::Satisfied;
    if (not_ore) {
      ++report.thm1_not_ore;
      if (row.hamiltonian) ++report.thm1_not_ore_hamiltonian;
    }
    if (can_dedupe) {
      if (row.n > kMaxCanonicalOrder) {
        can_dedupe = false;
      } else {
        const std::string form = std::to_string(row.n) + ":" + canonical_form(*selected[i]);
        classes.insert(form);
        if (not_ore) not_ore_classes.insert(form);
      }
    }
    if (!row.consistent()) {
      std::string reason;
      for (const auto& p : row.problems) reason += (reason.empty() ? "" : "; ") + p;
      report.counterexamples.push_back({i, row.graph6, reason});
    }
  }
  if (can_dedupe) {
    report.isomorphism_classes = classes.size();
    report.thm1_not_ore_classes = not_ore_classes.size();
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

/// CSV with a fixed header; one line per row, LF endings.
inline void write_csv(const SurveyReport& report, std::ostream& out) {
  out << "graph6,n,connected,dirac,ore,thm1_five,thm1_corollary";
  for (int k : report.ks) {
    out << ",ore_tree_k" << k << ",thm2_five_k" << k << ",thm2_corollary_k" << k;
  }
  out << ",hamiltonian,min_leaf_count,cycle_constructor";
  for (int k : report.ks) out << ",tree_constructor_k" << k;
  out << ",thm1_consistent,thm2_consistent,status\n";

  for (const SurveyRow& row : report.rows) {
    out << row.graph6 << ',' << row.n << ',' << (row.connected ? "true" : "false");
    if (row.skipped) {
      for (std::size_t i = 0; i < 9 + 4 * report.ks.size(); ++i) out << ',';
      out << ",skipped\n";
      continue;
    }
    out << ',' << verdict_label(row.dirac) << ',' << verdict_label(row.ore) << ','
        << verdict_label(row.thm1_five) << ',' << verdict_label(row.thm1_corollary);
    for (const auto& t : row.trees) {
      out << ',' << verdict_label(t.ore_tree) << ',' << verdict_label(t.thm2_five) << ','
          << verdict_label(t.thm2_corollary);
    }
    out << ',' << (row.hamiltonian ? "true" : "false") << ',';
    if (row.min_leaf_count) out << *row.min_leaf_count;
    out << ',' << row.cycle_constructor;
    for (const auto& t : row.trees) out << ',' << t.constructor;
    const bool trees_ok =
        std::all_of(row.trees.begin(), row.trees.end(), [](const TreeColumns& t) { return t.consistent; });
    out << ',' << (row.thm1_consistent && row.baseline_consistent ? "true" : "false") << ','
        << (trees_ok ? "true" : "false") << ',' << (row.consistent() ? "ok" : "counterexample") << '\n';
  }
}

}  // namespace ore

// oretool: command-line front end for the degree-sum checkers, constructors,
// exact oracles and the survey engine.
//
// Exit codes: 0 satisfied / certificate produced, 1 violated / witness /
// oracle-negative, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ore/conditions.hpp"
#include "ore/construct.hpp"
#include "ore/enumerate.hpp"
#include "ore/io.hpp"
#include "ore/oracle.hpp"
#include "ore/survey.hpp"

namespace {

using nlohmann::json;
using namespace ore;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct InputOptions {
  std::string path = "-";
  bool force_g6 = false;
  bool force_edges = false;
  std::string format = "text";
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const InputOptions& opt) {
  const std::string text = read_all(opt.path);
  const bool g6 = opt.force_g6 || (!opt.force_edges && looks_like_graph6(text));
  if (!g6) return parse_edge_list(text);
  auto graphs = parse_graph6_stream(text);
  if (graphs.empty()) throw InputError("no graph in input");
  return graphs.front();
}

void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("input", opt.path, "graph file (graph6 or edge list), '-' for stdin");
  auto* g6 = cmd->add_flag("--g6", opt.force_g6, "force graph6 input");
  cmd->add_flag("--edges", opt.force_edges, "force edge-list input")->excludes(g6);
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

std::string render_subset(const VertexSubset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string render_pair(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::string join(const std::vector<Vertex>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? " " : "") + std::to_string(seq[i]);
  return out;
}

json occurrence_json(const PatternOccurrence& occ) {
  json pairs = json::array();
  for (const Edge& e : occ.nonadjacent_pairs) pairs.push_back({e.u, e.v});
  return {{"subset", std::vector<Vertex>(occ.subset.begin(), occ.subset.end())},
          {"pattern", pattern_name(occ.pattern)},
          {"pattern_id", pattern_token(occ.pattern)},
          {"nonadjacent_pairs", pairs}};
}

json report_json(const ConditionReport& r, const std::string& condition) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json item = {{"pair", {v.pair.u, v.pair.v}}, {"degree_sum", v.degree_sum}};
    item["occurrence"] = v.occurrence ? occurrence_json(*v.occurrence) : json(nullptr);
    violations.push_back(item);
  }
  json pre = json::array();
  for (auto p : r.precondition_failures) pre.push_back(precondition_label(p));
  return {{"condition", condition},
          {"satisfied", r.satisfied},
          {"threshold", r.threshold},
          {"vacuous", r.vacuous},
          {"violations", violations},
          {"degree_violations", r.degree_violations},
          {"precondition_failures", pre}};
}

void print_report_text(const ConditionReport& r, const std::string& condition) {
  std::cout << condition << ": " << (r.satisfied ? "satisfied" : "violated")
            << (r.satisfied && r.vacuous ? " (vacuous)" : "") << '\n';
  std::cout << "threshold: " << r.threshold << '\n';
  std::cout << "vacuous: " << (r.vacuous ? "true" : "false") << '\n';
  for (const auto& v : r.violations) {
    std::cout << "violation: pair " << render_pair(v.pair) << " degree_sum " << v.degree_sum << " < "
              << r.threshold;
    if (v.occurrence) {
      std::cout << " in " << pattern_name(v.occurrence->pattern) << " on "
                << render_subset(v.occurrence->subset);
    }
    std::cout << '\n';
  }
  for (Vertex v : r.degree_violations) {
    std::cout << "degree violation: vertex " << v << " has 2*d(v) < " << r.threshold << '\n';
  }
  for (auto p : r.precondition_failures) std::cout << "precondition failure: " << precondition_label(p) << '\n';
}

json witness_json(const ViolationWitness& w) {
  json out = {{"kind", witness_kind_label(w.kind)},
              {"subset", std::vector<Vertex>(w.subset.begin(), w.subset.end())},
              {"degree_sum", w.degree_sum},
              {"threshold", w.threshold}};
  out["pattern"] = w.pattern ? json(pattern_name(*w.pattern)) : json(nullptr);
  out["pattern_id"] = w.pattern ? json(pattern_token(*w.pattern)) : json(nullptr);
  out["pair"] = w.pair ? json({w.pair->u, w.pair->v}) : json(nullptr);
  out["label"] = w.label ? json(precondition_label(*w.label)) : json(nullptr);
  return out;
}

void print_witness_text(const ViolationWitness& w) {
  std::cout << "witness: " << witness_kind_label(w.kind) << '\n';
  if (w.label) {
    std::cout << "label: " << precondition_label(*w.label) << '\n';
    std::cout << "threshold: " << w.threshold << '\n';
    return;
  }
  std::cout << "pattern: " << (w.pattern ? pattern_name(*w.pattern) : "?") << '\n';
  std::cout << "subset: " << render_subset(w.subset) << '\n';
  if (w.pair) std::cout << "pair: " << render_pair(*w.pair) << '\n';
  std::cout << "degree_sum: " << w.degree_sum << '\n';
  std::cout << "threshold: " << w.threshold << '\n';
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// --- check ---------------------------------------------------------------

struct CheckOptions {
  InputOptions input;
  std::string theorem;
  int k = 0;
  std::string family = "five";
};

int run_check(const CheckOptions& opt) {
  const bool needs_k = opt.theorem == "2" || opt.theorem == "C";
  if (needs_k && opt.k == 0) throw CLI::ValidationError("--k", "--k is required for --theorem " + opt.theorem);
  if (!needs_k && opt.k != 0) throw CLI::ValidationError("--k", "--k only applies to --theorem 2 and C");
  const Graph g = load_graph(opt.input);
  const PatternFamily family = opt.family == "five" ? PatternFamily::Five : PatternFamily::Corollary;

  ConditionReport r;
  std::string name;
  if (opt.theorem == "1") {
    r = check_hamilton_condition(g, family);
    name = "hamilton condition (" + opt.family + ")";
  } else if (opt.theorem == "2") {
    r = check_tree_condition(g, opt.k, family);
    name = "tree condition k=" + std::to_string(opt.k) + " (" + opt.family + ")";
  } else if (opt.theorem == "A") {
    r = check_classical(g, ClassicalKind::Dirac);
    name = "dirac";
  } else if (opt.theorem == "B") {
    r = check_classical(g, ClassicalKind::Ore);
    name = "ore";
  } else {
    r = check_classical(g, ClassicalKind::OreTree, opt.k);
    name = "ore tree k=" + std::to_string(opt.k);
  }
  if (opt.input.format == "json") {
    print_json(report_json(r, name));
  } else {
    print_report_text(r, name);
  }
  return r.satisfied ? kOk : kNegative;
}

// --- hamilton / tree ------------------------------------------------------

int run_hamilton(const InputOptions& opt) {
  const Graph g = load_graph(opt);
  const HamiltonResult result = find_hamilton_cycle(g);
  const bool text = opt.format == "text";
  if (const auto* c = std::get_if<HamiltonCycleCert>(&result)) {
    if (text) std::cout << "cycle: " << join(c->cycle) << '\n';
    else print_json({{"result", "cycle"}, {"cycle", c->cycle}});
    return kOk;
  }
  if (const auto* s = std::get_if<SmallVerdict>(&result)) {
    if (s->cycle) {
      if (text) std::cout << "cycle: " << join(s->cycle->cycle) << '\n';
      else print_json({{"result", "cycle"}, {"cycle", s->cycle->cycle}});
      return kOk;
    }
    if (text) std::cout << "no cycle (decided directly for n <= 3)\n";
    else print_json({{"result", "none"}});
    return kNegative;
  }
  const auto& w = std::get<ViolationWitness>(result);
  if (text) print_witness_text(w);
  else print_json({{"result", "witness"}, {"witness", witness_json(w)}});
  return kNegative;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

void print_edges(const std::vector<Edge>& edges) {
  std::cout << "edges:";
  for (const Edge& e : edges) std::cout << ' ' << e.u << '-' << e.v;
  std::cout << '\n';
}

int run_tree(const InputOptions& opt, int k) {
  const Graph g = load_graph(opt);
  const TreeResult result = build_k_ended_tree(g, k);
  const bool text = opt.format == "text";
  if (const auto* t = std::get_if<KTreeCert>(&result)) {
    if (text) {
      std::cout << "tree: leaf_count " << t->leaf_count << '\n';
      print_edges(t->edges);
    } else {
      print_json({{"result", "tree"}, {"leaf_count", t->leaf_count}, {"edges", edges_json(t->edges)}});
    }
    return kOk;
  }
  const auto& w = std::get<ViolationWitness>(result);
  if (text) print_witness_text(w);
  else print_json({{"result", "witness"}, {"witness", witness_json(w)}});
  return kNegative;
}

// --- oracle ---------------------------------------------------------------

int run_oracle(const InputOptions& opt, const std::string& kind) {
  const Graph g = load_graph(opt);
  const bool text = opt.format == "text";
  if (kind == "hamilton") {
    const auto cycle = hamiltonian_exact(g);
    if (text) std::cout << (cycle ? "cycle: " + join(*cycle) : std::string("none")) << '\n';
    else print_json({{"hamiltonian", cycle.has_value()}, {"cycle", cycle ? json(*cycle) : json(nullptr)}});
    return cycle ? kOk : kNegative;
  }
  if (kind == "minleaf") {
    const auto tree = min_leaf_spanning_tree_exact(g);
    if (text) {
      if (tree) {
        std::cout << tree->leaf_count << '\n';
        print_edges(tree->edges);
      } else {
        std::cout << "none (disconnected)\n";
      }
    } else {
      print_json({{"min_leaf_count", tree ? json(tree->leaf_count) : json(nullptr)},
                  {"edges", tree ? edges_json(tree->edges) : json(nullptr)}});
    }
    return tree ? kOk : kNegative;
  }
  const Path p = longest_path_exact(g);
  if (text) std::cout << "order " << p.size() << "\npath: " << join(p.vertices) << '\n';
  else print_json({{"order", p.size()}, {"path", p.vertices}});
  return kOk;
}

// --- survey ---------------------------------------------------------------

struct SurveyCliOptions {
  int n = -1;
  std::string input;
  std::vector<int> ks{2, 3, 4};
  bool connected_only = false;
  bool dedupe = false;
  std::string out;
  unsigned workers = 1;
};

int run_survey(const SurveyCliOptions& opt) {
  std::vector<Graph> graphs;
  if (!opt.input.empty()) {
    graphs = parse_graph6_stream(read_all(opt.input));
  } else {
    if (opt.n < 0) throw CLI::ValidationError("--n", "either --n or --input is required");
    if (opt.n > static_cast<int>(kMaxEnumerationOrder)) {
      throw CLI::ValidationError("--n", "built-in enumeration covers n <= 6; use --input for larger graphs");
    }
    for (const Graph& g : all_labeled_graphs(static_cast<std::size_t>(opt.n))) graphs.push_back(g);
  }
  SurveyOptions options;
  options.ks = opt.ks;
  options.connected_only = opt.connected_only;
  options.dedupe = opt.dedupe;
  options.workers = opt.workers;
  const SurveyReport report = survey(graphs, options);

  if (opt.out.empty() || opt.out == "-") {
    write_csv(report, std::cout);
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw InputError("cannot write " + opt.out);
    write_csv(report, file);
  }
  std::ostream& log = std::cerr;
  log << "rows: " << report.rows.size() << " (skipped " << report.skipped << ")\n";
  for (const auto& [key, count] : report.aggregates) log << "  " << key << ": " << count << '\n';
  log << "hamilton condition satisfied, ore violated: " << report.thm1_not_ore << " (hamiltonian: "
      << report.thm1_not_ore_hamiltonian << ")\n";
  if (report.isomorphism_classes) {
    log << "isomorphism classes: " << *report.isomorphism_classes
        << ", of which condition-but-not-ore: " << *report.thm1_not_ore_classes << '\n';
  }
  log << "counterexamples: " << report.counterexamples.size() << '\n';
  for (const auto& c : report.counterexamples) log << "  " << c.graph6 << ": " << c.reason << '\n';
  log << "elapsed: " << report.elapsed_seconds << " s\n";
  return report.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ore-type degree-sum conditions: checkers, constructors, oracles, survey"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "check a degree-sum hypothesis");
  check_cmd->add_option("--theorem", check.theorem,
                        "1: pattern-restricted Hamilton condition, 2: pattern-restricted tree "
                        "condition, A: Dirac, B: Ore, C: Ore-type tree condition")
      ->required()
      ->check(CLI::IsMember({"1", "2", "A", "B", "C"}));
  check_cmd->add_option("--k", check.k, "leaf bound k >= 2 (--theorem 2 and C)")->check(CLI::Range(2, 1 << 20));
  check_cmd->add_option("--family", check.family, "pattern family")->check(CLI::IsMember({"five", "corollary"}));
  add_input_options(check_cmd, check.input);

  InputOptions ham;
  auto* ham_cmd = app.add_subcommand("hamilton", "construct a Hamilton cycle or a violation witness");
  add_input_options(ham_cmd, ham);

  InputOptions tree;
  int tree_k = 2;
  auto* tree_cmd = app.add_subcommand("tree", "construct a k-ended spanning tree or a violation witness");
  tree_cmd->add_option("--k", tree_k, "leaf bound k >= 2")->required()->check(CLI::Range(2, 1 << 20));
  add_input_options(tree_cmd, tree);

  InputOptions oracle;
  std::string oracle_kind;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force answers for small graphs");
  oracle_cmd->add_option("kind", oracle_kind, "hamilton | minleaf | longestpath")
      ->required()
      ->check(CLI::IsMember({"hamilton", "minleaf", "longestpath"}));
  add_input_options(oracle_cmd, oracle);

  SurveyCliOptions surv;
  auto* survey_cmd = app.add_subcommand("survey", "cross-check all checkers against the oracles");
  survey_cmd->add_option("--n", surv.n, "enumerate all labeled graphs on n <= 6 vertices");
  survey_cmd->add_option("--input", surv.input, "graph6 file, one graph per line");
  survey_cmd->add_option("--k", surv.ks, "comma-separated leaf bounds")->delimiter(',');
  survey_cmd->add_flag("--connected-only", surv.connected_only, "skip disconnected graphs");
  survey_cmd->add_flag("--dedupe", surv.dedupe, "count isomorphism classes (n <= 8)");
  survey_cmd->add_option("--out", surv.out, "CSV output path (default stdout)");
  survey_cmd->add_option("--workers", surv.workers, "worker threads")->check(CLI::Range(1U, 256U));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check_cmd) return run_check(check);
    if (*ham_cmd) return run_hamilton(ham);
    if (*tree_cmd) return run_tree(tree, tree_k);
    if (*oracle_cmd) return run_oracle(oracle, oracle_kind);
    if (*survey_cmd) {
      for (int k : surv.ks) {
        if (k < 2) throw CLI::ValidationError("--k", "every k must be at least 2");
      }
      return run_survey(surv);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "certdom/analysis.hpp"
#include "certdom/domination.hpp"
#include "certdom/families.hpp"
#include "certdom/graph_io.hpp"
#include "certdom/json_report.hpp"
#include "certdom/solver.hpp"
#include "certdom/structure.hpp"
#include "certdom/suite.hpp"

using namespace certdom;

namespace {

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string g6;
  std::string format = "auto";
  bool human = false;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("input", path, "Graph file (graph6 or edge list); stdin when omitted");
    auto* inline_g6 = cmd->add_option("--g6", g6, "Graph given inline as a graph6 string");
    file->excludes(inline_g6);
    cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    cmd->add_flag("--human", human, "Human-readable output instead of JSON");
  }

  Graph load() const {
    if (!g6.empty()) return parse_graph6(g6);
    std::string text;
    if (path.empty() || path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot read " + path);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw UsageError("no graph on input");
    const InputFormat f = format == "graph6"     ? InputFormat::Graph6
                          : format == "edgelist" ? InputFormat::EdgeList
                                                 : InputFormat::Auto;
    return parse_graph(text, f);
  }
};

VertexSet parse_vertex_list(const std::string& text, int order) {
  VertexSet s(order);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0 || v >= order) throw UsageError("invalid vertex '" + item + "'");
    s.insert(v);
  }
  return s;
}

Edge parse_edge(const std::string& text, int order) {
  const auto sep = text.find_first_of(",-");
  if (sep == std::string::npos) throw UsageError("edge must be written u,v");
  const VertexSet a = parse_vertex_list(text.substr(0, sep), order);
  const VertexSet b = parse_vertex_list(text.substr(sep + 1), order);
  if (a.size() != 1 || b.size() != 1) throw UsageError("edge must be written u,v");
  return {a.first(), b.first()};
}

std::ostream& operator<<(std::ostream& out, const VertexSet& s) { return out << to_string(s); }

int cmd_solve(const InputOptions& in, const std::string& param, bool no_reductions, bool no_closed_forms,
              std::optional<std::uint64_t> node_limit) {
  const Graph g = in.load();
  SolverConfig cfg;
  cfg.use_reductions = !no_reductions;
  cfg.use_closed_forms = !no_closed_forms;
  cfg.node_limit = node_limit;
  const SolveResult r = param == "gamma" ? gamma_solve(g, cfg) : gamma_cer_solve(g, cfg);
  if (in.human) {
    std::cout << param << " = " << r.value << (r.proven ? "" : " (upper bound, node limit reached)") << "\n"
              << "certificate " << r.certificate << "\n"
              << "nodes " << r.stats.nodes_expanded << ", forced " << r.stats.forced_vertices << ", components "
              << r.stats.components_split << ", closed forms " << r.stats.closed_form_hits << "\n";
  } else {
    Json j;
    j["graph"] = encode_graph6(g);
    j["n"] = g.order();
    j["param"] = param;
    j.update(to_json(r));
    std::cout << to_line(j) << "\n";
  }
  return 0;
}

int cmd_verify(const InputOptions& in, const std::string& set_text, const std::string& predicate) {
  const Graph g = in.load();
  const VertexSet d = parse_vertex_list(set_text, g.order());
  const bool holds = predicate == "dominating"   ? is_dominating(g, d)
                     : predicate == "certified" ? is_certified_dominating(g, d)
                                                : is_2dominating(g, d);
  if (in.human) {
    std::cout << predicate << " " << d << ": " << (holds ? "yes" : "no") << "\n";
    for (Vertex v = 0; v < g.order(); ++v) std::cout << "  " << v << " " << to_string(classify_vertex(g, d, v)) << "\n";
    return 0;
  }
  Json statuses = Json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    statuses.push_back({{"vertex", v}, {"status", to_string(classify_vertex(g, d, v))}});
  }
  Json j;
  j["predicate"] = predicate;
  j["set"] = to_json(d);
  j["holds"] = holds;
  j["statuses"] = statuses;
  std::cout << to_line(j) << "\n";
  return 0;
}

int cmd_family(const std::string& spec, const std::string& emit) {
  const Graph g = build_family(parse_family_spec(spec));
  if (emit == "edgelist") {
    std::cout << encode_edge_list(g);
  } else {
    std::cout << encode_graph6(g) << "\n";
  }
  return 0;
}

struct AnalyzeOptions {
  std::string report = "bounds";
  std::string edge_scope = "all-additions";
  std::string delete_edge;
  std::string add_edge;
  std::string add_vertex;
};

int cmd_analyze(const InputOptions& in, const AnalyzeOptions& a) {
  const Graph g = in.load();
  const bool edge_flags = !a.delete_edge.empty() || !a.add_edge.empty();
  if (edge_flags && a.report != "edges") throw UsageError("--delete-edge/--add-edge need --report edges");
  if (!a.add_vertex.empty() && a.report != "vertices") throw UsageError("--add-vertex needs --report vertices");

  Json j;
  bool ok = true;
  if (a.report == "bounds") {
    const BoundReport r = bound_report(g);
    ok = std::all_of(r.bounds.begin(), r.bounds.end(), [](const BoundCheck& b) { return b.holds; });
    if (in.human) {
      std::cout << "n " << r.n << ", gamma " << r.gamma << ", gamma_cer " << r.gamma_cer << ", |S1| " << r.s1_size
                << ", |S2| " << r.s2_size << ", k " << r.strong_support_leaf_count << "\n";
      for (const auto& b : r.bounds) {
        std::cout << "  " << b.name << ": " << b.lhs << " <= " << b.rhs << (b.holds ? "" : "  VIOLATED") << "\n";
      }
      std::cout << "gamma_cer == gamma: " << (r.equality_gamma.holds ? "yes" : "no") << "\n";
      return ok ? 0 : kExitClaimFailure;
    }
    j = to_json(r);
  } else if (a.report == "edges" || a.report == "vertices") {
    ModificationReport r;
    if (a.report == "edges") {
      if (!a.delete_edge.empty() && !a.add_edge.empty()) throw UsageError("--delete-edge conflicts with --add-edge");
      EdgeScope scope = a.edge_scope == "all-deletions" ? EdgeScope::all_deletions() : EdgeScope::all_additions();
      if (!a.delete_edge.empty()) scope = EdgeScope::remove(parse_edge(a.delete_edge, g.order()));
      if (!a.add_edge.empty()) scope = EdgeScope::add(parse_edge(a.add_edge, g.order()));
      r = edge_effects(g, scope);
    } else {
      VertexScope scope = VertexScope::all_deletions();
      if (!a.add_vertex.empty()) scope = VertexScope::add(parse_vertex_list(a.add_vertex, g.order()));
      r = vertex_effects(g, scope);
    }
    ok = r.violations() == 0;
    if (in.human) {
      std::cout << "base gamma_cer " << r.base_value << "\n";
      for (const auto& m : r.records) {
        std::cout << "  " << to_string(m.kind) << " " << m.detail << ": " << m.new_value << " (" << (m.delta >= 0 ? "+" : "")
                  << m.delta << ", bound " << to_string(m.bound) << ")\n";
      }
      return ok ? 0 : kExitClaimFailure;
    }
    j = to_json(r);
  } else {
    const NGReport r = nordhaus_gaddum(g);
    ok = r.all_hold();
    if (in.human) {
      std::cout << "gamma_cer(G) " << r.gcer_g << ", gamma_cer(complement) " << r.gcer_gbar << ", sum " << r.sum
                << ", product " << r.product << ", regime " << to_string(r.regime) << "\n";
      for (const auto& c : r.checks) std::cout << "  " << c.theorem << " " << c.bound << ": " << (c.holds ? "holds" : "FAILS") << "\n";
      return ok ? 0 : kExitClaimFailure;
    }
    j = to_json(r);
  }
  std::cout << to_line(j) << "\n";
  return ok ? 0 : kExitClaimFailure;
}

int cmd_dd2(const InputOptions& in, std::optional<int> max_d) {
  const Graph g = in.load();
  const auto pair = find_dd2_pair(g, max_d);
  if (in.human) {
    if (pair) {
      std::cout << "D " << pair->d << ", D2 " << pair->d2 << "\n";
    } else {
      std::cout << "none\n";
    }
    return 0;
  }
  Json j;
  j["graph"] = encode_graph6(g);
  j["found"] = pair.has_value();
  j["pair"] = pair ? to_json(*pair) : Json("none");
  std::cout << to_line(j) << "\n";
  return 0;
}

struct SuiteOptions {
  int n_max = 6;
  std::string graph6_file;
  std::string claims;
  int jobs = 0;
  bool unsafe_large = false;
  bool verbose = false;
  bool keep_going = false;
};

int cmd_suite(const SuiteOptions& o) {
  SuiteConfig cfg;
  cfg.n_max = o.n_max;
  if (!o.graph6_file.empty()) cfg.graph6_file = o.graph6_file;
  std::stringstream list(o.claims);
  for (std::string id; std::getline(list, id, ',');) {
    if (!id.empty()) cfg.claims.push_back(id);
  }
  cfg.jobs = o.jobs > 0 ? o.jobs : default_jobs();
  cfg.unsafe_large = o.unsafe_large;
  cfg.stop_on_failure = !o.keep_going;

  const SuiteSummary s = run_suite(cfg, [&](const TheoremReport& r) {
    if (o.verbose || !r.ok()) std::cout << to_line(to_json(r)) << "\n";
  });
  std::cout << to_line(to_json(s)) << "\n";
  if (!s.ok()) {
    std::cerr << "claim failure on graph " << s.failure->graph_id;
    if (s.graphs_failed > 1) std::cerr << " (first of " << s.graphs_failed << " failing graphs)";
    std::cerr << "\n";
    return kExitClaimFailure;
  }
  std::cerr << "all claims hold on " << s.graphs_checked << " graphs\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified domination toolkit"};
  app.require_subcommand(1);

  InputOptions solve_in, verify_in, analyze_in, dd2_in;

  auto* solve = app.add_subcommand("solve", "Exact gamma or gamma_cer with an optimal certificate");
  solve_in.attach(solve);
  std::string param = "gamma-cer";
  bool no_reductions = false;
  bool no_closed_forms = false;
  std::optional<std::uint64_t> node_limit;
  solve->add_option("--param", param, "Parameter to compute")->check(CLI::IsMember({"gamma", "gamma-cer"}));
  solve->add_flag("--no-reductions", no_reductions, "Disable support forcing and component splitting");
  solve->add_flag("--no-closed-forms", no_closed_forms, "Always search, even for recognised families");
  solve->add_option("--node-limit", node_limit, "Stop after this many search nodes")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check a vertex set against a domination predicate");
  verify_in.attach(verify);
  std::string set_text;
  std::string predicate = "certified";
  verify->add_option("--set", set_text, "Comma-separated vertices, e.g. 0,3,5")->required();
  verify->add_option("--predicate", predicate, "Predicate to test")
      ->check(CLI::IsMember({"dominating", "certified", "2dominating"}));

  auto* family = app.add_subcommand("family", "Generate a graph from a family expression");
  std::string spec;
  std::string emit = "graph6";
  family->add_option("spec", spec, "e.g. \"wheel 8\", \"corona(path 3, complete 1)\"")->required();
  family->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* analyze = app.add_subcommand("analyze", "Bound, modification and Nordhaus-Gaddum reports");
  analyze_in.attach(analyze);
  AnalyzeOptions aopt;
  analyze->add_option("--report", aopt.report, "Report kind")->check(CLI::IsMember({"bounds", "edges", "vertices", "ng"}));
  analyze->add_option("--edge-scope", aopt.edge_scope, "Edge sweep for --report edges")
      ->check(CLI::IsMember({"all-additions", "all-deletions"}));
  analyze->add_option("--delete-edge", aopt.delete_edge, "Single edge u,v to delete");
  analyze->add_option("--add-edge", aopt.add_edge, "Single non-edge u,v to add");
  analyze->add_option("--add-vertex", aopt.add_vertex, "Neighbours of a new vertex, e.g. 0,2");

  auto* dd2 = app.add_subcommand("dd2", "Find a (D, D2)-pair");
  dd2_in.attach(dd2);
  std::optional<int> max_d;
  dd2->add_option("--max-d", max_d, "Only accept pairs with |D| at most this")->check(CLI::NonNegativeNumber);

  auto* suite = app.add_subcommand("suite", "Run the claim suite exhaustively");
  SuiteOptions sopt;
  auto* n_max = suite->add_option("--n-max", sopt.n_max, "Largest order of the labeled enumeration");
  auto* file = suite->add_option("--graph6-file", sopt.graph6_file, "Check graphs from this file instead");
  n_max->excludes(file);
  suite->add_option("--claims", sopt.claims, "Comma-separated claim ids (default: all)");
  suite->add_option("--jobs", sopt.jobs, "Worker threads (default: CERTDOM_JOBS or 1)")->check(CLI::PositiveNumber);
  suite->add_flag("--unsafe-large", sopt.unsafe_large, "Allow enumeration above order 7");
  suite->add_flag("--verbose", sopt.verbose, "Print every per-graph report");
  suite->add_flag("--keep-going", sopt.keep_going, "Check every graph instead of stopping at the first failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(solve_in, param, no_reductions, no_closed_forms, node_limit);
    if (*verify) return cmd_verify(verify_in, set_text, predicate);
    if (*family) return cmd_family(spec, emit);
    if (*analyze) return cmd_analyze(analyze_in, aopt);
    if (*dd2) return cmd_dd2(dd2_in, max_d);
    if (*suite) return cmd_suite(sopt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <ranges>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "certdom/analysis.hpp"
#include "certdom/enumerate.hpp"
#include "certdom/families.hpp"
#include "certdom/graph_io.hpp"
#include "certdom/solver.hpp"
#include "certdom/structure.hpp"
#include "certdom/suite.hpp"
#include "support/reference.hpp"

using namespace certdom;

namespace {

const SolverConfig kSearchOnly{true, false, std::nullopt};
constexpr int kReferenceLimit = 16;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Every gamma_cer value computed along the way, for the n - 1 sanity check.
struct Recorder {
  std::uint64_t graphs = 0;
  std::vector<std::string> hits;

  void note(const Graph& g, int gcer) {
    ++graphs;
    if (g.order() >= 1 && gcer == g.order() - 1 && hits.size() < 5) hits.push_back(encode_graph6(g));
  }
};

class Criterion {
 public:
  explicit Criterion(Recorder& rec) : rec_(rec) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (messages_.size() < 10) messages_.push_back(what);
    }
  }

  void expect_eq(int got, int want, const std::string& what) {
    std::ostringstream out;
    out << what << ": got " << got << ", expected " << want;
    expect(got == want, out.str());
  }

  int gcer(const Graph& g, const std::string& label, const SolverConfig& cfg = {}) {
    const SolveResult r = gamma_cer_solve(g, cfg);
    expect(r.proven && is_certified_dominating(g, r.certificate) && r.certificate.size() == r.value,
           label + ": invalid certificate");
    rec_.note(g, r.value);
    return r.value;
  }

  // Solver with and without closed forms, plus the reference oracle when small enough.
  int gcer_checked(const Graph& g, const std::string& label) {
    const int value = gcer(g, label);
    expect_eq(gcer(g, label + " (search)", kSearchOnly), value, label + " search vs default");
    if (g.order() <= kReferenceLimit) {
      const int truth = ref::gamma_cer(ref::from_graph(g)).value;
      rec_.note(g, truth);
      expect_eq(value, truth, label + " vs reference");
    }
    return value;
  }

  void note(const std::string& line) { notes_.push_back(line); }

  bool passed() const { return failures_ == 0; }
  int checks() const { return checks_; }
  const std::vector<std::string>& messages() const { return messages_; }
  const std::vector<std::string>& notes() const { return notes_; }
  int failures() const { return failures_; }

 private:
  Recorder& rec_;
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

int stated_path(int n) {
  if (n == 1 || n == 3) return 1;
  if (n == 2) return 2;
  if (n == 4) return 4;
  return ceil_div(n, 3);
}

int stated_complete(int n) { return n == 2 ? 2 : 1; }

int stated_complete_bipartite(int m, int n) { return (m == 1 && n > 1) ? 1 : 2; }

void closed_form_tables(Criterion& c) {
  for (int n = 1; n <= 30; ++n) c.expect_eq(c.gcer_checked(path_graph(n), "P" + std::to_string(n)), stated_path(n), "P" + std::to_string(n));
  for (int n = 3; n <= 30; ++n) {
    c.expect_eq(c.gcer_checked(cycle_graph(n), "C" + std::to_string(n)), ceil_div(n, 3), "C" + std::to_string(n));
  }
  for (int n = 1; n <= 12; ++n) {
    c.expect_eq(c.gcer_checked(complete_graph(n), "K" + std::to_string(n)), stated_complete(n), "K" + std::to_string(n));
  }
  for (int m = 1; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      const std::string label = "K" + std::to_string(m) + "," + std::to_string(n);
      c.expect_eq(c.gcer_checked(complete_bipartite_graph(m, n), label), stated_complete_bipartite(m, n), label);
    }
  }
  for (int n = 4; n <= 12; ++n) c.expect_eq(c.gcer_checked(wheel_graph(n), "W" + std::to_string(n)), 1, "W" + std::to_string(n));
  c.note("paths 1..30, cycles 3..30, complete 1..12, complete bipartite m<=n<=8, wheels 4..12");
}

// Independent check that no (D, V - D) with |D| <= k is a DD2-pair.
bool reference_has_dd2_up_to(const Graph& g, int k) {
  const auto m = ref::from_graph(g);
  const std::uint32_t all = (std::uint32_t{1} << m.n) - 1;
  for (std::uint32_t d = 0; d <= all; ++d) {
    if (std::popcount(d) > k) continue;
    if (ref::dominating(m, d) && ref::two_dominating(m, all & ~d)) return true;
  }
  return false;
}

// m plus a new last vertex adjacent to the vertices in nbrs.
ref::Matrix extended(const ref::Matrix& m, std::uint32_t nbrs) {
  ref::Matrix bigger(m.n + 1);
  for (int u = 0; u < m.n; ++u) {
    for (int v = u + 1; v < m.n; ++v) {
      if (m.adj[u][v]) bigger.add(u, v);
    }
    if (ref::in(nbrs, u)) bigger.add(u, m.n);
  }
  return bigger;
}

void figure_fixtures(Criterion& c) {
  for (int i = 2; i <= 5; ++i) {
    const Graph g = fig1_graph(i);
    const std::string label = "Fig1(" + std::to_string(i) + ")";
    c.expect_eq(c.gcer_checked(g, label), i + 3, label);
    if (g.order() <= kDefaultOracleBound) c.expect_eq(gamma_cer_oracle(g).value, i + 3, label + " oracle");
  }
  for (int i = 3; i <= 4; ++i) {
    const Graph g = fig1_graph(i);
    const std::string label = "Fig1(" + std::to_string(i) + ")";
    c.expect(!find_dd2_pair(g, i + 3).has_value(), label + ": DD2-pair with |D| <= i+3 found");
    c.expect(!reference_has_dd2_up_to(g, i + 3), label + ": reference found a DD2-pair with |D| <= i+3");
    const auto [d, d2] = fig1_dd2_pair(i);
    c.expect(d.size() == 2 * i + 1 && is_dd2_pair(g, {d, d2}), label + ": drawn DD2-pair invalid");
    const auto best = find_dd2_pair(g);
    c.expect(best && best->d.size() == 2 * i + 1, label + ": smallest DD2-pair is not 2i+1");
    c.expect(reference_has_dd2_up_to(g, 2 * i + 1) && !reference_has_dd2_up_to(g, 2 * i), label + ": reference minimum |D| differs");
  }
  for (int i = 1; i <= 4; ++i) {
    const std::string s = "(" + std::to_string(i) + ")";
    const Graph a = fig3a_graph(i);
    const Edge e = fig3a_marked_edge();
    c.expect_eq(c.gcer_checked(a, "Fig3a" + s), i + 1, "Fig3a" + s);
    c.expect_eq(c.gcer_checked(a.without_edge(e.u, e.v), "Fig3a" + s + "-e"), 2 * i + 4, "Fig3a" + s + "-e");
    c.expect_eq(edge_effects(a, EdgeScope::remove(e)).records.at(0).new_value, 2 * i + 4, "Fig3a" + s + " edge_effects");

    const Graph b = fig3b_graph(i);
    const Edge f = fig3b_dashed_edge();
    c.expect_eq(c.gcer_checked(b, "Fig3b" + s), i + 2, "Fig3b" + s);
    c.expect_eq(c.gcer_checked(b.with_edge(f.u, f.v), "Fig3b" + s + "+e"), 2 * i + 4, "Fig3b" + s + "+e");
    c.expect_eq(edge_effects(b, EdgeScope::add(f)).records.at(0).new_value, 2 * i + 4, "Fig3b" + s + " edge_effects");

    const Graph w = fig4_graph(i);
    c.expect_eq(c.gcer_checked(w, "Fig4" + s), i, "Fig4" + s);
    c.expect_eq(c.gcer_checked(ref::to_graph(extended(ref::from_graph(w), 1U << kFig4Centre)), "Fig4" + s + "+v"), 2 * i + 2, "Fig4" + s + "+v");
    const VertexSet at(w.order(), {kFig4Centre});
    c.expect_eq(vertex_effects(w, VertexScope::add(at)).records.at(0).new_value, 2 * i + 2, "Fig4" + s + " vertex_effects");
  }
  for (int n = 4; n <= 12; ++n) {
    const Graph w = wheel_graph(n);
    VertexSet rim = VertexSet::full(n);
    rim.erase(0);
    const std::string label = "W" + std::to_string(n) + "-hub";
    c.expect_eq(c.gcer_checked(induced_subgraph(w, rim), label), ceil_div(n - 1, 3), label);
  }
  c.note("Fig1 i=2..5, Fig3a/Fig3b/Fig4 i=1..4, wheel hub deletion n=4..12");
}

const std::vector<std::string> kStatedClaims = {
    "OBS2.6", "OBS2.7", "OBS3.1", "OBS3.2", "THM3.3", "COR3.4", "COR3.5", "COR4.1", "COR4.2", "LEM4.3", "COR4.4",
    "COR4.5", "THM5.3", "THM5.6", "LEM6.1", "THM6.2", "COR7.1", "OBS7.2", "THM7.4", "THM7.5", "THM9.2"};
const std::vector<std::string> kCorrectedClaims = {"LEM4.3-LEAFFREE", "COR4.4-LEAFFREE", "OBS7.2-CORRECTED"};

void exhaustive_suite(Criterion& c, Recorder& rec) {
  SuiteConfig cfg;
  cfg.n_max = 6;
  cfg.stop_on_failure = false;
  cfg.jobs = default_jobs();
  cfg.claims = kStatedClaims;
  cfg.claims.insert(cfg.claims.end(), kCorrectedClaims.begin(), kCorrectedClaims.end());
  cfg.claims.push_back("GCER-RANGE");

  std::map<std::string, std::string> first_failure;
  const SuiteSummary s = run_suite(cfg, [&](const TheoremReport& r) {
    for (const ClaimResult& cr : r.claims) {
      if (cr.applicable && !cr.holds && !first_failure.count(cr.claim_id)) {
        first_failure[cr.claim_id] = r.graph_id + " " + (cr.witness ? cr.witness->dump() : "{}");
      }
    }
  });
  c.expect(s.graphs_checked == 33868, "graph count " + std::to_string(s.graphs_checked));
  rec.graphs += s.graphs_checked;

  for (const ClaimTally& t : s.tallies) {
    const std::string counts = std::to_string(t.failed) + "/" + std::to_string(t.applicable);
    if (t.claim_id == "GCER-RANGE") {
      if (t.failed > 0) rec.hits.push_back("suite: " + first_failure[t.claim_id]);
      continue;
    }
    const bool stated = std::find(kStatedClaims.begin(), kStatedClaims.end(), t.claim_id) != kStatedClaims.end();
    if (stated) {
      c.expect(t.failed == 0, t.claim_id + " failed on " + counts + " applicable graphs, first " + first_failure[t.claim_id]);
    } else {
      c.note(t.claim_id + " (corrected reading) failures " + counts);
    }
  }
  c.note("graphs checked " + std::to_string(s.graphs_checked) + ", graphs with a failing claim " +
         std::to_string(s.graphs_failed));
}

void corona_and_diadem(Criterion& c) {
  int bases = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& h : enumerate_labeled_graphs(n)) {
      if (!is_connected(h)) continue;
      ++bases;
      const std::string id = encode_graph6(h);
      const VertexSet base = VertexSet::from_range(2 * n, std::views::iota(0, n));

      const Graph g = corona(h, complete_graph(1));
      c.expect_eq(c.gcer_checked(g, "corona " + id), g.order(), "corona " + id);
      const auto found = recognize_corona(g);
      c.expect(found && (*found == base || n == 1) && induced_subgraph(g, *found) == h, "corona base " + id);

      const Graph d = diadem(h);
      c.expect_eq(c.gcer_checked(d, "diadem " + id), d.order() - 2, "diadem " + id);
      const auto w = recognize_diadem(d);
      const VertexSet dbase = VertexSet::from_range(d.order(), std::views::iota(0, n));
      c.expect(w && w->base == dbase && w->strong_support == 0 && induced_subgraph(d, w->base) == h, "diadem base " + id);
    }
  }
  c.note("connected bases " + std::to_string(bases));
}

void solver_oracle(Criterion& c, Recorder& rec) {
  auto compare = [&](const Graph& g, bool with_reference) {
    const std::string id = encode_graph6(g);
    const SolveResult sc = gamma_cer_solve(g);
    const SolveResult oc = gamma_cer_oracle(g);
    const SolveResult sg = gamma_solve(g);
    const SolveResult og = gamma_oracle(g);
    rec.note(g, sc.value);
    c.expect_eq(sc.value, oc.value, "gamma_cer " + id);
    c.expect_eq(sg.value, og.value, "gamma " + id);
    c.expect(is_certified_dominating(g, sc.certificate) && sc.certificate.size() == sc.value, "certificate " + id);
    c.expect(is_dominating(g, sg.certificate) && sg.certificate.size() == sg.value, "gamma certificate " + id);
    if (with_reference) {
      const auto m = ref::from_graph(g);
      c.expect_eq(oc.value, ref::gamma_cer(m).value, "reference gamma_cer " + id);
      c.expect_eq(og.value, ref::gamma(m).value, "reference gamma " + id);
    }
  };
  std::uint64_t count = 0;
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      compare(g, true);
      ++count;
    }
  }
  std::mt19937_64 rng(20240607);
  for (int n = 7; n <= 9; ++n) {
    for (double p : {0.2, 0.5, 0.8}) {
      for (int k = 0; k < 1000; ++k) {
        compare(ref::to_graph(ref::random_graph(n, p, rng)), k < 100);
        ++count;
      }
    }
  }
  c.note("graphs compared " + std::to_string(count) + " (seed 20240607)");
}

void added_vertex_sweep(Criterion& c, Recorder& rec) {
  std::uint64_t additions = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      const auto m = ref::from_graph(g);
      const int base = ref::gamma_cer(m).value;
      c.expect_eq(gamma_cer_solve(g).value, base, "base " + encode_graph6(g));
      const ModificationReport lib = vertex_effects(g, VertexScope::all_deletions());
      rec.note(g, lib.base_value);
      for (std::uint32_t nbrs = 0; nbrs < (std::uint32_t{1} << n); ++nbrs) {
        if (std::popcount(nbrs) < 2) continue;
        const ref::Matrix bigger = extended(m, nbrs);
        const int after = ref::gamma_cer(bigger).value;
        const Graph h = ref::to_graph(bigger);
        const int solved = gamma_cer_solve(h, kSearchOnly).value;
        rec.note(h, solved);
        c.expect_eq(solved, after, "G+v " + encode_graph6(h));
        c.expect(after <= base + 1, "G+v raised gamma_cer by more than one: " + encode_graph6(h));
        ++additions;
      }
      const ModificationReport r = vertex_effects(g, VertexScope::add(VertexSet::full(n)));
      c.expect(r.violations() == 0, "vertex_effects " + encode_graph6(g));
    }
  }
  c.note("additions checked " + std::to_string(additions));
}

void sanity(Criterion& c, const Recorder& rec) {
  c.expect(rec.hits.empty(), rec.hits.empty() ? "" : "gamma_cer = n - 1 on " + rec.hits.front());
  c.note("values recorded " + std::to_string(rec.graphs));
}

using Body = void (*)(Criterion&, Recorder&);

struct Entry {
  int id;
  const char* name;
  Body run;
};

const Entry kEntries[] = {
    {1, "closed-form tables", [](Criterion& c, Recorder&) { closed_form_tables(c); }},
    {2, "figure fixtures", [](Criterion& c, Recorder&) { figure_fixtures(c); }},
    {3, "exhaustive labeled suite n<=6", exhaustive_suite},
    {4, "corona and diadem bases", [](Criterion& c, Recorder&) { corona_and_diadem(c); }},
    {5, "solver/oracle equivalence", solver_oracle},
    {6, "added-vertex sweep n<=5", added_vertex_sweep},
};

bool report(int id, const char* name, const Criterion& c, double seconds) {
  for (const auto& line : c.notes()) std::cout << "  " << line << "\n";
  for (const auto& line : c.messages()) std::cout << "  failure: " << line << "\n";
  std::cout << "criterion " << id << " (" << name << "): " << (c.passed() ? "PASS" : "FAIL") << " [" << c.checks()
            << " checks, " << c.failures() << " failed, " << seconds << " s]" << std::endl;
  return c.passed();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certdom acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-7)")->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);

  Recorder rec;
  bool ok = true;
  for (const Entry& e : kEntries) {
    if (only != 0 && only != 7 && only != e.id) continue;
    Criterion c(rec);
    const auto start = std::chrono::steady_clock::now();
    e.run(c, rec);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (only == 7) continue;
    ok = report(e.id, e.name, c, seconds) && ok;
  }
  if (only == 0 || only == 7) {
    Criterion c(rec);
    sanity(c, rec);
    ok = report(7, "gamma_cer never n-1", c, 0.0) && ok;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}

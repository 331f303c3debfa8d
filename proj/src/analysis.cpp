#include "certdom/analysis.hpp"

#include <algorithm>

#include "certdom/structure.hpp"

namespace certdom {

std::optional<VertexSet> find_lemma43_witness(const Graph& g, int max_order, bool exclude_leaves) {
  const VertexSet ls = leaves(g);
  const VertexSet s1 = weak_supports(g);
  for (const VertexSet& d : all_min_dominating_sets(g, max_order)) {
    if (exclude_leaves && d.intersects(ls)) continue;
    bool ok = true;
    for (Vertex s : s1) {
      if ((g.neighbours(s) - ls).is_subset_of(d)) {
        ok = false;
        break;
      }
    }
    if (ok) return d;
  }
  return std::nullopt;
}

BoundReport bound_report(const Graph& g, const SolverConfig& cfg, int max_order) {
  BoundReport r;
  r.n = g.order();
  r.gamma = gamma_solve(g, cfg).value;
  r.gamma_cer = gamma_cer_solve(g, cfg).value;
  r.s1_size = weak_supports(g).size();
  r.s2_size = strong_supports(g).size();
  r.strong_support_leaf_count = strong_support_leaves(g).size();

  auto add = [&](std::string name, int lhs, int rhs) { r.bounds.push_back({std::move(name), lhs, rhs, lhs <= rhs}); };
  add("gamma <= gamma_cer", r.gamma, r.gamma_cer);
  add("gamma_cer <= n", r.gamma_cer, r.n);
  add("gamma_cer <= n - k", r.gamma_cer, r.n - r.strong_support_leaf_count);
  add("gamma_cer <= n - 2|S2|", r.gamma_cer, r.n - 2 * r.s2_size);
  add("gamma_cer <= gamma + |S1|", r.gamma_cer, r.gamma + r.s1_size);
  add("gamma_cer <= 2 gamma", r.gamma_cer, 2 * r.gamma);

  r.equality_gamma.holds = r.gamma_cer == r.gamma;
  if (r.n <= max_order) {
    r.equality_gamma.searched = true;
    r.equality_gamma.lemma43_witness = find_lemma43_witness(g, max_order);
  }
  return r;
}

std::string_view to_string(ModificationKind k) {
  switch (k) {
    case ModificationKind::EdgeDeletion: return "edge-del";
    case ModificationKind::EdgeAddition: return "edge-add";
    case ModificationKind::VertexDeletion: return "vertex-del";
    case ModificationKind::VertexAddition: return "vertex-add";
  }
  return "?";
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::NotApplicable: return "not-applicable";
    case BoundStatus::Holds: return "holds";
    case BoundStatus::Violated: return "violated";
  }
  return "?";
}

int ModificationReport::violations() const {
  return static_cast<int>(
      std::count_if(records.begin(), records.end(), [](const auto& m) { return m.bound == BoundStatus::Violated; }));
}

namespace {

std::string edge_detail(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void check_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.u >= g.order() || e.v < 0 || e.v >= g.order() || e.u == e.v) {
    throw std::invalid_argument("invalid edge " + edge_detail(e) + " for order " + std::to_string(g.order()));
  }
}

}  // namespace

ModificationReport edge_effects(const Graph& g, const EdgeScope& scope, const SolverConfig& cfg) {
  ModificationReport r;
  r.base_value = gamma_cer_solve(g, cfg).value;
  const bool monotone = g.order() >= 2 && is_connected(g);

  auto deletion = [&](Edge e) {
    const int v = gamma_cer_solve(g.without_edge(e.u, e.v), cfg).value;
    r.records.push_back({ModificationKind::EdgeDeletion, edge_detail(e), v, v - r.base_value, BoundStatus::NotApplicable});
  };
  auto addition = [&](Edge e) {
    const int v = gamma_cer_solve(g.with_edge(e.u, e.v), cfg).value;
    BoundStatus b = BoundStatus::NotApplicable;
    if (monotone) b = v <= r.base_value ? BoundStatus::Holds : BoundStatus::Violated;
    r.records.push_back({ModificationKind::EdgeAddition, edge_detail(e), v, v - r.base_value, b});
  };

  switch (scope.kind) {
    case EdgeScope::Kind::AllDeletions:
      for (Edge e : g.edges()) deletion(e);
      break;
    case EdgeScope::Kind::AllAdditions:
      for (Edge e : complement(g).edges()) addition(e);
      break;
    case EdgeScope::Kind::Delete:
      check_edge(g, scope.edge);
      if (!g.adjacent(scope.edge.u, scope.edge.v)) {
        throw std::invalid_argument("cannot delete non-edge " + edge_detail(scope.edge));
      }
      deletion(scope.edge);
      break;
    case EdgeScope::Kind::Add:
      check_edge(g, scope.edge);
      if (g.adjacent(scope.edge.u, scope.edge.v)) {
        throw std::invalid_argument("cannot add existing edge " + edge_detail(scope.edge));
      }
      addition(scope.edge);
      break;
  }
  return r;
}

ModificationReport vertex_effects(const Graph& g, const VertexScope& scope, const SolverConfig& cfg) {
  ModificationReport r;
  r.base_value = gamma_cer_solve(g, cfg).value;
  if (scope.kind == VertexScope::Kind::AllDeletions) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const int value = gamma_cer_solve(g.without_vertex(v), cfg).value;
      r.records.push_back(
          {ModificationKind::VertexDeletion, std::to_string(v), value, value - r.base_value, BoundStatus::NotApplicable});
    }
    return r;
  }
  if (scope.neighbours.universe() != g.order()) throw std::invalid_argument("neighbour set does not match graph order");
  if (scope.neighbours.empty()) {
    throw std::invalid_argument("added vertex needs at least one neighbour (an isolated vertex always adds exactly 1)");
  }
  const int value = gamma_cer_solve(g.with_vertex(scope.neighbours), cfg).value;
  BoundStatus b = BoundStatus::NotApplicable;
  if (scope.neighbours.size() >= 2) b = value <= r.base_value + 1 ? BoundStatus::Holds : BoundStatus::Violated;
  r.records.push_back(
      {ModificationKind::VertexAddition, "+" + to_string(scope.neighbours), value, value - r.base_value, b});
  return r;
}

std::string_view to_string(NGReport::Regime r) {
  switch (r) {
    case NGReport::Regime::MinDelta0: return "min_delta_0";
    case NGReport::Regime::MinDelta1: return "min_delta_1";
    case NGReport::Regime::MinDeltaAtLeast2: return "min_delta_ge2";
  }
  return "?";
}

bool NGReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const NGCheck& c) { return c.holds; });
}

NGReport nordhaus_gaddum(const Graph& g, const SolverConfig& cfg) {
  const Graph gbar = complement(g);
  return nordhaus_gaddum(g, gamma_cer_solve(g, cfg).value, gamma_cer_solve(gbar, cfg).value);
}

NGReport nordhaus_gaddum(const Graph& g, int gcer_g, int gcer_gbar) {
  const Graph gbar = complement(g);
  NGReport r;
  const int n = g.order();
  r.n = n;
  r.gcer_g = gcer_g;
  r.gcer_gbar = gcer_gbar;
  r.sum = gcer_g + gcer_gbar;
  r.product = gcer_g * gcer_gbar;
  r.min_delta = std::min(g.min_degree(), gbar.min_degree());
  r.regime = r.min_delta == 0   ? NGReport::Regime::MinDelta0
             : r.min_delta == 1 ? NGReport::Regime::MinDelta1
                                : NGReport::Regime::MinDeltaAtLeast2;
  r.corona_in_g_or_complement = n > 0 && (recognize_corona(g).has_value() || recognize_corona(gbar).has_value());

  auto check = [&](std::string thm, std::string bound, bool holds) {
    r.checks.push_back({std::move(thm), std::move(bound), holds});
  };

  if (n == 2) check("OBS7.2", "sum = product = 4", r.sum == 4 && r.product == 4);
  if (n == 3) check("OBS7.2", "sum = 4 and product = 3", r.sum == 4 && r.product == 3);
  if (n == 4) {
    const std::pair<int, int> allowed[] = {{3, 2}, {5, 4}, {6, 6}, {8, 16}};
    const bool in_set = std::find(std::begin(allowed), std::end(allowed), std::pair{r.sum, r.product}) != std::end(allowed);
    check("OBS7.2", "(sum, product) in {(3,2),(5,4),(6,6),(8,16)}", in_set);
  }

  if (n >= 1 && r.min_delta >= 2) {
    check("COR7.1", "sum <= floor(n/2) + 2", r.sum <= n / 2 + 2);
    check("COR7.1", "product <= n", r.product <= n);
  }

  if (n >= 3 && r.min_delta == 0) {
    check("THM7.4", "sum <= n + 1", r.sum <= n + 1);
    check("THM7.4", "product <= n", r.product <= n);
    auto isolated_corona = [](const Graph& x) { return x.min_degree() == 0 && check_gamma_cer_equals_n(x); };
    const bool c = isolated_corona(g) || isolated_corona(gbar);
    const bool a = r.sum == n + 1;
    const bool b = r.product == n;
    check("THM7.4", "sum = n+1 <=> product = n <=> G or complement is edgeless or corona plus isolated vertices",
          a == b && b == c);
  }

  if (n >= 5) {
    check("THM7.5", "sum <= n + 2", r.sum <= n + 2);
    check("THM7.5", "product <= 2n", r.product <= 2 * n);
    const bool a = r.sum == n + 2;
    const bool b = r.product == 2 * n;
    check("THM7.5", "sum = n+2 <=> product = 2n <=> G or complement is a corona",
          a == b && b == r.corona_in_g_or_complement);
  }
  return r;
}

}  // namespace certdom

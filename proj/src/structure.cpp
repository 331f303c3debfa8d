#include "certdom/structure.hpp"

#include <sstream>

namespace certdom {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int ceil_div3(int n) { return (n + 2) / 3; }

/// Base of a single connected component (vertex set in g's numbering).
std::optional<VertexSet> component_corona_base(const Graph& g, const VertexSet& comp) {
  const int k = comp.size();
  if (k == 1) return std::nullopt;
  if (k == 2) return VertexSet(g.order(), {comp.first()});
  const VertexSet ls = leaves(g) & comp;
  const VertexSet inner = comp - ls;
  if (ls.size() != inner.size()) return std::nullopt;
  for (Vertex v : inner) {
    if (g.neighbours(v).intersection_size(ls) != 1) return std::nullopt;
  }
  return inner;
}

bool all_degrees(const Graph& g, int d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

bool is_cycle_component(const Graph& g, int n) {
  return g.order() == n && all_degrees(g, 2) && is_connected(g);
}

}  // namespace

std::string to_string(const StructureClass& c) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const structure::HasUniversalVertex& x) { os << "universal-vertex(" << x.vertex << ")"; },
                 [&](const structure::Path& x) { os << "path(" << x.n << ")"; },
                 [&](const structure::Cycle& x) { os << "cycle(" << x.n << ")"; },
                 [&](const structure::Complete& x) { os << "complete(" << x.n << ")"; },
                 [&](const structure::CompleteBipartite& x) {
                   os << "complete-bipartite(" << x.m << "," << x.n << ")";
                 },
                 [&](const structure::Wheel& x) { os << "wheel(" << x.n << ")"; },
                 [&](const structure::EmptyGraph& x) { os << "empty(" << x.n << ")"; },
                 [&](const structure::CoronaOf& x) { os << "corona-of" << to_string(x.base); },
                 [&](const structure::DiademOf& x) {
                   os << "diadem-of" << to_string(x.base) << "@" << x.strong_support;
                 },
             },
             c);
  return os.str();
}

std::optional<Vertex> find_universal_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return v;
  }
  return std::nullopt;
}

std::optional<int> recognize_path(const Graph& g) {
  const int n = g.order();
  if (n >= 1 && g.edge_count() == n - 1 && g.max_degree() <= 2 && is_connected(g)) return n;
  return std::nullopt;
}

std::optional<int> recognize_cycle(const Graph& g) {
  if (g.order() >= 3 && is_cycle_component(g, g.order())) return g.order();
  return std::nullopt;
}

std::optional<int> recognize_complete(const Graph& g) {
  if (g.order() >= 1 && all_degrees(g, g.order() - 1)) return g.order();
  return std::nullopt;
}

std::optional<std::pair<int, int>> recognize_complete_bipartite(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  // Vertex 0's side must be exactly V - N(0).
  const VertexSet other = g.neighbours(0);
  if (other.empty()) return std::nullopt;
  const VertexSet side = g.vertices() - other;
  for (Vertex v : side) {
    if (g.neighbours(v) != other) return std::nullopt;
  }
  for (Vertex v : other) {
    if (g.neighbours(v) != side) return std::nullopt;
  }
  const int a = side.size(), b = other.size();
  return std::pair{std::min(a, b), std::max(a, b)};
}

std::optional<Vertex> recognize_wheel(const Graph& g) {
  const int n = g.order();
  if (n < 4) return std::nullopt;
  for (Vertex h = 0; h < n; ++h) {
    if (g.degree(h) != n - 1) continue;
    if (is_cycle_component(g.without_vertex(h), n - 1)) return h;
  }
  return std::nullopt;
}

std::optional<VertexSet> recognize_corona(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  VertexSet base(g.order());
  for (const auto& comp : components(g)) {
    auto part = component_corona_base(g, comp.vertices);
    if (!part) return std::nullopt;
    base |= *part;
  }
  return base;
}

std::optional<DiademWitness> recognize_diadem(const Graph& g) {
  const VertexSet strong = strong_supports(g);
  if (strong.size() != 1) return std::nullopt;
  const Vertex s = strong.first();
  const VertexSet own = g.neighbours(s) & leaves(g);
  if (own.size() != 2) return std::nullopt;
  const Vertex dropped = own.first();
  const Vertex kept = own.next(dropped);

  VertexSet keep = g.vertices();
  keep.erase(dropped);
  auto local = recognize_corona(induced_subgraph(g, keep));
  if (!local) return std::nullopt;
  VertexSet base = lift(*local, keep, g.order());
  if (!base.contains(s)) {
    // s and its remaining leaf form a K2 component, whose base may be either end.
    if (g.degree(s) != 2 || !base.contains(kept)) return std::nullopt;
    base.erase(kept);
    base.insert(s);
  }
  return DiademWitness{base, s};
}

std::vector<ClosedForm> all_closed_forms(const Graph& g) {
  std::vector<ClosedForm> out;
  const int n = g.order();
  if (n == 1 || n >= 3) {
    if (auto u = find_universal_vertex(g)) out.push_back({structure::HasUniversalVertex{*u}, 1});
  }
  if (auto k = recognize_complete(g)) out.push_back({structure::Complete{*k}, gamma_cer_complete(*k)});
  if (auto mn = recognize_complete_bipartite(g)) {
    out.push_back({structure::CompleteBipartite{mn->first, mn->second},
                   gamma_cer_complete_bipartite(mn->first, mn->second)});
  }
  if (auto p = recognize_path(g)) out.push_back({structure::Path{*p}, gamma_cer_path(*p)});
  if (auto c = recognize_cycle(g)) out.push_back({structure::Cycle{*c}, gamma_cer_cycle(*c)});
  if (auto h = recognize_wheel(g)) out.push_back({structure::Wheel{n, *h}, gamma_cer_wheel(n)});
  if (auto base = recognize_corona(g)) out.push_back({structure::CoronaOf{*base}, n});
  if (g.edge_count() == 0) out.push_back({structure::EmptyGraph{n}, n});
  return out;
}

std::optional<ClosedForm> closed_form(const Graph& g) {
  auto all = all_closed_forms(g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool check_gamma_cer_equals_n(const Graph& g) {
  for (const auto& comp : components(g)) {
    if (comp.vertices.size() == 1) continue;
    if (!component_corona_base(g, comp.vertices)) return false;
  }
  return true;
}

bool check_gamma_cer_equals_n_minus_2(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("n-2 characterisation needs order >= 3");
  int special = 0;
  for (const auto& comp : components(g)) {
    const Graph& h = comp.graph;
    if (h.order() == 1 || component_corona_base(g, comp.vertices)) continue;
    if (is_cycle_component(h, 3) || is_cycle_component(h, 4) || recognize_diadem(h)) {
      ++special;
      continue;
    }
    return false;
  }
  return special == 1;
}

int gamma_cer_path(int n) {
  if (n == 1 || n == 3) return 1;
  if (n == 2) return 2;
  if (n == 4) return 4;
  return ceil_div3(n);
}

int gamma_cer_cycle(int n) { return ceil_div3(n); }

int gamma_cer_complete(int n) { return n == 2 ? 2 : 1; }

int gamma_cer_complete_bipartite(int m, int n) { return (m == 1 && n > 1) ? 1 : 2; }

int gamma_cer_wheel(int) { return 1; }

}  // namespace certdom

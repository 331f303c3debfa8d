#include "certdom/families.hpp"

#include <cctype>
#include <sstream>

#include "certdom/graph_io.hpp"

namespace certdom {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_order(long long n) {
  require(n >= 0 && n <= kMaxVertices,
          "generated order " + std::to_string(n) + " exceeds supported maximum " + std::to_string(kMaxVertices));
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  require_order(n);
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  require_order(n);
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  require_order(n);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph::from_edges(n, es);
}

Graph complete_bipartite_graph(int m, int n) {
  require(m >= 1 && m <= n, "complete bipartite graph needs 1 <= m <= n");
  require_order(static_cast<long long>(m) + n);
  std::vector<Edge> es;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = m; v < m + n; ++v) es.push_back({u, v});
  return Graph::from_edges(m + n, es);
}

Graph wheel_graph(int n) {
  require(n >= 4, "wheel needs n >= 4 vertices");
  require_order(n);
  std::vector<Edge> es;
  const int rim = n - 1;
  for (int k = 0; k < rim; ++k) {
    es.push_back({0, 1 + k});
    es.push_back({1 + k, 1 + (k + 1) % rim});
  }
  return Graph::from_edges(n, es);
}

Graph empty_graph(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  require_order(n);
  return Graph(n);
}

Graph corona(const Graph& h, const Graph& f) {
  const long long hn = h.order(), fn = f.order();
  require_order(hn * (1 + fn));
  const int n = static_cast<int>(hn * (1 + fn));
  std::vector<Edge> es = h.edges();
  for (Vertex i = 0; i < hn; ++i) {
    const int base = static_cast<int>(hn + i * fn);
    for (Edge e : f.edges()) es.push_back({base + e.u, base + e.v});
    for (Vertex x = 0; x < fn; ++x) es.push_back({i, base + x});
  }
  return Graph::from_edges(n, es);
}

Graph diadem(const Graph& h) {
  require(h.order() >= 1, "diadem needs a nonempty base graph");
  Graph c = corona(h, Graph(1));
  VertexSet nbrs(c.order());
  nbrs.insert(0);
  return c.with_vertex(nbrs);
}

Graph fig1_graph(int i) {
  require(i >= 1, "fig1 needs i >= 1");
  require_order(4LL * i + 3);
  std::vector<Edge> es{{0, 1}, {1, 2}};
  for (int j = 0; j < i; ++j) {
    const Vertex b = 3 + 4 * j;
    es.insert(es.end(), {{2, b}, {b, b + 1}, {b + 1, b + 2}, {b + 2, b + 3}});
  }
  return Graph::from_edges(4 * i + 3, es);
}

VertexSet fig1_certified_set(int i) {
  VertexSet d(4 * i + 3, {0, 1, 2});
  for (int j = 0; j < i; ++j) d.insert(5 + 4 * j);
  return d;
}

std::pair<VertexSet, VertexSet> fig1_dd2_pair(int i) {
  VertexSet d(4 * i + 3, {1});
  VertexSet d2(4 * i + 3, {0, 2});
  for (int j = 0; j < i; ++j) {
    const Vertex b = 3 + 4 * j;
    d.insert(b);
    d.insert(b + 2);
    d2.insert(b + 1);
    d2.insert(b + 3);
  }
  return {d, d2};
}

namespace {

std::vector<Edge> fig3_branches(int i) {
  std::vector<Edge> es;
  for (int j = 0; j < i; ++j) {
    const Vertex b = 4 + 2 * j;
    es.push_back({2, b});
    es.push_back({b, b + 1});
  }
  return es;
}

}  // namespace

Graph fig3a_graph(int i) {
  require(i >= 1, "fig3a needs i >= 1");
  require_order(2LL * i + 4);
  std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (Edge e : fig3_branches(i)) es.push_back(e);
  return Graph::from_edges(2 * i + 4, es);
}

Edge fig3a_marked_edge() { return {0, 3}; }

Graph fig3b_graph(int i) {
  require(i >= 1, "fig3b needs i >= 1");
  require_order(2LL * i + 4);
  std::vector<Edge> es{{0, 1}, {1, 2}};
  for (Edge e : fig3_branches(i)) es.push_back(e);
  return Graph::from_edges(2 * i + 4, es);
}

Edge fig3b_dashed_edge() { return {2, 3}; }

Graph fig4_graph(int i) {
  require(i >= 1, "fig4 needs i >= 1");
  require_order(2LL * i + 1);
  std::vector<Edge> es;
  for (int j = 0; j < i; ++j) {
    const Vertex b = 1 + 2 * j;
    es.push_back({kFig4Centre, b});
    es.push_back({b, b + 1});
  }
  return Graph::from_edges(2 * i + 1, es);
}

Graph build_family(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  auto param = [&](std::size_t k) {
    require(spec.params.size() > k, to_string(spec) + ": missing parameter");
    return spec.params[k];
  };
  auto arity = [&](std::size_t params, std::size_t operands) {
    require(spec.params.size() == params && spec.operands.size() == operands,
            "wrong number of arguments in family spec");
  };
  switch (spec.kind) {
    case K::Path: arity(1, 0); return path_graph(param(0));
    case K::Cycle: arity(1, 0); return cycle_graph(param(0));
    case K::Complete: arity(1, 0); return complete_graph(param(0));
    case K::CompleteBipartite: arity(2, 0); return complete_bipartite_graph(param(0), param(1));
    case K::Wheel: arity(1, 0); return wheel_graph(param(0));
    case K::Empty: arity(1, 0); return empty_graph(param(0));
    case K::Fig1: arity(1, 0); return fig1_graph(param(0));
    case K::Fig3a: arity(1, 0); return fig3a_graph(param(0));
    case K::Fig3b: arity(1, 0); return fig3b_graph(param(0));
    case K::Fig4: arity(1, 0); return fig4_graph(param(0));
    case K::Corona:
      arity(0, 2);
      return corona(build_family(spec.operands[0]), build_family(spec.operands[1]));
    case K::Diadem: arity(0, 1); return diadem(build_family(spec.operands[0]));
    case K::Explicit:
      require(spec.graph.has_value(), "explicit family spec without a graph");
      return *spec.graph;
    case K::Union: {
      Graph g;
      for (const auto& part : spec.operands) g = disjoint_union(g, build_family(part));
      return g;
    }
  }
  throw std::invalid_argument("unknown family kind");
}

namespace {

struct KindName {
  FamilySpec::Kind kind;
  std::string_view name;
  int params;
};

constexpr KindName kNames[] = {
    {FamilySpec::Kind::Path, "path", 1},
    {FamilySpec::Kind::Cycle, "cycle", 1},
    {FamilySpec::Kind::Complete, "complete", 1},
    {FamilySpec::Kind::CompleteBipartite, "complete-bipartite", 2},
    {FamilySpec::Kind::Wheel, "wheel", 1},
    {FamilySpec::Kind::Empty, "empty", 1},
    {FamilySpec::Kind::Fig1, "fig1", 1},
    {FamilySpec::Kind::Fig3a, "fig3a", 1},
    {FamilySpec::Kind::Fig3b, "fig3b", 1},
    {FamilySpec::Kind::Fig4, "fig4", 1},
    {FamilySpec::Kind::Corona, "corona", -1},
    {FamilySpec::Kind::Diadem, "diadem", -1},
    {FamilySpec::Kind::Union, "union", -1},
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec s = spec();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("family spec column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  FamilySpec spec() {
    skip_ws();
    if (text_.substr(pos_).starts_with("g6:")) {
      pos_ += 3;
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] >= 63 && text_[pos_] <= 126) ++pos_;
      try {
        return FamilySpec::explicit_graph(parse_graph6(text_.substr(start, pos_ - start)));
      } catch (const std::exception& e) {
        fail(std::string("bad graph6 operand: ") + e.what());
      }
    }
    const std::size_t name_pos = pos_;
    std::string_view name = word();
    const KindName* kind = nullptr;
    for (const auto& k : kNames) {
      if (k.name == name) kind = &k;
    }
    if (kind == nullptr) {
      pos_ = name_pos;
      fail("unknown family \"" + std::string(name) + "\"");
    }
    FamilySpec out{kind->kind, {}, {}, {}};
    if (kind->params < 0) {
      expect('(');
      out.operands.push_back(spec());
      while (peek(',')) {
        ++pos_;
        out.operands.push_back(spec());
      }
      expect(')');
      return out;
    }
    for (int k = 0; k < kind->params; ++k) {
      std::string_view digits = word();
      int value = 0;
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
        fail("expected integer parameter");
      }
      value = std::stoi(std::string(digits));
      out.params.push_back(value);
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const FamilySpec& spec) {
  if (spec.kind == FamilySpec::Kind::Explicit) {
    return "g6:" + (spec.graph ? encode_graph6(*spec.graph) : std::string("?"));
  }
  std::ostringstream os;
  for (const auto& k : kNames) {
    if (k.kind == spec.kind) os << k.name;
  }
  if (!spec.operands.empty() || spec.params.empty()) {
    os << '(';
    for (std::size_t i = 0; i < spec.operands.size(); ++i) os << (i ? ", " : "") << to_string(spec.operands[i]);
    os << ')';
  } else {
    for (int p : spec.params) os << ' ' << p;
  }
  return os.str();
}

}  // namespace certdom

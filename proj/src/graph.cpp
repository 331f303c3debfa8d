#include "certdom/graph.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace certdom {

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " out of range for order " + std::to_string(n));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].insert(e.v);
    g.adj_[e.v].insert(e.u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  check_order(static_cast<int>(rows.size()));
  Graph g;
  g.adj_ = std::move(rows);
  g.validate();
  return g;
}

void Graph::validate() const {
  const int n = order();
  for (Vertex v = 0; v < n; ++v) {
    if (adj_[v].universe() != n) throw std::invalid_argument("adjacency row universe mismatch");
    if (adj_[v].contains(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    for (Vertex u : adj_[v]) {
      if (!adj_[u].contains(v)) {
        throw std::invalid_argument("asymmetric adjacency between " + std::to_string(u) + " and " +
                                    std::to_string(v));
      }
    }
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

VertexSet Graph::closed_neighbours(const VertexSet& s) const {
  VertexSet out = s;
  for (Vertex v : s) out |= adj_[v];
  return out;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int d = order();
  for (const auto& row : adj_) d = std::min(d, row.size());
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& row : adj_) d = std::max(d, row.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u].insert(v);
  g.adj_[v].insert(u);
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  Graph g = *this;
  g.adj_[u].erase(v);
  g.adj_[v].erase(u);
  return g;
}

Graph Graph::without_vertex(Vertex v) const {
  check_vertex(*this, v);
  VertexSet keep = vertices();
  keep.erase(v);
  return induced_subgraph(*this, keep);
}

Graph Graph::with_vertex(const VertexSet& nbrs) const {
  if (nbrs.universe() != order()) throw std::invalid_argument("neighbour set universe mismatch");
  const int n = order() + 1;
  check_order(n);
  std::vector<Edge> es = edges();
  for (Vertex u : nbrs) es.push_back({u, n - 1});
  return from_edges(n, es);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet row = g.neighbours(v).complement();
    row.erase(v);
    rows.push_back(row);
  }
  return Graph::from_adjacency(std::move(rows));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> index(g.order(), -1);
  int k = 0;
  for (Vertex v : s) index[v] = k++;
  std::vector<VertexSet> rows(k, VertexSet(k));
  for (Vertex v : s) {
    for (Vertex u : g.neighbours(v) & s) rows[index[v]].insert(index[u]);
  }
  return Graph::from_adjacency(std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  std::vector<Edge> es = a.edges();
  for (Edge e : b.edges()) es.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.order() + b.order(), es);
}

std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet part(g.order());
    part.insert(unseen.first());
    VertexSet frontier = part;
    while (!frontier.empty()) {
      VertexSet grown = g.closed_neighbours(frontier);
      frontier = grown - part;
      part |= grown;
    }
    unseen -= part;
    out.push_back({part, induced_subgraph(g, part)});
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

VertexSet lift(const VertexSet& local, const VertexSet& component_vertices, int parent_order) {
  VertexSet out(parent_order);
  int i = 0;
  for (Vertex v : component_vertices) {
    if (local.contains(i)) out.insert(v);
    ++i;
  }
  return out;
}

VertexSet leaves(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

namespace {

VertexSet supports_with_leaf_count(const Graph& g, bool strong) {
  const VertexSet ls = leaves(g);
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    int k = g.neighbours(v).intersection_size(ls);
    if (strong ? k >= 2 : k == 1) out.insert(v);
  }
  return out;
}

}  // namespace

VertexSet weak_supports(const Graph& g) { return supports_with_leaf_count(g, false); }

VertexSet strong_supports(const Graph& g) { return supports_with_leaf_count(g, true); }

VertexSet supports(const Graph& g) { return weak_supports(g) | strong_supports(g); }

VertexSet strong_support_leaves(const Graph& g) {
  VertexSet out(g.order());
  const VertexSet ls = leaves(g);
  for (Vertex s : strong_supports(g)) out |= g.neighbours(s) & ls;
  return out;
}

Vertex support_of(const Graph& g, Vertex leaf) {
  check_vertex(g, leaf);
  if (g.degree(leaf) != 1) throw std::invalid_argument("vertex " + std::to_string(leaf) + " is not a leaf");
  return g.neighbours(leaf).first();
}

Vertex leaf_of(const Graph& g, Vertex weak_support) {
  check_vertex(g, weak_support);
  const VertexSet own = g.neighbours(weak_support) & leaves(g);
  if (own.size() != 1) {
    throw std::invalid_argument("vertex " + std::to_string(weak_support) + " is not a weak support");
  }
  return own.first();
}

}  // namespace certdom

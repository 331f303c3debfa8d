#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "certdom/vertex_set.hpp"

namespace certdom {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  bool operator==(const Edge&) const = default;
};

/**
 * Immutable simple undirected graph on vertices 0..order()-1.
 *
 * Each vertex stores its open neighbourhood as a VertexSet. Every constructor
 * validates symmetry, irreflexivity and range, so a Graph that exists is a
 * valid simple graph. Modifications return new graphs.
 */
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops, out-of-range endpoints or n out of range.
  /// Duplicate edges are merged.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Throws std::invalid_argument if the rows are not a symmetric irreflexive relation.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;

  const VertexSet& neighbours(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbours(Vertex v) const {
    VertexSet s = adj_[v];
    s.insert(v);
    return s;
  }
  /// Union of closed neighbourhoods of the members of s.
  VertexSet closed_neighbours(const VertexSet& s) const;

  int degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  /// 0 for the null graph.
  int min_degree() const;
  int max_degree() const;

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  Graph without_vertex(Vertex v) const;
  /// Appends a new vertex (index order()) adjacent to every member of nbrs.
  Graph with_vertex(const VertexSet& nbrs) const;

  bool operator==(const Graph&) const = default;

 private:
  void validate() const;

  std::vector<VertexSet> adj_;
};

/// uv is an edge iff u != v and uv is not an edge of g.
Graph complement(const Graph& g);

/// Vertices of s renumbered 0..|s|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Vertices of a come first, then those of b shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

struct Component {
  VertexSet vertices;  // in the parent graph's numbering
  Graph graph;         // induced subgraph, renumbered in ascending order
};

/// Connected components ordered by their smallest vertex.
std::vector<Component> components(const Graph& g);

bool is_connected(const Graph& g);

/// Maps a set over a component's numbering back to the parent graph.
VertexSet lift(const VertexSet& local, const VertexSet& component_vertices, int parent_order);

// Leaf/support vocabulary.

/// Vertices of degree one.
VertexSet leaves(const Graph& g);
/// Vertices adjacent to exactly one leaf.
VertexSet weak_supports(const Graph& g);
/// Vertices adjacent to at least two leaves.
VertexSet strong_supports(const Graph& g);
/// Weak and strong supports together.
VertexSet supports(const Graph& g);
/// Leaves adjacent to strong supports.
VertexSet strong_support_leaves(const Graph& g);

/// The unique neighbour of a leaf. Throws std::invalid_argument if deg(leaf) != 1.
Vertex support_of(const Graph& g, Vertex leaf);
/// The unique leaf of a weak support. Throws std::invalid_argument otherwise.
Vertex leaf_of(const Graph& g, Vertex weak_support);

}  // namespace certdom

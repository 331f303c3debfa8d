#pragma once

#include <string_view>

#include "certdom/graph.hpp"

namespace certdom {

/// Status of a vertex relative to a candidate set D.
enum class VertexStatus {
  Outside,       // not in D
  Shadowed,      // in D, no neighbour outside D
  HalfShadowed,  // in D, exactly one neighbour outside D
  Illuminated,   // in D, two or more neighbours outside D
};

std::string_view to_string(VertexStatus s);

/// A pair of disjoint vertex sets; see is_dd2_pair.
struct DD2Pair {
  VertexSet d;
  VertexSet d2;
};

/// Vertices outside d with no neighbour in d.
VertexSet undominated(const Graph& g, const VertexSet& d);

bool is_dominating(const Graph& g, const VertexSet& d);

VertexStatus classify_vertex(const Graph& g, const VertexSet& d, Vertex v);

/// Dominating, and no member of d has exactly one neighbour outside d.
bool is_certified_dominating(const Graph& g, const VertexSet& d);

/// Dominating, and every vertex outside x has at least two neighbours in x.
bool is_2dominating(const Graph& g, const VertexSet& x);

/// Disjoint, d dominating, d2 2-dominating.
bool is_dd2_pair(const Graph& g, const DD2Pair& p);

/// d is dominating and no d - {v} is.
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

}  // namespace certdom

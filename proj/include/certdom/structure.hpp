#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "certdom/graph.hpp"

namespace certdom {

namespace structure {

struct HasUniversalVertex {
  Vertex vertex;
};
struct Path {
  int n;
};
struct Cycle {
  int n;
};
struct Complete {
  int n;
};
struct CompleteBipartite {
  int m;
  int n;
};
struct Wheel {
  int n;
  Vertex hub;
};
struct EmptyGraph {
  int n;
};
struct CoronaOf {
  VertexSet base;
};
struct DiademOf {
  VertexSet base;
  Vertex strong_support;
};

}  // namespace structure

/// A recognised structural class with witness data.
using StructureClass =
    std::variant<structure::HasUniversalVertex, structure::Path, structure::Cycle, structure::Complete,
                 structure::CompleteBipartite, structure::Wheel, structure::EmptyGraph, structure::CoronaOf,
                 structure::DiademOf>;

/// e.g. "path(10)", "corona-of{0,1,2}".
std::string to_string(const StructureClass& c);

/// Smallest vertex of degree n-1.
std::optional<Vertex> find_universal_vertex(const Graph& g);

// Direct shape tests. Each returns the family parameter on success.
std::optional<int> recognize_path(const Graph& g);
std::optional<int> recognize_cycle(const Graph& g);
std::optional<int> recognize_complete(const Graph& g);
/// Part sizes (m, n) with m <= n.
std::optional<std::pair<int, int>> recognize_complete_bipartite(const Graph& g);
/// Returns the hub.
std::optional<Vertex> recognize_wheel(const Graph& g);

/**
 * Base set B with g = G[B] o K1, or nullopt.
 *
 * Per component: K2 contributes its lower vertex; a component of order >= 3
 * qualifies iff every non-leaf has exactly one leaf neighbour and leaves and
 * non-leaves are equally many; K1 disqualifies.
 */
std::optional<VertexSet> recognize_corona(const Graph& g);

struct DiademWitness {
  VertexSet base;
  Vertex strong_support;
};

/// (base of H, the strong support carrying the extra leaf) if g is a diadem graph.
std::optional<DiademWitness> recognize_diadem(const Graph& g);

struct ClosedForm {
  StructureClass cls;
  int value;
};

/// Every class g belongs to, in priority order
/// (universal vertex, complete, complete bipartite, path, cycle, wheel, corona, empty),
/// each with its certified domination number. Intended for connected graphs.
std::vector<ClosedForm> all_closed_forms(const Graph& g);

/// First entry of all_closed_forms, if any.
std::optional<ClosedForm> closed_form(const Graph& g);

/// Every component is K1 or a corona.
bool check_gamma_cer_equals_n(const Graph& g);

/// Exactly one component is C3, C4 or a connected diadem graph, all others are K1 or coronas.
/// Throws std::invalid_argument when g.order() < 3.
bool check_gamma_cer_equals_n_minus_2(const Graph& g);

// Certified domination numbers of the named families.
int gamma_cer_path(int n);
int gamma_cer_cycle(int n);
int gamma_cer_complete(int n);
int gamma_cer_complete_bipartite(int m, int n);
int gamma_cer_wheel(int n);

}  // namespace certdom

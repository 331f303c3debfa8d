#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "certdom/graph.hpp"

namespace certdom {

// Direct generators. Vertex layouts are part of the contract and are relied
// on by the figure fixtures below.

/// 0-1-...-(n-1), n >= 1.
Graph path_graph(int n);
/// Path closed by edge (n-1)-0, n >= 3.
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Parts {0..m-1} and {m..m+n-1}, 1 <= m <= n.
Graph complete_bipartite_graph(int m, int n);
/// Hub 0 joined to the cycle 1-2-...-(n-1)-1; n >= 4 total vertices.
Graph wheel_graph(int n);
Graph empty_graph(int n);

/// H's vertices keep their indices; the copy of F attached to H-vertex i
/// occupies |H| + i*|F| .. |H| + (i+1)*|F| - 1.
Graph corona(const Graph& h, const Graph& f);
/// corona(h, K1) plus a new last vertex 2|H| attached to the support vertex 0.
Graph diadem(const Graph& h);

/// Path 0-1-2 whose end 2 carries i pendant P4 branches; branch j is
/// 3+4j - 4+4j - 5+4j - 6+4j with 3+4j adjacent to 2. Order 4i+3.
Graph fig1_graph(int i);
/// Black vertices of the minimum certified dominating set drawn for fig1_graph(i).
VertexSet fig1_certified_set(int i);
/// Black (D) and grey (D2) vertices of the drawn DD2-pair for fig1_graph(i).
std::pair<VertexSet, VertexSet> fig1_dd2_pair(int i);

/// Cycle 0-1-2-3-0 with i pendant P2 paths at vertex 2; branch j is
/// 4+2j - 5+2j with 4+2j adjacent to 2. Order 2i+4.
Graph fig3a_graph(int i);
/// The marked cycle edge whose deletion turns fig3a_graph(i) into a corona.
Edge fig3a_marked_edge();
/// fig3a_graph(i) without edges 0-3 and 2-3: vertex 3 isolated.
Graph fig3b_graph(int i);
/// The dashed edge whose addition turns fig3b_graph(i) into a corona.
Edge fig3b_dashed_edge();

/// Centre 0 with i pendant P2 paths; branch j is 1+2j - 2+2j. Order 2i+1.
Graph fig4_graph(int i);
/// Centre of fig4_graph, the attachment point of the added leaf.
inline constexpr Vertex kFig4Centre = 0;

/**
 * Symbolic description of a parametric graph.
 *
 * Text syntax (parse_family_spec): a family name followed by integer
 * parameters, or an operator applied to parenthesised operands:
 *   path 5 | cycle 6 | complete 4 | complete-bipartite 2 3 | wheel 8 | empty 3
 *   fig1 2 | fig3a 2 | fig3b 2 | fig4 3 | g6:DQc
 *   corona(cycle 5, complete 1) | diadem(union(complete 3, complete 2))
 */
struct FamilySpec {
  enum class Kind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Wheel,
    Empty,
    Corona,
    Diadem,
    Fig1,
    Fig3a,
    Fig3b,
    Fig4,
    Explicit,
    Union,
  };

  Kind kind = Kind::Empty;
  std::vector<int> params;
  std::vector<FamilySpec> operands;
  std::optional<Graph> graph;

  static FamilySpec path(int n) { return {Kind::Path, {n}, {}, {}}; }
  static FamilySpec cycle(int n) { return {Kind::Cycle, {n}, {}, {}}; }
  static FamilySpec complete(int n) { return {Kind::Complete, {n}, {}, {}}; }
  static FamilySpec complete_bipartite(int m, int n) { return {Kind::CompleteBipartite, {m, n}, {}, {}}; }
  static FamilySpec wheel(int n) { return {Kind::Wheel, {n}, {}, {}}; }
  static FamilySpec empty(int n) { return {Kind::Empty, {n}, {}, {}}; }
  static FamilySpec corona(FamilySpec h, FamilySpec f) { return {Kind::Corona, {}, {std::move(h), std::move(f)}, {}}; }
  static FamilySpec diadem(FamilySpec h) { return {Kind::Diadem, {}, {std::move(h)}, {}}; }
  static FamilySpec fig1(int i) { return {Kind::Fig1, {i}, {}, {}}; }
  static FamilySpec fig3a(int i) { return {Kind::Fig3a, {i}, {}, {}}; }
  static FamilySpec fig3b(int i) { return {Kind::Fig3b, {i}, {}, {}}; }
  static FamilySpec fig4(int i) { return {Kind::Fig4, {i}, {}, {}}; }
  static FamilySpec explicit_graph(Graph g) { return {Kind::Explicit, {}, {}, std::move(g)}; }
  static FamilySpec disjoint(std::vector<FamilySpec> parts) { return {Kind::Union, {}, std::move(parts), {}}; }
};

/// Throws std::invalid_argument on invalid parameters.
Graph build_family(const FamilySpec& spec);

/// Throws std::invalid_argument with a column on syntax errors.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

}  // namespace certdom

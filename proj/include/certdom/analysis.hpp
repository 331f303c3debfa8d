#pragma once

#include <optional>
#include <string>
#include <vector>

#include "certdom/graph.hpp"
#include "certdom/solver.hpp"

namespace certdom {

struct BoundCheck {
  std::string name;
  int lhs;
  int rhs;
  bool holds;  // lhs <= rhs
};

struct BoundReport {
  int n = 0;
  int gamma = 0;
  int gamma_cer = 0;
  int s1_size = 0;
  int s2_size = 0;
  /// Leaves adjacent to strong supports.
  int strong_support_leaf_count = 0;
  std::vector<BoundCheck> bounds;

  struct Equality {
    bool holds = false;  // gamma_cer == gamma
    /// Whether the minimum dominating sets were searched (order within the exhaustive bound).
    bool searched = false;
    /// A minimum dominating set D with N(s) - L not inside D for every weak support s.
    std::optional<VertexSet> lemma43_witness;
  } equality_gamma;
};

BoundReport bound_report(const Graph& g, const SolverConfig& cfg = {}, int max_order = kDefaultOracleBound);

/// First minimum dominating set D with N(s) - L not a subset of D for all weak supports s.
/// With exclude_leaves, only sets containing no leaf qualify.
std::optional<VertexSet> find_lemma43_witness(const Graph& g, int max_order = kDefaultOracleBound,
                                              bool exclude_leaves = false);

enum class ModificationKind { EdgeDeletion, EdgeAddition, VertexDeletion, VertexAddition };

std::string_view to_string(ModificationKind k);

/// Whether a modification falls under a monotonicity bound and whether it holds.
enum class BoundStatus { NotApplicable, Holds, Violated };

std::string_view to_string(BoundStatus s);

struct Modification {
  ModificationKind kind;
  std::string detail;  // "u-v", "v", or "+{a,b}"
  int new_value;
  int delta;  // new_value - base_value
  BoundStatus bound;
};

struct ModificationReport {
  int base_value = 0;
  std::vector<Modification> records;
  int violations() const;
};

/// Single-edge operations; the edge must exist (deletion) or be absent (addition).
struct EdgeScope {
  enum class Kind { AllDeletions, AllAdditions, Delete, Add };
  Kind kind = Kind::AllDeletions;
  Edge edge{};

  static EdgeScope all_deletions() { return {Kind::AllDeletions, {}}; }
  static EdgeScope all_additions() { return {Kind::AllAdditions, {}}; }
  static EdgeScope remove(Edge e) { return {Kind::Delete, e}; }
  static EdgeScope add(Edge e) { return {Kind::Add, e}; }
};

/// Additions to connected graphs are checked for gamma_cer(G+e) <= gamma_cer(G);
/// additions to disconnected graphs are reported with BoundStatus::NotApplicable.
/// Throws std::invalid_argument on an invalid edge.
ModificationReport edge_effects(const Graph& g, const EdgeScope& scope, const SolverConfig& cfg = {});

struct VertexScope {
  enum class Kind { AllDeletions, Add };
  Kind kind = Kind::AllDeletions;
  VertexSet neighbours;

  static VertexScope all_deletions() { return {Kind::AllDeletions, {}}; }
  static VertexScope add(VertexSet nbrs) { return {Kind::Add, std::move(nbrs)}; }
};

/// Additions with two or more neighbours are checked for gamma_cer(G+v) <= gamma_cer(G) + 1;
/// leaf additions carry no bound. Throws std::invalid_argument on an empty or foreign neighbour set.
ModificationReport vertex_effects(const Graph& g, const VertexScope& scope, const SolverConfig& cfg = {});

struct NGCheck {
  std::string theorem;
  std::string bound;
  bool holds;
};

struct NGReport {
  int n = 0;
  int gcer_g = 0;
  int gcer_gbar = 0;
  int sum = 0;
  int product = 0;
  int min_delta = 0;  // min(delta(G), delta(complement))
  enum class Regime { MinDelta0, MinDelta1, MinDeltaAtLeast2 } regime = Regime::MinDelta0;
  bool corona_in_g_or_complement = false;
  std::vector<NGCheck> checks;

  bool all_hold() const;
};

std::string_view to_string(NGReport::Regime r);

/// Nordhaus-Gaddum quantities for g and its complement with every applicable bound evaluated.
NGReport nordhaus_gaddum(const Graph& g, const SolverConfig& cfg = {});

/// Same, from already-known values (used by the exhaustive suite).
NGReport nordhaus_gaddum(const Graph& g, int gcer_g, int gcer_gbar);

}  // namespace certdom

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "certdom/domination.hpp"
#include "certdom/graph.hpp"

namespace certdom {

/// Default largest order accepted by the exhaustive routines.
inline constexpr int kDefaultOracleBound = 20;

/// An exhaustive routine was asked to handle a graph above its order bound.
class OracleBoundError : public std::invalid_argument {
 public:
  OracleBoundError(int order, int bound)
      : std::invalid_argument("graph order " + std::to_string(order) + " exceeds exhaustive bound " +
                              std::to_string(bound)) {}
};

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t forced_vertices = 0;
  std::uint64_t components_split = 0;
  std::uint64_t closed_form_hits = 0;
};

struct SolveResult {
  int value = 0;
  VertexSet certificate;
  SolveStats stats;
  /// False when a node limit stopped the search; value is then only an upper bound.
  bool proven = true;
};

struct SolverConfig {
  bool use_reductions = true;
  bool use_closed_forms = true;
  std::optional<std::uint64_t> node_limit;
};

// Exhaustive ground truth. Subsets are tried by size, then lexicographically;
// the first hit is returned.

SolveResult gamma_oracle(const Graph& g, int max_order = kDefaultOracleBound);
SolveResult gamma_cer_oracle(const Graph& g, int max_order = kDefaultOracleBound);

/**
 * Exact certified domination number with the lexicographically smallest
 * optimal certificate.
 *
 * Components are solved separately and summed. A component in a recognised
 * family takes its value from the closed form. Otherwise a branch-and-bound
 * search runs with every support vertex fixed inside the set, seeded with the
 * gamma-set-plus-leaves construction as incumbent, branching on the closed
 * neighbourhood of an undominated vertex and pruning with a disjoint
 * closed-neighbourhood packing bound.
 *
 * Throws std::invalid_argument if cfg.node_limit is 0.
 */
SolveResult gamma_cer_solve(const Graph& g, const SolverConfig& cfg = {});

/// Exact domination number, same search skeleton without certification.
SolveResult gamma_solve(const Graph& g, const SolverConfig& cfg = {});

/// All minimum dominating sets in lexicographic order.
std::vector<VertexSet> all_min_dominating_sets(const Graph& g, int max_order = kDefaultOracleBound);

/**
 * A DD2-pair (D, V - D) with |D| minimal, or with |D| <= max_d_size when given.
 *
 * Graphs without isolated vertices or weak supports are handled
 * constructively from a minimum certified dominating set, which then has
 * size gamma(G). Otherwise dominating sets are enumerated smallest first.
 */
std::optional<DD2Pair> find_dd2_pair(const Graph& g, std::optional<int> max_d_size = std::nullopt,
                                     int max_order = kDefaultOracleBound);

}  // namespace certdom

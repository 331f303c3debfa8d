#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "certdom/graph.hpp"
#include "certdom/json_report.hpp"

namespace certdom {

/// Claim identifiers in report order.
///
/// Besides the statement identifiers: SOLVER-ORACLE compares the search engine
/// with exhaustive enumeration; GCER-RANGE checks gamma <= gamma_cer <= n and
/// gamma_cer != n - 1; the *-LEAFFREE variants of LEM4.3 and COR4.4 only accept
/// leaf-free minimum dominating sets as witnesses; OBS7.2-CORRECTED checks the
/// order-4 pairs against {(3,2),(5,4),(6,8),(8,16)}.
const std::vector<std::string>& all_claim_ids();

struct ClaimResult {
  std::string claim_id;
  bool applicable = false;
  bool holds = false;  // meaningful only when applicable
  std::optional<Json> witness;
};

struct TheoremReport {
  std::string graph_id;  // graph6
  int order = 0;
  std::vector<ClaimResult> claims;

  int applicable_count() const;
  int failure_count() const;
  bool ok() const { return failure_count() == 0; }
};

struct CheckOptions {
  /// Largest order for the oracle comparison and the exhaustive minimum-set claims.
  int exhaustive_max_order = 12;
  /// Largest order for which every vertex subset is tested against the support claim.
  int subset_sweep_max_order = 10;
  /// Largest order for the added-vertex sweep (all neighbour sets of size >= 2).
  int vertex_addition_max_order = 5;
};

/// Checks a fixed claim selection against single graphs. Thread-safe.
class ClaimChecker {
 public:
  /// Empty selection means every claim. Throws std::invalid_argument on an unknown id.
  explicit ClaimChecker(std::vector<std::string> claims = {}, CheckOptions opts = {});

  TheoremReport check(const Graph& g) const;
  const std::vector<std::string>& claims() const { return claims_; }

 private:
  std::vector<std::string> claims_;
  CheckOptions opts_;
};

struct SuiteConfig {
  int n_max = 6;
  /// When set, graphs come from this graph6 file instead of internal enumeration.
  std::optional<std::string> graph6_file;
  std::vector<std::string> claims;
  int jobs = 1;
  bool unsafe_large = false;
  /// When false, every graph is checked and failures are only tallied.
  bool stop_on_failure = true;
  CheckOptions check;
};

/// Worker count from CERTDOM_JOBS, or 1.
int default_jobs();

struct ClaimTally {
  std::string claim_id;
  std::uint64_t applicable = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct SuiteSummary {
  std::uint64_t graphs_checked = 0;
  std::uint64_t graphs_failed = 0;
  std::vector<ClaimTally> tallies;
  /// The first failing graph in input order; by default the run stops there.
  std::optional<TheoremReport> failure;

  bool ok() const { return !failure.has_value(); }
};

/**
 * Checks every graph from the configured source in input order.
 *
 * Internal enumeration covers all labeled graphs of order 0..n_max. A graph6
 * file is read completely before any checking, so a malformed line fails
 * early with its line number (ParseError). Reports are passed to on_report in
 * input order; the run stops after the first failing graph unless
 * stop_on_failure is off. The summary does not depend on the worker count.
 *
 * Throws std::invalid_argument for an invalid configuration.
 */
SuiteSummary run_suite(const SuiteConfig& cfg, const std::function<void(const TheoremReport&)>& on_report = {});

Json to_json(const ClaimResult& c);
Json to_json(const TheoremReport& r);
Json to_json(const SuiteSummary& s);

}  // namespace certdom

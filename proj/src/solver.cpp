#include "certdom/solver.hpp"

#include <algorithm>
#include <utility>

#include "certdom/structure.hpp"

namespace certdom {

namespace {

enum class Objective { Domination, Certified };

void check_oracle_bound(const Graph& g, int max_order) {
  if (g.order() > max_order) throw OracleBoundError(g.order(), max_order);
}

/// Calls fn on every k-subset of [0, n) in lexicographic order until fn returns true.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s(n);
    for (int v : idx) s.insert(v);
    if (fn(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <typename Pred>
SolveResult first_subset_satisfying(const Graph& g, int max_order, Pred&& pred) {
  check_oracle_bound(g, max_order);
  SolveResult r;
  for (int k = 0; k <= g.order(); ++k) {
    bool hit = for_each_subset(g.order(), k, [&](const VertexSet& s) {
      ++r.stats.nodes_expanded;
      if (!pred(s)) return false;
      r.value = k;
      r.certificate = s;
      return true;
    });
    if (hit) return r;
  }
  // Unreachable: V itself satisfies every predicate used here.
  throw std::logic_error("no satisfying subset");
}

class NodeBudget {
 public:
  explicit NodeBudget(std::optional<std::uint64_t> limit) : limit_(limit) {}

  bool take() {
    if (limit_ && used_ >= *limit_) {
      exhausted_ = true;
      return false;
    }
    ++used_;
    return true;
  }
  bool exhausted() const { return exhausted_; }

 private:
  std::optional<std::uint64_t> limit_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

/**
 * Depth-first search over partial assignments (in, out); undecided vertices
 * are those in neither set. Accepts completions of size <= limit.
 *
 * Invariant kept by propagate() when reductions are on: once every vertex is
 * dominated, putting all undecided vertices outside yields a valid set.
 */
class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, Objective obj, bool reductions, SolveStats& stats, NodeBudget& budget)
      : g_(g), obj_(obj), reductions_(reductions), stats_(stats), budget_(budget) {}

  /// Smallest completion with size < upper, if any.
  std::optional<VertexSet> minimise(const VertexSet& in, const VertexSet& out, int upper) {
    return run(in, out, upper - 1, false);
  }

  /// Any completion with size <= k.
  std::optional<VertexSet> feasible(const VertexSet& in, const VertexSet& out, int k) {
    return run(in, out, k, true);
  }

 private:
  std::optional<VertexSet> run(const VertexSet& in, const VertexSet& out, int limit, bool first) {
    limit_ = limit;
    stop_on_first_ = first;
    done_ = false;
    found_.reset();
    if (limit_ >= 0) dfs(in, out);
    return found_;
  }

  bool propagate(VertexSet& in, VertexSet& out) {
    bool changed = true;
    while (changed) {
      changed = false;
      const VertexSet dominated = g_.closed_neighbours(in);
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (!dominated.contains(v)) {
          const VertexSet cand = g_.closed_neighbours(v) - out;
          if (cand.empty()) return false;
          if (reductions_ && cand.size() == 1) {
            in.insert(cand.first());
            ++stats_.forced_vertices;
            changed = true;
            break;
          }
        }
        if (obj_ == Objective::Certified && in.contains(v)) {
          const int outside = g_.neighbours(v).intersection_size(out);
          const VertexSet open = g_.neighbours(v) - in - out;
          const int undecided = open.size();
          if (outside == 1 && undecided == 0) return false;
          if (!reductions_ || undecided != 1 || outside > 1) continue;
          // Exactly one undecided neighbour y: the final outside count must avoid 1.
          if (outside == 0) {
            in.insert(open.first());
          } else {
            out.insert(open.first());
          }
          ++stats_.forced_vertices;
          changed = true;
          break;
        }
      }
    }
    return true;
  }

  /// Undominated vertices with pairwise disjoint candidate sets each need their own new member.
  int packing_bound(const VertexSet& in, const VertexSet& out) {
    scratch_.clear();
    const VertexSet undom = g_.closed_neighbours(in).complement();
    for (Vertex v : undom) scratch_.push_back(g_.closed_neighbours(v) - out);
    std::stable_sort(scratch_.begin(), scratch_.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    VertexSet used(g_.order());
    int count = 0;
    for (const auto& c : scratch_) {
      if (c.intersects(used)) continue;
      used |= c;
      ++count;
    }
    return count;
  }

  void record(const VertexSet& in) {
    if (in.size() > limit_) return;
    found_ = in;
    if (stop_on_first_) {
      done_ = true;
    } else {
      limit_ = in.size() - 1;
    }
  }

  void dfs(VertexSet in, VertexSet out) {
    if (done_) return;
    if (!budget_.take()) {
      done_ = true;
      return;
    }
    ++stats_.nodes_expanded;
    if (!propagate(in, out)) return;
    if (in.size() + packing_bound(in, out) > limit_) return;

    const VertexSet undom = g_.closed_neighbours(in).complement();
    if (undom.empty()) {
      if (obj_ == Objective::Certified) {
        // Only reachable without reductions: a member whose single undecided neighbour decides it.
        for (Vertex x : in) {
          const VertexSet open = g_.neighbours(x) - in - out;
          if (g_.neighbours(x).intersection_size(out) + open.size() != 1) continue;
          const Vertex y = open.first();
          VertexSet in2 = in;
          in2.insert(y);
          dfs(in2, out);
          VertexSet out2 = out;
          out2.insert(y);
          dfs(in, out2);
          return;
        }
      }
      record(in);
      return;
    }

    Vertex pick = -1;
    int best = g_.order() + 2;
    for (Vertex v : undom) {
      const int c = (g_.closed_neighbours(v) - out).size();
      if (c < best) {
        best = c;
        pick = v;
      }
    }
    VertexSet excluded = out;
    for (Vertex c : g_.closed_neighbours(pick) - out) {
      VertexSet in2 = in;
      in2.insert(c);
      dfs(in2, excluded);
      if (done_) return;
      excluded.insert(c);
    }
  }

  const Graph& g_;
  Objective obj_;
  bool reductions_;
  SolveStats& stats_;
  NodeBudget& budget_;

  int limit_ = 0;
  bool stop_on_first_ = false;
  bool done_ = false;
  std::optional<VertexSet> found_;
  std::vector<VertexSet> scratch_;
};

struct ComponentSolver {
  const Graph& g;  // connected, or the whole graph when reductions are off
  Objective obj;
  const SolverConfig& cfg;
  SolveStats& stats;
  NodeBudget& budget;

  BranchAndBound search() const { return {g, obj, cfg.use_reductions, stats, budget}; }

  /// Vertices fixed inside every valid set before search starts.
  VertexSet fixed_in() const {
    if (obj == Objective::Certified && cfg.use_reductions) return supports(g);
    return g.empty_set();
  }

  VertexSet greedy_dominating_set() const {
    VertexSet d = g.empty_set();
    VertexSet undom = g.vertices();
    while (!undom.empty()) {
      Vertex pick = -1;
      int gain = -1;
      for (Vertex v = 0; v < g.order(); ++v) {
        int c = g.closed_neighbours(v).intersection_size(undom);
        if (c > gain) {
          gain = c;
          pick = v;
        }
      }
      d.insert(pick);
      undom -= g.closed_neighbours(pick);
    }
    return d;
  }

  /// A minimum dominating set free of leaves, then each half-shadowed weak
  /// support gets its leaf added. Falls back to V when that is not certified.
  VertexSet certified_incumbent() const {
    const int n = g.order();
    if (n <= 2) return g.vertices();
    ComponentSolver dom{g, Objective::Domination, cfg, stats, budget};
    VertexSet d = dom.minimum_set();
    for (Vertex l : d & leaves(g)) {
      d.erase(l);
      d.insert(support_of(g, l));
    }
    for (Vertex s : d & weak_supports(g)) {
      if (classify_vertex(g, d, s) == VertexStatus::HalfShadowed) d.insert(leaf_of(g, s));
    }
    return is_certified_dominating(g, d) ? d : g.vertices();
  }

  /// Some optimal set (not necessarily lexicographically smallest).
  VertexSet minimum_set() const {
    VertexSet incumbent = obj == Objective::Certified ? certified_incumbent() : greedy_dominating_set();
    auto better = search().minimise(fixed_in(), g.empty_set(), incumbent.size());
    return better ? *better : incumbent;
  }

  /// Walks vertices in order, keeping each one whenever a size-k solution
  /// with the decisions so far still exists. witness must be such a solution.
  VertexSet lexicographic_minimum(int k, VertexSet witness) const {
    VertexSet in = fixed_in();
    VertexSet out = g.empty_set();
    BranchAndBound bnb = search();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (in.contains(v)) continue;
      if (witness.contains(v)) {
        in.insert(v);
        continue;
      }
      if (in.size() < k) {
        VertexSet trial = in;
        trial.insert(v);
        if (auto w = bnb.feasible(trial, out, k)) {
          in = trial;
          witness = *w;
          continue;
        }
      }
      out.insert(v);
    }
    return witness;
  }

  std::pair<int, VertexSet> solve() const {
    const int n = g.order();
    if (n == 0) return {0, g.empty_set()};
    if (obj == Objective::Certified && cfg.use_closed_forms) {
      if (auto cf = closed_form(g)) {
        ++stats.closed_form_hits;
        return {cf->value, closed_form_certificate(*cf)};
      }
    }
    stats.forced_vertices += fixed_in().size();
    VertexSet best = minimum_set();
    return {best.size(), lexicographic_minimum(best.size(), best)};
  }

  VertexSet closed_form_certificate(const ClosedForm& cf) const {
    if (cf.value == g.order()) return g.vertices();
    if (auto* u = std::get_if<structure::HasUniversalVertex>(&cf.cls)) return VertexSet(g.order(), {u->vertex});
    auto w = search().feasible(fixed_in(), g.empty_set(), cf.value);
    if (!w) {
      // Budget ran out before a witness appeared.
      return g.vertices();
    }
    return lexicographic_minimum(cf.value, *w);
  }
};

SolveResult solve(const Graph& g, Objective obj, const SolverConfig& cfg) {
  if (cfg.node_limit && *cfg.node_limit == 0) throw std::invalid_argument("node_limit must be positive");
  SolveResult r;
  r.certificate = g.empty_set();
  NodeBudget budget(cfg.node_limit);

  std::vector<Component> parts;
  if (cfg.use_reductions) {
    parts = components(g);
    if (parts.size() > 1) r.stats.components_split = parts.size();
  } else {
    parts.push_back({g.vertices(), g});
  }
  for (const auto& part : parts) {
    ComponentSolver cs{part.graph, obj, cfg, r.stats, budget};
    auto [value, cert] = cs.solve();
    r.certificate |= lift(cert, part.vertices, g.order());
  }
  r.value = r.certificate.size();
  r.proven = !budget.exhausted();
  return r;
}

}  // namespace

SolveResult gamma_oracle(const Graph& g, int max_order) {
  return first_subset_satisfying(g, max_order, [&](const VertexSet& s) { return is_dominating(g, s); });
}

SolveResult gamma_cer_oracle(const Graph& g, int max_order) {
  return first_subset_satisfying(g, max_order, [&](const VertexSet& s) { return is_certified_dominating(g, s); });
}

SolveResult gamma_cer_solve(const Graph& g, const SolverConfig& cfg) { return solve(g, Objective::Certified, cfg); }

SolveResult gamma_solve(const Graph& g, const SolverConfig& cfg) { return solve(g, Objective::Domination, cfg); }

std::vector<VertexSet> all_min_dominating_sets(const Graph& g, int max_order) {
  const int gamma = gamma_oracle(g, max_order).value;
  std::vector<VertexSet> out;
  for_each_subset(g.order(), gamma, [&](const VertexSet& s) {
    if (is_dominating(g, s)) out.push_back(s);
    return false;
  });
  return out;
}

std::optional<DD2Pair> find_dd2_pair(const Graph& g, std::optional<int> max_d_size, int max_order) {
  const int n = g.order();
  if (n >= 1 && g.min_degree() >= 1 && weak_supports(g).empty()) {
    const VertexSet d = gamma_cer_solve(g).certificate;
    DD2Pair p{d, d.complement()};
    if (is_dd2_pair(g, p)) {
      if (max_d_size && d.size() > *max_d_size) return std::nullopt;
      return p;
    }
  }
  check_oracle_bound(g, max_order);
  const int top = max_d_size ? std::min(*max_d_size, n) : n;
  std::optional<DD2Pair> found;
  for (int k = 0; k <= top && !found; ++k) {
    for_each_subset(n, k, [&](const VertexSet& d) {
      if (!is_dominating(g, d) || !is_2dominating(g, d.complement())) return false;
      found = DD2Pair{d, d.complement()};
      return true;
    });
  }
  return found;
}

}  // namespace certdom

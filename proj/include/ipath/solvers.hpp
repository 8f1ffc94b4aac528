#ifndef IPATH_SOLVERS_HPP
#define IPATH_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ipath/exact_score.hpp"
#include "ipath/graph.hpp"

namespace ipath {

/// Node / wall-clock limits.  An exhausted budget returns the best result
/// found so far with `optimal == false`; it is never an error.
struct SolverBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::uint64_t> max_seconds;
};

/// Testing hook: with prune == false the branch-and-bound searches run
/// without their admissible bounds (dominance is off too), which lets the
/// tests certify that pruning never changes results.
struct SearchTuning {
  bool prune = true;
};

struct MaxIpResult {
  DirectedPath best_path;
  ExactScore score;
};

struct PackingResult {
  PathCollection collection;
  ExactScore score;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
};

enum class Verdict { Yes, No, Unknown };

struct IpDecision {
  Verdict verdict = Verdict::Unknown;
  std::optional<PathPartition> witness;  // present iff Yes
  std::uint64_t nodes_explored = 0;
};

struct KipDecision {
  Verdict verdict = Verdict::Unknown;
  std::optional<PathCollection> witness;  // present iff Yes
  std::uint64_t nodes_explored = 0;
};

/// Optimal single path on a DAG.  Dynamic program over the topological
/// order with state (vertex, path length); appending an edge at position
/// p multiplies the encoded value by (p+1)^w without disturbing earlier
/// positions, so per-state maxima compose.  Ties break toward the
/// lexicographically smallest edge-id sequence.
/// Errors: cycle (certificate included), empty edge set.
MaxIpResult max_ip_dag(const WeightedDigraph& g);

/// All simple paths with exactly k edges, each once, ordered
/// lexicographically by edge-id sequence.
std::vector<DirectedPath> enumerate_k_paths(const WeightedDigraph& g, unsigned k);

/// Exact k-IP: branch-and-bound over inclusion/exclusion of candidate
/// k-paths (candidates sorted by descending score, then lexicographically).
/// Admissible bounds: every still-usable edge can contribute at most
/// w(e)*log(k+1), and no completion can add more paths than remaining
/// candidates or remaining edges / k allow.
PackingResult exact_kip(const WeightedDigraph& g, unsigned k,
                        const SolverBudget& budget = {},
                        const SearchTuning& tuning = {});

/// Exact IP on a DAG: a path partition is exactly a choice, per vertex, of
/// a partial matching between in-edges and out-edges; branch-and-bound over
/// those chainings in topological vertex order.  The bound caps each
/// unplaced edge at its furthest feasible position (longest path ending at
/// its source, plus one).  Cyclic input is an error.
PackingResult exact_ip(const WeightedDigraph& g, const SolverBudget& budget = {},
                       const SearchTuning& tuning = {});

/// Decision form: early-exits with a witness as soon as any partition
/// reaches the target, proves No only by exhausting the search, and
/// reports Unknown when the budget runs out first.
IpDecision decide_ip(const WeightedDigraph& g, const ExactScore& target,
                     const SolverBudget& budget = {},
                     const SearchTuning& tuning = {});

KipDecision decide_kip(const WeightedDigraph& g, unsigned k,
                       const ExactScore& target, const SolverBudget& budget = {},
                       const SearchTuning& tuning = {});

/// Greedy 1/k-approximation: repeatedly take the maximum-score remaining
/// k-path (ties lexicographic) and delete its edges.  Deterministic;
/// `optimal` is always false.
PackingResult greedy_kip(const WeightedDigraph& g, unsigned k);

}  // namespace ipath

#endif

#ifndef IPATH_ORACLES_HPP
#define IPATH_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ipath/cnf.hpp"
#include "ipath/graph.hpp"
#include "ipath/setcover.hpp"
#include "ipath/solvers.hpp"

namespace ipath {

/// Hard cap on how much work a brute-force reference may do.  Exceeding it
/// throws SizeLimitError; the oracles never truncate silently.  These
/// implementations share no search code with the solvers, so agreement
/// between the two is evidence, not tautology.
struct OracleLimit {
  std::uint64_t max_items;
};

/// Lexicographically first satisfying assignment (variable 1 most
/// significant, FALSE < TRUE), or nothing.  Work is 2^n <= max_items.
std::optional<Assignment> brute_force_sat(const CnfFormula& f,
                                          OracleLimit limit = {1u << 24});

/// A minimum-cardinality cover if its size is <= tau, else nothing.
/// Work is bounded by 2^m <= max_items.
std::optional<Cover> brute_force_set_cover(const SetCoverInstance& sc,
                                           OracleLimit limit = {1u << 24});

/// Exhaustive enumeration of all simple directed paths.
MaxIpResult brute_force_max_ip(const WeightedDigraph& g,
                               OracleLimit limit = {1u << 20});

/// Exhaustive edge-disjoint k-path packing (at most 20 candidate paths).
PackingResult brute_force_kip(const WeightedDigraph& g, unsigned k,
                              OracleLimit limit = {1u << 20});

/// Exhaustive enumeration of every per-vertex in/out chaining of a DAG
/// with at most 14 edges.
PackingResult brute_force_ip(const WeightedDigraph& g,
                             OracleLimit limit = {1u << 24});

/// Minimum vertex cover if its size is <= tau, else nothing (|V| <= 20).
std::optional<std::vector<std::uint32_t>> brute_force_vertex_cover(
    const CubicGraph& g, std::uint32_t tau, OracleLimit limit = {1u << 20});

}  // namespace ipath

#endif

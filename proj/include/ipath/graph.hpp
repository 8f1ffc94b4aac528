#ifndef IPATH_GRAPH_HPP
#define IPATH_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipath/exact_score.hpp"

namespace ipath {

/// Dense 0-based indices.  Edge identity is the id, never the endpoint
/// pair: parallel edges are legal and common in generated instances.
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  EdgeId id{};
  VertexId source{};
  VertexId target{};
  std::uint64_t weight{1};  // natural, >= 1
  std::optional<std::uint64_t> signature{};
};

/// Edge-weighted directed multigraph.  Immutable after construction.
class WeightedDigraph {
public:
  /// Edges may arrive in any order but their ids must be exactly
  /// 0..edges.size()-1; endpoints must be < vertex_count; weights >= 1.
  WeightedDigraph(std::uint32_t vertex_count, std::vector<Edge> edges);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }
  const Edge& edge(EdgeId id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edge ids leaving / entering a vertex, ascending.
  std::span<const EdgeId> out_edges(VertexId v) const;
  std::span<const EdgeId> in_edges(VertexId v) const;

  bool all_edges_signed() const;

private:
  std::uint32_t vertex_count_;
  std::vector<Edge> edges_;
  // CSR-style adjacency over edge ids.
  std::vector<EdgeId> out_flat_, in_flat_;
  std::vector<std::uint32_t> out_start_, in_start_;
};

/// Nonempty sequence of edge ids; consecutive edges chain target->source
/// and no vertex repeats (simple path).
struct DirectedPath {
  std::vector<EdgeId> edges;
};

/// Pairwise edge-disjoint paths.
struct PathCollection {
  std::vector<DirectedPath> paths;
};

/// A collection certified to cover every edge exactly once.  Only
/// validate_partition produces these.
struct PathPartition {
  PathCollection collection;
};

/// Throws InvalidPathError naming the offending position.
void validate_path(const WeightedDigraph& g, const DirectedPath& p);

/// Validates every member path and pairwise disjointness
/// (DisjointnessError names the reused edge).
void validate_collection(const WeightedDigraph& g, const PathCollection& c);

/// Succeeds iff c is a valid collection whose edges cover the graph
/// exhaustively; CoverageError lists uncovered edge ids.
PathPartition validate_partition(const WeightedDigraph& g, const PathCollection& c);

/// 2^score of a path: the product of (i+1)^w(e_i) over 1-based positions.
ExactScore score_of_path(const WeightedDigraph& g, const DirectedPath& p);

/// Product of member path scores; order-independent.
ExactScore score_of_collection(const WeightedDigraph& g, const PathCollection& c);

/// One subgraph per distinct signature, densely re-indexed, with maps back
/// to the original ids.
struct SignatureSlice {
  std::uint64_t signature{};
  WeightedDigraph graph;
  std::vector<VertexId> original_vertex;  // slice vertex -> original vertex
  std::vector<EdgeId> original_edge;      // slice edge -> original edge
};
std::vector<SignatureSlice> split_by_signature(const WeightedDigraph& g);

/// Either a topological order or a certificate cycle of edge ids.
struct TopoResult {
  std::vector<VertexId> order;
  std::vector<EdgeId> cycle;
  bool is_acyclic() const { return cycle.empty(); }
};
TopoResult topological_order(const WeightedDigraph& g);

// Line-oriented text format:
//   ipgraph <vertex_count> <edge_count>
//   e <edge_id> <source> <target> <weight> [<signature>]
// '#' starts a comment line; parsing is strict otherwise.
WeightedDigraph parse_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const WeightedDigraph& g);

}  // namespace ipath

#endif

#ifndef IPATH_REDUCTIONS_HPP
#define IPATH_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipath/cnf.hpp"
#include "ipath/exact_score.hpp"
#include "ipath/graph.hpp"
#include "ipath/setcover.hpp"

namespace ipath {

/// Role of each edge in a generated IP instance.  The strings below are
/// part of the instance file format.
enum class EdgeRole {
  Subdivision,      // "subdivision"
  VToY,             // "v-to-y"
  VToYbar,          // "v-to-ybar"
  TypeUPos,         // "type-U-pos"
  TypeUNeg,         // "type-U-neg"
  TypeT,            // "type-T"
  ClauseSpine,      // "clause-spine"
  ClauseConnector,  // "clause-connector"
};
std::string_view to_string(EdgeRole role);
EdgeRole edge_role_from_string(std::string_view text);

/// A hardness instance for the path-partition problem, generated from a
/// normalized 3-CNF.  Besides the graph and the exact target, it keeps the
/// construction geometry the witness translators walk.
struct IpInstance {
  WeightedDigraph graph;
  ExactScore target;
  std::vector<std::string> vertex_labels;  // indexed by vertex id
  std::vector<EdgeRole> edge_roles;        // indexed by edge id

  /// One rung per occurrence slot of the variable, ordered like
  /// CnfFormula::occurrences.  A rung's join vertex is shared with the
  /// next rung via the wrap-around negative-side edge.
  struct Rung {
    std::uint32_t clause;  // 0-based clause index of this occurrence
    std::uint32_t slot;    // 0..2
    VertexId mid1, mid2;   // the two subdivision vertices on source -> fork
    VertexId fork;         // branching vertex (v)
    VertexId pos_side;     // y vertex: targeted by positive connectors
    VertexId neg_side;     // ybar vertex: targeted by negative connectors
    VertexId join;         // u vertex of the same rung index
    EdgeId sub1, sub2, sub3;
    EdgeId to_pos, to_neg;
    EdgeId pos_join;  // pos_side -> join(r)        type-U-pos
    EdgeId neg_join;  // neg_side -> join(r+1 mod)  type-U-neg
    EdgeId terminal;  // join(r) -> sink            type-T
  };
  struct VariableGadget {
    VertexId source, sink;
    std::vector<Rung> rungs;
  };
  struct ClauseGadget {
    std::array<VertexId, 3> spine;
    EdgeId spine0, spine1;
    std::array<EdgeId, 3> connector;  // one per literal slot
  };
  std::vector<VariableGadget> variables;  // indexed by variable - 1
  std::vector<ClauseGadget> clauses;
};

/// Theorem-1 construction: 29m edges, 21m + 2n vertices, type-T weight 29m,
/// target (2^5 * 3^2 * 5! * (6!)^3)^m * 7^(87 m^2), all held factored.
IpInstance sat3_to_ip(const CnfFormula& f);

/// The proof's witness partition for a satisfying assignment: the TRUE
/// side's full-score source-to-sink paths per variable, one 4-path per
/// clause through its lowest true literal slot, and the forced 2- and
/// 1-paths.  Scores exactly the instance target.
PathPartition assignment_to_partition(const CnfFormula& f, const IpInstance& inst,
                                      const Assignment& a);

/// Reads a satisfying assignment back off a partition that reaches the
/// target: the side used by each variable's maximal-score path family.
Assignment partition_to_assignment(const CnfFormula& f, const IpInstance& inst,
                                   const PathPartition& p);

/// A hardness instance for the k-path packing problem, generated from a
/// (3,2)-set-cover instance.  Unit weights; target (k+1)!^(2n+m-tau).
struct KipInstance {
  WeightedDigraph graph;
  unsigned k = 3;
  ExactScore target;
  std::vector<std::string> vertex_labels;

  struct ElementGadget {
    std::array<VertexId, 4> v;  // v[0..3] are the gadget's v1..v4
    EdgeId edge_13, edge_34, edge_24;
    std::array<std::uint32_t, 2> holder;  // the two sets containing it, ascending
    std::array<EdgeId, 2> connector;      // v4 -> holder's station, same order
    std::vector<EdgeId> prefix1, prefix2;  // k-3 lead-in edges into v1 / v2
  };
  struct SetGadget {
    std::array<VertexId, 3> station;  // one per member element, ascending
    VertexId tail;
    std::array<EdgeId, 3> chain;      // station0->station1->station2->tail
    std::vector<EdgeId> prefix;       // k-3 lead-in edges into station0
  };
  std::vector<ElementGadget> elements;  // indexed by element - 1
  std::vector<SetGadget> sets;          // indexed by set - 1
};

/// Theorem-2 construction; k >= 3.  For k > 3 every witness path gains a
/// lead-in chain so it has exactly k edges.
KipInstance setcover_to_kip(const SetCoverInstance& sc, unsigned k);

/// The proof's packing for a cover of size <= tau: one full chain path per
/// unchosen set and two anchored paths per element (the covering set is the
/// lowest-indexed member of the cover containing it).
PathCollection cover_to_kpaths(const SetCoverInstance& sc, const KipInstance& inst,
                               const Cover& c);

/// Normalizes an arbitrary packing of >= 2n+m-tau k-paths into the proof's
/// canonical shape by the replacement moves, then reads the cover off the
/// surviving full chain paths.
Cover kpaths_to_cover(const SetCoverInstance& sc, const KipInstance& inst,
                      const PathCollection& pc);

/// Vertex cover on a cubic graph as (3,2)-set-cover: elements are edges,
/// one set per vertex holding its incident edges.
SetCoverInstance cubic_vc_to_setcover(const CubicGraph& g, std::uint32_t tau);
/// Witness maps for the incidence reduction (set indices are vertices).
std::vector<std::uint32_t> cover_to_vertex_cover(const CubicGraph& g, const Cover& c);
Cover vertex_cover_to_cover(const CubicGraph& g,
                            const std::vector<std::uint32_t>& vc);

// Instance files: the plain graph format plus '# label v|e <id> <text>'
// comment lines and 'k <k>' / 'target <factored>' trailers.
void write_ip_instance(std::ostream& out, const IpInstance& inst);
void write_kip_instance(std::ostream& out, const KipInstance& inst);

struct ParsedInstance {
  WeightedDigraph graph;
  std::optional<unsigned> k;
  std::optional<ExactScore> target;
  std::vector<std::string> vertex_labels;  // "" where unlabeled
  std::vector<std::string> edge_labels;
};
ParsedInstance parse_instance(std::istream& in);

}  // namespace ipath

#endif

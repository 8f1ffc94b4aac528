#ifndef IPATH_SETCOVER_HPP
#define IPATH_SETCOVER_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace ipath {

/// (3,2)-set-cover instance: m sets of exactly 3 distinct elements over
/// 1..n, every element in exactly two sets (so 3m = 2n), 1 <= tau <= m.
class SetCoverInstance {
public:
  SetCoverInstance(std::uint32_t element_count,
                   std::vector<std::array<std::uint32_t, 3>> sets,
                   std::uint32_t tau);

  std::uint32_t element_count() const { return element_count_; }
  std::uint32_t set_count() const { return static_cast<std::uint32_t>(sets_.size()); }
  std::uint32_t tau() const { return tau_; }
  /// Members of set j (1-based), ascending.
  const std::array<std::uint32_t, 3>& members(std::uint32_t set) const {
    return sets_[set - 1];
  }
  /// The two sets containing an element, ascending.
  const std::array<std::uint32_t, 2>& sets_of(std::uint32_t element) const {
    return element_sets_[element - 1];
  }

private:
  std::uint32_t element_count_;
  std::vector<std::array<std::uint32_t, 3>> sets_;
  std::uint32_t tau_;
  std::vector<std::array<std::uint32_t, 2>> element_sets_;
};

/// Chosen set indices (1-based), ascending, duplicates removed.
struct Cover {
  std::vector<std::uint32_t> sets;
};

std::optional<std::uint32_t> first_uncovered(const SetCoverInstance& sc,
                                             const Cover& c);
bool covers(const SetCoverInstance& sc, const Cover& c);

/// Undirected simple graph with every vertex of degree exactly 3.
/// Vertices 1..n; edges stored with endpoints ascending, sorted.
class CubicGraph {
public:
  CubicGraph(std::uint32_t vertex_count,
             std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
    return edges_;
  }
  /// Edge indices (1-based) incident to a vertex, ascending; exactly three.
  const std::array<std::uint32_t, 3>& incident(std::uint32_t vertex) const {
    return incident_[vertex - 1];
  }

private:
  std::uint32_t vertex_count_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::array<std::uint32_t, 3>> incident_;
};

bool is_vertex_cover(const CubicGraph& g, const std::vector<std::uint32_t>& verts);

// Text formats:
//   p setcover <n> <m> <tau>     then   s <i> <e1> <e2> <e3>   per set
//   p cubic <n> <m>              then   e <u> <v>              per edge
SetCoverInstance parse_setcover(std::istream& in);
void write_setcover(std::ostream& out, const SetCoverInstance& sc);
CubicGraph parse_cubic(std::istream& in);
void write_cubic(std::ostream& out, const CubicGraph& g);

}  // namespace ipath

#endif

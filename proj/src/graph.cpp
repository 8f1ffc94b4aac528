#include "ipath/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "ipath/errors.hpp"
#include "text_util.hpp"

namespace ipath {

WeightedDigraph::WeightedDigraph(std::uint32_t vertex_count,
                                 std::vector<Edge> edges)
    : vertex_count_(vertex_count) {
  const auto n = edges.size();
  edges_.resize(n);
  std::vector<bool> seen(n, false);
  for (auto& e : edges) {
    if (e.id >= n)
      throw PreconditionError("edge id " + std::to_string(e.id) +
                              " outside dense range 0.." + std::to_string(n ? n - 1 : 0));
    if (seen[e.id])
      throw PreconditionError("duplicate edge id " + std::to_string(e.id));
    if (e.source >= vertex_count_ || e.target >= vertex_count_)
      throw PreconditionError("edge " + std::to_string(e.id) +
                              " endpoint outside 0.." +
                              std::to_string(vertex_count_ ? vertex_count_ - 1 : 0));
    if (e.weight == 0)
      throw PreconditionError("edge " + std::to_string(e.id) +
                              " has weight 0; weights are naturals >= 1");
    seen[e.id] = true;
    edges_[e.id] = std::move(e);
  }
  out_start_.assign(vertex_count_ + 1, 0);
  in_start_.assign(vertex_count_ + 1, 0);
  for (const auto& e : edges_) {
    ++out_start_[e.source + 1];
    ++in_start_[e.target + 1];
  }
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    out_start_[v + 1] += out_start_[v];
    in_start_[v + 1] += in_start_[v];
  }
  out_flat_.resize(n);
  in_flat_.resize(n);
  std::vector<std::uint32_t> oc(out_start_.begin(), out_start_.end() - 1);
  std::vector<std::uint32_t> ic(in_start_.begin(), in_start_.end() - 1);
  for (const auto& e : edges_) {  // ascending id keeps adjacency sorted
    out_flat_[oc[e.source]++] = e.id;
    in_flat_[ic[e.target]++] = e.id;
  }
}

std::span<const EdgeId> WeightedDigraph::out_edges(VertexId v) const {
  return {out_flat_.data() + out_start_[v], out_flat_.data() + out_start_[v + 1]};
}

std::span<const EdgeId> WeightedDigraph::in_edges(VertexId v) const {
  return {in_flat_.data() + in_start_[v], in_flat_.data() + in_start_[v + 1]};
}

bool WeightedDigraph::all_edges_signed() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.signature.has_value(); });
}

void validate_path(const WeightedDigraph& g, const DirectedPath& p) {
  if (p.edges.empty()) throw InvalidPathError(0, "path is empty");
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    if (p.edges[i] >= g.edge_count())
      throw InvalidPathError(i, "position " + std::to_string(i) +
                                    ": unknown edge id " + std::to_string(p.edges[i]));
  std::set<VertexId> visited;
  visited.insert(g.edge(p.edges[0]).source);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const Edge& e = g.edge(p.edges[i]);
    if (i > 0 && g.edge(p.edges[i - 1]).target != e.source)
      throw InvalidPathError(i, "position " + std::to_string(i) +
                                    ": edge " + std::to_string(e.id) +
                                    " does not continue the previous edge");
    if (!visited.insert(e.target).second)
      throw InvalidPathError(i, "position " + std::to_string(i) + ": vertex " +
                                    std::to_string(e.target) +
                                    " repeats; paths are simple");
  }
}

void validate_collection(const WeightedDigraph& g, const PathCollection& c) {
  std::vector<bool> used(g.edge_count(), false);
  for (const auto& p : c.paths) {
    validate_path(g, p);
    for (EdgeId e : p.edges) {
      if (used[e])
        throw DisjointnessError(e, "edge " + std::to_string(e) +
                                       " appears in more than one path");
      used[e] = true;
    }
  }
}

PathPartition validate_partition(const WeightedDigraph& g,
                                 const PathCollection& c) {
  validate_collection(g, c);
  std::vector<bool> used(g.edge_count(), false);
  for (const auto& p : c.paths)
    for (EdgeId e : p.edges) used[e] = true;
  std::vector<EdgeId> missing;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!used[e]) missing.push_back(e);
  if (!missing.empty()) {
    std::ostringstream os;
    os << missing.size() << " edge(s) uncovered:";
    for (std::size_t i = 0; i < missing.size() && i < 16; ++i) os << " " << missing[i];
    if (missing.size() > 16) os << " ...";
    throw CoverageError(std::move(missing), os.str());
  }
  return PathPartition{c};
}

ExactScore score_of_path(const WeightedDigraph& g, const DirectedPath& p) {
  validate_path(g, p);
  ExactScore s;
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    s = s * ExactScore::from_natural(i + 2).pow(g.edge(p.edges[i]).weight);
  return s;
}

ExactScore score_of_collection(const WeightedDigraph& g,
                               const PathCollection& c) {
  validate_collection(g, c);
  ExactScore s;
  for (const auto& p : c.paths) s = s * score_of_path(g, p);
  return s;
}

std::vector<SignatureSlice> split_by_signature(const WeightedDigraph& g) {
  for (const auto& e : g.edges())
    if (!e.signature)
      throw PreconditionError("edge " + std::to_string(e.id) +
                              " has no signature; split requires all edges signed");
  std::map<std::uint64_t, std::vector<EdgeId>> groups;
  for (const auto& e : g.edges()) groups[*e.signature].push_back(e.id);
  std::vector<SignatureSlice> out;
  out.reserve(groups.size());
  for (auto& [sig, ids] : groups) {
    std::vector<VertexId> verts;
    for (EdgeId id : ids) {
      verts.push_back(g.edge(id).source);
      verts.push_back(g.edge(id).target);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::map<VertexId, VertexId> dense;
    for (std::uint32_t i = 0; i < verts.size(); ++i) dense[verts[i]] = i;
    std::vector<Edge> edges;
    edges.reserve(ids.size());
    for (std::uint32_t i = 0; i < ids.size(); ++i) {
      const Edge& e = g.edge(ids[i]);
      edges.push_back(Edge{i, dense[e.source], dense[e.target], e.weight, e.signature});
    }
    out.push_back(SignatureSlice{
        sig,
        WeightedDigraph(static_cast<std::uint32_t>(verts.size()), std::move(edges)),
        std::move(verts), std::move(ids)});
  }
  return out;
}

TopoResult topological_order(const WeightedDigraph& g) {
  TopoResult res;
  std::vector<std::uint32_t> indeg(g.vertex_count(), 0);
  for (const auto& e : g.edges()) ++indeg[e.target];
  std::set<VertexId> ready;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (indeg[v] == 0) ready.insert(v);
  res.order.reserve(g.vertex_count());
  while (!ready.empty()) {
    VertexId v = *ready.begin();
    ready.erase(ready.begin());
    res.order.push_back(v);
    for (EdgeId id : g.out_edges(v))
      if (--indeg[g.edge(id).target] == 0) ready.insert(g.edge(id).target);
  }
  if (res.order.size() == g.vertex_count()) return res;

  // Cycle certificate: walk backward inside the unresolved core (every
  // core vertex keeps an in-edge from the core) until a vertex repeats.
  res.order.clear();
  std::vector<bool> in_core(g.vertex_count(), false);
  VertexId start = 0;
  bool found = false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (indeg[v] > 0) {
      in_core[v] = true;
      if (!found) {
        start = v;
        found = true;
      }
    }
  }
  std::vector<EdgeId> trail;
  std::vector<std::int64_t> seen_at(g.vertex_count(), -1);
  VertexId cur = start;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<std::int64_t>(trail.size());
    for (EdgeId id : g.in_edges(cur)) {
      if (in_core[g.edge(id).source]) {
        trail.push_back(id);
        cur = g.edge(id).source;
        break;
      }
    }
  }
  // trail[k] leads backward; the loop is the suffix from the repeat point.
  std::vector<EdgeId> cycle(trail.begin() + seen_at[cur], trail.end());
  std::reverse(cycle.begin(), cycle.end());
  res.cycle = std::move(cycle);
  return res;
}

WeightedDigraph parse_graph_text(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint32_t vcount = 0, ecount = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto toks = detail::split_ws(t);
    if (!have_header) {
      if (toks.size() != 3 || toks[0] != "ipgraph")
        throw ParseError(lineno, "expected header 'ipgraph <vertices> <edges>'");
      vcount = detail::parse_number<std::uint32_t>(toks[1], lineno, "vertex count");
      ecount = detail::parse_number<std::uint32_t>(toks[2], lineno, "edge count");
      have_header = true;
      continue;
    }
    if (toks[0] != "e")
      throw ParseError(lineno, "unexpected line '" + std::string(t) + "'");
    if (toks.size() != 5 && toks.size() != 6)
      throw ParseError(lineno, "edge line needs 'e <id> <src> <tgt> <w> [<sig>]'");
    Edge e;
    e.id = detail::parse_number<EdgeId>(toks[1], lineno, "edge id");
    e.source = detail::parse_number<VertexId>(toks[2], lineno, "source");
    e.target = detail::parse_number<VertexId>(toks[3], lineno, "target");
    e.weight = detail::parse_number<std::uint64_t>(toks[4], lineno, "weight");
    if (toks.size() == 6)
      e.signature = detail::parse_number<std::uint64_t>(toks[5], lineno, "signature");
    if (edges.size() == ecount)
      throw ParseError(lineno, "more edge lines than declared");
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(lineno, "missing 'ipgraph' header");
  if (edges.size() != ecount)
    throw ParseError(lineno, "declared " + std::to_string(ecount) + " edges, found " +
                                 std::to_string(edges.size()));
  try {
    return WeightedDigraph(vcount, std::move(edges));
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

void write_graph_text(std::ostream& out, const WeightedDigraph& g) {
  out << "ipgraph " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& e : g.edges()) {
    out << "e " << e.id << " " << e.source << " " << e.target << " " << e.weight;
    if (e.signature) out << " " << *e.signature;
    out << "\n";
  }
}

}  // namespace ipath

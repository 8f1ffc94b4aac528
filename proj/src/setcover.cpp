#include "ipath/setcover.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "text_util.hpp"

namespace ipath {

SetCoverInstance::SetCoverInstance(
    std::uint32_t element_count,
    std::vector<std::array<std::uint32_t, 3>> sets, std::uint32_t tau)
    : element_count_(element_count), sets_(std::move(sets)), tau_(tau) {
  if (sets_.empty()) throw PreconditionError("set cover: no sets");
  if (tau_ < 1 || tau_ > sets_.size())
    throw PreconditionError("set cover: tau must lie in 1.." +
                            std::to_string(sets_.size()));
  std::vector<std::vector<std::uint32_t>> holders(element_count_);
  for (std::uint32_t j = 0; j < sets_.size(); ++j) {
    auto& s = sets_[j];
    std::sort(s.begin(), s.end());
    if (s[0] == s[1] || s[1] == s[2])
      throw PreconditionError("set " + std::to_string(j + 1) +
                              " has repeated elements; sets have 3 distinct members");
    for (std::uint32_t e : s) {
      if (e == 0 || e > element_count_)
        throw PreconditionError("set " + std::to_string(j + 1) + " references element " +
                                std::to_string(e) + " outside 1.." +
                                std::to_string(element_count_));
      holders[e - 1].push_back(j + 1);
    }
  }
  element_sets_.resize(element_count_);
  for (std::uint32_t e = 1; e <= element_count_; ++e) {
    if (holders[e - 1].size() != 2)
      throw PreconditionError("element " + std::to_string(e) + " appears in " +
                              std::to_string(holders[e - 1].size()) +
                              " sets; the (3,2) property requires exactly 2");
    element_sets_[e - 1] = {holders[e - 1][0], holders[e - 1][1]};
  }
}

std::optional<std::uint32_t> first_uncovered(const SetCoverInstance& sc,
                                             const Cover& c) {
  std::vector<bool> covered(sc.element_count(), false);
  for (std::uint32_t j : c.sets) {
    if (j == 0 || j > sc.set_count()) continue;
    for (std::uint32_t e : sc.members(j)) covered[e - 1] = true;
  }
  for (std::uint32_t e = 1; e <= sc.element_count(); ++e)
    if (!covered[e - 1]) return e;
  return std::nullopt;
}

bool covers(const SetCoverInstance& sc, const Cover& c) {
  return !first_uncovered(sc, c).has_value();
}

CubicGraph::CubicGraph(
    std::uint32_t vertex_count,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == 0 || v == 0 || u > vertex_count_ || v > vertex_count_)
      throw PreconditionError("cubic graph: endpoint outside 1.." +
                              std::to_string(vertex_count_));
    if (u == v) throw PreconditionError("cubic graph: loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw PreconditionError("cubic graph: repeated edge; the graph must be simple");
  std::vector<std::vector<std::uint32_t>> inc(vertex_count_);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    inc[edges_[i].first - 1].push_back(i + 1);
    inc[edges_[i].second - 1].push_back(i + 1);
  }
  incident_.resize(vertex_count_);
  for (std::uint32_t v = 1; v <= vertex_count_; ++v) {
    if (inc[v - 1].size() != 3)
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(inc[v - 1].size()) +
                              "; a cubic graph needs degree 3 everywhere");
    incident_[v - 1] = {inc[v - 1][0], inc[v - 1][1], inc[v - 1][2]};
  }
}

bool is_vertex_cover(const CubicGraph& g, const std::vector<std::uint32_t>& verts) {
  std::vector<bool> in(g.vertex_count() + 1, false);
  for (std::uint32_t v : verts)
    if (v >= 1 && v <= g.vertex_count()) in[v] = true;
  for (const auto& [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

SetCoverInstance parse_setcover(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint32_t n = 0, m = 0, tau = 0;
  std::vector<std::array<std::uint32_t, 3>> sets;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#' || t.front() == 'c') continue;
    auto toks = detail::split_ws(t);
    if (!have_header) {
      if (toks.size() != 5 || toks[0] != "p" || toks[1] != "setcover")
        throw ParseError(lineno, "expected 'p setcover <n> <m> <tau>'");
      n = detail::parse_number<std::uint32_t>(toks[2], lineno, "element count");
      m = detail::parse_number<std::uint32_t>(toks[3], lineno, "set count");
      tau = detail::parse_number<std::uint32_t>(toks[4], lineno, "tau");
      sets.assign(m, {0, 0, 0});
      seen.assign(m, false);
      have_header = true;
      continue;
    }
    if (toks[0] != "s" || toks.size() != 5)
      throw ParseError(lineno, "expected 's <i> <e1> <e2> <e3>'");
    std::uint32_t idx = detail::parse_number<std::uint32_t>(toks[1], lineno, "set index");
    if (idx == 0 || idx > m) throw ParseError(lineno, "set index outside 1.." + std::to_string(m));
    if (seen[idx - 1]) throw ParseError(lineno, "duplicate set " + std::to_string(idx));
    seen[idx - 1] = true;
    for (int k = 0; k < 3; ++k)
      sets[idx - 1][k] = detail::parse_number<std::uint32_t>(toks[2 + k], lineno, "element");
  }
  if (!have_header) throw ParseError(lineno, "missing 'p setcover' header");
  for (std::uint32_t j = 0; j < m; ++j)
    if (!seen[j]) throw ParseError(lineno, "set " + std::to_string(j + 1) + " missing");
  try {
    return SetCoverInstance(n, std::move(sets), tau);
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

void write_setcover(std::ostream& out, const SetCoverInstance& sc) {
  out << "p setcover " << sc.element_count() << " " << sc.set_count() << " "
      << sc.tau() << "\n";
  for (std::uint32_t j = 1; j <= sc.set_count(); ++j) {
    const auto& s = sc.members(j);
    out << "s " << j << " " << s[0] << " " << s[1] << " " << s[2] << "\n";
  }
}

CubicGraph parse_cubic(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint32_t n = 0, m = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#' || t.front() == 'c') continue;
    auto toks = detail::split_ws(t);
    if (!have_header) {
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cubic")
        throw ParseError(lineno, "expected 'p cubic <n> <m>'");
      n = detail::parse_number<std::uint32_t>(toks[2], lineno, "vertex count");
      m = detail::parse_number<std::uint32_t>(toks[3], lineno, "edge count");
      have_header = true;
      continue;
    }
    if (toks[0] != "e" || toks.size() != 3)
      throw ParseError(lineno, "expected 'e <u> <v>'");
    if (edges.size() == m) throw ParseError(lineno, "more edges than declared");
    edges.emplace_back(detail::parse_number<std::uint32_t>(toks[1], lineno, "endpoint"),
                       detail::parse_number<std::uint32_t>(toks[2], lineno, "endpoint"));
  }
  if (!have_header) throw ParseError(lineno, "missing 'p cubic' header");
  if (edges.size() != m)
    throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  try {
    return CubicGraph(n, std::move(edges));
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

void write_cubic(std::ostream& out, const CubicGraph& g) {
  out << "p cubic " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

}  // namespace ipath

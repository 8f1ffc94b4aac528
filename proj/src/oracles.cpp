#include "ipath/oracles.hpp"

#include <algorithm>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

// Lexicographic combinations of {0..n-1} of a given size.
template <typename F>
bool for_each_combination(std::uint32_t n, std::uint32_t size, F f) {
  std::vector<std::uint32_t> idx(size);
  for (std::uint32_t i = 0; i < size; ++i) idx[i] = i;
  if (size > n) return false;
  for (;;) {
    if (f(idx)) return true;
    std::int64_t i = static_cast<std::int64_t>(size) - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < size; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<Assignment> brute_force_sat(const CnfFormula& f, OracleLimit limit) {
  const std::uint32_t n = f.variable_count();
  if (n > 63 || (std::uint64_t(1) << n) > limit.max_items)
    throw SizeLimitError("brute_force_sat: 2^" + std::to_string(n) +
                         " assignments exceed the oracle limit");
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
    Assignment a;
    a.values.resize(n);
    for (std::uint32_t v = 1; v <= n; ++v)
      a.values[v - 1] = (bits >> (n - v)) & 1;  // variable 1 most significant
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

std::optional<Cover> brute_force_set_cover(const SetCoverInstance& sc,
                                           OracleLimit limit) {
  const std::uint32_t m = sc.set_count();
  if (m > 63 || (std::uint64_t(1) << m) > limit.max_items)
    throw SizeLimitError("brute_force_set_cover: 2^" + std::to_string(m) +
                         " subsets exceed the oracle limit");
  for (std::uint32_t size = 1; size <= sc.tau(); ++size) {
    Cover found;
    bool ok = for_each_combination(m, size, [&](const std::vector<std::uint32_t>& idx) {
      Cover c;
      for (std::uint32_t i : idx) c.sets.push_back(i + 1);
      if (covers(sc, c)) {
        found = c;
        return true;
      }
      return false;
    });
    if (ok) return found;
  }
  return std::nullopt;
}

MaxIpResult brute_force_max_ip(const WeightedDigraph& g, OracleLimit limit) {
  if (g.edge_count() == 0)
    throw PreconditionError("brute_force_max_ip: the graph has no edges");
  std::optional<MaxIpResult> best;
  std::uint64_t seen = 0;
  std::vector<char> visited(g.vertex_count(), 0);
  std::vector<EdgeId> cur;
  auto consider = [&]() {
    if (++seen > limit.max_items)
      throw SizeLimitError("brute_force_max_ip: simple path count exceeds the limit");
    DirectedPath p{cur};
    ExactScore s = score_of_path(g, p);
    if (!best || compare(s, best->score) == std::strong_ordering::greater)
      best = MaxIpResult{std::move(p), std::move(s)};
  };
  auto walk = [&](auto&& self, VertexId at) -> void {
    for (EdgeId e : g.out_edges(at)) {
      VertexId t = g.edge(e).target;
      if (visited[t]) continue;
      visited[t] = 1;
      cur.push_back(e);
      consider();
      self(self, t);
      cur.pop_back();
      visited[t] = 0;
    }
  };
  for (EdgeId first = 0; first < g.edge_count(); ++first) {
    const Edge& e = g.edge(first);
    if (e.source == e.target) continue;
    visited[e.source] = visited[e.target] = 1;
    cur.assign(1, first);
    consider();
    walk(walk, e.target);
    visited[e.source] = visited[e.target] = 0;
    cur.clear();
  }
  if (!best)
    throw PreconditionError("brute_force_max_ip: no simple path exists");
  return *best;
}

PackingResult brute_force_kip(const WeightedDigraph& g, unsigned k,
                              OracleLimit limit) {
  if (k == 0) throw PreconditionError("k must be >= 1");
  // Own path enumeration, deliberately separate from the solver's.
  std::vector<std::vector<EdgeId>> paths;
  {
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<EdgeId> cur;
    auto walk = [&](auto&& self, VertexId at) -> void {
      if (cur.size() == k) {
        paths.push_back(cur);
        return;
      }
      for (EdgeId e : g.out_edges(at)) {
        VertexId t = g.edge(e).target;
        if (visited[t]) continue;
        visited[t] = 1;
        cur.push_back(e);
        self(self, t);
        cur.pop_back();
        visited[t] = 0;
      }
    };
    for (EdgeId first = 0; first < g.edge_count(); ++first) {
      const Edge& e = g.edge(first);
      if (e.source == e.target) continue;
      visited[e.source] = visited[e.target] = 1;
      cur.assign(1, first);
      walk(walk, e.target);
      visited[e.source] = visited[e.target] = 0;
    }
  }
  if (paths.size() > 63 || (std::uint64_t(1) << paths.size()) > limit.max_items)
    throw SizeLimitError("brute_force_kip: " + std::to_string(paths.size()) +
                         " k-paths exceed the subset limit");
  std::vector<ExactScore> scores;
  scores.reserve(paths.size());
  for (const auto& p : paths) scores.push_back(score_of_path(g, DirectedPath{p}));

  PackingResult best;
  best.score = ExactScore();
  best.optimal = true;
  std::vector<std::uint32_t> cur_sel, best_sel;
  std::vector<char> used(g.edge_count(), 0);
  std::uint64_t nodes = 0;
  auto search = [&](auto&& self, std::uint32_t i, ExactScore acc) -> void {
    ++nodes;
    if (compare(acc, best.score) == std::strong_ordering::greater) {
      best.score = acc;
      best_sel = cur_sel;
    }
    for (std::uint32_t j = i; j < paths.size(); ++j) {
      bool clash = false;
      for (EdgeId e : paths[j])
        if (used[e]) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (EdgeId e : paths[j]) used[e] = 1;
      cur_sel.push_back(j);
      self(self, j + 1, acc * scores[j]);
      cur_sel.pop_back();
      for (EdgeId e : paths[j]) used[e] = 0;
    }
  };
  search(search, 0, ExactScore());
  for (std::uint32_t i : best_sel)
    best.collection.paths.push_back(DirectedPath{paths[i]});
  best.nodes_explored = nodes;
  return best;
}

PackingResult brute_force_ip(const WeightedDigraph& g, OracleLimit limit) {
  if (g.edge_count() == 0)
    throw PreconditionError("brute_force_ip: the graph has no edges");
  if (g.edge_count() > 14)
    throw SizeLimitError("brute_force_ip: more than 14 edges");
  TopoResult topo = topological_order(g);
  if (!topo.is_acyclic())
    throw CyclicGraphError(topo.cycle, "brute_force_ip: graph is cyclic");

  std::vector<std::uint32_t> pos(g.edge_count(), 0);
  std::vector<std::int64_t> next(g.edge_count(), -1);
  std::vector<char> haspred(g.edge_count(), 0);
  BigNat best_val = 0;
  std::vector<std::int64_t> best_next;
  std::vector<char> best_haspred;
  std::uint64_t complete_count = 0;

  // Enumerate, vertex by vertex, every partial matching of in-edges to
  // out-edges; a full choice is exactly one path partition.
  auto at_vertex = [&](auto&& self, std::uint32_t vi, BigNat val) -> void {
    if (vi == topo.order.size()) {
      if (++complete_count > limit.max_items)
        throw SizeLimitError("brute_force_ip: chaining count exceeds the limit");
      if (val > best_val) {
        best_val = val;
        best_next = next;
        best_haspred = haspred;
      }
      return;
    }
    VertexId v = topo.order[vi];
    auto outs = g.out_edges(v);
    std::vector<EdgeId> ins(g.in_edges(v).begin(), g.in_edges(v).end());
    std::vector<char> taken(ins.size(), 0);
    auto assign = [&](auto&& inner, std::size_t t, BigNat run) -> void {
      if (t == outs.size()) {
        self(self, vi + 1, std::move(run));
        return;
      }
      EdgeId out = outs[t];
      std::uint64_t w = g.edge(out).weight;
      for (std::size_t j = 0; j < ins.size(); ++j) {
        if (taken[j]) continue;
        taken[j] = 1;
        next[ins[j]] = out;
        haspred[out] = 1;
        pos[out] = pos[ins[j]] + 1;
        inner(inner, t + 1,
              run * boost::multiprecision::pow(BigNat(pos[out] + 1),
                                               static_cast<unsigned>(w)));
        taken[j] = 0;
        next[ins[j]] = -1;
        haspred[out] = 0;
      }
      pos[out] = 1;
      inner(inner, t + 1,
            run * boost::multiprecision::pow(BigNat(2), static_cast<unsigned>(w)));
    };
    assign(assign, 0, std::move(val));
  };
  at_vertex(at_vertex, 0, BigNat(1));

  PackingResult res;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (best_haspred[e]) continue;
    DirectedPath p;
    std::int64_t cur = e;
    while (cur >= 0) {
      p.edges.push_back(static_cast<EdgeId>(cur));
      cur = best_next[cur];
    }
    res.collection.paths.push_back(std::move(p));
  }
  res.score = score_of_collection(g, res.collection);
  res.optimal = true;
  res.nodes_explored = complete_count;
  return res;
}

std::optional<std::vector<std::uint32_t>> brute_force_vertex_cover(
    const CubicGraph& g, std::uint32_t tau, OracleLimit limit) {
  const std::uint32_t n = g.vertex_count();
  if (n > 63 || (std::uint64_t(1) << n) > limit.max_items)
    throw SizeLimitError("brute_force_vertex_cover: 2^" + std::to_string(n) +
                         " subsets exceed the oracle limit");
  if (tau > n) tau = n;
  for (std::uint32_t size = 1; size <= tau; ++size) {
    std::vector<std::uint32_t> found;
    bool ok = for_each_combination(n, size, [&](const std::vector<std::uint32_t>& idx) {
      std::vector<std::uint32_t> verts;
      for (std::uint32_t i : idx) verts.push_back(i + 1);
      if (is_vertex_cover(g, verts)) {
        found = verts;
        return true;
      }
      return false;
    });
    if (ok) return found;
  }
  return std::nullopt;
}

}  // namespace ipath

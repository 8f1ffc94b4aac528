#include "ipath/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <map>
#include <unordered_map>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

using Clock = std::chrono::steady_clock;

void require_dag(const WeightedDigraph& g, const char* op) {
  TopoResult topo = topological_order(g);
  if (!topo.is_acyclic())
    throw CyclicGraphError(topo.cycle,
                           std::string(op) + ": graph has a cycle of length " +
                               std::to_string(topo.cycle.size()));
}

// Runtime-sized edge bitset.
class EdgeBits {
public:
  explicit EdgeBits(std::size_t edges) : words_((edges + 63) / 64, 0) {}
  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool intersects(const EdgeBits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  void merge(const EdgeBits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }
  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return c;
  }
  template <typename F>
  void for_each(F f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        f(static_cast<std::uint32_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

private:
  std::vector<std::uint64_t> words_;
};

bool lex_less(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// k-IP branch and bound: include/exclude over the lex-sorted candidate list.
// ---------------------------------------------------------------------------

struct KipEngine {
  const WeightedDigraph& g;
  unsigned k;
  const ExactScore* target;  // decision mode when set
  const SolverBudget& budget;
  const SearchTuning& tuning;

  std::vector<DirectedPath> cands;
  std::vector<ExactScore> cscore;
  std::vector<EdgeBits> cmask;
  ExactScore base;  // k+1 factored, for the per-edge bound

  std::uint64_t nodes = 0;
  bool aborted = false;
  bool found = false;
  Clock::time_point deadline;
  bool timed = false;

  std::vector<std::uint32_t> cur;
  std::vector<std::uint32_t> best_sel;
  ExactScore best_score;
  bool have_best = false;
  std::vector<std::uint32_t> found_sel;

  KipEngine(const WeightedDigraph& graph, unsigned kk, const ExactScore* tgt,
            const SolverBudget& b, const SearchTuning& t)
      : g(graph), k(kk), target(tgt), budget(b), tuning(t),
        base(ExactScore::from_natural(kk + 1)) {
    cands = enumerate_k_paths(g, k);
    const std::size_t n = cands.size();
    cscore.reserve(n);
    cmask.reserve(n);
    for (const auto& p : cands) {
      cscore.push_back(score_of_path(g, p));
      EdgeBits m(g.edge_count());
      for (EdgeId e : p.edges) m.set(e);
      cmask.push_back(std::move(m));
    }
    // Descending score; enumeration order is lexicographic, and the stable
    // sort keeps it as the tie order.
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
      return compare(cscore[a], cscore[b]) == std::strong_ordering::greater;
    });
    apply_perm(perm);
    if (budget.max_seconds) {
      deadline = Clock::now() + std::chrono::seconds(*budget.max_seconds);
      timed = true;
    }
  }

  void apply_perm(const std::vector<std::uint32_t>& perm) {
    std::vector<DirectedPath> c2;
    std::vector<ExactScore> s2;
    std::vector<EdgeBits> m2;
    for (std::uint32_t i : perm) {
      c2.push_back(std::move(cands[i]));
      s2.push_back(std::move(cscore[i]));
      m2.push_back(std::move(cmask[i]));
    }
    cands = std::move(c2);
    cscore = std::move(s2);
    cmask = std::move(m2);
  }

  bool out_of_budget() {
    if (budget.max_nodes && nodes >= *budget.max_nodes) return true;
    if (timed && (nodes & 511) == 0 && Clock::now() >= deadline) return true;
    return false;
  }

  void note_solution(const ExactScore& acc) {
    if (!have_best || compare(acc, best_score) == std::strong_ordering::greater) {
      best_score = acc;
      best_sel = cur;
      have_best = true;
    }
    if (target && compare(acc, *target) != std::strong_ordering::less) {
      found = true;
      found_sel = cur;
    }
  }

  // Upper bounds on what the remaining candidates can still add.
  bool prunable(std::uint32_t idx, const EdgeBits& used, const ExactScore& acc) {
    EdgeBits free(g.edge_count());
    std::uint64_t cnt = 0;
    std::uint32_t first_feasible = 0;
    for (std::uint32_t j = idx; j < cands.size(); ++j) {
      if (cmask[j].intersects(used)) continue;
      if (cnt == 0) first_feasible = j;
      ++cnt;
      free.merge(cmask[j]);
    }
    auto beats = [&](const ExactScore& bound) {
      if (target) return compare(bound, *target) == std::strong_ordering::less;
      return compare(bound, best_score) != std::strong_ordering::greater;
    };
    if (cnt == 0) return true;  // nothing addable; acc was already recorded
    std::uint64_t sum_w = 0;
    free.for_each([&](std::uint32_t e) { sum_w += g.edge(e).weight; });
    if (beats(acc * base.pow(sum_w))) return true;
    std::uint64_t paths_cap = std::min<std::uint64_t>(cnt, free.count() / k);
    if (beats(acc * cscore[first_feasible].pow(paths_cap))) return true;
    return false;
  }

  void dfs(std::uint32_t idx, const EdgeBits& used, const ExactScore& acc) {
    while (idx < cands.size() && cmask[idx].intersects(used)) ++idx;
    if (idx == cands.size()) return;
    if (out_of_budget()) {
      aborted = true;
      return;
    }
    ++nodes;
    if (tuning.prune && prunable(idx, used, acc)) return;
    cur.push_back(idx);
    ExactScore nacc = acc * cscore[idx];
    note_solution(nacc);
    if (found) return;
    EdgeBits nused = used;
    nused.merge(cmask[idx]);
    dfs(idx + 1, nused, nacc);
    cur.pop_back();
    if (found || aborted) return;
    dfs(idx + 1, used, acc);
  }

  PathCollection collection_from(const std::vector<std::uint32_t>& sel) const {
    PathCollection c;
    for (std::uint32_t i : sel) c.paths.push_back(cands[i]);
    return c;
  }
};

// ---------------------------------------------------------------------------
// IP branch and bound on DAGs: per-vertex chainings in topological order.
// ---------------------------------------------------------------------------

struct IpEngine {
  const WeightedDigraph& g;
  const BigNat* target_val;
  const SolverBudget& budget;
  const SearchTuning& tuning;

  std::vector<VertexId> order;
  std::vector<BigNat> suf_val;    // product of per-edge position caps, by suffix
  std::vector<std::uint32_t> pos;  // committed position per placed edge
  std::vector<std::int64_t> next;  // chain successor per edge, -1 = chain ends
  std::vector<char> has_pred;
  std::vector<EdgeId> open;  // placed edges whose target is unprocessed (sorted)
  BigNat acc = 1;

  std::uint64_t nodes = 0;
  bool aborted = false;
  bool found = false;
  Clock::time_point deadline;
  bool timed = false;

  BigNat best_val = 0;
  std::vector<std::int64_t> best_next;
  std::vector<char> best_haspred;
  bool have_best = false;
  std::vector<std::int64_t> found_next;
  std::vector<char> found_haspred;

  std::unordered_map<std::string, BigNat> dominance;
  std::map<std::pair<std::uint32_t, std::uint64_t>, BigNat> factor_cache;

  IpEngine(const WeightedDigraph& graph, const BigNat* tgt, const SolverBudget& b,
           const SearchTuning& t)
      : g(graph), target_val(tgt), budget(b), tuning(t) {
    TopoResult topo = topological_order(g);
    order = topo.order;  // caller guarantees acyclicity
    // Furthest feasible position of each edge: one past the longest path
    // ending at its source (the chain prefix of any partition path that
    // uses the edge is such a path).
    std::vector<std::uint32_t> fin(g.vertex_count(), 0);
    for (VertexId v : order)
      for (EdgeId e : g.in_edges(v))
        fin[v] = std::max(fin[v], fin[g.edge(e).source] + 1);
    const std::uint32_t n = static_cast<std::uint32_t>(order.size());
    suf_val.assign(n + 1, BigNat(1));
    for (std::uint32_t i = n; i-- > 0;) {
      suf_val[i] = suf_val[i + 1];
      for (EdgeId e : g.out_edges(order[i]))
        suf_val[i] *= factor(fin[g.edge(e).source] + 1, g.edge(e).weight);
    }
    pos.assign(g.edge_count(), 0);
    next.assign(g.edge_count(), -1);
    has_pred.assign(g.edge_count(), 0);
    if (budget.max_seconds) {
      deadline = Clock::now() + std::chrono::seconds(*budget.max_seconds);
      timed = true;
    }
  }

  const BigNat& factor(std::uint32_t position, std::uint64_t weight) {
    auto key = std::make_pair(position, weight);
    auto it = factor_cache.find(key);
    if (it == factor_cache.end())
      it = factor_cache
               .emplace(key, boost::multiprecision::pow(BigNat(position + 1),
                                                        static_cast<unsigned>(weight)))
               .first;
    return it->second;
  }

  BigNat singleton_value() {
    BigNat v = 1;
    for (const auto& e : g.edges()) v *= factor(1, e.weight);
    return v;
  }

  void seed_singletons() {
    best_val = singleton_value();
    best_next.assign(g.edge_count(), -1);
    best_haspred.assign(g.edge_count(), 0);
    have_best = true;
  }

  bool out_of_budget() {
    if (budget.max_nodes && nodes >= *budget.max_nodes) return true;
    if (timed && (nodes & 1023) == 0 && Clock::now() >= deadline) return true;
    return false;
  }

  void complete() {
    if (target_val) {
      if (acc >= *target_val) {
        found = true;
        found_next = next;
        found_haspred = has_pred;
      }
      return;
    }
    if (!have_best || acc > best_val) {
      best_val = acc;
      best_next = next;
      best_haspred = has_pred;
      have_best = true;
    }
  }

  std::string dominance_key(std::uint32_t i) const {
    std::string key(8 + open.size() * 8, '\0');
    std::uint64_t head = i;
    std::memcpy(key.data(), &head, 8);
    for (std::size_t j = 0; j < open.size(); ++j) {
      std::uint64_t word = (std::uint64_t(open[j]) << 32) | pos[open[j]];
      std::memcpy(key.data() + 8 + j * 8, &word, 8);
    }
    return key;
  }

  void dfs(std::uint32_t i) {
    if (i == order.size()) {
      complete();
      return;
    }
    if (out_of_budget()) {
      aborted = true;
      return;
    }
    ++nodes;
    if (tuning.prune) {
      BigNat bound = acc * suf_val[i];
      if (target_val ? bound < *target_val : bound <= best_val) return;
      auto [it, fresh] = dominance.emplace(dominance_key(i), acc);
      if (!fresh) {
        if (it->second >= acc) return;
        it->second = acc;
      }
      if (dominance.size() > (std::size_t(1) << 20)) dominance.clear();
    }
    const VertexId v = order[i];
    auto in_span = g.in_edges(v);
    std::vector<EdgeId> ins(in_span.begin(), in_span.end());
    // Longest arriving chain first: extending it gives the largest factor.
    std::stable_sort(ins.begin(), ins.end(),
                     [&](EdgeId a, EdgeId b) { return pos[a] > pos[b]; });
    auto out_span = g.out_edges(v);
    std::vector<EdgeId> outs(out_span.begin(), out_span.end());

    // Structural cut update is matching-independent.
    std::vector<EdgeId> saved_open = open;
    for (EdgeId e : ins)
      open.erase(std::find(open.begin(), open.end(), e));
    for (EdgeId e : outs) open.insert(std::lower_bound(open.begin(), open.end(), e), e);

    std::vector<char> used_in(ins.size(), 0);
    match_rec(i, v, ins, outs, used_in, 0, acc);

    open = std::move(saved_open);
  }

  void match_rec(std::uint32_t i, VertexId v, const std::vector<EdgeId>& ins,
                 const std::vector<EdgeId>& outs, std::vector<char>& used_in,
                 std::size_t t, const BigNat& run) {
    if (found || aborted) return;
    if (t == outs.size()) {
      BigNat saved_acc = std::move(acc);
      acc = run;
      dfs(i + 1);
      acc = std::move(saved_acc);
      return;
    }
    const EdgeId out = outs[t];
    const std::uint64_t w = g.edge(out).weight;
    for (std::size_t j = 0; j < ins.size(); ++j) {
      if (used_in[j]) continue;
      const EdgeId in = ins[j];
      used_in[j] = 1;
      next[in] = out;
      has_pred[out] = 1;
      pos[out] = pos[in] + 1;
      match_rec(i, v, ins, outs, used_in, t + 1, run * factor(pos[out], w));
      used_in[j] = 0;
      next[in] = -1;
      has_pred[out] = 0;
      if (found || aborted) return;
    }
    pos[out] = 1;  // start a fresh path here
    match_rec(i, v, ins, outs, used_in, t + 1, run * factor(1, w));
  }

  PathCollection collection_from(const std::vector<std::int64_t>& links,
                                 const std::vector<char>& pred) const {
    PathCollection c;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (pred[e]) continue;
      DirectedPath p;
      std::int64_t cur = e;
      while (cur >= 0) {
        p.edges.push_back(static_cast<EdgeId>(cur));
        cur = links[cur];
      }
      c.paths.push_back(std::move(p));
    }
    return c;
  }
};

}  // namespace

// ---------------------------------------------------------------------------

MaxIpResult max_ip_dag(const WeightedDigraph& g) {
  if (g.edge_count() == 0)
    throw PreconditionError("max-ip: the graph has no edges");
  require_dag(g, "max-ip");
  TopoResult topo = topological_order(g);

  struct State {
    ExactScore score;
    std::vector<EdgeId> seq;
  };
  // Per vertex: best path of each length ending there.  Appending an edge
  // multiplies by a factor that depends only on the new position, so the
  // per-(vertex, length) maximum is all a longer path ever needs.
  std::vector<std::map<std::uint32_t, State>> best(g.vertex_count());

  auto offer = [&](VertexId v, std::uint32_t len, ExactScore score,
                   std::vector<EdgeId> seq) {
    auto it = best[v].find(len);
    if (it == best[v].end()) {
      best[v].emplace(len, State{std::move(score), std::move(seq)});
      return;
    }
    auto cmp = compare(score, it->second.score);
    if (cmp == std::strong_ordering::greater ||
        (cmp == std::strong_ordering::equal && lex_less(seq, it->second.seq))) {
      it->second.score = std::move(score);
      it->second.seq = std::move(seq);
    }
  };

  for (VertexId v : topo.order) {
    for (EdgeId id : g.out_edges(v)) {
      const Edge& e = g.edge(id);
      // Extend the empty path at v.
      offer(e.target, 1, ExactScore::from_natural(2).pow(e.weight), {id});
      for (const auto& [len, st] : best[v]) {
        ExactScore ext =
            st.score * ExactScore::from_natural(len + 2).pow(e.weight);
        std::vector<EdgeId> seq = st.seq;
        seq.push_back(id);
        offer(e.target, len + 1, std::move(ext), std::move(seq));
      }
    }
  }

  const State* winner = nullptr;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const auto& [len, st] : best[v]) {
      if (!winner) {
        winner = &st;
        continue;
      }
      auto cmp = compare(st.score, winner->score);
      if (cmp == std::strong_ordering::greater ||
          (cmp == std::strong_ordering::equal && lex_less(st.seq, winner->seq)))
        winner = &st;
    }
  }
  return MaxIpResult{DirectedPath{winner->seq}, winner->score};
}

std::vector<DirectedPath> enumerate_k_paths(const WeightedDigraph& g, unsigned k) {
  if (k == 0) throw PreconditionError("k must be >= 1");
  std::vector<DirectedPath> out;
  std::vector<EdgeId> cur;
  std::vector<char> visited(g.vertex_count(), 0);
  auto dfs = [&](auto&& self, VertexId at) -> void {
    if (cur.size() == k) {
      out.push_back(DirectedPath{cur});
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
    dfs(dfs, e.target);
    visited[e.source] = visited[e.target] = 0;
  }
  return out;
}

PackingResult exact_kip(const WeightedDigraph& g, unsigned k,
                        const SolverBudget& budget, const SearchTuning& tuning) {
  if (k == 0) throw PreconditionError("k must be >= 1");
  KipEngine eng(g, k, nullptr, budget, tuning);
  // Greedy packing as the initial incumbent.
  PackingResult seed = greedy_kip(g, k);
  eng.best_score = seed.score;
  eng.have_best = true;
  std::vector<std::uint32_t> seed_sel;  // map greedy paths back to candidate ids
  for (const auto& p : seed.collection.paths) {
    for (std::uint32_t i = 0; i < eng.cands.size(); ++i)
      if (eng.cands[i].edges == p.edges) {
        seed_sel.push_back(i);
        break;
      }
  }
  eng.best_sel = std::move(seed_sel);
  bool skip = budget.max_nodes && *budget.max_nodes == 0;
  if (!skip) eng.dfs(0, EdgeBits(g.edge_count()), ExactScore());
  PackingResult res;
  res.collection = eng.collection_from(eng.best_sel);
  res.score = eng.best_score;
  res.optimal = !eng.aborted && !skip;
  res.nodes_explored = eng.nodes;
  return res;
}

KipDecision decide_kip(const WeightedDigraph& g, unsigned k,
                       const ExactScore& target, const SolverBudget& budget,
                       const SearchTuning& tuning) {
  if (k == 0) throw PreconditionError("k must be >= 1");
  KipDecision dec;
  if (compare(target, ExactScore()) != std::strong_ordering::greater) {
    dec.verdict = Verdict::Yes;  // the empty collection already scores 0
    dec.witness = PathCollection{};
    return dec;
  }
  if ((budget.max_nodes && *budget.max_nodes == 0) ||
      (budget.max_seconds && *budget.max_seconds == 0)) {
    dec.verdict = Verdict::Unknown;
    return dec;
  }
  PackingResult seed = greedy_kip(g, k);
  if (compare(seed.score, target) != std::strong_ordering::less) {
    dec.verdict = Verdict::Yes;
    dec.witness = seed.collection;
    return dec;
  }
  KipEngine eng(g, k, &target, budget, tuning);
  eng.dfs(0, EdgeBits(g.edge_count()), ExactScore());
  dec.nodes_explored = eng.nodes;
  if (eng.found) {
    dec.verdict = Verdict::Yes;
    dec.witness = eng.collection_from(eng.found_sel);
  } else if (eng.aborted) {
    dec.verdict = Verdict::Unknown;
  } else {
    dec.verdict = Verdict::No;
  }
  return dec;
}

PackingResult exact_ip(const WeightedDigraph& g, const SolverBudget& budget,
                       const SearchTuning& tuning) {
  if (g.edge_count() == 0)
    throw PreconditionError("exact-ip: the graph has no edges");
  require_dag(g, "exact-ip");
  IpEngine eng(g, nullptr, budget, tuning);
  eng.seed_singletons();
  bool skip = budget.max_nodes && *budget.max_nodes == 0;
  if (!skip) eng.dfs(0);
  PackingResult res;
  res.collection = eng.collection_from(eng.best_next, eng.best_haspred);
  res.score = score_of_collection(g, res.collection);
  res.optimal = !eng.aborted && !skip;
  res.nodes_explored = eng.nodes;
  return res;
}

IpDecision decide_ip(const WeightedDigraph& g, const ExactScore& target,
                     const SolverBudget& budget, const SearchTuning& tuning) {
  if (g.edge_count() == 0)
    throw PreconditionError("decide-ip: the graph has no edges");
  require_dag(g, "decide-ip");
  IpDecision dec;
  BigNat target_val = target.materialize();
  {
    // The all-singletons partition is free to check and settles trivial
    // targets (value 1 in particular) without any search.
    IpEngine probe(g, nullptr, budget, tuning);
    if (probe.singleton_value() >= target_val) {
      PathCollection c;
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        c.paths.push_back(DirectedPath{{e}});
      dec.verdict = Verdict::Yes;
      dec.witness = validate_partition(g, c);
      return dec;
    }
  }
  if ((budget.max_nodes && *budget.max_nodes == 0) ||
      (budget.max_seconds && *budget.max_seconds == 0)) {
    dec.verdict = Verdict::Unknown;
    return dec;
  }
  IpEngine eng(g, &target_val, budget, tuning);
  eng.dfs(0);
  dec.nodes_explored = eng.nodes;
  if (eng.found) {
    dec.verdict = Verdict::Yes;
    dec.witness =
        validate_partition(g, eng.collection_from(eng.found_next, eng.found_haspred));
  } else if (eng.aborted) {
    dec.verdict = Verdict::Unknown;
  } else {
    dec.verdict = Verdict::No;
  }
  return dec;
}

PackingResult greedy_kip(const WeightedDigraph& g, unsigned k) {
  if (k == 0) throw PreconditionError("k must be >= 1");
  auto cands = enumerate_k_paths(g, k);
  std::vector<ExactScore> scores;
  scores.reserve(cands.size());
  for (const auto& p : cands) scores.push_back(score_of_path(g, p));
  std::vector<char> dead(cands.size(), 0);
  std::vector<char> used(g.edge_count(), 0);
  PackingResult res;
  res.optimal = false;
  for (;;) {
    std::int64_t pick = -1;
    for (std::uint32_t i = 0; i < cands.size(); ++i) {
      if (dead[i]) continue;
      bool clash = false;
      for (EdgeId e : cands[i].edges)
        if (used[e]) {
          clash = true;
          break;
        }
      if (clash) {
        dead[i] = 1;
        continue;
      }
      if (pick < 0 || compare(scores[i], scores[pick]) == std::strong_ordering::greater)
        pick = i;  // lexicographic tie-break: earlier candidate stays
    }
    if (pick < 0) break;
    for (EdgeId e : cands[pick].edges) used[e] = 1;
    dead[pick] = 1;
    res.collection.paths.push_back(cands[pick]);
    res.score = res.score * scores[pick];
  }
  return res;
}

}  // namespace ipath

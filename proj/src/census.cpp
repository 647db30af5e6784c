#include "copwin/census.hpp"

#include <algorithm>

namespace copwin {

Graph add_twin(const Graph& g, int v) {
  g.check_vertex(v);
  const int n = g.n();
  std::vector<std::uint64_t> rows(n + 1, 0);
  for (int u = 0; u < n; ++u) rows[u] = g.row(u);
  std::uint64_t closed = g.row(v) | (std::uint64_t{1} << v);
  rows[n] = closed;
  for (int u : BitRange{closed}) rows[u] |= std::uint64_t{1} << n;
  return Graph::from_rows(n + 1, std::move(rows));
}

Graph extend_tail(const Graph& g, int l) {
  if (l < 0) throw std::invalid_argument("extension length must be non-negative");
  CornerRanking r = corner_rank(g);
  if (!r.cop_win()) throw not_cop_win_error("extend_tail needs a cop-win graph");
  Graph cur = g;
  for (int step = 0; step < l; ++step) {
    std::vector<int> anchors = corner_rank(cur).levels[0].to_vector();
    int n = cur.n();
    std::vector<std::uint64_t> rows(n + (int)anchors.size(), 0);
    for (int u = 0; u < n; ++u) rows[u] = cur.row(u);
    for (std::size_t i = 0; i < anchors.size(); ++i) {
      int leaf = n + (int)i;
      rows[leaf] = std::uint64_t{1} << anchors[i];
      rows[anchors[i]] |= std::uint64_t{1} << leaf;
    }
    cur = Graph::from_rows(n + (int)anchors.size(), std::move(rows));
  }
  return cur;
}

Graph truncate(const Graph& g, const CornerRanking& r, int k) {
  if (!r.cop_win()) throw not_cop_win_error("truncate needs a cop-win graph");
  if (k < 1 || k > r.alpha.value()) throw std::out_of_range("truncation level");
  return level_graph(g, r, k);
}

SearchContext::SearchContext(int cap, int threads) : enumerator_(cap, threads) {}

const std::vector<SearchContext::Entry>& SearchContext::sweep(int n) {
  auto it = sweeps_.find(n);
  if (it != sweeps_.end()) return it->second;
  const std::vector<Graph>& reps = enumerator_.connected(n);
  std::vector<Entry> entries;
  entries.reserve(reps.size());
  for (int i = 0; i < (int)reps.size(); ++i) {
    Entry e;
    e.index = i;
    CornerRanking r = corner_rank(reps[i]);
    if (r.cop_win()) {
      e.vec = rank_cardinality_vector(r);
      e.top = top_heaviness(reps[i], r);
      e.capture_time = capture_time_by_rank(reps[i], r);
    }
    entries.push_back(std::move(e));
  }
  return sweeps_.emplace(n, std::move(entries)).first->second;
}

bool matches_filter(TopHeaviness t, TopFilter f) {
  switch (f) {
    case TopFilter::Any:
      return true;
    case TopFilter::Top0:
      return t == TopHeaviness::Top0;
    case TopFilter::Top1:
      return t == TopHeaviness::Top1;
  }
  return false;
}

RealizationCensus SearchContext::census(const RankVector& v, TopFilter filter,
                                        bool include_cliques) {
  RealizationCensus out{v, filter, {}, true, true};
  if (v.length() == 1 && !include_cliques) return out;  // cliques are excluded by convention

  const int n = v.sum();
  if (n <= cap()) {
    const std::vector<Graph>& reps = enumerator_.connected(n);
    for (const Entry& e : sweep(n)) {
      if (!e.vec || !(*e.vec == v)) continue;
      if (!matches_filter(*e.top, filter)) continue;
      out.realizers.push_back(reps[e.index]);
    }
    return out;  // reps already in canonical order
  }

  if (v.bottom() == 1 && n == cap() + 1) {
    // Tail decomposition: G realizes v iff G = H + d where H = G^(2)
    // realizes the initial segment and d is the lone rank-1 vertex, so
    // sweeping all attachments of d over the segment census is complete.
    out.full_sweep = false;
    RealizationCensus base = census(initial_segment(v, 2), TopFilter::Any, true);
    std::vector<std::pair<CanonicalForm, Graph>> hits;
    for (const Graph& h : base.realizers) {
      const int m = h.n();
      std::vector<std::uint64_t> rows(m + 1);
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
        for (int u = 0; u < m; ++u)
          rows[u] = h.row(u) | (((s >> u) & 1) << m);
        rows[m] = s;
        Graph cand = Graph::from_rows(m + 1, rows);
        CornerRanking r = corner_rank(cand);
        if (!r.cop_win()) continue;
        if (!(rank_cardinality_vector(r) == v)) continue;
        if (!matches_filter(top_heaviness(cand, r), filter)) continue;
        hits.emplace_back(canonical_form(cand), std::move(cand));
      }
    }
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < hits.size(); ++i)
      if (i == 0 || hits[i].first != hits[i - 1].first)
        out.realizers.push_back(std::move(hits[i].second));
    return out;
  }

  throw resource_error("census of " + to_string(v) + " exceeds the enumeration cap " +
                       std::to_string(cap()));
}

MinimalityVerdict SearchContext::check_minimal(const RankVector& v, int r, int sum_cap) {
  if (r != 0 && r != 1) throw std::invalid_argument("r must be 0 or 1");
  if (sum_cap > cap())
    throw resource_error("minimality sum cap exceeds the enumeration cap");
  MinimalityVerdict out{v, r, true, std::nullopt, sum_cap, {}};
  std::vector<RankVector> preds = predecessors(v, 2);
  // The reported counterexample is the first in (sum, length, entries)
  // order, so smaller graphs win ties.
  std::sort(preds.begin(), preds.end(), [](const RankVector& a, const RankVector& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return a < b;
  });
  TopFilter f = r == 0 ? TopFilter::Top0 : TopFilter::Top1;
  for (const RankVector& y : preds) {
    if (y == v) continue;
    if (y.sum() > sum_cap) {
      out.untested.push_back(y);
      continue;
    }
    RealizationCensus c = census(y, f);
    if (!c.realizers.empty()) {
      out.minimal = false;
      out.witness = {y, c.realizers.front()};
      return out;
    }
  }
  return out;
}

}  // namespace copwin

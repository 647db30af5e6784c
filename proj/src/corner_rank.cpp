#include "copwin/corner_rank.hpp"

namespace copwin {

VertexSet CornerRanking::level_mask(int k) const {
  int produced = alpha.is_finite() ? alpha.value() : finite_levels() + 1;
  if (k < 1 || k > produced) throw std::out_of_range("level index");
  VertexSet s = infinite_set;
  for (int j = (int)levels.size(); j >= k; --j) s = s | levels[j - 1];
  return s;
}

CornerRanking corner_rank(const Graph& g) {
  const int n = g.n();
  CornerRanking out;
  out.ranks.assign(n, Rank::infinity());

  std::uint64_t live = g.vertices().bits;
  int k = 1;
  std::vector<std::uint64_t> closed(n);
  while (true) {
    for (int v : BitRange{live})
      closed[v] = (g.row(v) & live) | (std::uint64_t{1} << v);

    bool clique = true;
    for (int v : BitRange{live})
      if (closed[v] != live) {
        clique = false;
        break;
      }
    if (clique) {
      for (int v : BitRange{live}) out.ranks[v] = Rank::finite(k);
      out.levels.push_back(VertexSet(live));
      out.alpha = Rank::finite(k);
      return out;
    }

    std::uint64_t corners = 0;
    for (int v : BitRange{live}) {
      for (int w : BitRange{live}) {
        if (w == v) continue;
        if ((closed[v] & ~closed[w]) == 0 && closed[v] != closed[w]) {
          corners |= std::uint64_t{1} << v;
          break;
        }
      }
    }
    if (corners == 0) {
      out.infinite_set = VertexSet(live);
      out.alpha = Rank::infinity();
      return out;
    }
    for (int v : BitRange{corners}) out.ranks[v] = Rank::finite(k);
    out.levels.push_back(VertexSet(corners));
    live &= ~corners;
    ++k;
  }
}

Graph level_graph(const Graph& g, const CornerRanking& r, int k,
                  std::vector<int>* old_of) {
  return induced_subgraph(g, r.level_mask(k), old_of);
}

RankVector rank_cardinality_vector(const CornerRanking& r) {
  if (!r.cop_win()) throw not_cop_win_error("rank cardinality vector needs finite rank");
  std::vector<int> e;
  for (int k = r.finite_levels(); k >= 1; --k) e.push_back(r.levels[k - 1].count());
  return RankVector(std::move(e));
}

TopHeaviness top_heaviness(const Graph& g, const CornerRanking& r) {
  if (!r.cop_win()) throw not_cop_win_error("top-heaviness needs finite rank");
  int alpha = r.alpha.value();
  if (alpha == 1) return TopHeaviness::CliqueRank1;
  VertexSet below = r.level_mask(alpha - 1);
  int some = 0, all = 0, total = 0;
  for (int a : elements(r.levels[alpha - 1])) {
    ++total;
    if (dominates(g, a, below)) ++some;
  }
  all = (some == total);
  if (some > 0 && !all)
    throw std::logic_error("some/every top-dominator equivalence violated");
  return some > 0 ? TopHeaviness::Top1 : TopHeaviness::Top0;
}

std::optional<int> capture_time_by_rank(const Graph& g, const CornerRanking& r) {
  if (!r.cop_win()) return std::nullopt;
  int alpha = r.alpha.value();
  if (alpha == 1) return g.n() == 1 ? 0 : 1;
  return alpha - (top_heaviness(g, r) == TopHeaviness::Top1 ? 1 : 0);
}

ProjectionMap::ProjectionMap(Graph g, CornerRanking r)
    : g_(std::move(g)), r_(std::move(r)) {
  if (!r_.cop_win()) throw not_cop_win_error("projections need finite rank");
  alpha_ = r_.alpha.value();
  f_.resize(alpha_ > 0 ? alpha_ - 1 : 0);
  built_.assign(f_.size(), false);
}

const std::vector<VertexSet>& ProjectionMap::level(int k) const {
  if (k < 1 || k > alpha_ - 1) throw std::out_of_range("projection level");
  if (!built_[k - 1]) {
    std::vector<VertexSet> map(g_.n());
    VertexSet lv = r_.level_mask(k);
    VertexSet above = r_.level_mask(k + 1);
    for (int u : elements(lv)) {
      if (r_.ranks[u] > Rank::finite(k)) {
        map[u] = VertexSet::single(u);
        continue;
      }
      std::uint64_t cu = (g_.row(u) & lv.bits) | (std::uint64_t{1} << u);
      VertexSet img;
      for (int w : elements(above)) {
        std::uint64_t cw = (g_.row(w) & lv.bits) | (std::uint64_t{1} << w);
        if ((cu & ~cw) == 0 && cu != cw) img.add(w);
      }
      map[u] = img;  // non-empty for every rank-k vertex (UpCorner)
    }
    f_[k - 1] = std::move(map);
    built_[k - 1] = true;
  }
  return f_[k - 1];
}

VertexSet ProjectionMap::f(int k, int v) const {
  g_.check_vertex(v);
  if (!r_.level_mask(k).contains(v))
    throw std::out_of_range("vertex not in the level graph");
  return level(k)[v];
}

VertexSet ProjectionMap::f(int k, VertexSet s) const {
  VertexSet out;
  for (int v : elements(s)) out = out | f(k, v);
  return out;
}

VertexSet ProjectionMap::F(int k, int v) const {
  return F(k, VertexSet::single(v));
}

VertexSet ProjectionMap::F(int k, VertexSet s) const {
  if (k < 1 || k > alpha_) throw std::out_of_range("projection level");
  VertexSet cur = s;
  for (int j = 1; j < k; ++j) cur = f(j, cur);
  return cur;
}

ProjectionMap build_projections(const Graph& g, const CornerRanking& r) {
  return ProjectionMap(g, r);
}

bool check_path_contraction(const Graph& g, const CornerRanking& r, int v, int w) {
  if (!(r.ranks[v] == r.ranks[w]) || !r.ranks[v].is_finite())
    throw std::invalid_argument("path contraction needs equal finite ranks");
  if (v == w) return true;
  int k = r.ranks[v].value();
  int in_level = distance_within(g, v, w, r.level_mask(k));
  int in_g = distance(g, v, w);
  if (in_level < 0) return false;  // cannot happen on connected cop-win input
  return in_g >= in_level;
}

}  // namespace copwin

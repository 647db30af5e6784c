#pragma once

#include <optional>
#include <vector>

#include "copwin/graph.hpp"
#include "copwin/vectors.hpp"

namespace copwin {

// Positive integer or infinity.  No arithmetic on the infinite value,
// only comparison; infinity compares above every finite rank.
class Rank {
 public:
  static Rank finite(int k) {
    if (k < 1) throw std::invalid_argument("finite ranks start at 1");
    return Rank(k);
  }
  static Rank infinity() { return Rank(0); }

  bool is_finite() const { return v_ != 0; }
  int value() const {
    if (!is_finite()) throw std::domain_error("rank is infinite");
    return v_;
  }

  friend bool operator==(Rank a, Rank b) { return a.v_ == b.v_; }
  friend bool operator<(Rank a, Rank b) {
    if (a.v_ == b.v_) return false;
    if (a.v_ == 0) return false;  // infinity is largest
    if (b.v_ == 0) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(Rank a, Rank b) { return b < a; }
  friend bool operator<=(Rank a, Rank b) { return !(b < a); }

 private:
  explicit Rank(int v) : v_(v) {}
  int v_;
};

// Result of the simultaneous strict-corner removal procedure.
struct CornerRanking {
  std::vector<Rank> ranks;        // per vertex
  Rank alpha = Rank::infinity();  // rank of the graph
  std::vector<VertexSet> levels;  // X_1, X_2, ... (the finite levels)
  VertexSet infinite_set;         // empty iff alpha finite

  bool cop_win() const { return alpha.is_finite(); }
  int finite_levels() const { return (int)levels.size(); }

  // Vertices of rank >= k, i.e. V(G^(k)).  Valid for 1 <= k <= the number
  // of level graphs the procedure produced (alpha when finite, the stall
  // point plus one otherwise).
  VertexSet level_mask(int k) const;
};

enum class TopHeaviness { Top1, Top0, CliqueRank1 };

CornerRanking corner_rank(const Graph& g);

// Induced subgraph G^(k); old_of maps its vertices back to g's.
Graph level_graph(const Graph& g, const CornerRanking& r, int k,
                  std::vector<int>* old_of = nullptr);

// (x_alpha, ..., x_1) with x_k = |X_k|.  Requires finite alpha.
RankVector rank_cardinality_vector(const CornerRanking& r);

// Requires finite alpha.  For alpha >= 2 the some/every equivalence over
// the rank-alpha vertices is asserted, not assumed.
TopHeaviness top_heaviness(const Graph& g, const CornerRanking& r);

// nullopt means infinity.  alpha >= 2: alpha - r per the rank/capture
// correspondence; alpha = 1 (clique): 0 when n = 1 and 1 otherwise.
std::optional<int> capture_time_by_rank(const Graph& g, const CornerRanking& r);

// The multi-valued maps f_k (one level down) and their compositions F_k.
// f_k(u) is {u} while cr(u) > k, and otherwise the set of higher-level
// vertices that strictly corner u in G^(k).  Levels materialize lazily.
class ProjectionMap {
 public:
  ProjectionMap(Graph g, CornerRanking r);

  int alpha() const { return alpha_; }
  VertexSet f(int k, int v) const;          // f_k(v), v in G^(k)
  VertexSet f(int k, VertexSet s) const;    // elementwise union
  VertexSet F(int k, int v) const;          // F_k(v), F_1 = identity
  VertexSet F(int k, VertexSet s) const;

 private:
  const std::vector<VertexSet>& level(int k) const;

  Graph g_;
  CornerRanking r_;
  int alpha_;
  mutable std::vector<std::vector<VertexSet>> f_;  // [k-1][v]
  mutable std::vector<bool> built_;
};

ProjectionMap build_projections(const Graph& g, const CornerRanking& r);

// Distances between equal-rank vertices never shrink when passing from
// G^(k) down to G.  Requires cr(v) == cr(w), finite.
bool check_path_contraction(const Graph& g, const CornerRanking& r, int v, int w);

}  // namespace copwin

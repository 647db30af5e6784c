#pragma once

#include <map>
#include <optional>

#include "copwin/corner_rank.hpp"
#include "copwin/enumerate.hpp"
#include "copwin/game.hpp"

namespace copwin {

enum class TopFilter { Any, Top0, Top1 };

struct RealizationCensus {
  RankVector vec;
  TopFilter filter;
  std::vector<Graph> realizers;  // pairwise non-isomorphic, canonical order
  bool full_sweep = true;   // the whole order-n isomorphism space was swept
  bool complete = true;     // provably contains every realizer class
};

struct MinimalityVerdict {
  RankVector vec;
  int r;
  bool minimal;  // no tested predecessor is r-realizable
  std::optional<std::pair<RankVector, Graph>> witness;
  int sum_cap_used;
  std::vector<RankVector> untested;  // proper predecessors beyond the cap
};

// Adds a twin of v: the new vertex receives exactly N[v] as neighbors.
Graph add_twin(const Graph& g, int v);

// l rounds of the pendant construction: each round hangs one new leaf off
// every current rank-1 vertex.  Requires a cop-win input.
Graph extend_tail(const Graph& g, int l);

// G^(k), whose rank cardinality vector is the initial segment at k.
Graph truncate(const Graph& g, const CornerRanking& r, int k);

// Shared sweep state: the enumerator plus, per order, the corner-rank
// classification of every representative.  Censuses and the verification
// suites all pull from here so a level is ranked once.
class SearchContext {
 public:
  explicit SearchContext(int cap = 9, int threads = 1);

  GraphEnumerator& enumerator() { return enumerator_; }
  int cap() const { return enumerator_.cap(); }
  void set_cap(int cap) { enumerator_.set_cap(cap); }

  struct Entry {
    int index;  // into enumerator().connected(n)
    std::optional<RankVector> vec;          // nullopt: not cop-win
    std::optional<TopHeaviness> top;
    std::optional<int> capture_time;        // by rank
  };
  const std::vector<Entry>& sweep(int n);

  // Exhaustive census at sum(v) <= cap.  For a vector one past the cap
  // whose lowest entry is 1, falls back to the tail decomposition: every
  // realizer is a realizer of the initial segment at 2 plus one attached
  // vertex, so the segment census plus a subset sweep is still complete
  // (full_sweep is false on that path).
  RealizationCensus census(const RankVector& v, TopFilter filter,
                           bool include_cliques = false);

  // Tests the proper predecessors of v (length >= 2) in (sum, length,
  // entries) order; predecessors beyond sum_cap are reported untested.
  MinimalityVerdict check_minimal(const RankVector& v, int r, int sum_cap);

 private:
  GraphEnumerator enumerator_;
  std::map<int, std::vector<Entry>> sweeps_;
};

bool matches_filter(TopHeaviness t, TopFilter f);

}  // namespace copwin

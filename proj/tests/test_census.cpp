#include <doctest.h>

#include "copwin/catalog.hpp"
#include "copwin/census.hpp"
#include "test_util.hpp"

using namespace copwin;

namespace {
SearchContext& shared_ctx() {
  static SearchContext ctx(8, 2);
  return ctx;
}
}  // namespace

TEST_CASE("census examples at small sums") {
  SearchContext& ctx = shared_ctx();

  RealizationCensus h7c = ctx.census(RankVector{2, 2, 2, 1}, TopFilter::Any);
  REQUIRE(h7c.realizers.size() == 1);
  CHECK(isomorphic(h7c.realizers[0], named_graph("H7")));

  CHECK(ctx.census(RankVector{2, 3}, TopFilter::Top0).realizers.size() == 3);
  CHECK(ctx.census(RankVector{2, 2, 3}, TopFilter::Top0).realizers.size() == 5);
  CHECK(ctx.census(RankVector{1, 2, 2, 1}, TopFilter::Any).realizers.empty());
  CHECK(ctx.census(RankVector{1, 3, 2, 1}, TopFilter::Any).realizers.empty());

  // Census output re-verifies and is deterministic.
  RealizationCensus again = ctx.census(RankVector{2, 2, 3}, TopFilter::Top0);
  REQUIRE(again.realizers.size() == 5);
  for (const Graph& g : again.realizers) {
    CornerRanking r = corner_rank(g);
    CHECK(rank_cardinality_vector(r) == RankVector{2, 2, 3});
    CHECK(top_heaviness(g, r) == TopHeaviness::Top0);
    CHECK(is_connected(g));
  }

  // Length-1 vectors follow the clique convention unless asked otherwise.
  CHECK(ctx.census(RankVector{4}, TopFilter::Any).realizers.empty());
  RealizationCensus k4 = ctx.census(RankVector{4}, TopFilter::Any, true);
  REQUIRE(k4.realizers.size() == 1);
  CHECK(isomorphic(k4.realizers[0], named_graph("K", 4)));
}

TEST_CASE("tail decomposition census agrees with a full sweep") {
  // At cap 7 the sum-8 vector goes through the decomposition; at cap 8 the
  // same vector is swept in full.  Results must coincide.
  SearchContext small(7, 2);
  SearchContext big(8, 2);
  for (const RankVector& v :
       {RankVector{2, 2, 2, 1, 1}, RankVector{1, 4, 2, 1}, RankVector{2, 3, 2, 1},
        RankVector{3, 2, 2, 1}, RankVector{1, 2, 4, 1}}) {
    RealizationCensus via_tail = small.census(v, TopFilter::Any);
    RealizationCensus via_sweep = big.census(v, TopFilter::Any);
    CHECK_FALSE(via_tail.full_sweep);
    CHECK(via_tail.complete);
    REQUIRE(via_tail.realizers.size() == via_sweep.realizers.size());
    for (std::size_t i = 0; i < via_tail.realizers.size(); ++i)
      CHECK(canonical_form(via_tail.realizers[i]) ==
            canonical_form(via_sweep.realizers[i]));
  }
  // Vectors not ending in 1 cannot use it.
  CHECK_THROWS_AS(small.census(RankVector{2, 2, 2, 2}, TopFilter::Any), resource_error);
}

TEST_CASE("add_twin pumps one entry") {
  Graph k1 = named_graph("K", 1);
  CHECK(isomorphic(add_twin(k1, 0), named_graph("K", 2)));

  Graph h7 = named_graph("H7");
  using namespace h7;
  CHECK(rank_cardinality_vector(corner_rank(add_twin(h7, c1))) == RankVector{2, 2, 3, 1});
  CHECK(rank_cardinality_vector(corner_rank(add_twin(h7, d))) == RankVector{2, 2, 2, 2});
  CHECK(rank_cardinality_vector(corner_rank(add_twin(h7, a1))) == RankVector{3, 2, 2, 1});

  // The new vertex really is a twin.
  Graph t = add_twin(h7, c1);
  CHECK(twins(t, c1, t.n() - 1));
}

TEST_CASE("add_twin preserves vector shape and top-heaviness exhaustively") {
  SearchContext& ctx = shared_ctx();
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : ctx.enumerator().connected(n)) {
      CornerRanking r = corner_rank(g);
      if (!r.cop_win()) continue;
      RankVector base = rank_cardinality_vector(r);
      TopHeaviness top = top_heaviness(g, r);
      for (int v = 0; v < n; ++v) {
        Graph t = add_twin(g, v);
        CornerRanking rt = corner_rank(t);
        REQUIRE(rt.cop_win());
        std::vector<int> want = base.entries();
        want[base.length() - r.ranks[v].value()] += 1;
        CHECK(rank_cardinality_vector(rt) == RankVector(want));
        CHECK(top_heaviness(t, rt) == top);
      }
    }
  }
}

TEST_CASE("extend_tail realizes the standard extension") {
  Graph p5 = named_graph("P", 5);
  CHECK(isomorphic(extend_tail(p5, 1), named_graph("P", 7)));
  CHECK(extend_tail(p5, 0) == p5);

  Graph h7 = named_graph("H7");
  Graph h8 = extend_tail(h7, 1);
  CornerRanking r8 = corner_rank(h8);
  CHECK(rank_cardinality_vector(r8) == RankVector{2, 2, 2, 1, 1});
  CHECK(top_heaviness(h8, r8) == TopHeaviness::Top1);
  // The level graph two steps up is the original H7, on the same vertices.
  CHECK(induced_subgraph(h8, r8.level_mask(2)) == h7);

  CHECK_THROWS_AS(extend_tail(named_graph("fig2"), 1), not_cop_win_error);

  // The one-vertex clique is the lone boundary case: its pendant arrives
  // as a twin, so the result is K2 with vector (2), not (1,1).
  Graph k1e = extend_tail(named_graph("K", 1), 1);
  CHECK(isomorphic(k1e, named_graph("K", 2)));
  CHECK(rank_cardinality_vector(corner_rank(k1e)) == RankVector{2});
}

TEST_CASE("extend_tail invariants, exhaustively at small orders") {
  SearchContext& ctx = shared_ctx();
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : ctx.enumerator().connected(n)) {
      CornerRanking r = corner_rank(g);
      if (!r.cop_win()) continue;
      RankVector base = rank_cardinality_vector(r);
      for (int l = 1; l <= 2; ++l) {
        if (n + l * base.bottom() > 20) continue;
        Graph e = extend_tail(g, l);
        CornerRanking re = corner_rank(e);
        REQUIRE(re.cop_win());
        CHECK(rank_cardinality_vector(re) == standard_extension(base, l));
        CHECK(induced_subgraph(e, re.level_mask(l + 1)) == g);
      }
    }
  }
}

TEST_CASE("truncate realizes the initial segment") {
  Graph h7 = named_graph("H7");
  CornerRanking r = corner_rank(h7);
  Graph t2 = truncate(h7, r, 2);
  CHECK(t2.n() == 6);
  CHECK(rank_cardinality_vector(corner_rank(t2)) == RankVector{2, 2, 2});
  CHECK(truncate(h7, r, 1) == h7);

  Graph p7 = named_graph("P", 7);
  CHECK(isomorphic(truncate(p7, corner_rank(p7), 2), named_graph("P", 5)));
  CHECK_THROWS_AS(truncate(h7, r, 5), std::out_of_range);
}

TEST_CASE("truncate invariants, exhaustively at small orders") {
  SearchContext& ctx = shared_ctx();
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : ctx.enumerator().connected(n)) {
      CornerRanking r = corner_rank(g);
      if (!r.cop_win()) continue;
      RankVector base = rank_cardinality_vector(r);
      for (int k = 1; k <= r.alpha.value(); ++k)
        CHECK(rank_cardinality_vector(corner_rank(truncate(g, r, k))) ==
              initial_segment(base, k));
    }
  }
}

TEST_CASE("realizability is closed under the vector order") {
  // Whenever x is r-realizable, every y with x <= y and sum(y) <= 7 is
  // r-realizable too, per the twin and pendant constructions.
  SearchContext& ctx = shared_ctx();
  std::map<RankVector, std::pair<bool, bool>> realized;  // vec -> (r0, r1)
  for (int n = 2; n <= 7; ++n)
    for (const SearchContext::Entry& e : ctx.sweep(n)) {
      if (!e.vec || e.vec->length() < 2) continue;
      auto& flags = realized.emplace(*e.vec, std::make_pair(false, false)).first->second;
      if (*e.top == TopHeaviness::Top0) flags.first = true;
      if (*e.top == TopHeaviness::Top1) flags.second = true;
    }
  std::vector<RankVector> all;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (cur.size() >= 2) all.push_back(RankVector(cur));
    for (int x = 1; x <= rest; ++x) {
      cur.push_back(x);
      self(self, rest - x);
      cur.pop_back();
    }
  };
  rec(rec, 7);
  int closures = 0;
  for (const auto& [x, flags] : realized) {
    for (const RankVector& y : all) {
      if (!leq(x, y)) continue;
      auto it = realized.find(y);
      bool y0 = it != realized.end() && it->second.first;
      bool y1 = it != realized.end() && it->second.second;
      if (flags.first) CHECK(y0);
      if (flags.second) CHECK(y1);
      ++closures;
    }
  }
  CHECK(closures > 100);
}

TEST_CASE("minimality verdicts at small sums") {
  SearchContext& ctx = shared_ctx();
  MinimalityVerdict v12 = ctx.check_minimal(RankVector{1, 2}, 1, 8);
  CHECK(v12.minimal);
  CHECK(v12.untested.empty());

  MinimalityVerdict v22 = ctx.check_minimal(RankVector{2, 2}, 0, 8);
  CHECK(v22.minimal);

  MinimalityVerdict v2221 = ctx.check_minimal(RankVector{2, 2, 2, 1}, 1, 8);
  CHECK(v2221.minimal);

  MinimalityVerdict bad = ctx.check_minimal(RankVector{2, 2, 2, 1, 1, 1}, 1, 8);
  CHECK_FALSE(bad.minimal);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == RankVector{2, 2, 2, 1});
  CHECK(isomorphic(bad.witness->second, named_graph("H7")));

  CHECK_THROWS_AS(ctx.check_minimal(RankVector{1, 2}, 2, 8), std::invalid_argument);
  CHECK_THROWS_AS(ctx.check_minimal(RankVector{1, 2}, 1, 20), resource_error);
}

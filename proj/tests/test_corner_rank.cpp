#include <doctest.h>

#include "copwin/catalog.hpp"
#include "copwin/corner_rank.hpp"
#include "copwin/suites.hpp"
#include "test_util.hpp"

using namespace copwin;

TEST_CASE("H7 walkthrough") {
  Graph g = named_graph("H7");
  using namespace h7;
  CornerRanking r = corner_rank(g);
  CHECK(r.ranks[d] == Rank::finite(1));
  CHECK(r.ranks[c1] == Rank::finite(2));
  CHECK(r.ranks[c2] == Rank::finite(2));
  CHECK(r.ranks[b1] == Rank::finite(3));
  CHECK(r.ranks[b2] == Rank::finite(3));
  CHECK(r.ranks[a1] == Rank::finite(4));
  CHECK(r.ranks[a2] == Rank::finite(4));
  CHECK(r.alpha == Rank::finite(4));
  CHECK(rank_cardinality_vector(r) == RankVector{2, 2, 2, 1});
  CHECK(top_heaviness(g, r) == TopHeaviness::Top1);
  CHECK(capture_time_by_rank(g, r) == 3);
}

TEST_CASE("the non-cop-win example stalls at rank infinity") {
  Graph g = named_graph("fig2");
  CornerRanking r = corner_rank(g);
  CHECK_FALSE(r.cop_win());
  CHECK(r.ranks[6] == Rank::finite(1));  // x, the pendant end
  CHECK(r.ranks[5] == Rank::finite(2));  // y
  for (int v = 0; v < 5; ++v) CHECK_FALSE(r.ranks[v].is_finite());
  CHECK(r.infinite_set.count() == 5);
  CHECK_THROWS_AS(rank_cardinality_vector(r), not_cop_win_error);
  CHECK_THROWS_AS(top_heaviness(g, r), not_cop_win_error);
  CHECK(capture_time_by_rank(g, r) == std::nullopt);
}

TEST_CASE("cliques settle in one step") {
  for (int n : {1, 2, 3, 5}) {
    Graph g = named_graph("K", n);
    CornerRanking r = corner_rank(g);
    CHECK(r.alpha == Rank::finite(1));
    for (int v = 0; v < n; ++v) CHECK(r.ranks[v] == Rank::finite(1));
    CHECK(top_heaviness(g, r) == TopHeaviness::CliqueRank1);
    CHECK(capture_time_by_rank(g, r) == (n == 1 ? 0 : 1));
    CHECK(rank_cardinality_vector(r) == RankVector{n});
  }
}

TEST_CASE("paths") {
  Graph p5 = named_graph("P", 5);
  CornerRanking r5 = corner_rank(p5);
  CHECK(rank_cardinality_vector(r5) == RankVector{1, 2, 2});
  CHECK(r5.ranks[0] == Rank::finite(1));
  CHECK(r5.ranks[1] == Rank::finite(2));
  CHECK(r5.ranks[2] == Rank::finite(3));
  CHECK(capture_time_by_rank(p5, r5) == 2);

  Graph p6 = named_graph("P", 6);
  CornerRanking r6 = corner_rank(p6);
  CHECK(top_heaviness(p6, r6) == TopHeaviness::Top0);
  CHECK(rank_cardinality_vector(r6) == RankVector{2, 2, 2});
  CHECK(capture_time_by_rank(p6, r6) == 3);

  Graph p8 = named_graph("P", 8);
  CHECK(rank_cardinality_vector(corner_rank(p8)) == RankVector{2, 2, 2, 2});
}

TEST_CASE("disconnected graphs never finish") {
  // Every disconnected graph on up to 5 vertices has rank infinity.
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      Graph g = testing::graph_from_mask(n, mask);
      if (is_connected(g)) continue;
      CHECK_FALSE(corner_rank(g).cop_win());
    }
  }
}

TEST_CASE("level graphs and monotone dismantling") {
  Graph g = named_graph("H7");
  CornerRanking r = corner_rank(g);
  CHECK(level_graph(g, r, 1) == g);
  CHECK(level_graph(g, r, 4).n() == 2);
  CHECK(check_monotone_dismantling(g, r).empty());
  for (int k = 1; k < 4; ++k)
    CHECK(r.level_mask(k + 1).proper_subset_of(r.level_mask(k)));
}

TEST_CASE("projections on H7") {
  Graph g = named_graph("H7");
  using namespace h7;
  CornerRanking r = corner_rank(g);
  ProjectionMap pm = build_projections(g, r);
  CHECK(pm.f(1, d) == VertexSet::single(b1));
  CHECK(pm.f(1, a1) == VertexSet::single(a1));  // rank above the level
  VertexSet f4d = pm.F(4, d);
  VertexSet tops;
  tops.add(a1);
  tops.add(a2);
  CHECK(f4d.subset_of(tops));
  CHECK(pm.F(1, d) == VertexSet::single(d));
  CHECK_FALSE(pm.f(2, c1).empty());
  CHECK_THROWS_AS(pm.f(1, 64), std::out_of_range);
}

TEST_CASE("path contraction on H7") {
  Graph g = named_graph("H7");
  using namespace h7;
  CornerRanking r = corner_rank(g);
  CHECK(check_path_contraction(g, r, c1, c2));
  CHECK(check_path_contraction(g, r, c1, c1));
  CHECK(distance(g, c1, c2) == 2);
  CHECK(distance_within(g, c1, c2, r.level_mask(2)) == 2);
  CHECK_THROWS_AS(check_path_contraction(g, r, d, c1), std::invalid_argument);
}

TEST_CASE("sampled paths keep a short image under every projection") {
  // For a path v_1..v_m in G and any level k, some pair of projections of
  // the endpoints is joined in G^(k) by a path of length at most m-1.
  std::mt19937 rng(47);
  auto check_paths = [&](const Graph& g) {
    CornerRanking r = corner_rank(g);
    if (!r.cop_win()) return;
    ProjectionMap pm(g, r);
    for (int it = 0; it < 20; ++it) {
      // Random walk without repeats; a path in g.
      std::vector<int> path{(int)(rng() % g.n())};
      VertexSet used = VertexSet::single(path[0]);
      while (true) {
        VertexSet next = VertexSet(g.row(path.back())) - used;
        if (next.empty() || (int)path.size() > 5) break;
        auto opts = next.to_vector();
        int v = opts[rng() % opts.size()];
        path.push_back(v);
        used.add(v);
      }
      int len = (int)path.size() - 1;
      for (int k = 1; k <= r.alpha.value(); ++k) {
        VertexSet from = pm.F(k, path.front());
        VertexSet to = pm.F(k, path.back());
        int best = -1;
        for (int a : elements(from))
          for (int b : elements(to)) {
            int d = distance_within(g, a, b, r.level_mask(k));
            if (d >= 0 && (best < 0 || d < best)) best = d;
          }
        REQUIRE(best >= 0);
        CHECK(best <= len);
      }
    }
  };
  check_paths(named_graph("H7"));
  check_paths(named_graph("P", 7));
  for (int it = 0; it < 30; ++it)
    check_paths(testing::random_cop_win(rng, 5 + (int)(rng() % 6)));
}

TEST_CASE("structural lemmas hold on random cop-win graphs") {
  std::mt19937 rng(43);
  for (int it = 0; it < 200; ++it) {
    Graph g = testing::random_cop_win(rng, 4 + (int)(rng() % 7));
    CornerRanking r = corner_rank(g);
    REQUIRE(r.cop_win());
    CHECK(check_upcorner(g, r).empty());
    CHECK(check_neighbor_below(g, r).empty());
    CHECK(check_no_near_top_dominator(g, r).empty());
    CHECK(check_homomorphism(g, r).empty());
    CHECK(check_path_contraction_all(g, r).empty());
    CHECK(check_monotone_dismantling(g, r).empty());
    for (int k = 1; k <= (r.alpha.value()); ++k)
      CHECK_FALSE(r.levels[k - 1].empty());
  }
}

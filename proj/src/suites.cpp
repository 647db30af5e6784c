#include "copwin/suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "copwin/io.hpp"

namespace copwin {

namespace {

std::set<CanonicalForm> forms_of(const std::vector<Graph>& graphs) {
  std::set<CanonicalForm> out;
  for (const Graph& g : graphs) out.insert(canonical_form(g));
  return out;
}

struct Runner {
  SearchContext& ctx;
  SuiteReport rep;

  void check(const std::string& id, bool pass, const std::string& witness = "",
             const std::string& note = "") {
    rep.checks.push_back({rep.name, id, pass, pass ? "" : witness, note});
  }

  void census_count(const std::string& id, const RankVector& v, TopFilter f,
                    std::size_t expect) {
    RealizationCensus c = ctx.census(v, f);
    std::string witness = c.realizers.empty() ? to_string(v)
                                              : serialize_compact(c.realizers.front());
    check(id, c.realizers.size() == expect, witness,
          "count=" + std::to_string(c.realizers.size()) +
              (c.full_sweep ? "" : " method=tail"));
  }

  void census_equals(const std::string& id, const RankVector& v, TopFilter f,
                     const std::vector<Graph>& expect) {
    RealizationCensus c = ctx.census(v, f);
    bool ok = forms_of(c.realizers) == forms_of(expect);
    check(id, ok, to_string(v), "count=" + std::to_string(c.realizers.size()));
  }

  // Runs fn over every connected cop-win class of each listed order and
  // reports the first violation.
  void sweep_check(const std::string& id, const std::vector<int>& orders,
                   std::string (*fn)(const Graph&, const CornerRanking&)) {
    for (int n : orders) {
      const std::vector<Graph>& reps = ctx.enumerator().connected(n);
      for (const Graph& g : reps) {
        CornerRanking r = corner_rank(g);
        if (!r.cop_win()) continue;
        std::string bad = fn(g, r);
        if (!bad.empty()) {
          check(id, false, serialize_compact(g), bad);
          return;
        }
      }
    }
    check(id, true);
  }
};

std::string rank_of(const CornerRanking& r, int v) {
  return r.ranks[v].is_finite() ? std::to_string(r.ranks[v].value()) : "infinity";
}

// ---- suite: table1 ------------------------------------------------------

void run_table1(Runner& run) {
  SearchContext& ctx = run.ctx;
  const int expected_capt[9] = {0, 0, 1, 1, 2, 2, 3, 3, 4};
  for (int n = 1; n <= 8; ++n) {
    const std::vector<Graph>& reps = ctx.enumerator().connected(n);
    MaxCaptureResult got = max_capture_time(n, reps);
    run.check("n" + std::to_string(n) + "-capt", got.max_capture_time == expected_capt[n],
              std::to_string(got.max_capture_time));

    std::vector<Graph> expect;
    expect.push_back(named_graph("P", n));
    switch (n) {
      case 3:
        expect.push_back(named_graph("K", 3));
        break;
      case 5:
        for (auto v : {RankVector{3, 2}, RankVector{2, 3}})
          for (const Graph& g : ctx.census(v, TopFilter::Top0).realizers)
            expect.push_back(g);
        break;
      case 7:
        expect.push_back(named_graph("H7"));
        for (auto v : {RankVector{2, 2, 3}, RankVector{2, 3, 2}, RankVector{3, 2, 2}})
          for (const Graph& g : ctx.census(v, TopFilter::Top0).realizers)
            expect.push_back(g);
        break;
      case 8:
        for (const Graph& g : ctx.census(RankVector{2, 2, 2, 1, 1}, TopFilter::Any).realizers)
          expect.push_back(g);
        break;
      default:
        break;
    }
    std::set<CanonicalForm> want = forms_of(expect);
    std::set<CanonicalForm> have(got.attaining.begin(), got.attaining.end());
    run.check("n" + std::to_string(n) + "-set", want == have, "",
              "count=" + std::to_string(have.size()));
    if (n == 5) run.check("n5-count", have.size() == 5, std::to_string(have.size()));
    if (n == 7) run.check("n7-count", have.size() == 9, std::to_string(have.size()));
  }
}

// ---- suite: uniqueness ---------------------------------------------------

void run_uniqueness(Runner& run) {
  run.census_equals("H7only-2221", {2, 2, 2, 1}, TopFilter::Any, {named_graph("H7")});
  // Odd paths: (1,2,...,2) of length a is only realized by P_{2a-1}.
  run.census_equals("oddpath-12", {1, 2}, TopFilter::Any, {named_graph("P", 3)});
  run.census_equals("oddpath-122", {1, 2, 2}, TopFilter::Any, {named_graph("P", 5)});
  run.census_equals("oddpath-1222", {1, 2, 2, 2}, TopFilter::Any, {named_graph("P", 7)});
  // Even paths: (2,...,2) of length a is the only 0-top realizer, P_{2a}.
  run.census_equals("evenpath-22", {2, 2}, TopFilter::Top0, {named_graph("P", 4)});
  run.census_equals("evenpath-222", {2, 2, 2}, TopFilter::Top0, {named_graph("P", 6)});
  run.census_equals("evenpath-2222", {2, 2, 2, 2}, TopFilter::Top0, {named_graph("P", 8)});
  // All-2s-with-one-3 family, both flavors, every instance with sum <= 9.
  run.census_equals("pathlike-132", {1, 3, 2}, TopFilter::Any,
                    {named_graph("fig1232-132")});
  run.census_equals("pathlike-1232", {1, 2, 3, 2}, TopFilter::Any,
                    {named_graph("fig1232-1232")});
  run.census_count("pathlike-1322", {1, 3, 2, 2}, TopFilter::Any, 1);
  run.census_count("pathlike-32", {3, 2}, TopFilter::Top0, 1);
  run.census_count("pathlike-232", {2, 3, 2}, TopFilter::Top0, 1);
  run.census_count("pathlike-322", {3, 2, 2}, TopFilter::Top0, 1);
  run.census_count("pathlike-2232", {2, 2, 3, 2}, TopFilter::Top0, 1);
  run.census_count("pathlike-2322", {2, 3, 2, 2}, TopFilter::Top0, 1);
  run.census_count("pathlike-3222", {3, 2, 2, 2}, TopFilter::Top0, 1);
}

// ---- suite: nonrealizable ------------------------------------------------

void run_nonrealizable(Runner& run) {
  SearchContext& ctx = run.ctx;

  // Second/third entry 1 is never realized: scan every cop-win class.
  int scan_cap = std::min(ctx.cap(), 9);
  for (int n = 2; n <= scan_cap; ++n) {
    std::string bad;
    const std::vector<Graph>& reps = ctx.enumerator().connected(n);
    for (const SearchContext::Entry& e : ctx.sweep(n)) {
      if (!e.vec) continue;
      const RankVector& v = *e.vec;
      if (v.length() >= 2 && v.entry(v.length() - 1) == 1) {
        bad = serialize_compact(reps[e.index]) + " realizes " + to_string(v);
        break;
      }
      if (v.length() >= 3 && v.entry(v.length() - 2) == 1) {
        bad = serialize_compact(reps[e.index]) + " realizes " + to_string(v);
        break;
      }
    }
    run.check("second-third-entry-n" + std::to_string(n), bad.empty(), bad);
  }

  // (1,2,...,2,1) never realizable; (2,...,2,1) never 0-realizable.
  for (auto v : {RankVector{1, 2, 1}, RankVector{1, 2, 2, 1}, RankVector{1, 2, 2, 2, 1}})
    run.census_count("updown-" + to_string(v), v, TopFilter::Any, 0);
  for (auto v : {RankVector{2, 1}, RankVector{2, 2, 1}, RankVector{2, 2, 2, 1},
                 RankVector{2, 2, 2, 2, 1}})
    run.census_count("eventail-" + to_string(v), v, TopFilter::Top0, 0);

  // (1,3,k,1) and the implied (1,2,k,1).
  for (int k = 1; k + 5 <= 9; ++k)
    run.census_count("13k1-k" + std::to_string(k), RankVector{1, 3, k, 1},
                     TopFilter::Any, 0);
  for (int k = 1; k + 4 <= 9; ++k)
    run.census_count("12k1-k" + std::to_string(k), RankVector{1, 2, k, 1},
                     TopFilter::Any, 0);

  // (2,4,k,1) and (2,5,2,1), 0-top.
  for (int k = 1; k + 7 <= 9; ++k)
    run.census_count("24k1-k" + std::to_string(k), RankVector{2, 4, k, 1},
                     TopFilter::Top0, 0);
  run.census_count("2521", {2, 5, 2, 1}, TopFilter::Top0, 0);

  // (m,2,k,1), 0-top, every instance within the cap.
  for (int m = 1; m <= 5; ++m)
    for (int k = 1; m + k + 3 <= 9; ++k)
      run.census_count("m2k1-" + std::to_string(m) + "-" + std::to_string(k),
                       RankVector{m, 2, k, 1}, TopFilter::Top0, 0);

  // Pathlike tails: (1,x,1) never realizable, (x,1) never 0-realizable.
  run.census_count("pathliketail-1321", {1, 3, 2, 1}, TopFilter::Any, 0);
  run.census_count("pathliketail-12321", {1, 2, 3, 2, 1}, TopFilter::Any, 0);
  run.census_count("pathliketail-13221", {1, 3, 2, 2, 1}, TopFilter::Any, 0);
  run.census_count("pathliketail-321", {3, 2, 1}, TopFilter::Top0, 0);
  run.census_count("pathliketail-2321", {2, 3, 2, 1}, TopFilter::Top0, 0);
  run.census_count("pathliketail-3221", {3, 2, 2, 1}, TopFilter::Top0, 0);
  run.census_count("pathliketail-22321", {2, 2, 3, 2, 1}, TopFilter::Top0, 0);
  run.census_count("pathliketail-23221", {2, 3, 2, 2, 1}, TopFilter::Top0, 0);
  run.census_count("pathliketail-32221", {3, 2, 2, 2, 1}, TopFilter::Top0, 0);

  // The remaining length-5 blocker on the way to the n-5 characterization.
  run.census_count("22231", {2, 2, 2, 3, 1}, TopFilter::Top0, 0);
}

// ---- suite: minimality ---------------------------------------------------

void run_minimality(Runner& run) {
  SearchContext& ctx = run.ctx;
  int sum_cap = std::min(ctx.cap(), 9);

  auto expect_minimal = [&](const RankVector& v, int r) {
    MinimalityVerdict verdict = ctx.check_minimal(v, r, sum_cap);
    run.check("minimal-" + to_string(v) + "-r" + std::to_string(r),
              verdict.minimal && verdict.untested.empty(),
              verdict.witness ? to_string(verdict.witness->first) : "",
              "untested=" + std::to_string(verdict.untested.size()));
  };
  expect_minimal({1, 2}, 1);
  expect_minimal({1, 4, 2, 1}, 1);
  expect_minimal({2, 2, 2, 1}, 1);
  expect_minimal({2, 2}, 0);
  expect_minimal({3, 3, 2, 1}, 0);

  // Sum-11 vectors: every predecessor within the cap must fail to realize,
  // and the residual untested set is pinned exactly.
  auto expect_partial = [&](const RankVector& v, int r,
                            const std::vector<RankVector>& residual) {
    MinimalityVerdict verdict = ctx.check_minimal(v, r, sum_cap);
    bool ok = verdict.minimal && verdict.untested == residual;
    std::ostringstream note;
    note << "untested=";
    for (const auto& u : verdict.untested) note << to_string(u);
    run.check("minimal-partial-" + to_string(v) + "-r" + std::to_string(r), ok,
              verdict.witness ? to_string(verdict.witness->first) : "", note.str());
  };
  expect_partial({2, 5, 3, 1}, 0,
                 {RankVector{1, 5, 3, 1}, RankVector{2, 4, 3, 1}, RankVector{2, 5, 2, 1}});
  expect_partial({2, 6, 2, 1}, 0,
                 {RankVector{1, 6, 2, 1}, RankVector{2, 5, 2, 1}, RankVector{2, 6, 1, 1}});

  auto expect_refuted = [&](const RankVector& v, int r, const RankVector& witness) {
    MinimalityVerdict verdict = ctx.check_minimal(v, r, sum_cap);
    bool ok = !verdict.minimal && verdict.witness && verdict.witness->first == witness;
    run.check("notminimal-" + to_string(v) + "-r" + std::to_string(r), ok,
              verdict.witness ? to_string(verdict.witness->first) : "none");
  };
  expect_refuted({2, 7, 2, 1}, 1, {2, 2, 2, 1});
  expect_refuted({2, 2, 2, 1, 1, 1}, 1, {2, 2, 2, 1});
}

// ---- suite: structure ----------------------------------------------------

void run_structure(Runner& run) {
  SearchContext& ctx = run.ctx;
  std::vector<int> orders = {1, 2, 3, 4, 5, 6, 7};

  run.sweep_check("upcorner", orders, check_upcorner);
  run.sweep_check("neighbor-below", orders, check_neighbor_below);
  run.sweep_check("no-near-top-dominator", orders, check_no_near_top_dominator);

  // Rank-3 connectivity for every realizer of (1,m,k,1) within the cap.
  {
    std::string bad;
    for (int m = 1; m + 4 <= 9 && bad.empty(); ++m) {
      for (int k = 1; m + k + 3 <= 9 && bad.empty(); ++k) {
        RealizationCensus c = ctx.census(RankVector{1, m, k, 1}, TopFilter::Any);
        for (const Graph& g : c.realizers) {
          CornerRanking r = corner_rank(g);
          if (!is_connected(induced_subgraph(g, r.levels[2]))) {
            bad = serialize_compact(g);
            break;
          }
        }
      }
    }
    run.check("1mk1-rank3-connected", bad.empty(), bad);
  }

  // Every vector realized at n <= 7 has a 1-top realizer at n <= 7.
  {
    std::map<RankVector, bool> has_1top;
    for (int n = 1; n <= 7; ++n)
      for (const SearchContext::Entry& e : ctx.sweep(n)) {
        if (!e.vec || e.vec->length() < 2) continue;
        bool& flag = has_1top.emplace(*e.vec, false).first->second;
        flag = flag || *e.top == TopHeaviness::Top1;
      }
    std::string bad;
    for (const auto& [v, ok] : has_1top)
      if (!ok) {
        bad = to_string(v);
        break;
      }
    run.check("all-realizable-1realizable", bad.empty(), bad);
  }
}

// ---- suite: n5-constituents ----------------------------------------------

void run_n5(Runner& run) {
  // Vector facts feeding the capture-time n-5 characterization, checked at
  // their own sums; the sum-10 ones go through the tail decomposition.
  run.census_count("not-12231", {1, 2, 2, 3, 1}, TopFilter::Any, 0);
  run.census_count("not-13221", {1, 3, 2, 2, 1}, TopFilter::Any, 0);
  run.census_count("not-12321", {1, 2, 3, 2, 1}, TopFilter::Any, 0);
  run.census_count("not-1241", {1, 2, 4, 1}, TopFilter::Any, 0);
  run.census_count("not-1331", {1, 3, 3, 1}, TopFilter::Any, 0);
  run.census_count("not-122221", {1, 2, 2, 2, 2, 1}, TopFilter::Any, 0);
  run.census_count("not0-32221", {3, 2, 2, 2, 1}, TopFilter::Top0, 0);
  run.census_count("not0-23221", {2, 3, 2, 2, 1}, TopFilter::Top0, 0);
  run.census_count("not0-22321", {2, 2, 3, 2, 1}, TopFilter::Top0, 0);
  run.census_count("not0-22231", {2, 2, 2, 3, 1}, TopFilter::Top0, 0);
  run.census_count("not0-22221", {2, 2, 2, 2, 1}, TopFilter::Top0, 0);
  run.census_count("not0-3231", {3, 2, 3, 1}, TopFilter::Top0, 0);
  run.census_count("not0-4221", {4, 2, 2, 1}, TopFilter::Top0, 0);
  run.census_count("not0-2331", {2, 3, 3, 1}, TopFilter::Top0, 0);
  run.census_count("not0-2421", {2, 4, 2, 1}, TopFilter::Top0, 0);
  run.census_count("not0-2241", {2, 2, 4, 1}, TopFilter::Top0, 0);

  // The positive legs: (3,3,2,1) 0-realizable, (1,4,2,1) 1-realizable with
  // two distinct witnesses.
  {
    RealizationCensus c = run.ctx.census({3, 3, 2, 1}, TopFilter::Top0);
    bool has_fig = false;
    CanonicalForm want = canonical_form(named_graph("fig2531-0top"));
    for (const Graph& g : c.realizers) has_fig |= canonical_form(g) == want;
    run.check("is0-3321", !c.realizers.empty() && has_fig, "",
              "count=" + std::to_string(c.realizers.size()));
  }
  {
    RealizationCensus c = run.ctx.census({1, 4, 2, 1}, TopFilter::Top1);
    CanonicalForm l1 = canonical_form(named_graph("fig2531-1top"));
    std::set<CanonicalForm> have = forms_of(c.realizers);
    run.check("is1-1421", c.realizers.size() >= 2 && have.count(l1) == 1, "",
              "count=" + std::to_string(c.realizers.size()));
  }
}

// ---- suite: fixtures -----------------------------------------------------

void run_fixtures(Runner& run, const std::string& corpus_dir) {
  std::vector<Fixture> corpus;
  try {
    corpus = load_corpus(corpus_dir);
  } catch (const std::exception& e) {
    run.check("load", false, "", e.what());
    return;
  }
  run.check("load", true, "", std::to_string(corpus.size()) + " fixtures");

  for (const Fixture& fx : corpus) {
    CornerRanking r = corner_rank(fx.graph);
    std::string got;
    bool ok = r.cop_win();
    if (ok) {
      RankVector v = rank_cardinality_vector(r);
      TopHeaviness t = top_heaviness(fx.graph, r);
      TopHeaviness want = fx.declared_r == 1 ? TopHeaviness::Top1 : TopHeaviness::Top0;
      ok = v == fx.declared_vector && t == want;
      got = to_string(v) + " r" + (t == TopHeaviness::Top1 ? "1" : t == TopHeaviness::Top0 ? "0" : "c");
    } else {
      got = "rank=infinity";
    }
    run.check(fx.name, ok, ok ? "" : got,
              "declared " + to_string(fx.declared_vector) + " r" +
                  std::to_string(fx.declared_r));
  }

  // The hand-transcribed complete catalogs must coincide with the census.
  struct Group {
    RankVector vec;
    TopFilter filter;
  };
  const std::vector<Group> complete = {
      {RankVector{1, 2}, TopFilter::Any},    {RankVector{1, 3}, TopFilter::Any},
      {RankVector{2, 2}, TopFilter::Any},    {RankVector{2, 3}, TopFilter::Any},
      {RankVector{3, 2}, TopFilter::Any},    {RankVector{1, 2, 2}, TopFilter::Any},
      {RankVector{1, 2, 3}, TopFilter::Any}, {RankVector{1, 3, 2}, TopFilter::Any},
      {RankVector{2, 2, 2}, TopFilter::Any}, {RankVector{2, 3, 2}, TopFilter::Any},
      {RankVector{3, 2, 2}, TopFilter::Any}, {RankVector{2, 2, 3}, TopFilter::Top0},
  };
  for (const Group& grp : complete) {
    std::set<CanonicalForm> have;
    for (const Fixture& fx : corpus) {
      if (!(fx.declared_vector == grp.vec)) continue;
      if (grp.filter == TopFilter::Top0 && fx.declared_r != 0) continue;
      have.insert(canonical_form(fx.graph));
    }
    RealizationCensus c = run.ctx.census(grp.vec, grp.filter);
    bool ok = have == forms_of(c.realizers);
    run.check("complete-" + to_string(grp.vec) +
                  (grp.filter == TopFilter::Top0 ? "-0top" : ""),
              ok, "",
              "corpus=" + std::to_string(have.size()) +
                  " census=" + std::to_string(c.realizers.size()));
  }
}

}  // namespace

// ---- structural checks ----------------------------------------------------

std::string check_upcorner(const Graph& g, const CornerRanking& r) {
  if (!r.cop_win()) return "";
  int alpha = r.alpha.value();
  for (int k = 1; k < alpha; ++k) {
    VertexSet lv = r.level_mask(k);
    for (int v : elements(r.levels[k - 1])) {
      bool cornered = false;
      std::uint64_t cv = (g.row(v) & lv.bits) | (std::uint64_t{1} << v);
      for (int w : elements(r.level_mask(k + 1))) {
        std::uint64_t cw = (g.row(w) & lv.bits) | (std::uint64_t{1} << w);
        if ((cv & ~cw) == 0 && cv != cw) {
          cornered = true;
          break;
        }
      }
      if (!cornered)
        return "vertex " + std::to_string(v) + " rank " + rank_of(r, v) +
               " has no higher-rank cornerer";
    }
  }
  return "";
}

std::string check_neighbor_below(const Graph& g, const CornerRanking& r) {
  if (!r.cop_win()) return "";
  int alpha = r.alpha.value();
  for (int k = 2; k <= alpha; ++k) {
    VertexSet below = r.levels[k - 2];  // X_{k-1}
    VertexSet lv = r.level_mask(k);
    for (int v : elements(r.levels[k - 1])) {
      if ((g.row(v) & below.bits) == 0)
        return "vertex " + std::to_string(v) + " rank " + std::to_string(k) +
               " has no rank-" + std::to_string(k - 1) + " neighbor";
      // Strengthened form: for every witness w strictly cornering v in
      // G^(k), some rank-(k-1) neighbor of v avoids w.
      if (k == alpha) continue;
      std::uint64_t cv = (g.row(v) & lv.bits) | (std::uint64_t{1} << v);
      for (int w : elements(lv)) {
        if (w == v) continue;
        std::uint64_t cw = (g.row(w) & lv.bits) | (std::uint64_t{1} << w);
        if (!((cv & ~cw) == 0 && cv != cw)) continue;
        std::uint64_t ok = g.row(v) & below.bits & ~(g.row(w) | (std::uint64_t{1} << w));
        if (ok == 0)
          return "witness " + std::to_string(w) + " over vertex " + std::to_string(v) +
                 " rank " + std::to_string(k) + " defeats the neighbor rule";
      }
    }
  }
  return "";
}

std::string check_no_near_top_dominator(const Graph& g, const CornerRanking& r) {
  if (!r.cop_win()) return "";
  int alpha = r.alpha.value();
  if (alpha < 2) return "";
  VertexSet xam1 = r.levels[alpha - 2];
  for (int b : elements(xam1))
    if (dominates(g, b, xam1))
      return "rank-(alpha-1) vertex " + std::to_string(b) + " dominates its level";
  return "";
}

std::string check_homomorphism(const Graph& g, const CornerRanking& r) {
  if (!r.cop_win()) return "";
  int alpha = r.alpha.value();
  ProjectionMap pm(g, r);
  for (int k = 1; k < alpha; ++k) {
    VertexSet lv = r.level_mask(k);
    for (int u : elements(lv)) {
      for (int v : elements(VertexSet(g.row(u)) & lv)) {
        for (int us : elements(pm.f(k, u)))
          for (int vs : elements(pm.f(k, v)))
            if (us != vs && !g.adjacent(us, vs))
              return "f_" + std::to_string(k) + " breaks edge " + std::to_string(u) +
                     "-" + std::to_string(v);
      }
    }
  }
  return "";
}

std::string check_path_contraction_all(const Graph& g, const CornerRanking& r) {
  if (!r.cop_win()) return "";
  for (const VertexSet& level : r.levels) {
    auto vs = level.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!check_path_contraction(g, r, vs[i], vs[j]))
          return "distance shrank between " + std::to_string(vs[i]) + " and " +
                 std::to_string(vs[j]);
  }
  return "";
}

std::string check_monotone_dismantling(const Graph& g, const CornerRanking& r) {
  if (!r.cop_win()) return "";
  int alpha = r.alpha.value();
  for (int k = 1; k < alpha; ++k)
    if (!r.level_mask(k + 1).proper_subset_of(r.level_mask(k)))
      return "level " + std::to_string(k + 1) + " does not shrink";
  return "";
}

std::vector<std::string> suite_names() {
  return {"table1",    "uniqueness",      "nonrealizable", "minimality",
          "structure", "n5-constituents", "fixtures"};
}

SuiteReport verify_suite(SearchContext& ctx, const std::string& name,
                         const std::string& corpus_dir) {
  Runner run{ctx, SuiteReport{name, {}}};
  run.rep.name = name;
  if (name == "table1")
    run_table1(run);
  else if (name == "uniqueness")
    run_uniqueness(run);
  else if (name == "nonrealizable")
    run_nonrealizable(run);
  else if (name == "minimality")
    run_minimality(run);
  else if (name == "structure")
    run_structure(run);
  else if (name == "n5-constituents")
    run_n5(run);
  else if (name == "fixtures")
    run_fixtures(run, corpus_dir);
  else
    throw std::invalid_argument("unknown suite: " + name);
  return run.rep;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    out << "SUITE " << c.suite << " CHECK " << c.id << ' '
        << (c.pass ? "PASS" : "FAIL");
    if (!c.pass && !c.witness.empty()) out << " witness=" << c.witness;
    if (!c.note.empty()) out << " # " << c.note;
    out << '\n';
  }
  return out.str();
}

}  // namespace copwin

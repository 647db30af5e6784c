// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Run from the repository root (or set COPWIN_CORPUS).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

#include "copwin/io.hpp"
#include "copwin/suites.hpp"
#include "test_util.hpp"

using namespace copwin;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
  std::printf("ACCEPTANCE %2d %-28s %s (%.3fs)%s%s\n", id, name.c_str(),
              pass ? "PASS" : "FAIL", seconds, detail.empty() ? "" : " ",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename F>
void criterion(int id, const std::string& name, F&& body) {
  auto t0 = Clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  report(id, name, pass, secs, detail);
}

bool suite_passes(SearchContext& ctx, const std::string& name,
                  const std::string& corpus, std::string& detail) {
  SuiteReport rep = verify_suite(ctx, name, corpus);
  int bad = 0;
  for (const CheckResult& c : rep.checks)
    if (!c.pass) {
      ++bad;
      if (detail.empty())
        detail = "first failure: " + c.id +
                 (c.witness.empty() ? "" : " witness=" + c.witness);
    }
  detail += (detail.empty() ? "" : "; ") + std::to_string(rep.checks.size()) +
            " checks, " + std::to_string(bad) + " failed";
  return bad == 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::string corpus = default_corpus_dir();
  if (argc > 1) corpus = argv[1];
  SearchContext ctx(9, 2);

  criterion(1, "h7-walkthrough", [&](std::string& detail) {
    Graph g = named_graph("H7");
    corner_rank(g);  // warm caches before timing
    auto t0 = Clock::now();
    CornerRanking r = corner_rank(g);
    bool ok = r.alpha == Rank::finite(4);
    using namespace h7;
    ok = ok && r.ranks[d] == Rank::finite(1) && r.ranks[c1] == Rank::finite(2) &&
         r.ranks[c2] == Rank::finite(2) && r.ranks[b1] == Rank::finite(3) &&
         r.ranks[b2] == Rank::finite(3) && r.ranks[a1] == Rank::finite(4) &&
         r.ranks[a2] == Rank::finite(4);
    ok = ok && top_heaviness(g, r) == TopHeaviness::Top1;
    ok = ok && capture_time_by_rank(g, r) == 3;
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    detail = "corner_rank took " + std::to_string(ms) + " ms";
    return ok && ms < 1.0;
  });

  criterion(2, "oracle-equivalence-n7", [&](std::string& detail) {
    const int expected[8] = {0, 1, 1, 2, 6, 21, 112, 853};
    int total = 0;
    for (int n = 1; n <= 7; ++n) {
      const std::vector<Graph>& reps = ctx.enumerator().connected(n);
      if ((int)reps.size() != expected[n]) {
        detail = "class count mismatch at n=" + std::to_string(n);
        return false;
      }
      for (const Graph& g : reps) {
        ++total;
        auto by_rank = capture_time_by_rank(g, corner_rank(g));
        auto by_game = capture_time_by_game(g);
        if (by_rank != by_game) {
          detail = "disagreement on " + serialize_compact(g);
          return false;
        }
      }
    }
    detail = std::to_string(total) + " graphs, zero disagreements";
    return total == 996;
  });

  criterion(3, "table1-reproduction", [&](std::string& detail) {
    return suite_passes(ctx, "table1", corpus, detail);
  });

  criterion(4, "uniqueness-suite", [&](std::string& detail) {
    return suite_passes(ctx, "uniqueness", corpus, detail);
  });

  criterion(5, "nonrealizable-suite", [&](std::string& detail) {
    return suite_passes(ctx, "nonrealizable", corpus, detail);
  });

  criterion(6, "minimality", [&](std::string& detail) {
    return suite_passes(ctx, "minimality", corpus, detail);
  });

  criterion(7, "fixture-certification", [&](std::string& detail) {
    auto t0 = Clock::now();
    bool ok = suite_passes(ctx, "fixtures", corpus, detail);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    detail += "; " + std::to_string(secs) + " s";
    return ok && secs < 1.0;
  });

  criterion(8, "constructive-lemmas", [&](std::string& detail) {
    int checked = 0;
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : ctx.enumerator().connected(n)) {
        CornerRanking r = corner_rank(g);
        if (!r.cop_win()) continue;
        RankVector base = rank_cardinality_vector(r);
        TopHeaviness top = top_heaviness(g, r);
        for (int v = 0; v < n; ++v) {
          Graph t = add_twin(g, v);
          CornerRanking rt = corner_rank(t);
          std::vector<int> want = base.entries();
          want[base.length() - r.ranks[v].value()] += 1;
          if (!rt.cop_win() || !(rank_cardinality_vector(rt) == RankVector(want)) ||
              top_heaviness(t, rt) != top) {
            detail = "add_twin failed on " + serialize_compact(g);
            return false;
          }
          ++checked;
        }
        for (int l = 1; l <= 2; ++l) {
          // K1 is the lone exception: its pendant is a twin, not a strict
          // corner, so the extension property starts at two vertices.
          if (n == 1 || n + l * base.bottom() > 24) continue;
          Graph e = extend_tail(g, l);
          CornerRanking re = corner_rank(e);
          if (!re.cop_win() ||
              !(rank_cardinality_vector(re) == standard_extension(base, l)) ||
              !(induced_subgraph(e, re.level_mask(l + 1)) == g)) {
            detail = "extend_tail failed on " + serialize_compact(g);
            return false;
          }
          ++checked;
        }
        for (int k = 1; k <= r.alpha.value(); ++k) {
          if (!(rank_cardinality_vector(corner_rank(truncate(g, r, k))) ==
                initial_segment(base, k))) {
            detail = "truncate failed on " + serialize_compact(g);
            return false;
          }
          ++checked;
        }
      }
    }
    // 500 random larger cop-win instances.
    std::mt19937 rng(97);
    for (int it = 0; it < 500; ++it) {
      Graph g = testing::random_cop_win(rng, 7 + (int)(rng() % 8));
      CornerRanking r = corner_rank(g);
      if (!r.cop_win()) {
        detail = "random construction not cop-win";
        return false;
      }
      RankVector base = rank_cardinality_vector(r);
      int v = (int)(rng() % g.n());
      Graph t = add_twin(g, v);
      CornerRanking rt = corner_rank(t);
      std::vector<int> want = base.entries();
      want[base.length() - r.ranks[v].value()] += 1;
      if (!(rank_cardinality_vector(rt) == RankVector(want))) {
        detail = "add_twin failed on random " + serialize_compact(g);
        return false;
      }
      if (g.n() + base.bottom() <= 30) {
        Graph e = extend_tail(g, 1);
        if (!(rank_cardinality_vector(corner_rank(e)) == standard_extension(base, 1))) {
          detail = "extend_tail failed on random " + serialize_compact(g);
          return false;
        }
      }
      int k = 1 + (int)(rng() % r.alpha.value());
      if (!(rank_cardinality_vector(corner_rank(truncate(g, r, k))) ==
            initial_segment(base, k))) {
        detail = "truncate failed on random " + serialize_compact(g);
        return false;
      }
      ++checked;
    }
    detail = std::to_string(checked) + " constructions verified";
    return true;
  });

  criterion(9, "projection-properties", [&](std::string& detail) {
    int checked = 0;
    for (int n = 1; n <= 7; ++n) {
      for (const Graph& g : ctx.enumerator().connected(n)) {
        CornerRanking r = corner_rank(g);
        if (!r.cop_win()) continue;
        std::string bad = check_homomorphism(g, r);
        if (bad.empty()) bad = check_path_contraction_all(g, r);
        if (!bad.empty()) {
          detail = bad + " on " + serialize_compact(g);
          return false;
        }
        ++checked;
      }
    }
    detail = std::to_string(checked) + " cop-win graphs";
    return true;
  });

  criterion(10, "structural-sweeps", [&](std::string& detail) {
    return suite_passes(ctx, "structure", corpus, detail);
  });

  std::printf("ACCEPTANCE SUMMARY %s (%d failed)\n", failures == 0 ? "PASS" : "FAIL",
              failures);
  return failures == 0 ? 0 : 1;
}

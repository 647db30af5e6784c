// copwin: corner rankings, capture times and rank-vector censuses for the
// game of cops and robbers on small graphs.

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "copwin/catalog.hpp"
#include "copwin/game.hpp"
#include "copwin/io.hpp"
#include "copwin/suites.hpp"

using json = nlohmann::ordered_json;
using namespace copwin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string output = "human";
  int cap = 9;
  int threads = 1;
  bool structured() const { return output == "structured"; }
};

json json_of(const RankVector& v) { return json(v.entries()); }

std::string top_token(TopHeaviness t) {
  switch (t) {
    case TopHeaviness::Top1: return "1";
    case TopHeaviness::Top0: return "0";
    case TopHeaviness::CliqueRank1: return "clique";
  }
  return "?";
}

void emit(const Options& opt, const json& payload, const std::string& human) {
  if (opt.structured()) {
    json out = payload;
    out["schema"] = "copwin/1";
    std::cout << out.dump() << "\n";
  } else {
    std::cout << human;
  }
}

int cmd_rank(const Options& opt, const std::string& file, bool require_copwin) {
  Graph g = parse_graph_file(file);
  CornerRanking r = corner_rank(g);
  json payload;
  payload["command"] = "rank";
  payload["n"] = g.n();
  payload["cop_win"] = r.cop_win();
  std::ostringstream human;
  json ranks = json::array();
  for (int v = 0; v < g.n(); ++v) {
    std::string rv = r.ranks[v].is_finite() ? std::to_string(r.ranks[v].value())
                                            : "infinity";
    human << "vertex " << g.label_of(v) << " rank " << rv << "\n";
    ranks.push_back({{"label", g.label_of(v)}, {"rank", rv}});
  }
  payload["ranks"] = ranks;
  if (r.cop_win()) {
    RankVector vec = rank_cardinality_vector(r);
    TopHeaviness top = top_heaviness(g, r);
    auto capt = capture_time_by_rank(g, r);
    payload["rank"] = r.alpha.value();
    payload["top"] = top_token(top);
    payload["vector"] = json_of(vec);
    payload["capture_time"] = *capt;
    human << "rank=" << r.alpha.value() << " top=" << top_token(top)
          << " vector=" << to_string(vec) << " capture_time=" << *capt << "\n";
  } else {
    payload["rank"] = "infinity";
    payload["capture_time"] = "infinity";
    human << "rank=infinity cop_win=false\n";
  }
  emit(opt, payload, human.str());
  return (require_copwin && !r.cop_win()) ? kExitDomain : kExitOk;
}

int cmd_capture(const Options& opt, const std::string& file, const std::string& oracle) {
  Graph g = parse_graph_file(file);
  auto fmt = [](std::optional<int> v) {
    return v ? std::to_string(*v) : std::string("infinity");
  };
  json payload;
  payload["command"] = "capture";
  payload["oracle"] = oracle;
  std::ostringstream human;
  std::optional<int> by_rank, by_game;
  if (oracle == "rank" || oracle == "both")
    by_rank = capture_time_by_rank(g, corner_rank(g));
  if (oracle == "game" || oracle == "both") by_game = capture_time_by_game(g);
  bool disagree = false;
  if (oracle == "both") {
    disagree = by_rank != by_game;
    payload["rank_oracle"] = fmt(by_rank);
    payload["game_oracle"] = fmt(by_game);
    payload["agree"] = !disagree;
    payload["cop_win"] = by_game.has_value();
    human << "capture_time rank=" << fmt(by_rank) << " game=" << fmt(by_game)
          << (disagree ? " DISAGREE\n" : " agree\n");
  } else {
    auto v = oracle == "rank" ? by_rank : by_game;
    payload["capture_time"] = fmt(v);
    payload["cop_win"] = v.has_value();
    human << "capture_time=" << fmt(v) << "\n";
  }
  emit(opt, payload, human.str());
  // The two oracles compute the same quantity; disagreement is a bug.
  return disagree ? kExitDomain : kExitOk;
}

int cmd_realize(Options& opt, const std::string& vector_text, const std::string& rflag,
                bool emit_graphs, bool include_cliques) {
  RankVector v = parse_rank_vector(vector_text);
  TopFilter f = rflag == "0"   ? TopFilter::Top0
                : rflag == "1" ? TopFilter::Top1
                               : TopFilter::Any;
  SearchContext ctx(opt.cap, opt.threads);
  RealizationCensus c = ctx.census(v, f, include_cliques);
  json payload;
  payload["command"] = "realize";
  payload["vector"] = json_of(v);
  payload["r"] = rflag;
  payload["count"] = c.realizers.size();
  payload["full_sweep"] = c.full_sweep;
  std::ostringstream human;
  human << "vector=" << to_string(v) << " r=" << rflag << " count=" << c.realizers.size()
        << (c.full_sweep ? "" : " (tail decomposition)") << "\n";
  if (emit_graphs) {
    json graphs = json::array();
    for (const Graph& g : c.realizers) {
      graphs.push_back(serialize_compact(g));
      human << serialize(g);
      human << "--\n";
    }
    payload["realizers"] = graphs;
  }
  emit(opt, payload, human.str());
  return kExitOk;
}

int cmd_minimal(Options& opt, const std::string& vector_text, int r) {
  RankVector v = parse_rank_vector(vector_text);
  SearchContext ctx(opt.cap, opt.threads);
  MinimalityVerdict verdict = ctx.check_minimal(v, r, std::min(opt.cap, v.sum()));
  json payload;
  payload["command"] = "minimal";
  payload["vector"] = json_of(v);
  payload["r"] = r;
  payload["minimal"] = verdict.minimal;
  std::ostringstream human;
  human << "vector=" << to_string(v) << " r=" << r;
  if (!verdict.minimal) {
    human << " minimal=false witness=" << to_string(verdict.witness->first) << "\n"
          << serialize(verdict.witness->second);
    payload["witness_vector"] = json_of(verdict.witness->first);
    payload["witness_graph"] = serialize_compact(verdict.witness->second);
  } else {
    human << " minimal=true";
    if (!verdict.untested.empty()) {
      human << " untested=";
      for (std::size_t i = 0; i < verdict.untested.size(); ++i) {
        if (i) human << ";";
        human << to_string(verdict.untested[i]);
      }
    }
    human << "\n";
    json untested = json::array();
    for (const auto& u : verdict.untested) untested.push_back(json_of(u));
    payload["untested"] = untested;
  }
  emit(opt, payload, human.str());
  return kExitOk;
}

int cmd_verify(Options& opt, const std::string& suite, const std::string& corpus) {
  SearchContext ctx(opt.cap, opt.threads);
  SuiteReport rep = verify_suite(ctx, suite, corpus);
  if (opt.structured()) {
    json checks = json::array();
    for (const CheckResult& c : rep.checks) {
      json jc{{"suite", c.suite}, {"id", c.id}, {"pass", c.pass}};
      if (!c.witness.empty()) jc["witness"] = c.witness;
      if (!c.note.empty()) jc["note"] = c.note;
      checks.push_back(jc);
    }
    json payload{{"command", "verify"}, {"suite", suite}, {"all_pass", rep.all_pass()},
                 {"checks", checks}};
    emit(opt, payload, "");
  } else {
    std::cout << format_report(rep);
  }
  return rep.all_pass() ? kExitOk : kExitDomain;
}

int cmd_catalog(Options& opt, bool list, const std::string& name, int n) {
  json payload;
  payload["command"] = "catalog";
  std::ostringstream human;
  if (list) {
    json names = json::array();
    for (const std::string& s : catalog_names()) {
      names.push_back(s);
      human << s << "\n";
    }
    payload["names"] = names;
  } else {
    Graph g = named_graph(name, n);
    CornerRanking r = corner_rank(g);
    human << serialize(g);
    json ranks = json::array();
    for (int v = 0; v < g.n(); ++v) {
      std::string rv = r.ranks[v].is_finite() ? std::to_string(r.ranks[v].value())
                                              : "infinity";
      human << "# vertex " << g.label_of(v) << " rank " << rv << "\n";
      ranks.push_back({{"label", g.label_of(v)}, {"rank", rv}});
    }
    payload["name"] = name;
    payload["graph"] = serialize_compact(g);
    payload["ranks"] = ranks;
  }
  emit(opt, payload, human.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cops-and-robbers corner rankings, capture times and censuses"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--output", opt.output, "human|structured")
      ->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--cap", opt.cap, "enumeration cap (default 9)");
  app.add_option("--threads", opt.threads, "worker threads");

  auto* rank = app.add_subcommand("rank", "corner ranking of a graph file");
  rank->fallthrough();
  std::string rank_file;
  bool require_copwin = false;
  rank->add_option("file", rank_file)->required();
  rank->add_flag("--require-copwin", require_copwin, "exit 2 when not cop-win");

  auto* capture = app.add_subcommand("capture", "capture time of a graph file");
  capture->fallthrough();
  std::string capture_file, oracle = "both";
  capture->add_option("file", capture_file)->required();
  capture->add_option("--oracle", oracle)->check(CLI::IsMember({"rank", "game", "both"}));

  auto* realize = app.add_subcommand("realize", "census of a rank cardinality vector");
  realize->fallthrough();
  std::string realize_vec, rflag = "any";
  bool emit_graphs = false, include_cliques = false;
  realize->add_option("vector", realize_vec)->required();
  realize->add_option("--r", rflag)->check(CLI::IsMember({"0", "1", "any"}));
  realize->add_flag("--emit", emit_graphs, "print the realizers");
  realize->add_flag("--include-cliques", include_cliques,
                    "let length-1 vectors match cliques");

  auto* minimal = app.add_subcommand("minimal", "minimality of a vector");
  minimal->fallthrough();
  std::string minimal_vec;
  int minimal_r = 1;
  minimal->add_option("vector", minimal_vec)->required();
  minimal->add_option("--r", minimal_r)->required()->check(CLI::IsMember({0, 1}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  std::string suite, corpus = default_corpus_dir();
  verify->add_option("suite", suite)->required();
  verify->add_option("--corpus", corpus, "fixture directory");

  auto* catalog = app.add_subcommand("catalog", "named graphs");
  catalog->fallthrough();
  auto* cat_list = catalog->add_subcommand("list", "list known names");
  cat_list->fallthrough();
  auto* cat_show = catalog->add_subcommand("show", "print one graph");
  cat_show->fallthrough();
  std::string cat_name;
  int cat_n = 0;
  cat_show->add_option("name", cat_name)->required();
  cat_show->add_option("--n", cat_n, "order for parameterized families");
  catalog->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (opt.cap > 9)
    std::cerr << "warning: cap " << opt.cap << " enumerates a much larger space; "
              << "expect long runtimes\n";

  try {
    if (rank->parsed()) return cmd_rank(opt, rank_file, require_copwin);
    if (capture->parsed()) return cmd_capture(opt, capture_file, oracle);
    if (realize->parsed())
      return cmd_realize(opt, realize_vec, rflag, emit_graphs, include_cliques);
    if (minimal->parsed()) return cmd_minimal(opt, minimal_vec, minimal_r);
    if (verify->parsed()) return cmd_verify(opt, suite, corpus);
    if (catalog->parsed())
      return cmd_catalog(opt, cat_list->parsed(), cat_name, cat_n);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

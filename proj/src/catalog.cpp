#include "copwin/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "copwin/io.hpp"

namespace copwin {

namespace {

Graph make_h7() {
  using namespace h7;
  return Graph(7, {{a1, a2},
                   {a1, b1}, {a1, b2}, {a2, b1}, {a2, b2},
                   {a2, c1}, {a1, c2},
                   {b1, c1}, {b1, c2}, {b2, c1}, {b2, c2},
                   {b1, d}, {c1, d}, {c2, d}});
}

Graph make_fig2() {
  // 5-cycle 0..4 with the pendant path 4-5-6.
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {5, 6}});
}

Graph make_fig2531_1top() {
  // (1,4,2,1): v=0; a=1,b=2,c=3,d=4; x=5,y=6; w=7.
  return Graph(8, {{1, 0}, {2, 0}, {3, 0}, {4, 0},
                   {1, 2}, {2, 3}, {3, 4}, {4, 1},
                   {5, 1}, {5, 3}, {5, 2}, {6, 2}, {6, 4}, {6, 3},
                   {5, 6}, {7, 5}, {7, 6}});
}

Graph make_fig2531_0top() {
  // (3,3,2,1): a=0,b=1,c=2; d=3,e=4,f=5; g=6,h=7; i=8.
  return Graph(9, {{0, 1}, {0, 2}, {1, 2},
                   {0, 3}, {0, 4}, {2, 3}, {2, 5}, {1, 4}, {1, 5}, {4, 5},
                   {0, 6}, {3, 6}, {4, 6}, {2, 7}, {3, 7}, {5, 7},
                   {3, 8}, {6, 8}, {7, 8}});
}

Graph make_fig1232_132() {
  // (1,3,2): a=0; b1=1,b2=2,b3=3; c1=4,c2=5.
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 4}, {3, 5}});
}

Graph make_fig1232_1232() {
  // (1,2,3,2): a=0; b1=1,b2=2; c1=3,c2=4,c3=5; d1=6,d2=7.
  return Graph(8, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {4, 5},
                   {3, 6}, {4, 7}, {5, 7}});
}

}  // namespace

Graph named_graph(const std::string& name, int n) {
  if (name == "P") {
    if (n < 1) throw std::invalid_argument("P needs n >= 1");
    return path_graph(n);
  }
  if (name == "K") {
    if (n < 1) throw std::invalid_argument("K needs n >= 1");
    return complete_graph(n);
  }
  if (name == "C") {
    if (n < 3) throw std::invalid_argument("C needs n >= 3");
    return cycle_graph(n);
  }
  if (name == "H7") return make_h7();
  if (name == "fig2") return make_fig2();
  if (name == "fig2531-1top") return make_fig2531_1top();
  if (name == "fig2531-0top") return make_fig2531_0top();
  if (name == "fig1232-132") return make_fig1232_132();
  if (name == "fig1232-1232") return make_fig1232_1232();
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"P", "K", "C", "H7", "fig2", "fig2531-1top", "fig2531-0top",
          "fig1232-132", "fig1232-1232"};
}

namespace {

Fixture parse_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::string name, source, vector_text, r_text, edges_text;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw parse_error("expected key = value in fixture", lineno, 1);
    auto trim = [](std::string s) {
      std::size_t a = s.find_first_not_of(" \t\r");
      std::size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "name") name = value;
    else if (key == "vector") vector_text = value;
    else if (key == "r") r_text = value;
    else if (key == "source") source = value;
    else if (key == "edges") edges_text = value;
    else throw parse_error("unknown fixture key '" + key + "'", lineno, 1);
  }
  if (name.empty() || vector_text.empty() || r_text.empty() || edges_text.empty())
    throw std::runtime_error(path + ": fixture needs name, vector, r and edges");
  RankVector vec = parse_rank_vector(vector_text);
  if (r_text != "0" && r_text != "1")
    throw std::runtime_error(path + ": r must be 0 or 1");
  // n is the vector sum; labels must stay inside 1..n.
  Graph g = parse_graph("n=" + std::to_string(vec.sum()) + " " + edges_text,
                        GraphFormat::pairs);
  return Fixture{name, vec, r_text == "1" ? 1 : 0, std::move(g), source, path};
}

}  // namespace

std::vector<Fixture> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw std::runtime_error("corpus directory not found: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".fixture")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  std::set<std::string> names;
  for (const std::string& f : files) {
    Fixture fx = parse_fixture(f);
    if (!names.insert(fx.name).second)
      throw std::runtime_error("duplicate fixture name: " + fx.name);
    out.push_back(std::move(fx));
  }
  return out;
}

std::string default_corpus_dir() {
  if (const char* env = std::getenv("COPWIN_CORPUS")) return env;
  return "corpus";
}

}  // namespace copwin

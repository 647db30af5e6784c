#pragma once

#include <string>
#include <vector>

#include "copwin/graph.hpp"
#include "copwin/vectors.hpp"

namespace copwin {

// Fixed vertex order used by the H7 constructor.
namespace h7 {
inline constexpr int a1 = 0, a2 = 1, b1 = 2, b2 = 3, c1 = 4, c2 = 5, d = 6;
}

// Named constructors for the graphs the analyses keep reaching for.
// Parameterized families take n; figure graphs ignore it.
//   P <n>           path, P1 = K1
//   K <n>           complete graph
//   C <n>           cycle, n >= 3
//   H7              the unique realizer of (2,2,2,1)
//   fig2            the standard non-cop-win example: C5 with a pendant P2
//   fig2531-1top    a 1-top realizer of (1,4,2,1)
//   fig2531-0top    a 0-top realizer of (3,3,2,1)
//   fig1232-132     the unique realizer of (1,3,2)
//   fig1232-1232    the unique realizer of (1,2,3,2)
Graph named_graph(const std::string& name, int n = 0);
std::vector<std::string> catalog_names();

struct Fixture {
  std::string name;
  RankVector declared_vector;
  int declared_r;  // 0 or 1
  Graph graph;
  std::string source;
  std::string file;
};

// Loads every *.fixture file in the directory.  Duplicate names are
// rejected; the vertex count must equal the declared vector sum and all
// edge labels must lie in 1..n.
std::vector<Fixture> load_corpus(const std::string& dir);

// COPWIN_CORPUS when set, otherwise "corpus".
std::string default_corpus_dir();

}  // namespace copwin

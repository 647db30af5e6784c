#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "copwin/graph.hpp"

namespace copwin {

struct parse_error : std::runtime_error {
  int line;
  int col;
  parse_error(const std::string& what, int line_, int col_)
      : std::runtime_error(what + " (line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

enum class GraphFormat { adjlist, pairs };

// adjlist: optional header "n=<int>", then one "u v" pair per line,
// 1-indexed labels.  pairs: whitespace-separated "(u,v)" tokens with
// '#' comments; '&' counts as whitespace so LaTeX-style tables paste in.
// Labels in pairs map in order of first appearance unless an explicit
// n header fixes the range to 1..n.  Duplicate edges collapse; an explicit
// self-pair is an error (loops are implicit in the game convention).
Graph parse_graph(std::string_view text, GraphFormat format);

// Infers the format from a file name: ".pairs" -> pairs, else adjlist.
GraphFormat format_from_filename(const std::string& path);
Graph parse_graph_file(const std::string& path);

// adjlist with an n= header and sorted 1-indexed edges.
std::string serialize(const Graph& g);

// One-line form used in suite reports: "n5:1-2,2-3,...".
std::string serialize_compact(const Graph& g);

}  // namespace copwin

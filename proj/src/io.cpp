#include "copwin/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace copwin {
namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what, line, col);
  }
  void skip_ws_and_comments(bool amp_is_ws) {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') take();
      } else if (std::isspace((unsigned char)c) ||
                 (amp_is_ws && (c == '&' || c == '\\'))) {
        take();
      } else {
        break;
      }
    }
  }
  long read_int() {
    if (done() || !std::isdigit((unsigned char)peek())) fail("expected integer");
    long v = 0;
    while (!done() && std::isdigit((unsigned char)peek())) {
      v = v * 10 + (take() - '0');
      if (v > 1000000) fail("integer too large");
    }
    return v;
  }
};

// Shared assembly: collects labelled edges, then maps labels to indices.
struct EdgeCollector {
  bool fixed_range = false;
  long n_header = 0;
  std::vector<std::pair<long, long>> edges;
  std::vector<long> order;  // labels by first appearance
  std::map<long, int> index;

  void see(long label) {
    if (index.emplace(label, (int)order.size()).second) order.push_back(label);
  }

  Graph finish(const Cursor& at) const {
    long n;
    if (fixed_range) {
      n = n_header;
    } else if (order.empty()) {
      throw parse_error("empty graph input", at.line, at.col);
    } else {
      n = (int)order.size();
    }
    if (n < 1) throw parse_error("vertex count must be positive", at.line, at.col);
    if (n > 64) throw parse_error("vertex count above the 64-vertex cap", at.line, at.col);
    std::vector<int> labels(n);
    std::vector<std::pair<int, int>> idx_edges;
    if (fixed_range) {
      for (long i = 0; i < n; ++i) labels[i] = (int)(i + 1);
      for (auto [a, b] : edges) idx_edges.emplace_back((int)(a - 1), (int)(b - 1));
    } else {
      for (long i = 0; i < n; ++i) labels[i] = (int)order[i];
      for (auto [a, b] : edges)
        idx_edges.emplace_back(index.at(a), index.at(b));
    }
    return Graph((int)n, idx_edges, labels);
  }

  void check_label(long label, const Cursor& at) const {
    if (label < 1) throw parse_error("vertex labels must be positive", at.line, at.col);
    if (fixed_range && label > n_header)
      throw parse_error("vertex label exceeds declared n", at.line, at.col);
  }
};

bool read_header(Cursor& c, EdgeCollector& out, bool amp_is_ws) {
  c.skip_ws_and_comments(amp_is_ws);
  if (!c.done() && c.peek() == 'n') {
    c.take();
    if (c.done() || c.peek() != '=') c.fail("expected '=' after n");
    c.take();
    out.n_header = c.read_int();
    out.fixed_range = true;
    return true;
  }
  return false;
}

Graph parse_adjlist(std::string_view text) {
  Cursor c{text};
  EdgeCollector out;
  read_header(c, out, false);
  long max_label = 0;
  for (;;) {
    c.skip_ws_and_comments(false);
    if (c.done()) break;
    Cursor at = c;
    long u = c.read_int();
    c.skip_ws_and_comments(false);
    if (c.done()) c.fail("dangling vertex at end of input");
    long v = c.read_int();
    out.check_label(u, at);
    out.check_label(v, at);
    if (u == v) throw parse_error("self-loop pair", at.line, at.col);
    out.edges.emplace_back(u, v);
    max_label = std::max({max_label, u, v});
  }
  if (!out.fixed_range) {
    // 1-indexed contiguous labels; n inferred from the largest one.
    out.fixed_range = true;
    out.n_header = max_label;
  }
  for (long l = 1; l <= out.n_header; ++l) out.see(l);
  return out.finish(c);
}

Graph parse_pairs(std::string_view text) {
  Cursor c{text};
  EdgeCollector out;
  read_header(c, out, true);
  if (out.fixed_range)
    for (long l = 1; l <= out.n_header; ++l) out.see(l);
  for (;;) {
    c.skip_ws_and_comments(true);
    if (c.done()) break;
    Cursor at = c;
    if (c.peek() != '(') c.fail("expected '(' starting a pair");
    c.take();
    c.skip_ws_and_comments(true);
    long u = c.read_int();
    c.skip_ws_and_comments(true);
    if (c.done() || c.peek() != ',') c.fail("expected ',' inside pair");
    c.take();
    c.skip_ws_and_comments(true);
    long v = c.read_int();
    c.skip_ws_and_comments(true);
    if (c.done() || c.peek() != ')') c.fail("expected ')' closing pair");
    c.take();
    out.check_label(u, at);
    out.check_label(v, at);
    if (u == v) throw parse_error("self-loop pair", at.line, at.col);
    out.see(u);
    out.see(v);
    out.edges.emplace_back(u, v);
  }
  return out.finish(c);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::adjlist ? parse_adjlist(text) : parse_pairs(text);
}

GraphFormat format_from_filename(const std::string& path) {
  auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".pairs")
    return GraphFormat::pairs;
  return GraphFormat::adjlist;
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format_from_filename(path));
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string serialize_compact(const Graph& g) {
  std::ostringstream out;
  out << 'n' << g.n() << ':';
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out << ',';
    first = false;
    out << u + 1 << '-' << v + 1;
  }
  return out.str();
}

}  // namespace copwin

#include "copwin/graph.hpp"

namespace copwin {

VertexSet closed_neighborhood(const Graph& g, int v) {
  g.check_vertex(v);
  return VertexSet(g.row(v)) | VertexSet::single(v);
}

bool dominates(const Graph& g, int v, VertexSet s) {
  g.check_vertex(v);
  if (!s.subset_of(g.vertices())) throw std::out_of_range("set outside vertex range");
  return s.subset_of(closed_neighborhood(g, v));
}

bool strictly_corners(const Graph& g, int w, int v) {
  if (v == w) throw std::invalid_argument("strictly_corners needs distinct vertices");
  return closed_neighborhood(g, v).proper_subset_of(closed_neighborhood(g, w));
}

bool twins(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("twins needs distinct vertices");
  return closed_neighborhood(g, u) == closed_neighborhood(g, v);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int s = 0; s < g.n(); ++s) {
    if (seen.contains(s)) continue;
    std::uint64_t comp = std::uint64_t{1} << s;
    for (;;) {
      std::uint64_t grown = comp;
      for (int v : BitRange{comp}) grown |= g.row(v);
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(VertexSet(comp));
    seen = seen | VertexSet(comp);
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_of) {
  if (!keep.subset_of(g.vertices()) || keep.empty())
    throw std::invalid_argument("induced_subgraph needs a non-empty subset of the vertices");
  std::vector<int> old_vertices = keep.to_vector();
  int m = (int)old_vertices.size();
  std::vector<int> new_of(g.n(), -1);
  for (int i = 0; i < m; ++i) new_of[old_vertices[i]] = i;
  std::vector<std::uint64_t> rows(m, 0);
  for (int i = 0; i < m; ++i)
    for (int u : BitRange{g.row(old_vertices[i]) & keep.bits})
      rows[i] |= std::uint64_t{1} << new_of[u];
  if (old_of) *old_of = old_vertices;
  return Graph::from_rows(m, std::move(rows));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if ((int)perm.size() != g.n()) throw std::invalid_argument("permutation size != n");
  std::vector<std::uint64_t> rows(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    for (int u : BitRange{g.row(v)})
      rows[perm[v]] |= std::uint64_t{1} << perm[u];
  return Graph::from_rows(g.n(), std::move(rows));
}

int distance_within(const Graph& g, int u, int v, VertexSet within) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (!within.contains(u) || !within.contains(v))
    throw std::invalid_argument("endpoints must lie in the host set");
  if (u == v) return 0;
  std::uint64_t frontier = std::uint64_t{1} << u;
  std::uint64_t seen = frontier;
  int d = 0;
  while (frontier) {
    ++d;
    std::uint64_t next = 0;
    for (int x : BitRange{frontier}) next |= g.row(x);
    next &= within.bits & ~seen;
    if ((next >> v) & 1) return d;
    seen |= next;
    frontier = next;
  }
  return -1;
}

int distance(const Graph& g, int u, int v) {
  return distance_within(g, u, v, g.vertices());
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

}  // namespace copwin

#include "copwin/canonical.hpp"

#include <algorithm>
#include <array>

namespace copwin {
namespace {

// Canonical labeling by partition refinement plus exhaustive backtracking
// within the refined cells.  The canonical order is the one maximizing the
// sequence of row chunks, where the chunk at position i packs the
// adjacencies between the i-th placed vertex and the vertices placed before
// it.  Refinement keeps the search tree near-linear for typical graphs; the
// fully symmetric ones (cliques, cycles) explore their automorphism orbits
// and stay cheap at enumeration sizes.
struct Canonizer {
  const Graph& g;
  int n;
  std::array<std::uint64_t, 64> best{};
  std::array<std::uint64_t, 64> cur{};
  std::array<int, 64> placed{};
  bool have_best = false;

  explicit Canonizer(const Graph& graph) : g(graph), n(graph.n()) {}

  // Isomorphism-invariant initial partition: iterate signatures built from
  // the current color and the sorted colors of the neighbors until stable.
  std::vector<std::uint64_t> initial_cells() const {
    std::vector<int> color(n, 0);
    std::vector<std::vector<int>> sig(n);
    for (;;) {
      for (int v = 0; v < n; ++v) {
        sig[v].clear();
        sig[v].push_back(color[v]);
        std::vector<int> nb;
        for (int u : BitRange{g.row(v)}) nb.push_back(color[u]);
        std::sort(nb.begin(), nb.end());
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[v] = v;
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n, 0);
      int classes = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++classes;
        next[order[i]] = classes;
      }
      bool stable = true;
      for (int v = 0; v < n && stable; ++v) stable = next[v] == color[v];
      color = std::move(next);
      if (stable) break;
    }
    int classes = 1 + *std::max_element(color.begin(), color.end());
    std::vector<std::uint64_t> cells(classes, 0);
    for (int v = 0; v < n; ++v) cells[color[v]] |= std::uint64_t{1} << v;
    return cells;
  }

  // Three-way compare of the current partial chunk sequence against best.
  int compare_prefix(int depth) const {
    for (int i = 0; i < depth; ++i) {
      if (cur[i] != best[i]) return cur[i] < best[i] ? -1 : 1;
    }
    return 0;
  }

  void search(int depth, const std::uint64_t* cells, int ncells) {
    if (have_best) {
      int cmp = compare_prefix(depth);
      if (cmp < 0) return;
      if (depth == n) {
        if (cmp > 0) std::copy(cur.begin(), cur.begin() + n, best.begin());
        return;
      }
    } else if (depth == n) {
      std::copy(cur.begin(), cur.begin() + n, best.begin());
      have_best = true;
      return;
    }

    std::uint64_t cell = cells[0];
    std::array<std::uint64_t, 64> next;
    for (int v : BitRange{cell}) {
      std::uint64_t chunk = 0;
      const std::uint64_t rv = g.row(v);
      for (int j = 0; j < depth; ++j) chunk |= ((rv >> placed[j]) & 1) << j;
      if (have_best) {
        int cmp = compare_prefix(depth);
        if (cmp == 0 && chunk < best[depth]) continue;
      }
      cur[depth] = chunk;
      placed[depth] = v;
      // Split every remaining cell by adjacency to v, adjacent part first.
      int m = 0;
      std::uint64_t rest = cell & ~(std::uint64_t{1} << v);
      auto push = [&](std::uint64_t c) {
        std::uint64_t a = c & rv, b = c & ~rv;
        if (a) next[m++] = a;
        if (b) next[m++] = b;
      };
      if (rest) push(rest);
      for (int i = 1; i < ncells; ++i) push(cells[i]);
      if (m == 0) {
        search(depth + 1, nullptr, 0);
      } else {
        search(depth + 1, next.data(), m);
      }
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Canonizer c(g);
  auto cells0 = c.initial_cells();
  c.search(0, cells0.data(), (int)cells0.size());

  const int n = g.n();
  std::string code;
  code.reserve(1 + (n * (n - 1) / 2 + 7) / 8);
  code.push_back((char)n);
  int bitpos = 0;
  unsigned char acc = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if ((c.best[i] >> j) & 1) acc |= (unsigned char)(1u << (bitpos & 7));
      if ((++bitpos & 7) == 0) {
        code.push_back((char)acc);
        acc = 0;
      }
    }
  }
  if (bitpos & 7) code.push_back((char)acc);
  return code;
}

}  // namespace copwin

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace copwin {

// Thrown when a request exceeds a configured size/enumeration cap.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by operations that require a cop-win (finite corner rank) input.
struct not_cop_win_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Subset of the vertices 0..n-1, bitset semantics.  The implementation cap
// of 64 vertices is far above anything the analyses need.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int v) const { return (bits >> v) & 1; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr int lowest() const { return std::countr_zero(bits); }

  constexpr void add(int v) { bits |= std::uint64_t{1} << v; }
  constexpr void remove(int v) { bits &= ~(std::uint64_t{1} << v); }

  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool proper_subset_of(VertexSet o) const {
    return bits != o.bits && subset_of(o);
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
};

// Iterate set bits: for (int v : elements(s)) ...
struct BitRange {
  std::uint64_t bits;
  struct iterator {
    std::uint64_t m;
    int operator*() const { return std::countr_zero(m); }
    iterator& operator++() { m &= m - 1; return *this; }
    bool operator!=(const iterator& o) const { return m != o.m; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }
};
inline BitRange elements(VertexSet s) { return {s.bits}; }

// Immutable finite simple graph.  Adjacency is stored loop-free; the
// reflexive convention of the game lives in closed_neighborhood() and the
// predicates built on it, never in the stored rows.  Input labels are kept
// for display; structure (n, rows) is what equality and hashing see.
class Graph {
 public:
  Graph() : n_(1), rows_(1, 0), labels_{1} {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::vector<int> labels = {})
      : n_(n), rows_(check_n(n), 0), labels_(std::move(labels)) {
    for (auto [u, v] : edges) add_edge_checked(u, v);
    default_labels();
  }

  // Raw-row factory, used by the enumeration hot path.
  static Graph from_rows(int n, std::vector<std::uint64_t> rows) {
    return Graph(n, std::move(rows), RowsTag{});
  }

  int n() const { return n_; }
  int edge_count() const {
    int m = 0;
    for (auto r : rows_) m += std::popcount(r);
    return m / 2;
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1;
  }

  // Open neighborhood as raw bits (no bounds check: internal hot paths).
  std::uint64_t row(int v) const { return rows_[v]; }

  VertexSet vertices() const { return VertexSet::first_n(n_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : BitRange{rows_[u] >> u << u})
        if (v > u) out.emplace_back(u, v);
    return out;
  }

  const std::vector<int>& labels() const { return labels_; }
  int label_of(int v) const { check_vertex(v); return labels_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  }

 private:
  struct RowsTag {};
  Graph(int n, std::vector<std::uint64_t> rows, RowsTag) : n_(n), rows_(std::move(rows)) {
    check_n(n);
    if ((int)rows_.size() != n_) throw std::invalid_argument("row count != n");
    const std::uint64_t range = VertexSet::first_n(n_).bits;
    for (int v = 0; v < n_; ++v) {
      if (rows_[v] & ~range) throw std::invalid_argument("adjacency out of range");
      if ((rows_[v] >> v) & 1) throw std::invalid_argument("stored self-loop");
      for (int u : BitRange{rows_[v]})
        if (!((rows_[u] >> v) & 1)) throw std::invalid_argument("asymmetric adjacency");
    }
    default_labels();
  }

  static int check_n(int n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (n > 64) throw resource_error("graphs above 64 vertices are unsupported");
    return n;
  }
  void add_edge_checked(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop edge");
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
  void default_labels() {
    if (labels_.empty()) {
      labels_.resize(n_);
      for (int v = 0; v < n_; ++v) labels_[v] = v + 1;
    } else if ((int)labels_.size() != n_) {
      throw std::invalid_argument("label count != n");
    }
  }

  int n_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> labels_;
};

// N[v] under the reflexive convention: v plus its neighbors.
VertexSet closed_neighborhood(const Graph& g, int v);

// True iff s is contained in N[v] (v adjacent-or-equal to every member).
bool dominates(const Graph& g, int v, VertexSet s);

// True iff N[v] is properly contained in N[w]; requires v != w.
bool strictly_corners(const Graph& g, int w, int v);

// True iff N[u] == N[v]; requires u != v.
bool twins(const Graph& g, int u, int v);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Induced subgraph on `keep`; old_of[i] reports the source vertex of new
// vertex i when requested.
Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_of = nullptr);

// New graph with perm applied: vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

// BFS distance between u and v inside `within`; -1 when unreachable.
int distance_within(const Graph& g, int u, int v, VertexSet within);
int distance(const Graph& g, int u, int v);

Graph path_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);

}  // namespace copwin

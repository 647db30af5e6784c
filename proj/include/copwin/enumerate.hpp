#pragma once

#include <functional>
#include <vector>

#include "copwin/canonical.hpp"
#include "copwin/graph.hpp"

namespace copwin {

// Isomorph-free exhaustive generation of connected graphs, one
// representative per class, grown level by level: every connected graph on
// n vertices has a vertex whose removal leaves a connected graph, so
// attaching a new vertex to every non-empty subset of each (n-1)-vertex
// representative covers all classes; canonical codes deduplicate.
// Levels are cached and reported in canonical-code order.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(int cap = 9, int threads = 1)
      : cap_(cap), threads_(threads < 1 ? 1 : threads) {}

  int cap() const { return cap_; }
  void set_cap(int cap) { cap_ = cap; }
  void set_threads(int threads) { threads_ = threads < 1 ? 1 : threads; }

  // Throws resource_error above the cap.
  const std::vector<Graph>& connected(int n);

 private:
  std::vector<Graph> build_level(int n);

  int cap_;
  int threads_;
  std::vector<std::vector<Graph>> levels_;  // levels_[n-1]
};

}  // namespace copwin

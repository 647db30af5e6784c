#include "copwin/enumerate.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace copwin {

const std::vector<Graph>& GraphEnumerator::connected(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n > cap_)
    throw resource_error("order " + std::to_string(n) + " exceeds the enumeration cap " +
                         std::to_string(cap_));
  while ((int)levels_.size() < n) levels_.push_back(build_level((int)levels_.size() + 1));
  return levels_[n - 1];
}

std::vector<Graph> GraphEnumerator::build_level(int n) {
  if (n == 1) return {Graph::from_rows(1, std::vector<std::uint64_t>{0})};

  const std::vector<Graph>& parents = levels_[n - 2];
  const std::uint64_t subsets = (std::uint64_t{1} << (n - 1)) - 1;

  using Found = std::unordered_map<CanonicalForm, Graph>;
  auto expand = [&](std::size_t lo, std::size_t hi, Found& out) {
    std::vector<std::uint64_t> rows(n);
    for (std::size_t pi = lo; pi < hi; ++pi) {
      const Graph& p = parents[pi];
      for (std::uint64_t s = 1; s <= subsets; ++s) {
        for (int v = 0; v < n - 1; ++v)
          rows[v] = p.row(v) | (((s >> v) & 1) << (n - 1));
        rows[n - 1] = s;
        Graph child = Graph::from_rows(n, rows);
        CanonicalForm code = canonical_form(child);
        out.try_emplace(std::move(code), std::move(child));
      }
    }
  };

  Found found;
  if (threads_ <= 1 || parents.size() < 64) {
    expand(0, parents.size(), found);
  } else {
    int t = threads_;
    std::vector<Found> parts(t);
    std::vector<std::thread> workers;
    std::size_t chunk = (parents.size() + t - 1) / t;
    for (int i = 0; i < t; ++i) {
      std::size_t lo = std::min(parents.size(), i * chunk);
      std::size_t hi = std::min(parents.size(), lo + chunk);
      workers.emplace_back([&, lo, hi, i] { expand(lo, hi, parts[i]); });
    }
    for (auto& w : workers) w.join();
    for (auto& p : parts)
      for (auto& e : p) found.try_emplace(e.first, std::move(e.second));
  }

  std::vector<std::pair<CanonicalForm, Graph>> ordered;
  ordered.reserve(found.size());
  for (auto& e : found) ordered.emplace_back(e.first, std::move(e.second));
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> level;
  level.reserve(ordered.size());
  for (auto& e : ordered) level.push_back(std::move(e.second));
  return level;
}

}  // namespace copwin

#include "copwin/game.hpp"

#include <algorithm>

namespace copwin {

CaptureTable solve_game(const Graph& g) {
  const int n = g.n();
  const auto inf = CaptureTable::kInf;
  std::vector<std::uint16_t> value(n * n, inf);
  std::vector<std::uint8_t> best(n * n, 0xFF);
  std::vector<std::uint64_t> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = g.row(v) | (std::uint64_t{1} << v);
  for (int c = 0; c < n; ++c) value[c * n + c] = 0;

  // Round t assigns exactly the states of value t.  The cost of a cop move
  // c' is 1 for immediate capture, and otherwise 1 + the worst robber reply
  // valued in an earlier round; assignments are buffered and applied after
  // the scan so every round only sees strictly smaller values.  A move
  // becomes evaluable no later than the round of its true cost, so the
  // minimum over evaluable moves at the first assignable round is exact.
  int rounds = 0;
  std::vector<std::pair<int, std::pair<std::uint16_t, std::uint8_t>>> pending;
  for (;;) {
    ++rounds;
    pending.clear();
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) {
        if (c == r || value[c * n + r] != inf) continue;
        int best_cost = inf;
        int best_move = -1;
        for (int cm : BitRange{closed[c]}) {
          int cost;
          if (cm == r) {
            cost = 1;
          } else {
            cost = 0;
            for (int rm : BitRange{closed[r] & ~(std::uint64_t{1} << cm)}) {
              int v = value[cm * n + rm];
              cost = std::max(cost, v);
              if (cost == inf) break;
            }
            if (cost != inf) cost += 1;
          }
          if (cost < best_cost) {
            best_cost = cost;
            best_move = cm;
          }
        }
        if (best_cost != inf)
          pending.push_back({c * n + r, {(std::uint16_t)best_cost, (std::uint8_t)best_move}});
      }
    }
    if (pending.empty()) break;
    for (const auto& [state, vb] : pending) {
      value[state] = vb.first;
      best[state] = vb.second;
    }
  }
  return CaptureTable(n, std::move(value), std::move(best), rounds);
}

std::optional<int> capture_time_by_game(const Graph& g, const CaptureTable& t) {
  const int n = g.n();
  std::optional<int> overall;
  for (int c = 0; c < n; ++c) {
    int worst = 0;
    bool escaped = false;
    for (int r = 0; r < n; ++r) {
      auto v = t.value(c, r);
      if (!v) {
        escaped = true;
        break;
      }
      worst = std::max(worst, *v);
    }
    if (escaped) continue;
    if (!overall || worst < *overall) overall = worst;
  }
  return overall;
}

std::optional<int> capture_time_by_game(const Graph& g) {
  return capture_time_by_game(g, solve_game(g));
}

MaxCaptureResult max_capture_time(int n, std::span<const Graph> graphs) {
  if (graphs.empty()) throw std::invalid_argument("max_capture_time needs graphs");
  MaxCaptureResult out;
  out.max_capture_time = -1;
  for (const Graph& g : graphs) {
    if (g.n() != n) throw std::invalid_argument("graph order mismatch");
    auto t = capture_time_by_game(g);
    if (!t) continue;
    if (*t > out.max_capture_time) {
      out.max_capture_time = *t;
      out.attaining.clear();
    }
    if (*t == out.max_capture_time) out.attaining.push_back(canonical_form(g));
  }
  if (out.max_capture_time < 0)
    throw std::invalid_argument("no cop-win graph in the stream");
  std::sort(out.attaining.begin(), out.attaining.end());
  return out;
}

}  // namespace copwin

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "copwin/canonical.hpp"
#include "copwin/graph.hpp"

namespace copwin {

// Exact solution of the one-cop game on a graph.  value(c, r) is the
// number of cop moves still needed to guarantee capture with the cop to
// move from vertex c against a robber on r; infinity when the robber
// escapes forever.  Both players may stay still (the reflexive move).
class CaptureTable {
 public:
  static constexpr std::uint16_t kInf = 0xFFFF;

  CaptureTable(int n, std::vector<std::uint16_t> value, std::vector<std::uint8_t> best,
               int rounds)
      : n_(n), value_(std::move(value)), best_(std::move(best)), rounds_(rounds) {}

  int n() const { return n_; }
  int rounds() const { return rounds_; }

  std::optional<int> value(int c, int r) const {
    check(c, r);
    std::uint16_t v = value_[c * n_ + r];
    if (v == kInf) return std::nullopt;
    return (int)v;
  }

  // The Bellman-minimizing neighbor (possibly c itself), smallest vertex
  // index on ties.  Only defined for finite states with c != r.
  int best_cop_move(int c, int r) const {
    check(c, r);
    if (c == r || value_[c * n_ + r] == kInf)
      throw std::logic_error("no cop move for this state");
    return best_[c * n_ + r];
  }

 private:
  void check(int c, int r) const {
    if (c < 0 || c >= n_ || r < 0 || r >= n_)
      throw std::out_of_range("game state out of range");
  }

  int n_;
  std::vector<std::uint16_t> value_;
  std::vector<std::uint8_t> best_;
  int rounds_;
};

CaptureTable solve_game(const Graph& g);

// min over cop starts of max over robber replies of value; nullopt when the
// graph is not cop-win.  The robber places second with full information and
// never starts on the cop unless forced (n = 1, capture time 0).
std::optional<int> capture_time_by_game(const Graph& g);
std::optional<int> capture_time_by_game(const Graph& g, const CaptureTable& t);

struct MaxCaptureResult {
  int max_capture_time = 0;
  std::vector<CanonicalForm> attaining;  // canonically sorted
};

// Maximum finite capture time over the cop-win members of a complete
// isomorph-free family of connected graphs on n vertices, with the forms
// attaining it.
MaxCaptureResult max_capture_time(int n, std::span<const Graph> graphs);

}  // namespace copwin

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

// Finite top-first list (x_alpha, ..., x_1) of positive integers.
class RankVector {
 public:
  explicit RankVector(std::vector<int> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::invalid_argument("rank vector must be non-empty");
    for (int x : e_)
      if (x < 1) throw std::invalid_argument("rank vector entries must be positive");
  }
  RankVector(std::initializer_list<int> entries)
      : RankVector(std::vector<int>(entries)) {}

  int length() const { return (int)e_.size(); }
  int sum() const {
    int s = 0;
    for (int x : e_) s += x;
    return s;
  }
  // x_k with k counted from the low end: k=1 is the lowest rank, k=length the top.
  int entry(int k) const {
    if (k < 1 || k > length()) throw std::out_of_range("rank vector index");
    return e_[length() - k];
  }
  int top() const { return e_.front(); }
  int bottom() const { return e_.back(); }
  const std::vector<int>& entries() const { return e_; }

  friend bool operator==(const RankVector& a, const RankVector& b) = default;
  // (length, entries) ordering: deterministic output order.
  friend std::strong_ordering operator<=>(const RankVector& a, const RankVector& b) {
    if (a.length() != b.length())
      return a.length() <=> b.length();
    return a.e_ <=> b.e_;
  }

 private:
  std::vector<int> e_;
};

// Pointwise y_i >= x_i at equal length (trivial case included).
bool is_augmentation(const RankVector& y, const RankVector& x);

// (x_alpha, ..., x_k): drops the entries below position k.
RankVector initial_segment(const RankVector& x, int k);

// Appends l copies of x_1 at the low end.
RankVector standard_extension(const RankVector& x, int l);

// y = (x_alpha, ..., x_1, z_1, ..., z_l) for arbitrary z (predicate only;
// no theorem consumes non-standard extensions, so there is no generator).
bool is_extension(const RankVector& y, const RankVector& x);

// x <= y: y is an augmentation (possibly trivial) of a standard extension
// (possibly trivial) of x.
bool leq(const RankVector& x, const RankVector& y);

// The exact finite set { y : leq(y, x), length(y) >= min_len }.
std::vector<RankVector> predecessors(const RankVector& x, int min_len);

// All vectors with sum n, length >= min_len, and (when length >= 3)
// second and third entries >= 2 -- exactly the stated exclusions, nothing
// more; further pruning belongs to the verification suites.
std::vector<RankVector> candidate_vectors(int n, int min_len);

// "(a,b,c)" with optional whitespace.
RankVector parse_rank_vector(std::string_view text);
std::string to_string(const RankVector& v);

}  // namespace copwin

#include "copwin/vectors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace copwin {

bool is_augmentation(const RankVector& y, const RankVector& x) {
  if (y.length() != x.length()) return false;
  for (int i = 0; i < x.length(); ++i)
    if (y.entries()[i] < x.entries()[i]) return false;
  return true;
}

RankVector initial_segment(const RankVector& x, int k) {
  if (k < 1 || k > x.length()) throw std::out_of_range("initial segment position");
  std::vector<int> e(x.entries().begin(), x.entries().end() - (k - 1));
  return RankVector(std::move(e));
}

RankVector standard_extension(const RankVector& x, int l) {
  if (l < 0) throw std::invalid_argument("extension length must be non-negative");
  std::vector<int> e = x.entries();
  e.insert(e.end(), l, x.bottom());
  return RankVector(std::move(e));
}

bool is_extension(const RankVector& y, const RankVector& x) {
  if (y.length() < x.length()) return false;
  return std::equal(x.entries().begin(), x.entries().end(), y.entries().begin());
}

bool leq(const RankVector& x, const RankVector& y) {
  if (y.length() < x.length()) return false;
  // The standard extension of x to y's length must be pointwise dominated.
  int l = y.length() - x.length();
  for (int i = 0; i < x.length(); ++i)
    if (y.entries()[i] < x.entries()[i]) return false;
  for (int i = 0; i < l; ++i)
    if (y.entries()[x.length() + i] < x.bottom()) return false;
  return true;
}

std::vector<RankVector> predecessors(const RankVector& x, int min_len) {
  if (min_len < 1) throw std::invalid_argument("min_len must be at least 1");
  std::vector<RankVector> out;
  for (int m = min_len; m <= x.length(); ++m) {
    // y of length m: y_top..y_2 bounded by the aligned entries of x, and
    // y_1 bounded by the minimum of x over its own and all tail positions.
    int tail_min = x.entries()[m - 1];
    for (int i = m; i < x.length(); ++i)
      tail_min = std::min(tail_min, x.entries()[i]);
    std::vector<int> y(m, 1);
    for (;;) {
      out.push_back(RankVector(y));
      int i = m - 1;
      while (i >= 0) {
        int bound = (i == m - 1) ? tail_min : x.entries()[i];
        if (y[i] < bound) {
          ++y[i];
          break;
        }
        y[i] = 1;
        --i;
      }
      if (i < 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RankVector> candidate_vectors(int n, int min_len) {
  if (n < 1) throw std::invalid_argument("sum must be positive");
  std::vector<RankVector> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      if ((int)cur.size() >= min_len &&
          ((int)cur.size() < 3 || (cur[1] >= 2 && cur[2] >= 2)))
        out.push_back(RankVector(cur));
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      self(self, rest - first);
      cur.pop_back();
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end());
  return out;
}

RankVector parse_rank_vector(std::string_view text) {
  std::vector<int> e;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '(')
    throw std::invalid_argument("rank vector must start with '('");
  ++i;
  for (;;) {
    skip();
    if (i >= text.size()) throw std::invalid_argument("unterminated rank vector");
    if (text[i] == ')') {
      ++i;
      break;
    }
    if (!e.empty()) {
      if (text[i] != ',') throw std::invalid_argument("expected ',' in rank vector");
      ++i;
      skip();
    }
    if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
      throw std::invalid_argument("expected integer in rank vector");
    int v = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i]))
      v = v * 10 + (text[i++] - '0');
    e.push_back(v);
  }
  skip();
  if (i != text.size()) throw std::invalid_argument("trailing text after rank vector");
  return RankVector(std::move(e));
}

std::string to_string(const RankVector& v) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < v.length(); ++i) {
    if (i) out << ',';
    out << v.entries()[i];
  }
  out << ')';
  return out.str();
}

}  // namespace copwin

#pragma once

// Shared helpers for the unit tests: terse constructors and a few
// deliberately naive reference implementations.

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "boxball/box_ball.hpp"
#include "boxball/crystal.hpp"
#include "boxball/tableau.hpp"

namespace testing {

using namespace boxball;

inline Tableau tab(const std::string& text, int n) { return parse_tableau(text, n); }

inline BbsState state(const std::string& columns, int n, int k, Position offset = 0) {
  return parse_columns(columns, n, k, offset);
}

inline Word word(std::initializer_list<Letter> letters) { return Word(letters); }

// Closure of a word under the two elementary Knuth transpositions,
//   y x z <-> y z x  (x < y <= z)   and   x z y <-> z x y  (x <= y < z),
// found by breadth-first search. Exponential; short words only.
inline std::set<Word> knuth_class(const Word& start) {
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    const Word w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      const Letter a = w[i], b = w[i + 1], c = w[i + 2];
      std::vector<Word> next;
      if ((b < a && a <= c) || (c < a && a <= b)) {
        Word v = w;
        std::swap(v[i + 1], v[i + 2]);
        next.push_back(v);
      }
      if ((a <= c && c < b) || (b <= c && c < a)) {
        Word v = w;
        std::swap(v[i], v[i + 1]);
        next.push_back(v);
      }
      for (auto& v : next) {
        if (seen.insert(v).second) queue.push_back(std::move(v));
      }
    }
  }
  return seen;
}

// Signature reduction by literally deleting adjacent "+-" pairs (zeros
// skipped) until none remain. Returns surviving positions.
inline std::vector<std::size_t> reduce_by_deletion(const Signature& sig) {
  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < sig.size(); ++j) {
    if (sig[j] != Sign::zero) live.push_back(j);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j + 1 < live.size(); ++j) {
      if (sig[live[j]] == Sign::plus && sig[live[j + 1]] == Sign::minus) {
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(j), live.begin() + static_cast<std::ptrdiff_t>(j) + 2);
        changed = true;
        break;
      }
    }
  }
  return live;
}

// Every state whose support fits in `width` columns, over all k-subsets.
inline std::vector<BbsState> all_states(int n, int k, int width) {
  std::vector<Tableau> columns = enumerate_tableaux(Shape::rectangle(k, 1), n);
  std::vector<BbsState> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(width), 0);
  for (;;) {
    std::vector<Tableau> cols;
    for (auto i : idx) cols.push_back(columns[i]);
    out.emplace_back(n, k, 0, std::move(cols));
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == columns.size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return out;
}

}  // namespace testing

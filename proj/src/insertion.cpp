#include "boxball/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxball {

namespace detail {

Cell bump_into(Tableau::Rows& rows, Letter a) {
  for (int r = 0;; ++r) {
    if (r == static_cast<int>(rows.size())) {
      rows.push_back({a});
      return {r, 0};
    }
    auto& row = rows[r];
    const auto it = std::upper_bound(row.begin(), row.end(), a);
    if (it == row.end()) {
      row.push_back(a);
      return {r, static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, a);
  }
}

Letter unbump_from(Tableau::Rows& rows, Cell corner) {
  Letter a = rows[corner.row][corner.col];
  rows[corner.row].pop_back();
  if (rows[corner.row].empty()) rows.pop_back();
  for (int r = corner.row - 1; r >= 0; --r) {
    auto& row = rows[r];
    // Rightmost entry strictly smaller than a.
    auto it = std::lower_bound(row.begin(), row.end(), a);
    --it;
    std::swap(*it, a);
  }
  return a;
}

}  // namespace detail

InsertionOutcome insert_letter(const Tableau& t, Letter a) {
  if (a < 1 || a > t.alphabet())
    throw std::invalid_argument("insert_letter: letter " + std::to_string(a) + " outside 1.." +
                                std::to_string(t.alphabet()));
  auto rows = t.rows();
  const Cell cell = detail::bump_into(rows, a);
  return {Tableau(std::move(rows), t.alphabet()), cell};
}

Tableau insert_word(const Tableau& t, std::span<const Letter> w) {
  auto rows = t.rows();
  for (Letter a : w) {
    if (a < 1 || a > t.alphabet())
      throw std::invalid_argument("insert_word: letter " + std::to_string(a) + " outside 1.." +
                                  std::to_string(t.alphabet()));
    detail::bump_into(rows, a);
  }
  return Tableau(std::move(rows), t.alphabet());
}

std::pair<Tableau, Letter> uninsert(const Tableau& t, Cell corner) {
  if (!t.shape().is_corner(corner))
    throw std::invalid_argument("uninsert: cell (" + std::to_string(corner.row) + "," +
                                std::to_string(corner.col) + ") is not a corner");
  auto rows = t.rows();
  const Letter a = detail::unbump_from(rows, corner);
  return {Tableau(std::move(rows), t.alphabet()), a};
}

Tableau rectify(std::span<const Letter> w, int n) {
  return insert_word(Tableau::empty(n), w);
}

bool knuth_equivalent(std::span<const Letter> u, std::span<const Letter> v) {
  Letter n = 1;
  for (Letter a : u) n = std::max(n, a);
  for (Letter a : v) n = std::max(n, a);
  return rectify(u, n) == rectify(v, n);
}

}  // namespace boxball

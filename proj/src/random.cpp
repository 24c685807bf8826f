#include "boxball/random.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace boxball {

int Rng::uniform(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<int>(x % span);
}

Tableau random_tableau(Rng& rng, const Shape& shape, int n, Letter lo, Letter hi) {
  Tableau::Rows rows;
  for (int len : shape.rows()) rows.emplace_back(len, 0);
  for (int r = 0; r < shape.num_rows(); ++r) {
    for (int c = 0; c < shape.row_length(r); ++c) {
      Letter min = lo;
      if (c > 0) min = std::max(min, rows[r][c - 1]);
      if (r > 0) min = std::max(min, rows[r - 1][c] + 1);
      int below = 0;
      while (r + 1 + below < shape.num_rows() && shape.row_length(r + 1 + below) > c) ++below;
      const Letter max = hi - below;
      if (min > max) throw std::invalid_argument("random_tableau: alphabet too small for the shape");
      rows[r][c] = rng.uniform(min, max);
    }
  }
  return Tableau(std::move(rows), n);
}

Tableau random_tableau(Rng& rng, const Shape& shape, int n) {
  return random_tableau(rng, shape, n, 1, n);
}

Tableau random_column(Rng& rng, int k, int n) {
  // Selection sampling keeps the draws in increasing order.
  std::vector<Letter> entries;
  int needed = k;
  for (Letter a = 1; a <= n && needed > 0; ++a) {
    if (rng.uniform(1, n - a + 1) <= needed) {
      entries.push_back(a);
      --needed;
    }
  }
  return Tableau::column(entries, n);
}

BbsState random_state(Rng& rng, int n, int k, int max_support) {
  const int support = rng.uniform(1, max_support);
  std::vector<Tableau> cols;
  for (int j = 0; j < support; ++j)
    cols.push_back(rng.chance(1, 3) ? Tableau::vacuum_column(k, n) : random_column(rng, k, n));
  return BbsState(n, k, 0, std::move(cols));
}

Soliton random_soliton(Rng& rng, int k, int n, int length, Position phase) {
  const Tableau low = random_tableau(rng, Shape::rectangle(k - 1, length), n, 1, k);
  const Tableau high = random_tableau(rng, Shape::rectangle(1, length), n, k + 1, n);
  return join(phase, low, high);
}

}  // namespace boxball

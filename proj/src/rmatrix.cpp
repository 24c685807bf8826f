#include "boxball/rmatrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "boxball/insertion.hpp"

namespace boxball {

namespace {

void require_rectangular(const Tableau& x, const Tableau& y) {
  if (!x.is_rectangle() || !y.is_rectangle()) throw std::invalid_argument("R: arguments must be rectangular");
  if (x.alphabet() != y.alphabet()) throw std::invalid_argument("R: arguments must share the alphabet bound");
}

int energy_from_product(const Shape& product, int k, int l, int k2, int l2) {
  const int cutoff = std::max(l, l2);
  int east = 0;
  for (int len : product.rows()) east += std::max(0, len - cutoff);
  return east - std::min(k, k2) * std::min(l, l2);
}

// Depth-first reverse bumping. The j-th letter removed lands in x~ at row
// j / width, column width-1 - j % width, since row(x~) comes out backwards.
class Unbumper {
 public:
  Unbumper(const Tableau& product, int keep_rows, int keep_cols, int out_rows, int out_cols)
      : n_(product.alphabet()),
        keep_rows_(keep_rows),
        keep_cols_(keep_cols),
        out_rows_(out_rows),
        out_cols_(out_cols),
        product_(product),
        out_(out_rows, std::vector<Letter>(out_cols, 0)) {}

  std::optional<RResult> run() { return search(product_.rows(), 0); }

 private:
  std::optional<RResult> search(const Tableau::Rows& rows, int j) {
    if (j == out_rows_ * out_cols_) return verify(rows);
    const int r = j / out_cols_;
    const int c = out_cols_ - 1 - j % out_cols_;
    const auto corners = Shape(lengths(rows)).corners();
    for (auto it = corners.rbegin(); it != corners.rend(); ++it) {
      if (it->row < keep_rows_ && it->col < keep_cols_) continue;
      auto next = rows;
      const Letter a = detail::unbump_from(next, *it);
      if (c + 1 < out_cols_ && a > out_[r][c + 1]) continue;
      if (r > 0 && a <= out_[r - 1][c]) continue;
      out_[r][c] = a;
      if (auto found = search(next, j + 1)) return found;
    }
    return std::nullopt;
  }

  std::optional<RResult> verify(const Tableau::Rows& rest) {
    if (Tableau::violation(out_, n_)) return std::nullopt;
    Tableau x_tilde(out_, n_);
    Tableau y_tilde(rest, n_);
    if (!y_tilde.is_rectangle() || y_tilde.num_rows() != keep_rows_ || y_tilde.width() != keep_cols_)
      return std::nullopt;
    if (insert_word(y_tilde, row_word(x_tilde)) != product_) return std::nullopt;
    return RResult{std::move(x_tilde), std::move(y_tilde), 0};
  }

  static std::vector<int> lengths(const Tableau::Rows& rows) {
    std::vector<int> out;
    for (const auto& row : rows) out.push_back(static_cast<int>(row.size()));
    return out;
  }

  int n_;
  int keep_rows_, keep_cols_, out_rows_, out_cols_;
  const Tableau& product_;
  Tableau::Rows out_;
};

}  // namespace

int energy_H(const Tableau& x, const Tableau& y) {
  if (x.empty() || y.empty()) return 0;
  require_rectangular(x, y);
  const Tableau product = insert_word(y, row_word(x));
  return energy_from_product(product.shape(), x.num_rows(), x.width(), y.num_rows(), y.width());
}

RResult apply_R(const Tableau& x, const Tableau& y) {
  if (x.empty() || y.empty()) return {y, x, 0};
  require_rectangular(x, y);
  const Tableau product = insert_word(y, row_word(x));
  Unbumper unbumper(product, x.num_rows(), x.width(), y.num_rows(), y.width());
  auto result = unbumper.run();
  if (!result) {
    throw std::logic_error("R: no pair reproduces the insertion product of " + to_string(x) + " * " +
                           to_string(y));
  }
  result->energy = energy_from_product(product.shape(), x.num_rows(), x.width(), y.num_rows(), y.width());
  return *result;
}

RResult oracle_R(const Tableau& x, const Tableau& y) {
  if (x.empty() || y.empty()) return {y, x, 0};
  require_rectangular(x, y);
  const int n = x.alphabet();
  const Tableau product = insert_word(y, row_word(x));
  const Content total = content(x) + content(y);

  std::map<Content, std::vector<Tableau>> y_by_content;
  for (auto& cand : enumerate_tableaux(Shape::rectangle(x.num_rows(), x.width()), n))
    y_by_content[content(cand)].push_back(std::move(cand));

  std::vector<RResult> matches;
  for (const auto& x_tilde : enumerate_tableaux(Shape::rectangle(y.num_rows(), y.width()), n)) {
    Content need = total;
    bool feasible = true;
    for (const auto& [letter, count] : content(x_tilde)) {
      auto it = need.find(letter);
      if (it == need.end() || it->second < count) {
        feasible = false;
        break;
      }
      if ((it->second -= count) == 0) need.erase(it);
    }
    if (!feasible) continue;
    const auto bucket = y_by_content.find(need);
    if (bucket == y_by_content.end()) continue;
    const Word w = row_word(x_tilde);
    for (const auto& y_tilde : bucket->second) {
      if (insert_word(y_tilde, w) == product) matches.push_back({x_tilde, y_tilde, 0});
    }
  }
  if (matches.size() != 1) {
    throw std::logic_error("oracle_R: " + std::to_string(matches.size()) + " candidates for " + to_string(x) +
                           " * " + to_string(y));
  }
  matches.front().energy =
      energy_from_product(product.shape(), x.num_rows(), x.width(), y.num_rows(), y.width());
  return matches.front();
}

Triple yang_baxter_left(const Tableau& x, const Tableau& y, const Tableau& z) {
  auto first = apply_R(x, y);                              // y1 x1 z
  auto second = apply_R(first.right_out, z);               // y1 z1 x2
  auto third = apply_R(first.left_out, second.left_out);   // z2 y2 x2
  return {third.left_out, third.right_out, second.right_out};
}

Triple yang_baxter_right(const Tableau& x, const Tableau& y, const Tableau& z) {
  auto first = apply_R(y, z);                              // x z1 y1
  auto second = apply_R(x, first.left_out);                // z2 x1 y1
  auto third = apply_R(second.right_out, first.right_out); // z2 y2 x2
  return {second.left_out, third.left_out, third.right_out};
}

bool check_yang_baxter(const Tableau& x, const Tableau& y, const Tableau& z) {
  return yang_baxter_left(x, y, z) == yang_baxter_right(x, y, z);
}

}  // namespace boxball

#pragma once

// Semi-standard tableaux over the alphabet {1, ..., n}, their shapes, row
// words and letter bookkeeping.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boxball {

using Letter = int;

/// A finite sequence of letters. Row words and Knuth classes live here.
using Word = std::vector<Letter>;

/// Multiset of letters: letter -> multiplicity (zero counts are never stored).
using Content = std::map<Letter, int>;

/// 0-based (row, column) position inside a tableau.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// Partition shape: row lengths, weakly decreasing, no trailing zero rows.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> row_lengths);

  /// The rectangle (cols^rows). A zero-row rectangle is the empty shape.
  static Shape rectangle(int rows, int cols);

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row_length(int r) const;
  int width() const { return rows_.empty() ? 0 : rows_.front(); }
  int size() const;
  bool empty() const { return rows_.empty(); }
  bool is_rectangle() const;

  /// Cells whose removal leaves a partition shape, top to bottom.
  std::vector<Cell> corners() const;
  bool is_corner(Cell cell) const;

  bool operator==(const Shape&) const = default;

 private:
  std::vector<int> rows_;
};

/// Semi-standard tableau: rows weakly increase, columns strictly increase,
/// entries in 1..n. Immutable once constructed.
///
/// Equality compares the filling only; the alphabet bound is carried so that
/// operations can check their arguments, not as part of the value.
class Tableau {
 public:
  using Rows = std::vector<std::vector<Letter>>;

  /// Empty tableau over the alphabet {1..n}.
  explicit Tableau(int n = 0) : n_(n) {}

  /// Throws std::invalid_argument naming the violated invariant.
  Tableau(Rows rows, int n);

  static Tableau empty(int n) { return Tableau(n); }

  /// Single column from a strictly increasing letter sequence (top to bottom).
  static Tableau column(std::span<const Letter> entries, int n);
  static Tableau column(std::initializer_list<Letter> entries, int n);

  /// Left-to-right concatenation of single columns of equal height.
  static Tableau from_columns(std::span<const Tableau> columns, int n);

  /// 1_k: the column 1, 2, ..., k.
  static Tableau vacuum_column(int k, int n);

  /// c_l = 1_k^l: k rows, row r filled with r+1.
  static Tableau vacuum_rectangle(int k, int l, int n);

  /// Reason the filling is not a semi-standard tableau over n, if any.
  static std::optional<std::string> violation(const Rows& rows, int n);

  int alphabet() const { return n_; }
  const Rows& rows() const { return rows_; }
  Shape shape() const;
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int width() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  int size() const;
  bool empty() const { return rows_.empty(); }
  bool is_rectangle() const;
  Letter at(int row, int col) const { return rows_[row][col]; }
  Letter at(Cell cell) const { return rows_[cell.row][cell.col]; }

  /// Column c (top to bottom) as its own single-column tableau.
  Tableau column_at(int c) const;
  std::vector<Letter> column_entries(int c) const;

  bool operator==(const Tableau& other) const { return rows_ == other.rows_; }

 private:
  Rows rows_;
  int n_ = 0;
};

/// Bottom row first, each row read left to right.
Word row_word(const Tableau& t);

Content content(const Tableau& t);
Content content(std::span<const Letter> w);
Content operator+(Content a, const Content& b);

/// Subsequence of w keeping letters in [lo, hi], order preserved.
Word restrict_letters(std::span<const Letter> w, Letter lo, Letter hi);

/// Vertical concatenation: rows of `top` followed by rows of `bottom`.
Tableau stack(const Tableau& top, const Tableau& bottom);

/// Rows [first, first + count) as a tableau (may be empty).
Tableau row_slice(const Tableau& t, int first, int count);

/// Every semi-standard filling of `shape` with letters in [lo, hi], in
/// lexicographic row-major order. The result tableaux carry alphabet n.
std::vector<Tableau> enumerate_tableaux(const Shape& shape, int n, Letter lo, Letter hi);
std::vector<Tableau> enumerate_tableaux(const Shape& shape, int n);

// Text forms.
//   tableau: "1 2 4 / 2 3 5 / 4 4 6"   (the empty tableau is "-")
//   column:  "2/3/5"                   (single-column tableaux only)
std::string to_string(const Tableau& t);
std::string to_column_string(const Tableau& t);
std::string to_string(std::span<const Letter> w);

/// Accepts both the tableau and the column form. Throws std::invalid_argument.
Tableau parse_tableau(std::string_view text, int n);

}  // namespace boxball

#include "boxball/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace boxball {

// ---------------------------------------------------------------------------
// Shape

Shape::Shape(std::vector<int> row_lengths) : rows_(std::move(row_lengths)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r] < 0) throw std::invalid_argument("shape: negative row length");
    if (r > 0 && rows_[r] > rows_[r - 1])
      throw std::invalid_argument("shape: row lengths must weakly decrease");
  }
}

Shape Shape::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("shape: negative rectangle");
  if (cols == 0) return Shape{};
  return Shape(std::vector<int>(rows, cols));
}

int Shape::row_length(int r) const {
  return r < num_rows() ? rows_[r] : 0;
}

int Shape::size() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0);
}

bool Shape::is_rectangle() const {
  return std::all_of(rows_.begin(), rows_.end(), [&](int len) { return len == width(); });
}

std::vector<Cell> Shape::corners() const {
  std::vector<Cell> out;
  for (int r = 0; r < num_rows(); ++r) {
    if (row_length(r + 1) < rows_[r]) out.push_back({r, rows_[r] - 1});
  }
  return out;
}

bool Shape::is_corner(Cell cell) const {
  if (cell.row < 0 || cell.row >= num_rows()) return false;
  return cell.col == rows_[cell.row] - 1 && row_length(cell.row + 1) < rows_[cell.row];
}

// ---------------------------------------------------------------------------
// Tableau

std::optional<std::string> Tableau::violation(const Rows& rows, int n) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) return "row " + std::to_string(r + 1) + " is empty";
    if (r > 0 && row.size() > rows[r - 1].size())
      return "row " + std::to_string(r + 1) + " is longer than the row above";
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n)
        return "entry " + std::to_string(row[c]) + " outside 1.." + std::to_string(n);
      if (c > 0 && row[c] < row[c - 1])
        return "row " + std::to_string(r + 1) + " is not weakly increasing";
      if (r > 0 && row[c] <= rows[r - 1][c])
        return "column " + std::to_string(c + 1) + " is not strictly increasing";
    }
  }
  return std::nullopt;
}

Tableau::Tableau(Rows rows, int n) : rows_(std::move(rows)), n_(n) {
  if (auto why = violation(rows_, n_)) throw std::invalid_argument("invalid tableau: " + *why);
}

Tableau Tableau::column(std::span<const Letter> entries, int n) {
  Rows rows;
  rows.reserve(entries.size());
  for (Letter a : entries) rows.push_back({a});
  return Tableau(std::move(rows), n);
}

Tableau Tableau::column(std::initializer_list<Letter> entries, int n) {
  return column(std::span<const Letter>(entries.begin(), entries.size()), n);
}

Tableau Tableau::from_columns(std::span<const Tableau> columns, int n) {
  if (columns.empty()) return Tableau(n);
  const int height = columns.front().num_rows();
  Rows rows(height);
  for (const auto& col : columns) {
    if (col.width() > 1 || col.num_rows() != height)
      throw std::invalid_argument("from_columns: columns must be single columns of equal height");
    for (int r = 0; r < height; ++r) rows[r].push_back(col.at(r, 0));
  }
  return Tableau(std::move(rows), n);
}

Tableau Tableau::vacuum_column(int k, int n) {
  return vacuum_rectangle(k, 1, n);
}

Tableau Tableau::vacuum_rectangle(int k, int l, int n) {
  Rows rows;
  if (l > 0) {
    for (int r = 0; r < k; ++r) rows.emplace_back(l, r + 1);
  }
  return Tableau(std::move(rows), n);
}

Shape Tableau::shape() const {
  std::vector<int> lengths;
  lengths.reserve(rows_.size());
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  return Shape(std::move(lengths));
}

int Tableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

bool Tableau::is_rectangle() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const auto& row) { return static_cast<int>(row.size()) == width(); });
}

std::vector<Letter> Tableau::column_entries(int c) const {
  std::vector<Letter> out;
  for (const auto& row : rows_) {
    if (c < static_cast<int>(row.size())) out.push_back(row[c]);
  }
  return out;
}

Tableau Tableau::column_at(int c) const {
  return column(column_entries(c), n_);
}

// ---------------------------------------------------------------------------
// Words and content

Word row_word(const Tableau& t) {
  Word w;
  w.reserve(t.size());
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

Content content(std::span<const Letter> w) {
  Content out;
  for (Letter a : w) ++out[a];
  return out;
}

Content content(const Tableau& t) {
  Content out;
  for (const auto& row : t.rows())
    for (Letter a : row) ++out[a];
  return out;
}

Content operator+(Content a, const Content& b) {
  for (const auto& [letter, count] : b) a[letter] += count;
  return a;
}

Word restrict_letters(std::span<const Letter> w, Letter lo, Letter hi) {
  Word out;
  std::copy_if(w.begin(), w.end(), std::back_inserter(out), [&](Letter a) { return lo <= a && a <= hi; });
  return out;
}

Tableau stack(const Tableau& top, const Tableau& bottom) {
  Tableau::Rows rows = top.rows();
  rows.insert(rows.end(), bottom.rows().begin(), bottom.rows().end());
  return Tableau(std::move(rows), std::max(top.alphabet(), bottom.alphabet()));
}

Tableau row_slice(const Tableau& t, int first, int count) {
  if (first < 0 || count < 0 || first + count > t.num_rows())
    throw std::out_of_range("row_slice: rows out of range");
  Tableau::Rows rows(t.rows().begin() + first, t.rows().begin() + first + count);
  return Tableau(std::move(rows), t.alphabet());
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void fill_cell(const Shape& shape, int n, Letter lo, Letter hi, Tableau::Rows& rows, int r, int c,
               std::vector<Tableau>& out) {
  if (r == shape.num_rows()) {
    out.emplace_back(rows, n);
    return;
  }
  if (c == shape.row_length(r)) {
    fill_cell(shape, n, lo, hi, rows, r + 1, 0, out);
    return;
  }
  Letter min = lo;
  if (c > 0) min = std::max(min, rows[r][c - 1]);
  if (r > 0) min = std::max(min, rows[r - 1][c] + 1);
  // Column c still needs room below for strictly larger letters.
  int below = 0;
  while (r + 1 + below < shape.num_rows() && shape.row_length(r + 1 + below) > c) ++below;
  for (Letter a = min; a <= hi - below; ++a) {
    rows[r][c] = a;
    fill_cell(shape, n, lo, hi, rows, r, c + 1, out);
  }
}

}  // namespace

std::vector<Tableau> enumerate_tableaux(const Shape& shape, int n, Letter lo, Letter hi) {
  std::vector<Tableau> out;
  Tableau::Rows rows;
  for (int len : shape.rows()) rows.emplace_back(len, 0);
  fill_cell(shape, n, lo, hi, rows, 0, 0, out);
  return out;
}

std::vector<Tableau> enumerate_tableaux(const Shape& shape, int n) {
  return enumerate_tableaux(shape, n, 1, n);
}

// ---------------------------------------------------------------------------
// Text forms

std::string to_string(const Tableau& t) {
  if (t.empty()) return "-";
  std::ostringstream os;
  for (int r = 0; r < t.num_rows(); ++r) {
    if (r > 0) os << " / ";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c > 0) os << ' ';
      os << t.rows()[r][c];
    }
  }
  return os.str();
}

std::string to_column_string(const Tableau& t) {
  if (t.width() != 1) throw std::invalid_argument("to_column_string: not a single column");
  std::string out;
  for (int r = 0; r < t.num_rows(); ++r) {
    if (r > 0) out += '/';
    out += std::to_string(t.at(r, 0));
  }
  return out;
}

std::string to_string(std::span<const Letter> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

Tableau parse_tableau(std::string_view text, int n) {
  text = trim(text);
  if (text == "-") return Tableau(n);
  if (text.empty()) throw std::invalid_argument("empty tableau text (use '-')");
  Tableau::Rows rows;
  std::size_t start = 0;
  while (true) {
    const auto slash = text.find('/', start);
    const auto part = trim(text.substr(start, slash == std::string_view::npos ? text.size() - start : slash - start));
    if (part.empty()) throw std::invalid_argument("empty row in tableau text '" + std::string(text) + "'");
    std::vector<Letter> row;
    std::size_t pos = 0;
    while (pos < part.size()) {
      if (part[pos] == ' ') {
        ++pos;
        continue;
      }
      Letter value = 0;
      const auto [ptr, ec] = std::from_chars(part.data() + pos, part.data() + part.size(), value);
      if (ec != std::errc{} || (ptr != part.data() + part.size() && *ptr != ' '))
        throw std::invalid_argument("bad letter in tableau text '" + std::string(text) + "'");
      row.push_back(value);
      pos = static_cast<std::size_t>(ptr - part.data());
    }
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return Tableau(std::move(rows), n);
}

}  // namespace boxball

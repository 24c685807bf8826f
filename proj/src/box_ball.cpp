#include "boxball/box_ball.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "boxball/insertion.hpp"
#include "boxball/rmatrix.hpp"

namespace boxball {

// ---------------------------------------------------------------------------
// BbsState

bool is_vacuum_column(const Tableau& column) {
  for (int r = 0; r < column.num_rows(); ++r) {
    if (column.at(r, 0) != r + 1) return false;
  }
  return true;
}

BbsState::BbsState(int n, int k) : n_(n), k_(k) {
  if (k < 1 || k >= n) throw std::invalid_argument("state: need 1 <= k <= n-1");
}

BbsState::BbsState(int n, int k, Position offset, std::vector<Tableau> columns) : BbsState(n, k) {
  for (const auto& col : columns) {
    if (col.width() != 1 || col.num_rows() != k_)
      throw std::invalid_argument("state: every column must have exactly k entries");
    if (col.alphabet() != n_) throw std::invalid_argument("state: column alphabet differs from n");
  }
  auto first = std::find_if_not(columns.begin(), columns.end(), is_vacuum_column);
  auto last = std::find_if_not(columns.rbegin(), columns.rend(), is_vacuum_column).base();
  if (first >= last) return;
  offset_ = offset + (first - columns.begin());
  columns_.assign(std::make_move_iterator(first), std::make_move_iterator(last));
}

Tableau BbsState::at(Position pos) const {
  if (pos < offset_ || pos >= end()) return Tableau::vacuum_column(k_, n_);
  return columns_[static_cast<std::size_t>(pos - offset_)];
}

std::vector<Tableau> BbsState::window(Position begin, Position end) const {
  std::vector<Tableau> out;
  for (Position p = begin; p < end; ++p) out.push_back(at(p));
  return out;
}

// ---------------------------------------------------------------------------
// Time evolution

Evolution evolve(const BbsState& p, int l) {
  if (l < 1) throw std::invalid_argument("evolve: carrier width must be positive");
  const int n = p.alphabet();
  const int k = p.k();
  const Tableau rest = Tableau::vacuum_rectangle(k, l, n);

  CarrierTrace trace;
  trace.begin = p.offset();
  trace.carriers.push_back(rest);
  const Position max_tail = static_cast<Position>(k + 1) * (l + 1) * n;
  Position pos = p.offset();
  while (pos < p.end() || trace.carriers.back() != rest) {
    if (pos >= p.end() + max_tail)
      throw std::logic_error("evolve: carrier did not return to its resting state");
    auto r = apply_R(trace.carriers.back(), p.at(pos));
    trace.outputs.push_back(std::move(r.left_out));
    trace.carriers.push_back(std::move(r.right_out));
    trace.energies.push_back(r.energy);
    ++pos;
  }
  BbsState next(n, k, trace.begin, trace.outputs);
  return {std::move(next), std::move(trace)};
}

BbsState advance(const BbsState& p, int l, int steps) {
  BbsState out = p;
  for (int t = 0; t < steps; ++t) out = evolve(out, l).state;
  return out;
}

int energy_E(const BbsState& p, int l) {
  const auto trace = evolve(p, l).trace;
  int total = 0;
  for (int h : trace.energies) total -= h;
  return total;
}

std::map<int, int> spectrum_N(const BbsState& p) {
  std::vector<int> energies{0};  // E_0
  const int cap = static_cast<int>(p.columns().size()) * p.k() + 2;
  for (int l = 1;; ++l) {
    if (l > cap) throw std::logic_error("spectrum_N: energies did not saturate");
    energies.push_back(energy_E(p, l));
    if (energies[l] == energies[l - 1]) break;
  }
  // energies has E_0..E_{m+1} with E_{m+1} == E_m.
  std::map<int, int> out;
  const int last = static_cast<int>(energies.size()) - 1;
  for (int d = 1; d < last; ++d) {
    const int count = (energies[d] - energies[d - 1]) - (energies[d + 1] - energies[d]);
    if (count < 0) throw std::domain_error("spectrum_N: negative N_" + std::to_string(d));
    if (count > 0) out[d] = count;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conserved tableaux

Window conserved_window(const BbsState& p, int l) {
  const auto trace = evolve(p, l).trace;
  return {p.offset() - l, std::max(trace.end(), p.end()) + l};
}

Word state_word(const BbsState& p, Window w) {
  Word out;
  for (Position pos = w.end - 1; pos >= w.begin; --pos) {
    const Word part = row_word(p.at(pos));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

ConservedTableaux split_rectify(const Word& w, int n, int k) {
  return {rectify(restrict_letters(w, 1, k), n), rectify(restrict_letters(w, k + 1, n), n)};
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ConservedTableaux p_tableaux(const BbsState& p, int l, Window w) {
  const Word carrier = row_word(Tableau::vacuum_rectangle(p.k(), l, p.alphabet()));
  return split_rectify(concat(state_word(p, w), carrier), p.alphabet(), p.k());
}

ConservedTableaux p_tableaux(const BbsState& p, int l) {
  return p_tableaux(p, l, conserved_window(p, l));
}

CrossStep cross_step(const BbsState& p, int l) {
  const Window w = conserved_window(p, l);
  const BbsState next = evolve(p, l).state;
  const Word carrier = row_word(Tableau::vacuum_rectangle(p.k(), l, p.alphabet()));
  const Word before = concat(state_word(p, w), carrier);
  const Word after = concat(carrier, state_word(next, w));
  const int n = p.alphabet();
  return {rectify(before, n), rectify(after, n), split_rectify(before, n, p.k()),
          split_rectify(after, n, p.k())};
}

// ---------------------------------------------------------------------------
// Crystal action on states

std::optional<BbsState> apply_e(const BbsState& p, int i) {
  auto image = apply_e(CrystalTensor(p.columns(), p.alphabet()), i);
  if (!image) return std::nullopt;
  return BbsState(p.alphabet(), p.k(), p.offset(), image->factors());
}

std::optional<BbsState> apply_f(const BbsState& p, int i) {
  auto image = apply_f(CrystalTensor(p.columns(), p.alphabet()), i);
  if (!image) return std::nullopt;
  return BbsState(p.alphabet(), p.k(), p.offset(), image->factors());
}

// ---------------------------------------------------------------------------
// Text form

ParseError::ParseError(int line_, int column_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

std::string format_columns(const BbsState& p, Position frame) {
  if (p.is_vacuum()) return {};
  if (p.offset() < frame) throw std::invalid_argument("format_columns: state starts before the frame");
  std::string out;
  for (Position pos = frame; pos < p.offset(); ++pos) out += out.empty() ? "." : " .";
  for (const auto& col : p.columns()) {
    if (!out.empty()) out += ' ';
    out += is_vacuum_column(col) ? "." : to_column_string(col);
  }
  return out;
}

std::string format_state(const BbsState& p) {
  std::ostringstream os;
  os << "n=" << p.alphabet() << " k=" << p.k() << " offset=" << p.offset() << '\n'
     << format_columns(p, p.offset()) << '\n';
  return os.str();
}

namespace {

template <typename Int>
bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

BbsState parse_columns(std::string_view line, int n, int k, Position offset, int line_number) {
  std::vector<Tableau> columns;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    const auto token = line.substr(start, pos - start);
    const int column = static_cast<int>(start) + 1;
    if (token == ".") {
      columns.push_back(Tableau::vacuum_column(k, n));
      continue;
    }
    std::vector<Letter> entries;
    std::size_t a = 0;
    while (true) {
      const auto slash = token.find('/', a);
      const auto piece = token.substr(a, slash == std::string_view::npos ? token.size() - a : slash - a);
      Letter value = 0;
      if (!parse_int(piece, value))
        throw ParseError(line_number, column, "bad column '" + std::string(token) + "'");
      entries.push_back(value);
      if (slash == std::string_view::npos) break;
      a = slash + 1;
    }
    if (static_cast<int>(entries.size()) != k)
      throw ParseError(line_number, column,
                       "column '" + std::string(token) + "' has " + std::to_string(entries.size()) +
                           " entries, expected k=" + std::to_string(k));
    try {
      columns.push_back(Tableau::column(entries, n));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_number, column, e.what());
    }
  }
  return BbsState(n, k, offset, std::move(columns));
}

BbsState parse_state(std::string_view text) {
  const auto newline = text.find('\n');
  const auto header = text.substr(0, newline);
  std::string_view body;
  if (newline != std::string_view::npos) {
    body = text.substr(newline + 1);
    if (const auto next = body.find('\n'); next != std::string_view::npos) {
      if (body.find_first_not_of(" \t\r\n", next) != std::string_view::npos)
        throw ParseError(3, 1, "unexpected content after the column line");
      body = body.substr(0, next);
    }
  }

  int n = 0, k = 0;
  Position offset = 0;
  bool seen_n = false, seen_k = false, seen_offset = false;
  std::size_t pos = 0;
  while (pos < header.size()) {
    if (header[pos] == ' ' || header[pos] == '\t' || header[pos] == '\r') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < header.size() && header[pos] != ' ' && header[pos] != '\t' && header[pos] != '\r') ++pos;
    const auto token = header.substr(start, pos - start);
    const int column = static_cast<int>(start) + 1;
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) throw ParseError(1, column, "expected key=value, got '" + std::string(token) + "'");
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    bool ok = false;
    if (key == "n") ok = seen_n = parse_int(value, n);
    else if (key == "k") ok = seen_k = parse_int(value, k);
    else if (key == "offset") ok = seen_offset = parse_int(value, offset);
    else throw ParseError(1, column, "unknown key '" + std::string(key) + "'");
    if (!ok) throw ParseError(1, column + static_cast<int>(eq) + 1, "bad integer '" + std::string(value) + "'");
  }
  if (!seen_n || !seen_k || !seen_offset) throw ParseError(1, 1, "header needs n=, k= and offset=");
  if (k < 1 || k >= n) throw ParseError(1, 1, "need 1 <= k <= n-1");
  return parse_columns(body, n, k, offset, 2);
}

}  // namespace boxball

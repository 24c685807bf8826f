#pragma once

// Box-ball states over B^{k,1}, the carrier time evolution T_l, the energies
// E_l, the soliton-length spectrum N_d and the Knuth-class conserved
// tableaux.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boxball/crystal.hpp"
#include "boxball/tableau.hpp"

namespace boxball {

using Position = long;

/// Finite window of B^{k,1} columns inside a bi-infinite vacuum 1_k.
/// Always canonical: the stored window starts and ends on non-vacuum
/// columns, and the vacuum state stores nothing at offset 0.
class BbsState {
 public:
  BbsState(int n, int k);
  BbsState(int n, int k, Position offset, std::vector<Tableau> columns);

  int alphabet() const { return n_; }
  int k() const { return k_; }
  Position offset() const { return offset_; }
  Position end() const { return offset_ + static_cast<Position>(columns_.size()); }
  const std::vector<Tableau>& columns() const { return columns_; }
  bool is_vacuum() const { return columns_.empty(); }

  /// Column at an absolute position (1_k outside the window).
  Tableau at(Position pos) const;
  std::vector<Tableau> window(Position begin, Position end) const;

  bool operator==(const BbsState&) const = default;

 private:
  int n_;
  int k_;
  Position offset_ = 0;
  std::vector<Tableau> columns_;
};

bool is_vacuum_column(const Tableau& column);

/// Sweep of the carrier over one time step. carriers[0] = c_l and
/// carriers[j+1] = carrier after site begin+j.
struct CarrierTrace {
  Position begin = 0;
  std::vector<Tableau> carriers;
  std::vector<Tableau> outputs;
  std::vector<int> energies;  // H(carriers[j] (x) b_{begin+j})

  Position end() const { return begin + static_cast<Position>(outputs.size()); }
};

struct Evolution {
  BbsState state;
  CarrierTrace trace;
};

/// T_l: sweep c_l from the left, extending with vacuum on the right until
/// the carrier is c_l again. Throws std::logic_error if it never returns.
Evolution evolve(const BbsState& p, int l);

/// `steps` applications of T_l.
BbsState advance(const BbsState& p, int l, int steps = 1);

/// E_l(p) = - sum of H over the carrier trace.
int energy_E(const BbsState& p, int l);

/// N_d solving E_l = sum_d min(d, l) N_d. Throws std::domain_error if some
/// N_d comes out negative.
std::map<int, int> spectrum_N(const BbsState& p);

/// Half-open range of absolute positions.
struct Window {
  Position begin = 0;
  Position end = 0;
};

/// Support padded by l on the left and on the right of where the carrier of
/// T_l comes back to c_l.
Window conserved_window(const BbsState& p, int l);

/// row(b_L) row(b_{L-1}) ... row(b_1) over the window.
Word state_word(const BbsState& p, Window w);

struct ConservedTableaux {
  Tableau low;   // letters 1..k
  Tableau high;  // letters k+1..n
};

/// Rectified letter-restrictions of state_word(p, w) . row(c_l).
ConservedTableaux p_tableaux(const BbsState& p, int l, Window w);
ConservedTableaux p_tableaux(const BbsState& p, int l);

/// Both sides of the one-step identity
///   state_word(p) . row(c_l)  ~  row(c_l) . state_word(T_l p)
/// over a common window, rectified in full and restricted to each half of
/// the alphabet.
struct CrossStep {
  Tableau before_full, after_full;
  ConservedTableaux before, after;

  bool holds() const {
    return before_full == after_full && before.low == after.low && before.high == after.high;
  }
};
CrossStep cross_step(const BbsState& p, int l);

/// e_i / f_i acting on the state's columns as a tensor product.
std::optional<BbsState> apply_e(const BbsState& p, int i);
std::optional<BbsState> apply_f(const BbsState& p, int i);

// State file:
//   n=<int> k=<int> offset=<int>
//   <columns separated by whitespace; each a/b/.../z, or '.' for 1_k>

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what);
  int line;
  int column;
};

std::string format_state(const BbsState& p);

/// Column line drawn from `frame` onwards: vacuum before the window shows
/// as leading '.' entries. Throws std::invalid_argument if p.offset() < frame.
std::string format_columns(const BbsState& p, Position frame);

BbsState parse_state(std::string_view text);

/// Second-line syntax only, with the header values given.
BbsState parse_columns(std::string_view line, int n, int k, Position offset, int line_number = 2);

}  // namespace boxball

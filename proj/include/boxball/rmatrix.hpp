#pragma once

// Combinatorial R : B^{k,l} (x) B^{k',l'} -> B^{k',l'} (x) B^{k,l} and the
// energy function H, both read off the insertion product y <- row(x).

#include <array>

#include "boxball/tableau.hpp"

namespace boxball {

struct RResult {
  Tableau left_out;   // x~ in B^{k',l'}
  Tableau right_out;  // y~ in B^{k,l}
  int energy = 0;     // H(x (x) y)

  bool operator==(const RResult&) const = default;
};

/// R(x (x) y) = x~ (x) y~, the unique pair with y <- row(x) == y~ <- row(x~).
///
/// x~ is recovered by reverse bumping |x~| letters out of the product,
/// only from cells outside the target rectangle, preferring the bottom-most
/// corner and backtracking whenever the ejected letters cannot form a
/// semi-standard x~. The candidate is then checked by forward insertion.
/// A zero-row argument is the trivial factor: R swaps and H = 0.
///
/// Throws std::invalid_argument on non-rectangular input and
/// std::logic_error if no pair passes verification.
RResult apply_R(const Tableau& x, const Tableau& y);

/// H(x (x) y) = #{cells of y <- row(x) right of column max(l,l')}
///              - min(k,k') * min(l,l').
int energy_H(const Tableau& x, const Tableau& y);

/// Brute force: tries every (x~, y~) of the target shapes with matching
/// content and returns the unique one whose insertion product agrees.
/// Throws std::logic_error if zero or several candidates match.
RResult oracle_R(const Tableau& x, const Tableau& y);

using Triple = std::array<Tableau, 3>;

/// (R (x) 1)(1 (x) R)(R (x) 1) applied to x (x) y (x) z.
Triple yang_baxter_left(const Tableau& x, const Tableau& y, const Tableau& z);
/// (1 (x) R)(R (x) 1)(1 (x) R) applied to x (x) y (x) z.
Triple yang_baxter_right(const Tableau& x, const Tableau& y, const Tableau& z);

bool check_yang_baxter(const Tableau& x, const Tableau& y, const Tableau& z);

}  // namespace boxball

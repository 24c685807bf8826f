#pragma once

// Schensted row insertion, its inverse, rectification and Knuth equivalence.

#include <utility>

#include "boxball/tableau.hpp"

namespace boxball {

struct InsertionOutcome {
  Tableau tableau;
  Cell new_cell;  // 0-based; always a corner of tableau.shape()
};

/// Row-insert `a` (T <- a). Each row bumps its leftmost entry strictly
/// larger than the incoming letter; equal entries are passed over.
InsertionOutcome insert_letter(const Tableau& t, Letter a);

/// Left-to-right fold of insert_letter over `w` (T <- w).
Tableau insert_word(const Tableau& t, std::span<const Letter> w);

/// Reverse bumping from a corner cell. Returns the shrunken tableau and the
/// letter ejected from the first row. Throws std::invalid_argument if
/// `corner` is not a corner of t's shape.
std::pair<Tableau, Letter> uninsert(const Tableau& t, Cell corner);

/// insert_word(empty(n), w).
Tableau rectify(std::span<const Letter> w, int n);

/// True iff u and v rectify to the same tableau.
bool knuth_equivalent(std::span<const Letter> u, std::span<const Letter> v);

namespace detail {

// Raw bumping on unchecked row storage; callers re-validate.
Cell bump_into(Tableau::Rows& rows, Letter a);
Letter unbump_from(Tableau::Rows& rows, Cell corner);

}  // namespace detail

}  // namespace boxball

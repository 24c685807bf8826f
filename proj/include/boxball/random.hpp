#pragma once

// Seeded generators for randomized checks.
//
// All draws come from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Bounded integers use rejection sampling on the raw
// 64-bit output instead of std::uniform_int_distribution, whose algorithm
// varies between standard libraries, so a seed reproduces the same
// instances on every platform.

#include <cstdint>
#include <random>

#include "boxball/box_ball.hpp"
#include "boxball/soliton.hpp"
#include "boxball/tableau.hpp"

namespace boxball {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);

  /// True with probability num/den.
  bool chance(int num, int den) { return uniform(1, den) <= num; }

 private:
  std::mt19937_64 engine_;
};

/// Semi-standard filling of `shape` with letters in [lo, hi], chosen cell by
/// cell (not uniform over all tableaux). Throws if no filling exists.
Tableau random_tableau(Rng& rng, const Shape& shape, int n, Letter lo, Letter hi);
Tableau random_tableau(Rng& rng, const Shape& shape, int n);

/// Uniform k-subset of 1..n as a column.
Tableau random_column(Rng& rng, int k, int n);

/// Support of 1..max_support columns, roughly a third of them vacuum.
BbsState random_state(Rng& rng, int n, int k, int max_support);

/// Random internal tableau obeying the soliton row conditions.
Soliton random_soliton(Rng& rng, int k, int n, int length, Position phase);

}  // namespace boxball

#pragma once

// Randomized and exhaustive invariant campaigns behind `boxball check`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boxball {

enum class Invariant {
  energy,       // E_l(T_{l'} p) == E_l(p)
  commute,      // T_l T_{l'} p == T_{l'} T_l p
  yang_baxter,  // both three-fold products of R agree
  r_oracle,     // apply_R == oracle_R, exhaustive over small shapes
  knuth,        // rectification is constant on Knuth classes; one-step P identity
};

std::optional<Invariant> parse_invariant(std::string_view name);
std::string_view invariant_name(Invariant inv);

struct CheckOptions {
  Invariant invariant = Invariant::energy;
  std::uint64_t seed = 1;
  int trials = 100;
  /// Mutation test: corrupts one side of every comparison so that the
  /// campaign must fail.
  bool inject_fault = false;
};

struct CheckFailure {
  int trial = 0;
  std::string detail;
  std::string instance;  // reproducer, shrunk where possible
};

struct CheckReport {
  Invariant invariant = Invariant::energy;
  int instances = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Deterministic for a fixed seed. r_oracle ignores trials and seed.
CheckReport run_check(const CheckOptions& options);

}  // namespace boxball

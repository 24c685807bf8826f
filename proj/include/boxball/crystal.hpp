#pragma once

// Kashiwara operators e_i, f_i (i = 1..n-1) on tensor products of tableaux,
// computed by the signature rule.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxball/tableau.hpp"

namespace boxball {

/// b_1 (x) b_2 (x) ... (x) b_m over a common alphabet. Factors may have
/// different shapes.
class CrystalTensor {
 public:
  CrystalTensor() = default;
  CrystalTensor(std::vector<Tableau> factors, int n);

  const std::vector<Tableau>& factors() const { return factors_; }
  const Tableau& operator[](std::size_t i) const { return factors_[i]; }
  std::size_t size() const { return factors_.size(); }
  int alphabet() const { return n_; }
  int cell_count() const;

  bool operator==(const CrystalTensor& other) const { return factors_ == other.factors_; }

 private:
  std::vector<Tableau> factors_;
  int n_ = 0;
};

enum class Sign : std::int8_t { zero, plus, minus };
using Signature = std::vector<Sign>;

/// Columns of a rectangular tableau, right to left: x^l (x) ... (x) x^1.
/// Throws std::invalid_argument for non-rectangular input.
CrystalTensor sp(const Tableau& t);

/// Inverse of sp: concatenates the columns right to left.
Tableau sp_inverse(const CrystalTensor& columns);

/// One symbol per letter in reading order: factors left to right, each
/// factor's columns right to left, each column top to bottom. `+` marks
/// letter i, `-` marks letter i+1.
Signature signature(const CrystalTensor& ct, int i);

/// Positions (into the signature) left after cancelling every +- pair that
/// is adjacent once zeros are ignored. The survivors read - ... - + ... +.
std::vector<std::size_t> reduced_positions(const Signature& sig);

/// Leftmost surviving + turns i into i+1; nullopt when none survives.
std::optional<CrystalTensor> apply_f(const CrystalTensor& ct, int i);

/// Rightmost surviving - turns i+1 into i; nullopt when none survives.
std::optional<CrystalTensor> apply_e(const CrystalTensor& ct, int i);

/// Single B^{k,l} element, through sp.
std::optional<Tableau> apply_f(const Tableau& t, int i);
std::optional<Tableau> apply_e(const Tableau& t, int i);

/// True iff apply_e kills ct for every listed index.
bool is_highest(const CrystalTensor& ct, std::span<const int> indices);

/// {1, ..., n-1} without k.
std::vector<int> indices_except(int n, int k);

/// Factors joined by " * " in tableau text form.
std::string to_string(const CrystalTensor& ct);
CrystalTensor parse_tensor(std::string_view text, int n);

}  // namespace boxball

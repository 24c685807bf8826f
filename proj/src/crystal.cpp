#include "boxball/crystal.hpp"

#include <stdexcept>

namespace boxball {

namespace {

struct Site {
  std::size_t factor;
  Cell cell;
};

// Cells in signature reading order.
std::vector<Site> reading_order(const CrystalTensor& ct) {
  std::vector<Site> sites;
  for (std::size_t f = 0; f < ct.size(); ++f) {
    const auto& t = ct[f];
    for (int c = t.width() - 1; c >= 0; --c) {
      for (int r = 0; r < t.num_rows() && c < static_cast<int>(t.rows()[r].size()); ++r)
        sites.push_back({f, {r, c}});
    }
  }
  return sites;
}

void check_index(const CrystalTensor& ct, int i) {
  if (i == 0) throw std::invalid_argument("e_0/f_0 are not supported");
  if (i < 1 || i >= ct.alphabet())
    throw std::invalid_argument("crystal index " + std::to_string(i) + " outside 1.." +
                                std::to_string(ct.alphabet() - 1));
}

CrystalTensor replace_letter(const CrystalTensor& ct, const Site& site, Letter value) {
  std::vector<Tableau> factors = ct.factors();
  auto rows = factors[site.factor].rows();
  rows[site.cell.row][site.cell.col] = value;
  factors[site.factor] = Tableau(std::move(rows), ct.alphabet());
  return CrystalTensor(std::move(factors), ct.alphabet());
}

}  // namespace

CrystalTensor::CrystalTensor(std::vector<Tableau> factors, int n) : factors_(std::move(factors)), n_(n) {
  for (const auto& f : factors_) {
    if (f.alphabet() != n_) throw std::invalid_argument("tensor factors must share the alphabet bound");
  }
}

int CrystalTensor::cell_count() const {
  int total = 0;
  for (const auto& f : factors_) total += f.size();
  return total;
}

CrystalTensor sp(const Tableau& t) {
  if (!t.is_rectangle()) throw std::invalid_argument("sp: tableau is not rectangular");
  std::vector<Tableau> cols;
  for (int c = t.width() - 1; c >= 0; --c) cols.push_back(t.column_at(c));
  return CrystalTensor(std::move(cols), t.alphabet());
}

Tableau sp_inverse(const CrystalTensor& columns) {
  std::vector<Tableau> cols(columns.factors().rbegin(), columns.factors().rend());
  return Tableau::from_columns(cols, columns.alphabet());
}

Signature signature(const CrystalTensor& ct, int i) {
  check_index(ct, i);
  Signature sig;
  for (const auto& site : reading_order(ct)) {
    const Letter a = ct[site.factor].at(site.cell);
    sig.push_back(a == i ? Sign::plus : a == i + 1 ? Sign::minus : Sign::zero);
  }
  return sig;
}

std::vector<std::size_t> reduced_positions(const Signature& sig) {
  // Unmatched minuses stay at the front of `kept`; pluses wait on top.
  std::vector<std::size_t> kept;
  std::size_t open_plus = 0;
  for (std::size_t p = 0; p < sig.size(); ++p) {
    if (sig[p] == Sign::plus) {
      kept.push_back(p);
      ++open_plus;
    } else if (sig[p] == Sign::minus) {
      if (open_plus > 0) {
        kept.pop_back();
        --open_plus;
      } else {
        kept.push_back(p);
      }
    }
  }
  return kept;
}

std::optional<CrystalTensor> apply_f(const CrystalTensor& ct, int i) {
  const auto sig = signature(ct, i);
  for (std::size_t p : reduced_positions(sig)) {
    if (sig[p] == Sign::plus) return replace_letter(ct, reading_order(ct)[p], i + 1);
  }
  return std::nullopt;
}

std::optional<CrystalTensor> apply_e(const CrystalTensor& ct, int i) {
  const auto sig = signature(ct, i);
  const auto kept = reduced_positions(sig);
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
    if (sig[*it] == Sign::minus) return replace_letter(ct, reading_order(ct)[*it], i);
  }
  return std::nullopt;
}

std::optional<Tableau> apply_f(const Tableau& t, int i) {
  auto image = apply_f(sp(t), i);
  if (!image) return std::nullopt;
  return sp_inverse(*image);
}

std::optional<Tableau> apply_e(const Tableau& t, int i) {
  auto image = apply_e(sp(t), i);
  if (!image) return std::nullopt;
  return sp_inverse(*image);
}

bool is_highest(const CrystalTensor& ct, std::span<const int> indices) {
  for (int i : indices) {
    if (apply_e(ct, i)) return false;
  }
  return true;
}

std::vector<int> indices_except(int n, int k) {
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    if (i != k) out.push_back(i);
  }
  return out;
}

std::string to_string(const CrystalTensor& ct) {
  std::string out;
  for (std::size_t f = 0; f < ct.size(); ++f) {
    if (f > 0) out += " * ";
    out += to_string(ct[f]);
  }
  return out;
}

CrystalTensor parse_tensor(std::string_view text, int n) {
  std::vector<Tableau> factors;
  std::size_t start = 0;
  while (true) {
    const auto star = text.find('*', start);
    factors.push_back(parse_tableau(text.substr(start, star == std::string_view::npos ? text.size() - start : star - start), n));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return CrystalTensor(std::move(factors), n);
}

}  // namespace boxball

#include <doctest.h>

#include "boxball/insertion.hpp"
#include "boxball/random.hpp"
#include "boxball/rmatrix.hpp"
#include "support.hpp"

using namespace boxball;
using testing::tab;

namespace {

std::vector<std::vector<Tableau>> small_crystals(int n) {
  std::vector<std::vector<Tableau>> out;
  for (int k = 1; k <= std::min(2, n - 1); ++k)
    for (int l = 1; l <= 2; ++l) out.push_back(enumerate_tableaux(Shape::rectangle(k, l), n));
  return out;
}

// Calls f(x, y, n) on every pair from the small crystals with n <= 4.
template <class F>
void for_small_pairs(F f) {
  for (int n = 2; n <= 4; ++n) {
    const auto crystals = small_crystals(n);
    for (const auto& xs : crystals)
      for (const auto& ys : crystals)
        for (const auto& x : xs)
          for (const auto& y : ys) f(x, y, n);
  }
}

}  // namespace

TEST_CASE("worked R and H") {
  const Tableau x = tab("1 2 4 / 2 3 5 / 4 4 6", 6);
  const Tableau y = tab("2/5", 6);
  const RResult r = apply_R(x, y);
  CHECK(r.left_out == tab("2/4", 6));
  CHECK(r.right_out == tab("1 2 3 / 2 4 5 / 4 5 6", 6));
  CHECK(r.energy == -1);
  CHECK(energy_H(x, y) == -1);
  CHECK(oracle_R(x, y) == r);
}

TEST_CASE("vacuum carrier passes the vacuum") {
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 4; ++l) {
      const int n = k + 2;
      const Tableau c = Tableau::vacuum_rectangle(k, l, n);
      const Tableau v = Tableau::vacuum_column(k, n);
      const RResult r = apply_R(c, v);
      CHECK(r.left_out == v);
      CHECK(r.right_out == c);
      CHECK(r.energy == 0);
    }
}

TEST_CASE("full R on the large pair") {
  const Tableau x = tab("1 1 1 1 2 / 2 2 3 3 3 / 4 4 4 5 5", 7);
  const Tableau y = tab("1 1 2 / 2 3 3 / 5 6 7", 7);
  const RResult r = apply_R(x, y);
  CHECK(r.left_out == tab("1 1 2 / 3 3 3 / 4 5 5", 7));
  CHECK(r.right_out == tab("1 1 1 1 2 / 2 2 2 4 4 / 3 3 5 6 7", 7));
}

TEST_CASE("single-row R matches the symmetric-tensor example") {
  const RResult r = apply_R(tab("1 1 1", 3), tab("3", 3));
  CHECK(r.left_out == tab("1", 3));
  CHECK(r.right_out == tab("1 1 3", 3));
}

TEST_CASE("zero-row factors are trivial") {
  const Tableau e = Tableau::empty(4);
  const Tableau y = tab("1 3", 4);
  const RResult r = apply_R(e, y);
  CHECK(r.left_out == y);
  CHECK(r.right_out.empty());
  CHECK(r.energy == 0);
  CHECK(apply_R(e, e).energy == 0);
  CHECK(energy_H(y, e) == 0);
}

TEST_CASE("apply_R equals the oracle exhaustively") {
  int pairs = 0;
  for_small_pairs([&](const Tableau& x, const Tableau& y, int) {
    CHECK(apply_R(x, y) == oracle_R(x, y));
    ++pairs;
  });
  MESSAGE(pairs << " pairs compared");
}

TEST_CASE("R invariants exhaustively") {
  for_small_pairs([](const Tableau& x, const Tableau& y, int n) {
    const RResult r = apply_R(x, y);
    // Shapes swap and letters are conserved.
    CHECK(r.left_out.shape() == y.shape());
    CHECK(r.right_out.shape() == x.shape());
    CHECK(content(x) + content(y) == content(r.left_out) + content(r.right_out));
    CHECK(insert_word(y, row_word(x)) == insert_word(r.right_out, row_word(r.left_out)));
    // Involution.
    const RResult back = apply_R(r.left_out, r.right_out);
    CHECK(back.left_out == x);
    CHECK(back.right_out == y);
    // Normalization: H <= 0 when the heights agree.
    if (x.num_rows() == y.num_rows()) CHECK(r.energy <= 0);
    // Equivariance, and H is constant on classical components.
    const CrystalTensor in({x, y}, n);
    const CrystalTensor image({r.left_out, r.right_out}, n);
    auto compare = [&](const std::optional<CrystalTensor>& moved, const std::optional<CrystalTensor>& expect) {
      CHECK(moved.has_value() == expect.has_value());
      if (!moved || !expect) return;
      const RResult rm = apply_R((*moved)[0], (*moved)[1]);
      CHECK(CrystalTensor({rm.left_out, rm.right_out}, n) == *expect);
      CHECK(rm.energy == r.energy);
    };
    for (int i = 1; i < n; ++i) {
      compare(apply_e(in, i), apply_e(image, i));
      compare(apply_f(in, i), apply_f(image, i));
    }
  });
}

TEST_CASE("energy against the oracle's insertion shape") {
  // H recomputed from scratch: cells east of column max(l, l').
  for_small_pairs([](const Tableau& x, const Tableau& y, int) {
    const Tableau p = insert_word(y, row_word(x));
    const int cut = std::max(x.width(), y.width());
    int east = 0;
    for (const auto& row : p.rows()) east += std::max(0, static_cast<int>(row.size()) - cut);
    const int expected = east - std::min(x.num_rows(), y.num_rows()) * std::min(x.width(), y.width());
    CHECK(energy_H(x, y) == expected);
  });
}

TEST_CASE("Yang-Baxter on random triples") {
  Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rng.uniform(2, 4);
    std::array<Tableau, 3> f;
    for (auto& t : f) t = random_tableau(rng, Shape::rectangle(rng.uniform(1, std::min(2, n - 1)), rng.uniform(1, 3)), n);
    CHECK(check_yang_baxter(f[0], f[1], f[2]));
  }
  const int n = 6;
  const Tableau v = Tableau::vacuum_rectangle(2, 2, n);
  CHECK(check_yang_baxter(v, Tableau::vacuum_rectangle(2, 3, n), Tableau::vacuum_rectangle(2, 1, n)));
}

TEST_CASE("Yang-Baxter on the three-soliton internals") {
  const int n = 6;
  CHECK(check_yang_baxter(tab("2 2 2 / 3 3 3 / 4 4 5", n), tab("1 2 / 2 3 / 4 6", n), tab("1 / 3 / 5", n)));
}

TEST_CASE("non-rectangular input is rejected") {
  CHECK_THROWS_AS(apply_R(tab("1 1 / 2", 3), tab("1", 3)), std::invalid_argument);
}

#include <doctest.h>

#include <set>

#include "boxball/random.hpp"
#include "support.hpp"

using namespace boxball;
using testing::tab;

TEST_CASE("row word reads bottom row first") {
  CHECK(row_word(tab("1 2 4 / 2 3 5 / 4 4 6", 6)) == Word{4, 4, 6, 2, 3, 5, 1, 2, 4});
  CHECK(row_word(tab("1", 1)) == Word{1});
  CHECK(row_word(Tableau::vacuum_rectangle(2, 3, 4)) == Word{2, 2, 2, 1, 1, 1});
  CHECK(row_word(Tableau::empty(3)).empty());
}

TEST_CASE("content") {
  CHECK(content(tab("2/5", 5)) == Content{{2, 1}, {5, 1}});
  const Tableau t = tab("1 1 2 / 2 3 3", 3);
  CHECK(content(row_word(t)) == content(t));

  const Content left = content(tab("1 1 1 1 2 / 2 2 3 3 3 / 4 4 4 5 5", 7)) + content(tab("1 1 2 / 2 3 3 / 5 6 7", 7));
  const Content right = content(tab("1 1 2 / 3 3 3 / 4 5 5", 7)) + content(tab("1 1 1 1 2 / 2 2 2 4 4 / 3 3 5 6 7", 7));
  CHECK(left == right);
}

TEST_CASE("restrict keeps an ordered subsequence") {
  const Word w{4, 4, 6, 2, 3, 5, 1, 2, 4};
  CHECK(restrict_letters(w, 1, 2) == Word{2, 1, 2});
  CHECK(restrict_letters(w, 1, 6) == w);
  CHECK(restrict_letters(Word{}, 1, 3).empty());
}

TEST_CASE("restrict splits content") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 6);
    Word w(static_cast<std::size_t>(rng.uniform(0, 12)));
    for (auto& a : w) a = rng.uniform(1, n);
    const int a = rng.uniform(1, n);
    const int b = rng.uniform(a, n);
    const Content inside = content(restrict_letters(w, a, b));
    const Content outside = content(restrict_letters(w, 1, a - 1)) + content(restrict_letters(w, b + 1, n));
    CHECK(inside + outside == content(w));
  }
}

TEST_CASE("validation names the broken invariant") {
  CHECK_THROWS_AS(tab("2 1", 3), std::invalid_argument);
  CHECK_THROWS_AS(tab("1 2 / 1 3", 3), std::invalid_argument);
  CHECK_THROWS_AS(tab("1 4", 3), std::invalid_argument);
  CHECK_THROWS_AS(tab("1 / 2 3", 3), std::invalid_argument);
  CHECK(Tableau::violation({{2, 1}}, 3).has_value());
  CHECK_FALSE(Tableau::violation({{1, 1, 2}, {2, 3}}, 3).has_value());
}

TEST_CASE("mutating one cell of a random tableau is usually detected") {
  Rng rng(11);
  int mutated = 0, detected = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform(2, 6);
    const int k = rng.uniform(1, n - 1);
    const Tableau t = random_tableau(rng, Shape::rectangle(k, rng.uniform(1, 4)), n);
    CHECK_FALSE(Tableau::violation(t.rows(), n).has_value());
    auto rows = t.rows();
    const int r = rng.uniform(0, t.num_rows() - 1);
    const int c = rng.uniform(0, t.width() - 1);
    const Letter old = rows[r][c];
    rows[r][c] = rng.uniform(0, n + 1);
    if (rows[r][c] == old) continue;
    ++mutated;
    if (Tableau::violation(rows, n)) ++detected;
  }
  // Only mutations that happen to stay monotone slip through.
  CHECK(mutated > 350);
  CHECK(detected * 4 > mutated * 3);
  MESSAGE("detected " << detected << " of " << mutated << " single-cell mutations");
}

TEST_CASE("row word is injective on a fixed shape") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) {
        std::set<Word> words;
        const auto all = enumerate_tableaux(Shape::rectangle(k, l), n);
        for (const auto& t : all) words.insert(row_word(t));
        CHECK(words.size() == all.size());
      }
}

TEST_CASE("enumeration counts") {
  // Semi-standard tableaux of shape (2,1) over 3 letters: 8.
  CHECK(enumerate_tableaux(Shape({2, 1}), 3).size() == 8);
  // Single columns of height k over n letters: n choose k.
  CHECK(enumerate_tableaux(Shape::rectangle(2, 1), 5).size() == 10);
  // Rectangles (2,2) over 3 letters: 6.
  CHECK(enumerate_tableaux(Shape::rectangle(2, 2), 3).size() == 6);
  CHECK(enumerate_tableaux(Shape::rectangle(3, 1), 2).empty());
}

TEST_CASE("shape corners") {
  const Shape s({4, 3, 3, 1});
  CHECK(s.corners() == std::vector<Cell>{{0, 3}, {2, 2}, {3, 0}});
  CHECK(s.is_corner({2, 2}));
  CHECK_FALSE(s.is_corner({1, 2}));
  CHECK(Shape::rectangle(0, 3).empty());
  CHECK(Shape::rectangle(2, 3).is_rectangle());
  CHECK_THROWS_AS(Shape({1, 2}), std::invalid_argument);
}

TEST_CASE("text forms round trip") {
  for (const char* text : {"1 2 4 / 2 3 5 / 4 4 6", "1 1 2 / 2 3", "5", "-"}) {
    CHECK(to_string(tab(text, 6)) == text);
  }
  const Tableau col = tab("2/3/5", 6);
  CHECK(col == tab("2 / 3 / 5", 6));
  CHECK(to_column_string(col) == "2/3/5");
  CHECK(to_string(col) == "2 / 3 / 5");

  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(2, 12);
    const Tableau t = random_tableau(rng, Shape::rectangle(rng.uniform(1, std::min(4, n)), rng.uniform(1, 4)), n);
    CHECK(parse_tableau(to_string(t), n) == t);
  }
  CHECK_THROWS_AS(tab("1 x", 3), std::invalid_argument);
  CHECK_THROWS_AS(tab("", 3), std::invalid_argument);
}

TEST_CASE("stack and slice") {
  const Tableau t = tab("1 2 2 / 2 3 3 / 4 4 5", 5);
  CHECK(row_slice(t, 0, 2) == tab("1 2 2 / 2 3 3", 5));
  CHECK(row_slice(t, 2, 1) == tab("4 4 5", 5));
  CHECK(row_slice(t, 1, 0).empty());
  CHECK(stack(row_slice(t, 0, 2), row_slice(t, 2, 1)) == t);
  CHECK(stack(Tableau::empty(5), t) == t);
}

#include <doctest.h>

#include "boxball/insertion.hpp"
#include "boxball/random.hpp"
#include "boxball/rmatrix.hpp"
#include "support.hpp"

using namespace boxball;
using testing::state;
using testing::tab;

namespace {

std::vector<std::string> column_strings(const std::vector<Tableau>& cols) {
  std::vector<std::string> out;
  for (const auto& c : cols) out.push_back(to_column_string(c));
  return out;
}

std::vector<std::string> row_strings(const std::vector<Tableau>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) {
    std::string s;
    for (const auto& row : t.rows()) {
      if (!s.empty()) s += '/';
      for (Letter a : row) s += std::to_string(a);
    }
    out.push_back(s);
  }
  return out;
}

// E_l by sweeping c_l across a generously padded window with the
// brute-force R, and H counted directly from the insertion shape.
int reference_energy(const BbsState& p, int l) {
  const int n = p.alphabet(), k = p.k();
  Tableau carrier = Tableau::vacuum_rectangle(k, l, n);
  int total = 0;
  const Position pad = static_cast<Position>(k + 1) * (l + 1) * n + 5;
  for (Position pos = p.offset() - 3; pos < p.end() + pad; ++pos) {
    const Tableau b = p.at(pos);
    const Tableau product = insert_word(b, row_word(carrier));
    int east = 0;
    for (const auto& row : product.rows()) east += std::max(0, static_cast<int>(row.size()) - l);
    total -= east - k;
    carrier = oracle_R(carrier, b).right_out;
  }
  return total;
}

}  // namespace

TEST_CASE("single-row carrier sweep") {
  const auto ev = evolve(state("3 3 2", 3, 1), 3);
  CHECK(row_strings(ev.trace.carriers) == std::vector<std::string>{"111", "113", "133", "233", "123", "112", "111"});
  CHECK(column_strings(ev.trace.outputs) == std::vector<std::string>{"1", "1", "1", "3", "3", "2"});
  CHECK(ev.state == state("3 3 2", 3, 1, 3));
}

TEST_CASE("two-row carrier sweep") {
  const auto ev = evolve(state("2/4 2/4 1/3", 4, 2), 3);
  CHECK(row_strings(ev.trace.carriers) ==
        std::vector<std::string>{"111/222", "112/224", "122/244", "122/344", "112/234", "111/223", "111/222"});
  CHECK(column_strings(ev.trace.outputs) == std::vector<std::string>{"1/2", "1/2", "1/2", "2/4", "2/4", "1/3"});
  CHECK(ev.state == state("2/4 2/4 1/3", 4, 2, 3));
}

TEST_CASE("three-soliton trajectory") {
  const int n = 6, k = 3;
  BbsState p = state("2/3/5 2/3/4 2/3/4 . . . 2/3/6 1/2/4 . . . 1/3/5", n, k);
  const std::vector<std::pair<Position, std::string>> expected{
      {3, "2/3/5 2/3/4 2/3/4 . . 2/3/6 1/2/4 . . 1/3/5"},
      {6, "2/3/5 2/3/4 2/3/4 . 2/3/6 1/2/4 . 1/3/5"},
      {9, "2/3/5 2/3/4 . 2/3/6 2/3/4 1/4/5"},
      {11, "2/3/5 2/3/4 . . 2/4/6 2/3/5 1/3/4"},
      {13, "2/3/5 2/3/4 . 1/2/4 . 2/3/6 2/3/5 1/3/4"},
      {15, "2/3/5 . 2/3/4 1/2/4 . . 2/3/6 2/3/5 1/3/4"},
  };
  for (const auto& [prefix, columns] : expected) {
    p = evolve(p, 3).state;
    CHECK(p == state(columns, n, k, prefix));
  }
}

TEST_CASE("vacuum stays vacuum") {
  const BbsState v(5, 2);
  for (int l = 1; l <= 4; ++l) {
    const auto ev = evolve(v, l);
    CHECK(ev.state.is_vacuum());
    CHECK(energy_E(v, l) == 0);
  }
  CHECK(spectrum_N(v).empty());
  CHECK(p_tableaux(v, 2).high.empty());
}

TEST_CASE("spectra of the composite states") {
  const auto a = state("2/4 1/6", 6, 2);
  const auto b = state("2/4 3/5 2/5", 6, 2);
  const auto c = state("2/4 1/3 2/4 3/5 2/5", 6, 2);
  CHECK(spectrum_N(a) == std::map<int, int>{{1, 2}});
  CHECK(spectrum_N(b) == std::map<int, int>{{2, 2}});
  CHECK(spectrum_N(c) == std::map<int, int>{{2, 3}});

  CHECK(energy_E(b, 1) == 2);
  for (int l = 2; l <= 5; ++l) CHECK(energy_E(b, l) == 4);
  for (const auto& p : {a, b, c})
    for (int l = 1; l <= 4; ++l) CHECK(energy_E(p, l) == reference_energy(p, l));
}

TEST_CASE("energy matches the reference sweep on random states") {
  Rng rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform(2, 4);
    const int k = rng.uniform(1, std::min(2, n - 1));
    const BbsState p = random_state(rng, n, k, 6);
    const int l = rng.uniform(1, 3);
    CHECK(energy_E(p, l) == reference_energy(p, l));
  }
}

TEST_CASE("high conserved tableau of a composite state") {
  // Letters above 2 of row(b_3) row(b_2) row(b_1) are 5 5 3 4, already the
  // row word of 3 4 / 5 5.
  const auto b = state("2/4 3/5 2/5", 6, 2);
  CHECK(p_tableaux(b, 2).high == tab("3 4 / 5 5", 6));
  CHECK(testing::knuth_class(Word{5, 5, 3, 4}).count(row_word(tab("3 4 / 5 5", 6))) == 1);
}

TEST_CASE("cross-step identity on the three-soliton trajectory") {
  BbsState p = state("2/3/5 2/3/4 2/3/4 . . . 2/3/6 1/2/4 . . . 1/3/5", 6, 3);
  for (int t = 0; t < 6; ++t) {
    const CrossStep cs = cross_step(p, 3);
    CHECK(cs.holds());
    p = evolve(p, 3).state;
  }
}

TEST_CASE("random-state invariants") {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rng.uniform(2, 5);
    const int k = rng.uniform(1, std::min(3, n - 1));
    const BbsState p = random_state(rng, n, k, 10);
    const int l = rng.uniform(1, 4);
    const int l2 = rng.uniform(1, 4);
    const BbsState moved = evolve(p, l2).state;

    CHECK(energy_E(moved, l) == energy_E(p, l));
    CHECK(evolve(moved, l).state == evolve(evolve(p, l).state, l2).state);
    CHECK(spectrum_N(moved) == spectrum_N(p));
    CHECK(cross_step(p, l).holds());
    const Window w{std::min(p.offset(), moved.offset()) - l, std::max(p.end(), moved.end()) + l};
    CHECK(p_tableaux(p, l2, w).high == p_tableaux(moved, l2, w).high);

    for (int i : indices_except(n, k)) {
      if (const auto f = apply_f(p, i)) {
        const auto g = apply_f(evolve(p, l).state, i);
        REQUIRE(g);
        CHECK(evolve(*f, l).state == *g);
      } else {
        CHECK_FALSE(apply_f(evolve(p, l).state, i));
      }
      if (const auto e = apply_e(p, i)) {
        const auto g = apply_e(evolve(p, l).state, i);
        REQUIRE(g);
        CHECK(evolve(*e, l).state == *g);
      } else {
        CHECK_FALSE(apply_e(evolve(p, l).state, i));
      }
    }
  }
}

TEST_CASE("carrier rests at both ends of every sweep") {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(2, 6);
    const int k = rng.uniform(1, n - 1);
    const BbsState p = random_state(rng, n, k, 12);
    const int l = rng.uniform(1, 5);
    const auto ev = evolve(p, l);
    const Tableau rest = Tableau::vacuum_rectangle(k, l, n);
    CHECK(ev.trace.carriers.front() == rest);
    CHECK(ev.trace.carriers.back() == rest);
    CHECK(ev.trace.end() <= p.end() + static_cast<Position>(k) * static_cast<Position>(p.columns().size()) + l);
  }
}

TEST_CASE("canonical form trims vacuum") {
  const auto p = state(". . 2/4 . 1/3 .", 4, 2, 5);
  CHECK(p.offset() == 7);
  CHECK(p.columns().size() == 3);
  CHECK(state(". .", 4, 2, 5) == BbsState(4, 2));
}

TEST_CASE("state file round trip") {
  const std::string text = "n=6 k=3 offset=-4\n2/3/5 2/3/4 . 1/2/4\n";
  const BbsState p = parse_state(text);
  CHECK(p.offset() == -4);
  CHECK(format_state(p) == text);
  CHECK(format_columns(p, -6) == ". . 2/3/5 2/3/4 . 1/2/4");

  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(2, 12);
    const BbsState q = random_state(rng, n, rng.uniform(1, n - 1), 8);
    CHECK(parse_state(format_state(q)) == q);
  }
}

TEST_CASE("parse errors carry a location") {
  auto fails_at = [](const std::string& text, int line) {
    try {
      parse_state(text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      return true;
    }
    return false;
  };
  CHECK(fails_at("n=4 k=2\n1/2\n", 1));
  CHECK(fails_at("n=4 k=2 offset=0\n1/2 3/2\n", 2));
  CHECK(fails_at("n=4 k=2 offset=0\n1/2 1/2/3\n", 2));
  CHECK(fails_at("n=4 k=2 offset=0\n1/5\n", 2));
  CHECK(fails_at("n=4 k=5 offset=0\n\n", 1));
  CHECK(parse_state(format_state(BbsState(4, 2))) == BbsState(4, 2));
  try {
    parse_state("n=4 k=2 offset=0\n1/2 1/x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column == 5);
  }
}

#include "boxball/checks.hpp"

#include <functional>
#include <sstream>

#include "boxball/box_ball.hpp"
#include "boxball/insertion.hpp"
#include "boxball/random.hpp"
#include "boxball/rmatrix.hpp"

namespace boxball {

std::optional<Invariant> parse_invariant(std::string_view name) {
  if (name == "energy") return Invariant::energy;
  if (name == "commute") return Invariant::commute;
  if (name == "yang-baxter") return Invariant::yang_baxter;
  if (name == "r-oracle") return Invariant::r_oracle;
  if (name == "knuth") return Invariant::knuth;
  return std::nullopt;
}

std::string_view invariant_name(Invariant inv) {
  switch (inv) {
    case Invariant::energy: return "energy";
    case Invariant::commute: return "commute";
    case Invariant::yang_baxter: return "yang-baxter";
    case Invariant::r_oracle: return "r-oracle";
    case Invariant::knuth: return "knuth";
  }
  return "?";
}

namespace {

// Adds an isolated length-one soliton far to the right of everything the
// carrier can touch.
BbsState corrupt(const BbsState& p, int l) {
  const int n = p.alphabet();
  const int k = p.k();
  std::vector<Letter> entries;
  for (int r = 1; r < k; ++r) entries.push_back(r);
  entries.push_back(k + 1);
  const Position far = p.end() + static_cast<Position>(k + 1) * (l + 1) * n + 1;
  auto cols = p.window(p.offset(), far);
  cols.push_back(Tableau::column(entries, n));
  return BbsState(n, k, p.offset(), std::move(cols));
}

// Some other tableau of the same shape.
Tableau corrupt(const Tableau& t) {
  for (auto& other : enumerate_tableaux(t.shape(), t.alphabet())) {
    if (other != t) return other;
  }
  return t;
}

using StatePredicate = std::function<std::optional<std::string>(const BbsState&)>;

// Drops columns one at a time while the failure persists.
BbsState shrink(BbsState p, const StatePredicate& fails) {
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t j = 0; j < p.columns().size(); ++j) {
      auto cols = p.columns();
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
      BbsState smaller(p.alphabet(), p.k(), p.offset(), std::move(cols));
      if (fails(smaller)) {
        p = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return p;
}

struct StateTrial {
  BbsState state;
  int l;
  int l2;
};

StateTrial draw_state_trial(Rng& rng) {
  const int n = rng.uniform(2, 5);
  const int k = rng.uniform(1, std::min(3, n - 1));
  BbsState p = random_state(rng, n, k, 10);
  const int l = rng.uniform(1, 4);
  const int l2 = rng.uniform(1, 4);
  return {std::move(p), l, l2};
}

void run_state_campaign(const CheckOptions& opt, CheckReport& report,
                        const std::function<std::optional<std::string>(const BbsState&, int, int)>& violation) {
  Rng rng(opt.seed);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const auto t = draw_state_trial(rng);
    ++report.instances;
    const auto why = violation(t.state, t.l, t.l2);
    if (!why) continue;
    const BbsState small =
        shrink(t.state, [&](const BbsState& q) { return violation(q, t.l, t.l2); });
    std::ostringstream os;
    os << format_state(small) << "l=" << t.l << " l'=" << t.l2 << '\n';
    report.failures.push_back({trial, *why, os.str()});
  }
}

std::vector<Word> knuth_neighbours(const Word& w) {
  std::vector<Word> out;
  auto swapped = [&](std::size_t i, std::size_t j) {
    Word v = w;
    std::swap(v[i], v[j]);
    out.push_back(std::move(v));
  };
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const Letter a = w[i], b = w[i + 1], c = w[i + 2];
    // y x z <-> y z x  when x < y <= z
    if ((b < a && a <= c) || (c < a && a <= b)) swapped(i + 1, i + 2);
    // x z y <-> z x y  when x <= y < z
    if ((a <= c && c < b) || (b <= c && c < a)) swapped(i, i + 1);
  }
  return out;
}

void check_energy(const CheckOptions& opt, CheckReport& report) {
  run_state_campaign(opt, report, [&](const BbsState& p, int l, int l2) -> std::optional<std::string> {
    BbsState moved = evolve(p, l2).state;
    if (opt.inject_fault) moved = corrupt(moved, l);
    const int before = energy_E(p, l);
    const int after = energy_E(moved, l);
    if (before == after) return std::nullopt;
    return "E_" + std::to_string(l) + " changed from " + std::to_string(before) + " to " + std::to_string(after) +
           " under T_" + std::to_string(l2);
  });
}

void check_commute(const CheckOptions& opt, CheckReport& report) {
  run_state_campaign(opt, report, [&](const BbsState& p, int l, int l2) -> std::optional<std::string> {
    BbsState a = evolve(evolve(p, l2).state, l).state;
    const BbsState b = evolve(evolve(p, l).state, l2).state;
    if (opt.inject_fault) a = corrupt(a, l);
    if (a == b) return std::nullopt;
    return "T_" + std::to_string(l) + " T_" + std::to_string(l2) + " differs from the reverse order";
  });
}

void check_knuth(const CheckOptions& opt, CheckReport& report) {
  run_state_campaign(opt, report, [&](const BbsState& p, int l, int) -> std::optional<std::string> {
    const Window w = conserved_window(p, l);
    BbsState next = evolve(p, l).state;
    if (opt.inject_fault) next = corrupt(next, l);
    const Word carrier = row_word(Tableau::vacuum_rectangle(p.k(), l, p.alphabet()));
    Word before = state_word(p, w);
    before.insert(before.end(), carrier.begin(), carrier.end());
    Word after = carrier;
    const Word moved = state_word(next, Window{w.begin, std::max(w.end, next.end())});
    after.insert(after.end(), moved.begin(), moved.end());
    if (!knuth_equivalent(before, after)) return "row words before and after T_" + std::to_string(l) + " are not Knuth equivalent";
    const int n = p.alphabet(), k = p.k();
    if (rectify(restrict_letters(before, 1, k), n) != rectify(restrict_letters(after, 1, k), n))
      return "P_{<=k} identity fails";
    if (rectify(restrict_letters(before, k + 1, n), n) != rectify(restrict_letters(after, k + 1, n), n))
      return "P_{>k} identity fails";
    return std::nullopt;
  });

  // Elementary Knuth moves never change the rectification.
  Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int n = rng.uniform(2, 5);
    Word w(static_cast<std::size_t>(rng.uniform(0, 8)));
    for (auto& a : w) a = rng.uniform(1, n);
    Word moved = w;
    for (int step = rng.uniform(0, 12); step > 0; --step) {
      const auto options = knuth_neighbours(moved);
      if (options.empty()) break;
      moved = options[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(options.size()) - 1))];
    }
    Tableau lhs = rectify(w, n);
    if (opt.inject_fault && !lhs.empty()) lhs = corrupt(lhs);
    ++report.instances;
    if (lhs != rectify(moved, n))
      report.failures.push_back({trial, "Knuth-equivalent words rectify differently",
                                 "words: " + to_string(w) + " | " + to_string(moved) + "\n"});
  }
}

void check_yang_baxter(const CheckOptions& opt, CheckReport& report) {
  Rng rng(opt.seed);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int n = rng.uniform(2, 4);
    std::array<Tableau, 3> f;
    for (auto& t : f) t = random_tableau(rng, Shape::rectangle(rng.uniform(1, std::min(2, n - 1)), rng.uniform(1, 3)), n);
    ++report.instances;
    auto lhs = yang_baxter_left(f[0], f[1], f[2]);
    if (opt.inject_fault) lhs[0] = corrupt(lhs[0]);
    if (lhs == yang_baxter_right(f[0], f[1], f[2])) continue;
    report.failures.push_back({trial, "(R*1)(1*R)(R*1) != (1*R)(R*1)(1*R)",
                               "n=" + std::to_string(n) + " " + to_string(CrystalTensor({f[0], f[1], f[2]}, n)) + "\n"});
  }
}

void check_r_oracle(const CheckOptions& opt, CheckReport& report) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::vector<Tableau>> crystals;
    for (int k = 1; k <= std::min(2, n - 1); ++k)
      for (int l = 1; l <= 2; ++l) crystals.push_back(enumerate_tableaux(Shape::rectangle(k, l), n));
    for (const auto& xs : crystals)
      for (const auto& ys : crystals)
        for (const auto& x : xs)
          for (const auto& y : ys) {
            const int trial = report.instances++;
            auto fast = apply_R(x, y);
            if (opt.inject_fault) fast.left_out = corrupt(fast.left_out);
            if (fast == oracle_R(x, y)) continue;
            report.failures.push_back({trial, "apply_R disagrees with the brute-force oracle",
                                       "n=" + std::to_string(n) + " " + to_string(x) + " * " + to_string(y) + "\n"});
          }
  }
}

}  // namespace

CheckReport run_check(const CheckOptions& options) {
  CheckReport report;
  report.invariant = options.invariant;
  switch (options.invariant) {
    case Invariant::energy: check_energy(options, report); break;
    case Invariant::commute: check_commute(options, report); break;
    case Invariant::yang_baxter: check_yang_baxter(options, report); break;
    case Invariant::r_oracle: check_r_oracle(options, report); break;
    case Invariant::knuth: check_knuth(options, report); break;
  }
  return report;
}

}  // namespace boxball

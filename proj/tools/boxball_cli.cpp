// boxball: command-line front end for the box-ball system library.
//
//   boxball evolve   --input state.txt --l 3 --steps 6 [--render]
//   boxball energy   --input state.txt --l 2
//   boxball spectrum --input state.txt
//   boxball scatter  --input state.txt --l 3 [--steps 1000]
//   boxball rmatrix  --left "1 2 4 / 2 3 5 / 4 4 6" --right "2/5"
//   boxball check    --invariant energy --trials 100 --seed 42 [--inject-fault]
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "boxball/box_ball.hpp"
#include "boxball/checks.hpp"
#include "boxball/rmatrix.hpp"
#include "boxball/soliton.hpp"

namespace {

using namespace boxball;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BbsState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_state(text.str());
}

std::string header(const BbsState& p, Position frame) {
  return "n=" + std::to_string(p.alphabet()) + " k=" + std::to_string(p.k()) + " offset=" + std::to_string(frame);
}

// One text line per tableau row; vacuum columns are dots.
void render(std::ostream& os, const std::vector<BbsState>& states, Position frame) {
  const int n = states.front().alphabet();
  const int k = states.front().k();
  const int width = static_cast<int>(std::to_string(n).size());
  Position end = frame;
  for (const auto& s : states) end = std::max(end, s.end());
  for (std::size_t t = 0; t < states.size(); ++t) {
    if (t > 0 && k > 1) os << '\n';
    for (int r = 0; r < k; ++r) {
      std::string line;
      for (Position pos = frame; pos < end; ++pos) {
        if (width > 1 && pos > frame) line += ' ';
        const Tableau col = states[t].at(pos);
        std::string cell = is_vacuum_column(col) ? "." : std::to_string(col.at(r, 0));
        line += std::string(static_cast<std::size_t>(width) - cell.size(), ' ') + cell;
      }
      os << line << '\n';
    }
  }
}

std::string zeta(const Soliton& s) {
  return "zeta^" + std::to_string(s.phase()) + "[" + to_string(s.internal()) + "]";
}

int cmd_evolve(const std::string& input, int l, int steps, bool draw) {
  std::vector<BbsState> states{load_state(input)};
  for (int t = 0; t < steps; ++t) states.push_back(evolve(states.back(), l).state);
  const Position frame = states.front().offset();
  std::cout << header(states.front(), frame) << '\n';
  for (const auto& s : states) std::cout << format_columns(s, frame) << '\n';
  if (draw) {
    std::cout << '\n';
    render(std::cout, states, frame);
  }
  return 0;
}

int cmd_energy(const std::string& input, int l) {
  const BbsState p = load_state(input);
  std::cout << "E_" << l << '=' << energy_E(p, l) << '\n';
  return 0;
}

int cmd_spectrum(const std::string& input) {
  const BbsState p = load_state(input);
  std::map<int, int> spectrum;
  try {
    spectrum = spectrum_N(p);
  } catch (const std::domain_error& e) {
    std::cout << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  const int top = spectrum.empty() ? 1 : spectrum.rbegin()->first + 1;
  for (int l = 1; l <= top; ++l) std::cout << "E_" << l << '=' << energy_E(p, l) << '\n';
  for (const auto& [d, count] : spectrum) std::cout << "N_" << d << '=' << count << '\n';
  return 0;
}

int cmd_scatter(const std::string& input, int l, int max_steps) {
  const BbsState p = load_state(input);
  const Detection initial = detect(p);
  if (!initial) {
    std::cout << "detection failed: " << initial.failure << '\n';
    return kExitFailure;
  }
  Experiment ex;
  try {
    ex = run_experiment(*initial.config, p.alphabet(), p.k(), l, max_steps, StopRule::when_sorted);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Position frame = p.offset();
  std::cout << header(p, frame) << '\n';
  for (const auto& obs : ex.observations) std::cout << format_columns(obs.state, frame) << '\n';

  std::cout << "initial:\n";
  const auto& start = ex.initial.solitons;
  for (std::size_t j = 0; j < start.size(); ++j)
    std::cout << "soliton " << j + 1 << ": phase=" << start[j].phase() << " d=" << start[j].length()
              << " internal=" << to_string(start[j].internal()) << '\n';
  std::cout << "collisions: " << ex.predicted.collisions.size() << '\n';
  for (std::size_t c = 0; c < ex.predicted.collisions.size(); ++c) {
    const auto& col = ex.predicted.collisions[c];
    std::cout << "collision " << c + 1 << ": d=" << col.longer << " d=" << col.shorter << " delta=" << col.delta
              << '\n';
  }

  const int last = ex.observations.back().time;
  std::cout << "final (t=" << last << "):\n";
  if (!ex.observed_final) {
    const auto& d = ex.observations.back().detection;
    std::cout << (d ? "scattering not finished within the step budget" : "no soliton decomposition: " + d.failure)
              << '\n'
              << "match=false\n";
    return kExitFailure;
  }
  const auto& observed = *ex.observed_final;
  const auto& predicted = ex.predicted.final;
  bool all = true;
  for (std::size_t j = 0; j < observed.size(); ++j) {
    const auto& o = observed[j];
    const auto& q = predicted[j];
    Position before = 0;
    for (const auto& s : start) {
      if (s.length() == q.length()) before = s.phase();
    }
    const bool match = o == q;
    all = all && match;
    std::cout << "soliton " << j + 1 << ": phase=" << o.phase() << " d=" << o.length()
              << " internal=" << to_string(o.internal()) << '\n'
              << "delta=" << q.phase() - before << " predicted=" << zeta(q) << " observed=" << zeta(o)
              << " match=" << (match ? "true" : "false") << '\n';
  }
  std::cout << "match=" << (all ? "true" : "false") << '\n';
  return all ? 0 : kExitFailure;
}

// Largest letter mentioned in a tableau text, so that --n can be omitted.
int largest_letter(std::string text) {
  for (char& c : text) {
    if (c == '/') c = ' ';
  }
  std::istringstream parts(text);
  std::string token;
  int best = 1;
  while (parts >> token) {
    if (token == "-") continue;
    try {
      best = std::max(best, std::stoi(token));
    } catch (const std::exception&) {
      throw UsageError("bad letter '" + token + "'");
    }
  }
  return best;
}

int cmd_rmatrix(const std::string& left, const std::string& right, int n) {
  if (n == 0) n = std::max(largest_letter(left), largest_letter(right));
  Tableau x, y;
  try {
    x = parse_tableau(left, n);
    y = parse_tableau(right, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const RResult r = apply_R(x, y);
  std::cout << "left_out=" << to_string(r.left_out) << '\n'
            << "right_out=" << to_string(r.right_out) << '\n'
            << "H=" << r.energy << '\n';
  return 0;
}

int cmd_check(const std::string& name, int trials, std::uint64_t seed, bool inject) {
  const auto invariant = parse_invariant(name);
  if (!invariant) throw UsageError("unknown invariant '" + name + "'");
  const CheckReport report = run_check({*invariant, seed, trials, inject});
  for (const auto& f : report.failures) {
    std::cout << "FAIL " << invariant_name(report.invariant) << " trial " << f.trial << ": " << f.detail << '\n'
              << f.instance;
  }
  std::cout << "check " << invariant_name(report.invariant) << ": "
            << report.instances - static_cast<int>(report.failures.size()) << '/' << report.instances
            << " passed (seed=" << seed << ")\n";
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Box-ball system on rectangular tableau crystals"};
  app.require_subcommand(1);

  std::string input, invariant = "energy", left, right;
  int l = 1, steps = 0, trials = 100, alphabet = 0;
  std::uint64_t seed = 42;
  bool draw = false, inject = false;

  auto positive = CLI::PositiveNumber;
  auto* evolve_cmd = app.add_subcommand("evolve", "apply T_l repeatedly and print every state");
  evolve_cmd->add_option("--input", input, "state file")->required()->check(CLI::ExistingFile);
  evolve_cmd->add_option("--l", l, "carrier width")->check(positive);
  evolve_cmd->add_option("--steps", steps, "number of time steps")->check(CLI::NonNegativeNumber);
  evolve_cmd->add_flag("--render", draw, "append a text diagram");

  auto* energy_cmd = app.add_subcommand("energy", "print E_l");
  energy_cmd->add_option("--input", input, "state file")->required()->check(CLI::ExistingFile);
  energy_cmd->add_option("--l", l, "carrier width")->check(positive);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "print E_l and the soliton-length spectrum N_d");
  spectrum_cmd->add_option("--input", input, "state file")->required()->check(CLI::ExistingFile);

  int budget = 1000;
  auto* scatter_cmd = app.add_subcommand("scatter", "evolve a soliton state and compare with predicted scattering");
  scatter_cmd->add_option("--input", input, "state file")->required()->check(CLI::ExistingFile);
  scatter_cmd->add_option("--l", l, "carrier width")->check(positive);
  scatter_cmd->add_option("--steps", budget, "step budget")->check(CLI::NonNegativeNumber);

  auto* rmatrix_cmd = app.add_subcommand("rmatrix", "combinatorial R and energy H of a tableau pair");
  rmatrix_cmd->add_option("--left", left, "x in B^{k,l}")->required();
  rmatrix_cmd->add_option("--right", right, "y in B^{k',l'}")->required();
  rmatrix_cmd->add_option("--n", alphabet, "alphabet size (default: largest letter)")->check(positive);

  auto* check_cmd = app.add_subcommand("check", "run a seeded invariant campaign");
  check_cmd->add_option("--invariant", invariant, "energy | commute | yang-baxter | r-oracle | knuth");
  check_cmd->add_option("--trials", trials, "number of random instances")->check(positive);
  check_cmd->add_option("--seed", seed, "generator seed");
  check_cmd->add_flag("--inject-fault", inject, "corrupt one side of each comparison (must fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (evolve_cmd->parsed()) return cmd_evolve(input, l, steps, draw);
    if (energy_cmd->parsed()) return cmd_energy(input, l);
    if (spectrum_cmd->parsed()) return cmd_spectrum(input);
    if (scatter_cmd->parsed()) return cmd_scatter(input, l, budget);
    if (rmatrix_cmd->parsed()) return cmd_rmatrix(left, right, alphabet);
    if (check_cmd->parsed()) return cmd_check(invariant, trials, seed, inject);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

#pragma once

// Solitons: detection in a state, the (internal tableau, phase) encoding,
// two-body scattering through R x R with phase shift delta, scattering
// experiments and the Yang-Baxter relation for the soliton map.

#include <optional>
#include <string>
#include <vector>

#include "boxball/box_ball.hpp"
#include "boxball/tableau.hpp"

namespace boxball {

/// zeta^phase u. The internal tableau u in B^{k,d} lists the soliton's
/// columns right to left, so u = [b_d, ..., b_2, b_1].
class Soliton {
 public:
  /// Throws std::invalid_argument unless every column has row k-1 <= k < row k.
  Soliton(Position phase, Tableau internal);

  Position phase() const { return phase_; }
  const Tableau& internal() const { return internal_; }
  int length() const { return internal_.width(); }
  int k() const { return internal_.num_rows(); }

  /// u_{<k}: rows 1..k-1, letters in 1..k (zero rows when k = 1).
  Tableau low() const;
  /// u_k: the bottom row, letters in k+1..n.
  Tableau high() const;

  Soliton with_phase(Position phase) const { return Soliton(phase, internal_); }

  bool operator==(const Soliton&) const = default;

 private:
  Position phase_;
  Tableau internal_;
};

/// internal = low stacked over high.
Soliton join(Position phase, const Tableau& low, const Tableau& high);

struct SolitonConfig {
  std::vector<Soliton> solitons;    // left to right
  std::vector<Position> positions;  // leftmost column of each soliton

  /// c_{j+1} - c_j - d_j between neighbours.
  std::vector<Position> gaps() const;
  /// Every gap is at least the length of the soliton to its right.
  bool well_separated() const;

  bool operator==(const SolitonConfig&) const = default;
};

/// Configuration at t = 0, where positions equal phases.
SolitonConfig make_config(std::vector<Soliton> solitons);

/// Reason a run b_1..b_d (left to right) is not a soliton, if any.
std::optional<std::string> soliton_violation(std::span<const Tableau> run, int k);

/// Throws std::invalid_argument for runs that are not solitons.
Soliton encode(std::span<const Tableau> run, Position phase);

/// b_1, ..., b_d in state order.
std::vector<Tableau> decode(const Soliton& s);

struct Detection {
  std::optional<SolitonConfig> config;
  std::string failure;  // set when config is empty
  Window failed_run;    // offending run of non-vacuum columns

  explicit operator bool() const { return config.has_value(); }
};

/// Splits the support into maximal non-vacuum runs and encodes each one.
/// Phases are positions, i.e. the t = 0 convention.
Detection detect(const BbsState& p);

/// Same, observed after t steps of T_l: phase = position - min(d, l) t.
Detection detect(const BbsState& p, int l, int t);

/// Lays the solitons down at their recorded positions.
BbsState build_state(const SolitonConfig& config, int n, int k);

struct TwoBody {
  Soliton left;   // zeta^{c2 - delta} v~
  Soliton right;  // zeta^{c1 + delta} u~
  int delta = 0;
};

/// zeta^{c1} u (x) zeta^{c2} v -> zeta^{c2-delta} v~ (x) zeta^{c1+delta} u~
/// with (v~_{<k} (x) u~_{<k}) = R(u_{<k} (x) v_{<k}),
///      (v~_k (x) u~_k)       = R(u_k (x) v_k) and
/// delta = 2 d_2 + H(u_k (x) v_k) + H(u_{<k} (x) v_{<k}).
/// Throws std::invalid_argument unless d_1 > d_2.
TwoBody predict_two_body(const Soliton& s1, const Soliton& s2);

struct Collision {
  std::size_t index;  // position of the left partner in the current order
  int longer;         // lengths of the partners
  int shorter;
  int delta;
};

struct ScatteringPrediction {
  std::vector<Soliton> final;  // ascending lengths, left to right
  std::vector<Collision> collisions;
};

/// Applies predict_two_body to adjacent out-of-order pairs until the
/// lengths ascend. Throws std::invalid_argument on repeated lengths.
ScatteringPrediction predict_scattering(const std::vector<Soliton>& solitons);

/// Compares (R~ (x) 1)(1 (x) R~)(R~ (x) 1) with (1 (x) R~)(R~ (x) 1)(1 (x) R~)
/// on s1 (x) s2 (x) s3, which must have strictly decreasing lengths.
bool check_rtilde_yb(const Soliton& s1, const Soliton& s2, const Soliton& s3);

enum class StopRule {
  fixed_steps,  // evolve exactly max_steps times
  when_sorted,  // stop once the solitons are detected in ascending order
};

struct Observation {
  int time = 0;
  BbsState state;
  Detection detection;
};

struct Experiment {
  int l = 1;
  SolitonConfig initial;
  std::vector<Observation> observations;  // t = 0, 1, ...
  ScatteringPrediction predicted;
  std::optional<std::vector<Soliton>> observed_final;

  bool matches() const { return observed_final && *observed_final == predicted.final; }
};

/// Evolves the configuration under T_l and detects solitons at every step.
/// Requires distinct lengths, a well-separated start, and l larger than
/// every length but the longest. Detection failures mid-collision are
/// recorded in the observations.
Experiment run_experiment(const SolitonConfig& config, int n, int k, int l, int max_steps,
                          StopRule stop = StopRule::when_sorted);

// Columns that are highest weight for sl_k x sl_{n-k}.
enum class Glyph { zero, one, two_plus, two_minus, three, four };

/// [0] = t[1..k-2, k-1, k], [1] = t[1..k-2, k-1, k+1],
/// [2+] = t[1..k-2, k, k+1], [2-] = t[1..k-2, k-1, k+2],
/// [3] = t[1..k-2, k, k+2], [4] = t[1..k-2, k+1, k+2].
/// For k = 1 only [0] = t[1] and [1] = t[2] exist.
Tableau glyph_column(Glyph g, int k, int n);

/// xi_i = [0^{l-i} 1^i] in B^{k,l}.
Tableau xi(int i, int l, int k, int n);

struct TwoSolitonParams {
  int n = 0;
  int k = 0;
  Position c1 = 0;
  int d1 = 0;
  Position c2 = 0;
  int d2 = 0;
  int alpha = 0;
  int beta = 0;
  bool plus = true;
};

/// [0]^{c1} [1]^{d1} [0]^{c2-c1-d1} [3]^alpha [2+-]^{d2-alpha-beta} [1]^beta.
/// Needs k >= 2, n >= k + 2, d1 > d2 and 0 <= alpha + beta <= d2.
BbsState highest_weight_two_soliton(const TwoSolitonParams& params);

/// Closed forms for H on the bottom rows and on the top k-1 rows of
/// [1^{d1}] (x) [1^beta 2+-^{d2-alpha-beta} 3^alpha].
struct SplitEnergies {
  int high;
  int low;
};
SplitEnergies two_soliton_energies(int d2, int alpha, int beta, bool plus);

}  // namespace boxball

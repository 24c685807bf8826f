#include "boxball/soliton.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "boxball/rmatrix.hpp"

namespace boxball {

// ---------------------------------------------------------------------------
// Soliton

Soliton::Soliton(Position phase, Tableau internal) : phase_(phase), internal_(std::move(internal)) {
  if (internal_.empty() || !internal_.is_rectangle())
    throw std::invalid_argument("soliton: internal tableau must be a non-empty rectangle");
  const int k = internal_.num_rows();
  for (int c = 0; c < internal_.width(); ++c) {
    if (k >= 2 && internal_.at(k - 2, c) > k)
      throw std::invalid_argument("soliton: row k-1 entry exceeds k in " + to_string(internal_));
    if (internal_.at(k - 1, c) <= k)
      throw std::invalid_argument("soliton: row k entry not above k in " + to_string(internal_));
  }
}

Tableau Soliton::low() const {
  return row_slice(internal_, 0, k() - 1);
}

Tableau Soliton::high() const {
  return row_slice(internal_, k() - 1, 1);
}

Soliton join(Position phase, const Tableau& low, const Tableau& high) {
  return Soliton(phase, stack(low, high));
}

std::vector<Position> SolitonConfig::gaps() const {
  std::vector<Position> out;
  for (std::size_t j = 0; j + 1 < solitons.size(); ++j)
    out.push_back(positions[j + 1] - positions[j] - solitons[j].length());
  return out;
}

bool SolitonConfig::well_separated() const {
  const auto g = gaps();
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j] < solitons[j + 1].length()) return false;
  }
  return true;
}

SolitonConfig make_config(std::vector<Soliton> solitons) {
  SolitonConfig out;
  for (const auto& s : solitons) out.positions.push_back(s.phase());
  out.solitons = std::move(solitons);
  return out;
}

// ---------------------------------------------------------------------------
// Encoding and detection

std::optional<std::string> soliton_violation(std::span<const Tableau> run, int k) {
  if (run.empty()) return "empty run";
  for (std::size_t j = 0; j < run.size(); ++j) {
    const auto& b = run[j];
    if (b.width() != 1 || b.num_rows() != k) return "column " + std::to_string(j + 1) + " is not in B^{k,1}";
    if (k >= 2 && b.at(k - 2, 0) > k) return "column " + std::to_string(j + 1) + " has row k-1 entry above k";
    if (b.at(k - 1, 0) <= k) return "column " + std::to_string(j + 1) + " has row k entry at most k";
    if (j + 1 < run.size()) {
      for (int i = 0; i < k; ++i) {
        if (b.at(i, 0) < run[j + 1].at(i, 0))
          return "row " + std::to_string(i + 1) + " increases between columns " + std::to_string(j + 1) + " and " +
                 std::to_string(j + 2);
      }
    }
  }
  return std::nullopt;
}

Soliton encode(std::span<const Tableau> run, Position phase) {
  if (run.empty()) throw std::invalid_argument("encode: empty run");
  const int k = run.front().num_rows();
  if (auto why = soliton_violation(run, k)) throw std::invalid_argument("encode: " + *why);
  std::vector<Tableau> reversed(run.rbegin(), run.rend());
  return Soliton(phase, Tableau::from_columns(reversed, run.front().alphabet()));
}

std::vector<Tableau> decode(const Soliton& s) {
  std::vector<Tableau> out;
  for (int c = s.length() - 1; c >= 0; --c) out.push_back(s.internal().column_at(c));
  return out;
}

Detection detect(const BbsState& p, int l, int t) {
  Detection out;
  SolitonConfig config;
  const auto& cols = p.columns();
  std::size_t j = 0;
  while (j < cols.size()) {
    if (is_vacuum_column(cols[j])) {
      ++j;
      continue;
    }
    std::size_t end = j;
    while (end < cols.size() && !is_vacuum_column(cols[end])) ++end;
    const std::span<const Tableau> run(cols.data() + j, end - j);
    const Position pos = p.offset() + static_cast<Position>(j);
    if (auto why = soliton_violation(run, p.k())) {
      out.failure = "run at " + std::to_string(pos) + ": " + *why;
      out.failed_run = {pos, pos + static_cast<Position>(run.size())};
      return out;
    }
    const Position speed = std::min<Position>(static_cast<Position>(run.size()), l);
    config.solitons.push_back(encode(run, pos - speed * t));
    config.positions.push_back(pos);
    j = end;
  }
  out.config = std::move(config);
  return out;
}

Detection detect(const BbsState& p) {
  return detect(p, 1, 0);
}

BbsState build_state(const SolitonConfig& config, int n, int k) {
  if (config.solitons.empty()) return BbsState(n, k);
  if (config.positions.size() != config.solitons.size())
    throw std::invalid_argument("build_state: positions and solitons differ in number");
  const Position begin = config.positions.front();
  std::vector<Tableau> columns;
  for (std::size_t j = 0; j < config.solitons.size(); ++j) {
    const Position at = config.positions[j] - begin;
    if (at < static_cast<Position>(columns.size()))
      throw std::invalid_argument("build_state: solitons overlap");
    while (static_cast<Position>(columns.size()) < at) columns.push_back(Tableau::vacuum_column(k, n));
    for (auto& col : decode(config.solitons[j])) columns.push_back(std::move(col));
  }
  return BbsState(n, k, begin, std::move(columns));
}

// ---------------------------------------------------------------------------
// Scattering

TwoBody predict_two_body(const Soliton& s1, const Soliton& s2) {
  if (s1.length() <= s2.length())
    throw std::invalid_argument("predict_two_body: left soliton must be strictly longer");
  if (s1.k() != s2.k()) throw std::invalid_argument("predict_two_body: solitons differ in k");
  const auto low = apply_R(s1.low(), s2.low());
  const auto high = apply_R(s1.high(), s2.high());
  const int delta = 2 * s2.length() + high.energy + low.energy;
  return {join(s2.phase() - delta, low.left_out, high.left_out),
          join(s1.phase() + delta, low.right_out, high.right_out), delta};
}

ScatteringPrediction predict_scattering(const std::vector<Soliton>& solitons) {
  std::set<int> lengths;
  for (const auto& s : solitons) {
    if (!lengths.insert(s.length()).second)
      throw std::invalid_argument("predict_scattering: repeated soliton length " + std::to_string(s.length()));
  }
  ScatteringPrediction out{solitons, {}};
  auto& seq = out.final;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
      if (seq[j].length() < seq[j + 1].length()) continue;
      auto r = predict_two_body(seq[j], seq[j + 1]);
      out.collisions.push_back({j, seq[j].length(), seq[j + 1].length(), r.delta});
      seq[j] = std::move(r.left);
      seq[j + 1] = std::move(r.right);
      swapped = true;
    }
  }
  return out;
}

bool check_rtilde_yb(const Soliton& s1, const Soliton& s2, const Soliton& s3) {
  if (!(s1.length() > s2.length() && s2.length() > s3.length()))
    throw std::invalid_argument("check_rtilde_yb: lengths must strictly decrease");
  const auto a1 = predict_two_body(s1, s2);
  const auto b1 = predict_two_body(a1.right, s3);
  const auto c1 = predict_two_body(a1.left, b1.left);
  const std::vector<Soliton> left{c1.left, c1.right, b1.right};

  const auto a2 = predict_two_body(s2, s3);
  const auto b2 = predict_two_body(s1, a2.left);
  const auto c2 = predict_two_body(b2.right, a2.right);
  const std::vector<Soliton> right{b2.left, c2.left, c2.right};
  return left == right;
}

// ---------------------------------------------------------------------------
// Experiments

namespace {

bool scattering_complete(const Detection& d, const std::vector<int>& sorted_lengths) {
  if (!d) return false;
  const auto& sol = d.config->solitons;
  if (sol.size() != sorted_lengths.size()) return false;
  for (std::size_t j = 0; j < sol.size(); ++j) {
    if (sol[j].length() != sorted_lengths[j]) return false;
  }
  const auto gaps = d.config->gaps();
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    if (gaps[j] < sol[j].length()) return false;
  }
  return true;
}

}  // namespace

Experiment run_experiment(const SolitonConfig& config, int n, int k, int l, int max_steps, StopRule stop) {
  if (l < 1 || max_steps < 0) throw std::invalid_argument("run_experiment: need l >= 1 and steps >= 0");
  if (!config.well_separated()) throw std::invalid_argument("run_experiment: initial solitons are not well separated");
  std::vector<int> lengths;
  for (const auto& s : config.solitons) lengths.push_back(s.length());
  std::sort(lengths.begin(), lengths.end());
  if (std::adjacent_find(lengths.begin(), lengths.end()) != lengths.end())
    throw std::invalid_argument("run_experiment: soliton lengths must be distinct");
  if (lengths.size() >= 2 && l <= lengths[lengths.size() - 2])
    throw std::invalid_argument("run_experiment: l must exceed every length but the longest");

  Experiment ex;
  ex.l = l;
  ex.initial = config;
  ex.predicted = predict_scattering(config.solitons);

  BbsState state = build_state(config, n, k);
  for (int t = 0;; ++t) {
    Observation obs{t, state, detect(state, l, t)};
    const bool done = scattering_complete(obs.detection, lengths);
    ex.observations.push_back(std::move(obs));
    if (t == max_steps || (stop == StopRule::when_sorted && done && t >= 1)) {
      if (done) ex.observed_final = ex.observations.back().detection.config->solitons;
      break;
    }
    state = evolve(state, l).state;
  }
  return ex;
}

// ---------------------------------------------------------------------------
// Highest-weight test vectors

Tableau glyph_column(Glyph g, int k, int n) {
  int a = 0, b = 0;
  switch (g) {
    case Glyph::zero: a = k - 1, b = k; break;
    case Glyph::one: a = k - 1, b = k + 1; break;
    case Glyph::two_plus: a = k, b = k + 1; break;
    case Glyph::two_minus: a = k - 1, b = k + 2; break;
    case Glyph::three: a = k, b = k + 2; break;
    case Glyph::four: a = k + 1, b = k + 2; break;
  }
  std::vector<Letter> entries;
  if (k == 1) {
    if (g != Glyph::zero && g != Glyph::one) throw std::invalid_argument("glyph_column: only [0] and [1] exist for k = 1");
    entries.push_back(b);
  } else {
    for (int r = 1; r <= k - 2; ++r) entries.push_back(r);
    entries.push_back(a);
    entries.push_back(b);
  }
  return Tableau::column(entries, n);
}

Tableau xi(int i, int l, int k, int n) {
  if (i < 0 || i > l) throw std::invalid_argument("xi: need 0 <= i <= l");
  std::vector<Tableau> cols(l - i, glyph_column(Glyph::zero, k, n));
  cols.insert(cols.end(), i, glyph_column(Glyph::one, k, n));
  return Tableau::from_columns(cols, n);
}

BbsState highest_weight_two_soliton(const TwoSolitonParams& p) {
  if (p.k < 2 || p.n < p.k + 2) throw std::invalid_argument("two-soliton vector: need k >= 2 and n >= k + 2");
  if (p.d1 <= p.d2 || p.d2 < 1) throw std::invalid_argument("two-soliton vector: need d1 > d2 >= 1");
  if (p.alpha < 0 || p.beta < 0 || p.alpha + p.beta > p.d2)
    throw std::invalid_argument("two-soliton vector: need 0 <= alpha, beta and alpha + beta <= d2");
  if (p.c1 < 0 || p.c2 < p.c1 + p.d1) throw std::invalid_argument("two-soliton vector: solitons overlap");
  std::vector<Tableau> cols;
  auto put = [&](Glyph g, Position count) { cols.insert(cols.end(), count, glyph_column(g, p.k, p.n)); };
  put(Glyph::zero, p.c1);
  put(Glyph::one, p.d1);
  put(Glyph::zero, p.c2 - p.c1 - p.d1);
  put(Glyph::three, p.alpha);
  put(p.plus ? Glyph::two_plus : Glyph::two_minus, p.d2 - p.alpha - p.beta);
  put(Glyph::one, p.beta);
  return BbsState(p.n, p.k, 0, std::move(cols));
}

SplitEnergies two_soliton_energies(int d2, int alpha, int beta, bool plus) {
  // Twice the closed forms, so that the half-integers stay exact.
  const int a = -(d2 - beta) - alpha;
  const int b = -(d2 - beta) + alpha;
  const int twice_high = plus ? a - b : a + b;
  const int twice_low = plus ? a + b : a - b;
  if (twice_high % 2 != 0 || twice_low % 2 != 0) throw std::logic_error("two_soliton_energies: odd numerator");
  return {twice_high / 2, twice_low / 2};
}

}  // namespace boxball

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "erid/matrix.hpp"
#include "erid/simplex.hpp"

namespace erid {

// Two-player normal-form game. Both payoff matrices are M1 x M2 with the row
// indexed by player 1's action and the column by player 2's action; entry
// payoff_k(a1, a2) is player k's reward for the joint action (a1, a2).
class Game2P {
 public:
  Game2P(Matrix payoff1, Matrix payoff2,
         std::vector<std::string> actions1 = {},
         std::vector<std::string> actions2 = {});

  const Matrix& payoff1() const { return payoff1_; }
  const Matrix& payoff2() const { return payoff2_; }
  std::size_t num_actions1() const { return payoff1_.rows(); }
  std::size_t num_actions2() const { return payoff1_.cols(); }

  double reward1(std::size_t a1, std::size_t a2) const { return payoff1_(a1, a2); }
  double reward2(std::size_t a1, std::size_t a2) const { return payoff2_(a1, a2); }

  const std::vector<std::string>& actions1() const { return actions1_; }
  const std::vector<std::string>& actions2() const { return actions2_; }

 private:
  Matrix payoff1_;
  Matrix payoff2_;
  std::vector<std::string> actions1_;
  std::vector<std::string> actions2_;
};

// Inclusive payoff bounds for one player.
struct PayoffRange {
  double r_min = 0.0;
  double r_max = 0.0;

  double width() const { return r_max - r_min; }
};

// Which rock-paper-scissors matchup carries the scaling factor v.
enum class ScaledMatchup { kRockPaper, kScissorsRock, kPaperScissors };

const char* to_string(ScaledMatchup m);

// One-population symmetric game from an antisymmetric payoff matrix: player 2
// sees the same matrix with its own action indexing the row, i.e. payoff2 is
// the transpose of the shared matrix under the row-is-player-1 convention.
Game2P symmetric_game(const Matrix& shared, std::vector<std::string> actions = {});

Game2P matching_pennies();
Game2P biased_rps();

// Rock-paper-scissors with the chosen matchup's win/loss scaled to +-v and
// every other win/loss at +-1. v = 1 gives the standard game.
Game2P scaled_rps(double v, ScaledMatchup matchup);

// The unique equilibrium of scaled_rps: mass v/(v+2) on the action outside
// the scaled matchup, 1/(v+2) on each scaled action.
SimplexVector scaled_rps_equilibrium(double v, ScaledMatchup matchup);

// Time-varying payoff assignment. Three kinds:
//   Static           - the base game at every step.
//   PhaseSwitched    - scaled_rps(v_max, m) with m cycling RP -> SR -> PS
//                      every phase_length steps.
//   ContinuousScaled - an initial hold of segment_length/2 steps at
//                      (RP, v_max), then four ramps of segment_length steps
//                      each: RP v_max->1, SR 1->v_max, SR v_max->1,
//                      PS 1->v_max, with v linear in t. Past the last ramp
//                      the final game holds.
class GameSchedule {
 public:
  enum class Kind { kStatic, kPhaseSwitched, kContinuousScaled };

  static GameSchedule constant(Game2P base);
  static GameSchedule phase_switched(std::int64_t phase_length, double v_max);
  static GameSchedule continuous_scaled(std::int64_t segment_length, double v_max);

  Game2P payoff_at(std::int64_t t) const;

  Kind kind() const { return kind_; }
  std::int64_t phase_length() const { return phase_length_; }
  std::int64_t segment_length() const { return segment_length_; }
  double v_max() const { return v_max_; }
  const Game2P& base() const { return base_; }

  // Matchup and scale in effect at step t (RPS-family schedules only).
  std::pair<ScaledMatchup, double> scaling_at(std::int64_t t) const;

  // Widest payoff interval the schedule can produce for the given player.
  PayoffRange range_over_schedule(int player) const;

  // Step count after which a ContinuousScaled schedule stops changing
  // (initial hold plus four ramps); 0 for the other kinds.
  std::int64_t scripted_steps() const;

 private:
  GameSchedule(Kind kind, Game2P base) : kind_(kind), base_(std::move(base)) {}

  Kind kind_;
  Game2P base_;
  std::int64_t phase_length_ = 0;
  std::int64_t segment_length_ = 0;
  double v_max_ = 1.0;
};

// Expected per-action payoffs and their policy-weighted means.
// u1_i = sum_j payoff1(i, j) * pi2_j, u2_j = sum_i pi1_i * payoff2(i, j).
struct ExpectedPayoffs {
  std::vector<double> u1;
  std::vector<double> u2;
  double mean1 = 0.0;
  double mean2 = 0.0;
};

ExpectedPayoffs expected_payoffs(const Game2P& game, const PolicyProfile& profile);

// Min and max entry of the given player's payoff matrix (player is 0 or 1).
PayoffRange payoff_range(const Game2P& game, int player);

// Loads a game from JSON: {"payoff1": [[..]], "payoff2": [[..]],
// "actions1": [..], "actions2": [..]}, row-major, labels optional.
Game2P load_game_json(const std::filesystem::path& path);
Game2P parse_game_json(std::istream& in, const std::string& origin = "<stream>");

}  // namespace erid

#include "erid/games.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace erid {

Game2P::Game2P(Matrix payoff1, Matrix payoff2, std::vector<std::string> actions1,
               std::vector<std::string> actions2)
    : payoff1_(std::move(payoff1)),
      payoff2_(std::move(payoff2)),
      actions1_(std::move(actions1)),
      actions2_(std::move(actions2)) {
  if (payoff1_.rows() != payoff2_.rows() || payoff1_.cols() != payoff2_.cols()) {
    throw std::invalid_argument("Game2P: payoff matrices differ in shape");
  }
  if (payoff1_.rows() < 2 || payoff1_.cols() < 2) {
    throw std::invalid_argument("Game2P: each player needs at least 2 actions");
  }
  if (!actions1_.empty() && actions1_.size() != payoff1_.rows()) {
    throw std::invalid_argument("Game2P: actions1 label count mismatch");
  }
  if (!actions2_.empty() && actions2_.size() != payoff1_.cols()) {
    throw std::invalid_argument("Game2P: actions2 label count mismatch");
  }
}

const char* to_string(ScaledMatchup m) {
  switch (m) {
    case ScaledMatchup::kRockPaper: return "rock-paper";
    case ScaledMatchup::kScissorsRock: return "scissors-rock";
    case ScaledMatchup::kPaperScissors: return "paper-scissors";
  }
  return "?";
}

Game2P symmetric_game(const Matrix& shared, std::vector<std::string> actions) {
  std::vector<std::string> a2 = actions;
  return Game2P(shared, shared.transposed(), std::move(actions), std::move(a2));
}

Game2P matching_pennies() {
  return Game2P(Matrix{{1, -1}, {-1, 1}}, Matrix{{-1, 1}, {1, -1}},
                {"heads", "tails"}, {"heads", "tails"});
}

Game2P scaled_rps(double v, ScaledMatchup matchup) {
  if (!(v >= 1.0) || !std::isfinite(v)) {
    throw std::invalid_argument("scaled_rps: scale must satisfy v >= 1, got " +
                                std::to_string(v));
  }
  // Rows/columns ordered rock, paper, scissors; row beats column where the
  // entry is positive.
  Matrix c{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  switch (matchup) {
    case ScaledMatchup::kRockPaper:
      c(0, 1) = -v;
      c(1, 0) = v;
      break;
    case ScaledMatchup::kScissorsRock:
      c(0, 2) = v;
      c(2, 0) = -v;
      break;
    case ScaledMatchup::kPaperScissors:
      c(1, 2) = -v;
      c(2, 1) = v;
      break;
  }
  return symmetric_game(c, {"rock", "paper", "scissors"});
}

Game2P biased_rps() { return scaled_rps(2.0, ScaledMatchup::kPaperScissors); }

SimplexVector scaled_rps_equilibrium(double v, ScaledMatchup matchup) {
  if (!(v >= 1.0) || !std::isfinite(v)) {
    throw std::invalid_argument("scaled_rps_equilibrium: scale must satisfy v >= 1");
  }
  std::vector<double> p(3, 1.0 / (v + 2.0));
  const std::size_t unscaled = matchup == ScaledMatchup::kRockPaper       ? 2
                               : matchup == ScaledMatchup::kScissorsRock  ? 1
                                                                          : 0;
  p[unscaled] = v / (v + 2.0);
  return SimplexVector(std::move(p));
}

GameSchedule GameSchedule::constant(Game2P base) {
  return GameSchedule(Kind::kStatic, std::move(base));
}

GameSchedule GameSchedule::phase_switched(std::int64_t phase_length, double v_max) {
  if (phase_length < 1) throw std::invalid_argument("phase_switched: phase_length >= 1");
  if (!(v_max > 1.0)) throw std::invalid_argument("phase_switched: v_max > 1 required");
  GameSchedule s(Kind::kPhaseSwitched, scaled_rps(v_max, ScaledMatchup::kRockPaper));
  s.phase_length_ = phase_length;
  s.v_max_ = v_max;
  return s;
}

GameSchedule GameSchedule::continuous_scaled(std::int64_t segment_length, double v_max) {
  if (segment_length < 1) throw std::invalid_argument("continuous_scaled: segment_length >= 1");
  if (!(v_max > 1.0)) throw std::invalid_argument("continuous_scaled: v_max > 1 required");
  GameSchedule s(Kind::kContinuousScaled, scaled_rps(v_max, ScaledMatchup::kRockPaper));
  s.segment_length_ = segment_length;
  s.v_max_ = v_max;
  return s;
}

std::pair<ScaledMatchup, double> GameSchedule::scaling_at(std::int64_t t) const {
  if (t < 0) throw std::invalid_argument("GameSchedule: negative step index");
  switch (kind_) {
    case Kind::kStatic:
      throw std::logic_error("scaling_at: static schedule has no scaling");
    case Kind::kPhaseSwitched: {
      const auto cycle = (t / phase_length_) % 3;
      const ScaledMatchup order[3] = {ScaledMatchup::kRockPaper,
                                      ScaledMatchup::kScissorsRock,
                                      ScaledMatchup::kPaperScissors};
      return {order[cycle], v_max_};
    }
    case Kind::kContinuousScaled: {
      const std::int64_t hold = segment_length_ / 2;
      if (t < hold) return {ScaledMatchup::kRockPaper, v_max_};
      const std::int64_t s = t - hold;
      const std::int64_t seg = s / segment_length_;
      const double frac =
          static_cast<double>(s - seg * segment_length_) / static_cast<double>(segment_length_);
      const double up = 1.0 + (v_max_ - 1.0) * frac;    // 1 -> v_max
      const double down = v_max_ + (1.0 - v_max_) * frac;  // v_max -> 1
      switch (seg) {
        case 0: return {ScaledMatchup::kRockPaper, down};
        case 1: return {ScaledMatchup::kScissorsRock, up};
        case 2: return {ScaledMatchup::kScissorsRock, down};
        case 3: return {ScaledMatchup::kPaperScissors, up};
        default: return {ScaledMatchup::kPaperScissors, v_max_};  // hold final game
      }
    }
  }
  throw std::logic_error("GameSchedule: bad kind");
}

Game2P GameSchedule::payoff_at(std::int64_t t) const {
  if (t < 0) throw std::invalid_argument("GameSchedule: negative step index");
  if (kind_ == Kind::kStatic) return base_;
  const auto [matchup, v] = scaling_at(t);
  return scaled_rps(v, matchup);
}

PayoffRange GameSchedule::range_over_schedule(int player) const {
  if (kind_ == Kind::kStatic) return payoff_range(base_, player);
  return PayoffRange{-v_max_, v_max_};
}

std::int64_t GameSchedule::scripted_steps() const {
  if (kind_ != Kind::kContinuousScaled) return 0;
  return segment_length_ / 2 + 4 * segment_length_;
}

ExpectedPayoffs expected_payoffs(const Game2P& game, const PolicyProfile& profile) {
  const std::size_t m1 = game.num_actions1();
  const std::size_t m2 = game.num_actions2();
  if (profile.player1.size() != m1 || profile.player2.size() != m2) {
    throw std::invalid_argument("expected_payoffs: profile/game dimension mismatch");
  }
  ExpectedPayoffs out;
  out.u1.assign(m1, 0.0);
  out.u2.assign(m2, 0.0);
  for (std::size_t i = 0; i < m1; ++i) {
    for (std::size_t j = 0; j < m2; ++j) {
      out.u1[i] += game.payoff1()(i, j) * profile.player2[j];
      out.u2[j] += game.payoff2()(i, j) * profile.player1[i];
    }
  }
  for (std::size_t i = 0; i < m1; ++i) out.mean1 += profile.player1[i] * out.u1[i];
  for (std::size_t j = 0; j < m2; ++j) out.mean2 += profile.player2[j] * out.u2[j];
  return out;
}

PayoffRange payoff_range(const Game2P& game, int player) {
  if (player != 0 && player != 1) throw std::invalid_argument("payoff_range: player is 0 or 1");
  const Matrix& p = player == 0 ? game.payoff1() : game.payoff2();
  return PayoffRange{p.min_entry(), p.max_entry()};
}

namespace {

Matrix matrix_from_json(const nlohmann::json& rows, const std::string& origin,
                        const std::string& key) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array() || rows[0].empty()) {
    throw std::runtime_error(origin + ": \"" + key + "\" must be a non-empty 2-d array");
  }
  const std::size_t r = rows.size();
  const std::size_t c = rows[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) {
      throw std::runtime_error(origin + ": \"" + key + "\" row " + std::to_string(i) +
                               " has inconsistent length");
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (!rows[i][j].is_number()) {
        throw std::runtime_error(origin + ": \"" + key + "\" entry (" + std::to_string(i) +
                                 "," + std::to_string(j) + ") is not a number");
      }
      m(i, j) = rows[i][j].get<double>();
    }
  }
  return m;
}

std::vector<std::string> labels_from_json(const nlohmann::json& j, const char* key) {
  std::vector<std::string> out;
  if (j.contains(key)) {
    for (const auto& v : j.at(key)) out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

Game2P parse_game_json(std::istream& in, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
  if (!j.contains("payoff1") || !j.contains("payoff2")) {
    throw std::runtime_error(origin + ": need \"payoff1\" and \"payoff2\"");
  }
  Matrix p1 = matrix_from_json(j.at("payoff1"), origin, "payoff1");
  Matrix p2 = matrix_from_json(j.at("payoff2"), origin, "payoff2");
  try {
    return Game2P(std::move(p1), std::move(p2), labels_from_json(j, "actions1"),
                  labels_from_json(j, "actions2"));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
}

Game2P load_game_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open game file: " + path.string());
  return parse_game_json(in, path.string());
}

}  // namespace erid

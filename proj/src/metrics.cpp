#include "erid/metrics.hpp"

#include <stdexcept>

namespace erid {

BestResponse best_response_value(const Game2P& game, int player,
                                 const SimplexVector& opponent_policy) {
  if (player != 0 && player != 1) {
    throw std::invalid_argument("best_response_value: player is 0 or 1");
  }
  const Matrix& p = player == 0 ? game.payoff1() : game.payoff2();
  const std::size_t own = player == 0 ? p.rows() : p.cols();
  const std::size_t opp = player == 0 ? p.cols() : p.rows();
  if (opponent_policy.size() != opp) {
    throw std::invalid_argument("best_response_value: opponent dimension mismatch");
  }
  BestResponse best{0.0, 0};
  for (std::size_t a = 0; a < own; ++a) {
    double value = 0.0;
    for (std::size_t b = 0; b < opp; ++b) {
      value += (player == 0 ? p(a, b) : p(b, a)) * opponent_policy[b];
    }
    if (a == 0 || value > best.value) best = {value, a};
  }
  return best;
}

double nash_conv(const Game2P& game, const PolicyProfile& profile) {
  const ExpectedPayoffs ep = expected_payoffs(game, profile);
  const double gap1 = best_response_value(game, 0, profile.player2).value - ep.mean1;
  const double gap2 = best_response_value(game, 1, profile.player1).value - ep.mean2;
  return gap1 + gap2;
}

double relative_nash_conv(const Game2P& game, const PolicyProfile& profile) {
  const double denom = payoff_range(game, 0).width() + payoff_range(game, 1).width();
  if (denom <= 0.0) {
    throw std::domain_error("relative_nash_conv: both players' payoffs are constant");
  }
  return nash_conv(game, profile) / denom;
}

MetricSample metric_sample(const Game2P& game, const PolicyProfile& profile,
                           std::int64_t t) {
  return MetricSample{t, nash_conv(game, profile), relative_nash_conv(game, profile)};
}

}  // namespace erid

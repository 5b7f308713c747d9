#pragma once

#include <cstdint>

#include "erid/games.hpp"
#include "erid/simplex.hpp"

namespace erid {

// Exploitability readings at one recorded step.
struct MetricSample {
  std::int64_t t = 0;
  double nashconv = 0.0;
  double relative_nashconv = 0.0;
};

struct BestResponse {
  double value = 0.0;
  std::size_t action = 0;  // smallest maximizing index on ties
};

// Best payoff the given player (0 or 1) can get against the opponent policy.
BestResponse best_response_value(const Game2P& game, int player,
                                 const SimplexVector& opponent_policy);

// Sum over both players of (best-response value - own expected payoff).
// Nonnegative everywhere, zero exactly at equilibria.
double nash_conv(const Game2P& game, const PolicyProfile& profile);

// nash_conv divided by sum_k (r_max_k - r_min_k), the upper bound each
// player's exploitability gap admits. Throws std::domain_error when both
// players' payoffs are constant.
double relative_nash_conv(const Game2P& game, const PolicyProfile& profile);

MetricSample metric_sample(const Game2P& game, const PolicyProfile& profile, std::int64_t t);

}  // namespace erid

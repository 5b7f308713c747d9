#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "erid/games.hpp"
#include "erid/metrics.hpp"
#include "erid/simplex.hpp"

namespace erid {

struct TrajectoryPoint {
  std::int64_t t = 0;
  PolicyProfile profile;
  MetricSample metrics;
};

// Time-indexed record of policy profiles and metric values, produced by the
// ODE integrator and the learning harness alike. One step of the producing
// process spans time_per_step units of dynamics time (the integrator's step
// size, or a learner's rate).
struct Trajectory {
  explicit Trajectory(GameSchedule s) : schedule(std::move(s)) {}

  std::vector<TrajectoryPoint> points;
  GameSchedule schedule;
  double time_per_step = 1.0;
  std::int64_t projection_events = 0;
  double wall_seconds = 0.0;
  std::string label;

  bool empty() const { return points.empty(); }
};

}  // namespace erid

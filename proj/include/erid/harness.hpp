#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "erid/agents.hpp"
#include "erid/dynamics.hpp"
#include "erid/games.hpp"
#include "erid/trajectory.hpp"

namespace erid {

enum class AgentKind { kErid, kCrossLearning, kHedge };

const char* to_string(AgentKind k);

inline constexpr double kDefaultAlpha = 1e-5;
inline constexpr std::size_t kDefaultBufferCapacity = 1000;
inline constexpr double kDefaultHedgeRate = 0.1;

struct AgentSpec {
  AgentKind kind = AgentKind::kErid;
  ProtocolKind protocol = ProtocolKind::bnn();
  double alpha = kDefaultAlpha;
  std::size_t buffer_capacity = kDefaultBufferCapacity;
  double hedge_rate = kDefaultHedgeRate;
  // Cross learning only; std::nullopt feeds raw rewards straight into the
  // update, the paper-speed configuration for games with signed payoffs.
  std::optional<PayoffRange> reward_normalizer;
  std::optional<SimplexVector> initial_policy;  // uniform when absent
};

struct ExperimentConfig {
  GameSchedule schedule;
  AgentSpec agent1;
  AgentSpec agent2;  // ignored in self-play
  std::int64_t n_steps = 1;
  std::uint64_t seed = 7;
  std::int64_t record_every = 1;
  bool self_play = false;
  bool report_running_average = false;
  std::string label;
};

// Runs the simulation loop: every step each seat samples an action from its
// current policy, reads its reward from the scheduled game and applies its
// update rule. Self-play keeps a single agent whose policy occupies both
// seats of a symmetric game and learns from the seat-1 reward stream.
// Records the initial profile at t = 0, then every record_every-th step and
// the final step. Fully determined by (config, seed).
Trajectory run_learning(const ExperimentConfig& cfg);

// Independent replicas; results are index-aligned with the inputs and
// identical to running each config serially.
std::vector<Trajectory> run_many(std::span<const ExperimentConfig> configs);

// Supremum over recorded times of the max-norm distance between the learner
// trajectory and the matching ODE started from the same initial profile.
// Learner step n sits at dynamics time n * traj.time_per_step; the ODE is
// advanced to each recorded time with whole cfg.step_size steps plus one
// remainder step.
double compare_to_ode(const Trajectory& traj, const DynamicsKind& kind,
                      const OdeConfig& cfg);

// Monte-Carlo check that the mean replay-driven increment at a frozen
// profile matches the analytic vector field. Components are player 1's
// entries followed by player 2's.
struct DriftReport {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t n_trials = 0;
  std::vector<double> mc_mean;
  std::vector<double> mc_stderr;
  std::vector<double> analytic;
  std::vector<double> z;  // |mc_mean - analytic| / mc_stderr
  double max_z = 0.0;
  // Trials in which some action of either player went unsampled, leaving an
  // empty index set; reported, not fatal.
  std::size_t trials_with_empty_action = 0;

  bool within(double z_bound) const { return max_z < z_bound; }
};

// Each trial fills fresh buffers with buffer_capacity i.i.d. joint samples
// drawn at the frozen profile and evaluates erid_delta for both players.
// Trial results are bitwise independent of the execution order, so the
// parallel path reproduces the serial one exactly.
DriftReport drift_validate(const Game2P& game, const PolicyProfile& profile,
                           const ProtocolKind& protocol, std::size_t buffer_capacity,
                           std::size_t n_trials, std::uint64_t seed,
                           bool parallel = true);

// Same estimator for the cross-learning increment (divided by alpha) against
// the replicator field of the normalizer-mapped game; one joint sample per
// trial. Normalizers may be absent to validate the raw-reward configuration.
DriftReport cross_drift_validate(const Game2P& game, const PolicyProfile& profile,
                                 std::optional<PayoffRange> normalizer1,
                                 std::optional<PayoffRange> normalizer2,
                                 std::size_t n_trials, std::uint64_t seed,
                                 bool parallel = true);

// Cumulative mean of the recorded policies up to each sample, renormalized;
// metrics recomputed against the schedule. The time-averaged view of a run.
Trajectory running_average_policy(const Trajectory& traj);

}  // namespace erid

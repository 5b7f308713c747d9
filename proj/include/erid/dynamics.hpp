#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "erid/games.hpp"
#include "erid/simplex.hpp"
#include "erid/trajectory.hpp"

namespace erid {

enum class Dynamics { kReplicator, kBNN, kSmith, kSmithReplicatorPairwise };

const char* to_string(Dynamics d);

// A dynamics family plus, for the Smith-replicator pairwise family, the box
// constraining each player's action frequencies. Absent bounds mean the unit
// box; bounds on any other family are rejected.
class DynamicsKind {
 public:
  static DynamicsKind replicator() { return DynamicsKind(Dynamics::kReplicator); }
  static DynamicsKind bnn() { return DynamicsKind(Dynamics::kBNN); }
  static DynamicsKind smith() { return DynamicsKind(Dynamics::kSmith); }
  static DynamicsKind srp(std::optional<BoxBounds> bounds = std::nullopt);

  Dynamics tag() const { return tag_; }
  const std::optional<BoxBounds>& bounds() const { return bounds_; }

  // The box for a player with m actions: explicit bounds when set, the unit
  // box otherwise. Only meaningful for the SRP family.
  BoxBounds box_for(std::size_t m) const;

 private:
  explicit DynamicsKind(Dynamics tag) : tag_(tag) {}

  Dynamics tag_;
  std::optional<BoxBounds> bounds_;
};

struct OdeConfig {
  double step_size = 1e-3;
  std::int64_t n_steps = 1;
  std::int64_t record_every = 1;
};

// Time derivative (d1, d2) of the two policies under the chosen dynamics.
struct PolicyField {
  std::vector<double> d1;
  std::vector<double> d2;
};

PolicyField vector_field(const DynamicsKind& kind, const Game2P& game,
                         const PolicyProfile& profile);

// Raised when the integrator state stops being finite; carries the step
// index and the offending state (player 1 entries then player 2 entries).
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(std::int64_t step, std::vector<double> state);

  std::int64_t step() const { return step_; }
  const std::vector<double>& state() const { return state_; }

 private:
  std::int64_t step_;
  std::vector<double> state_;
};

// Classical fixed-step fourth-order Runge-Kutta on the product of simplices.
// Nonautonomous schedules are sampled at the integer step index and held
// constant within a step. After each step the state is reprojected only if
// accumulated drift exceeds kSimplexTol; such events are counted on the
// returned trajectory. Records step 0, every record_every-th step, and the
// final step.
Trajectory integrate(const DynamicsKind& kind, const GameSchedule& schedule,
                     const PolicyProfile& initial, const OdeConfig& cfg);

// Sum over players of KL(reference || profile). Constant along replicator
// trajectories of zero-sum games whose equilibrium is the interior reference
// point, which makes it an orbit-conservation check. Throws
// std::domain_error where profile has zero mass on a reference-supported
// action.
double replicator_invariant(const PolicyProfile& profile, const PolicyProfile& reference);

}  // namespace erid

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "erid/dynamics.hpp"
#include "erid/games.hpp"
#include "erid/replay.hpp"
#include "erid/simplex.hpp"

namespace erid {

enum class Protocol { kBNN, kSmith, kSRP };

const char* to_string(Protocol p);

// The protocol factor driving an experience-replay update; SRP optionally
// carries box bounds (unit box when absent), the others never do.
class ProtocolKind {
 public:
  static ProtocolKind bnn() { return ProtocolKind(Protocol::kBNN); }
  static ProtocolKind smith() { return ProtocolKind(Protocol::kSmith); }
  static ProtocolKind srp(std::optional<BoxBounds> bounds = std::nullopt);

  Protocol tag() const { return tag_; }
  const std::optional<BoxBounds>& bounds() const { return bounds_; }
  BoxBounds box_for(std::size_t m) const;

 private:
  explicit ProtocolKind(Protocol tag) : tag_(tag) {}

  Protocol tag_;
  std::optional<BoxBounds> bounds_;
};

// Continuous dynamics family matching a protocol factor.
DynamicsKind to_dynamics(const ProtocolKind& protocol);

// The replay-driven policy increment delta, to be applied as
// policy += alpha * delta. Sums to zero componentwise:
//   BNN:   delta_i = [r_i - r]+            - pi_i * sum_j [r_j - r]+
//   Smith: delta_i = sum_j pi_j [r_i - r_j]+ - pi_i * sum_j [r_j - r_i]+
//   SRP:   delta_i = sum_j (pi_j - lo_j)(hi_i - pi_i)[r_i - r_j]+
//                        - (pi_i - lo_i)(hi_j - pi_j)[r_j - r_i]+
std::vector<double> erid_delta(const SimplexVector& policy, const AverageRewards& avg,
                               const ProtocolKind& protocol);

// A policy update stepped outside the simplex by more than the tolerance;
// carries the offending component. Indicates a learning rate above the
// forward-invariance bound 1 / (M * payoff width).
class StepBoundError : public std::runtime_error {
 public:
  StepBoundError(std::size_t component, double value);

  std::size_t component() const { return component_; }
  double value() const { return value_; }

 private:
  std::size_t component_;
  double value_;
};

// Stateless replay learner: every step stores the (action, reward) sample,
// recomputes buffer averages and moves the policy along the protocol delta.
class EridAgent {
 public:
  EridAgent(SimplexVector initial, std::size_t buffer_capacity, double alpha,
            ProtocolKind protocol);

  void step(std::size_t action, double reward);

  const SimplexVector& policy() const { return policy_; }
  const ReplayBuffer& buffer() const { return buffer_; }
  double alpha() const { return alpha_; }
  const ProtocolKind& protocol() const { return protocol_; }
  std::int64_t projection_events() const { return projection_events_; }

 private:
  SimplexVector policy_;
  ReplayBuffer buffer_;
  double alpha_;
  ProtocolKind protocol_;
  std::int64_t projection_events_ = 0;
};

// Learning automaton: the chosen action gains alpha*r*(1 - pi_i), every
// other action loses alpha*r*pi_j. With a normalizer the reward is first
// mapped affinely onto [0,1], which keeps the simplex exactly for alpha <= 1.
// Without one the raw reward is used; boundary overshoot is then possible
// and is repaired by projection (counted).
class CrossLearningAgent {
 public:
  CrossLearningAgent(SimplexVector initial, double alpha,
                     std::optional<PayoffRange> normalizer);

  void step(std::size_t action, double reward);

  const SimplexVector& policy() const { return policy_; }
  double alpha() const { return alpha_; }
  const std::optional<PayoffRange>& normalizer() const { return normalizer_; }
  std::int64_t projection_events() const { return projection_events_; }

 private:
  SimplexVector policy_;
  double alpha_;
  std::optional<PayoffRange> normalizer_;
  std::int64_t projection_events_ = 0;
};

// Exponential weights over cumulative expected payoffs (full information):
// policy = softmax(rate * cumulative). Strictly positive by construction.
class HedgeAgent {
 public:
  HedgeAgent(std::size_t num_actions, double rate);

  void step(std::span<const double> payoff_vector);

  const SimplexVector& policy() const { return policy_; }
  double rate() const { return rate_; }
  const std::vector<double>& cumulative_values() const { return cumulative_; }

 private:
  std::vector<double> cumulative_;
  double rate_;
  SimplexVector policy_;
};

}  // namespace erid

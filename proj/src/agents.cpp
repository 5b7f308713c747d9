#include "erid/agents.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace erid {

const char* to_string(Protocol p) {
  switch (p) {
    case Protocol::kBNN: return "bnn";
    case Protocol::kSmith: return "smith";
    case Protocol::kSRP: return "srp";
  }
  return "?";
}

ProtocolKind ProtocolKind::srp(std::optional<BoxBounds> bounds) {
  ProtocolKind k(Protocol::kSRP);
  k.bounds_ = std::move(bounds);
  return k;
}

BoxBounds ProtocolKind::box_for(std::size_t m) const {
  if (bounds_) {
    if (bounds_->size() != m) {
      throw std::invalid_argument("ProtocolKind: bounds dimension mismatch");
    }
    return *bounds_;
  }
  return BoxBounds::unit(m);
}

DynamicsKind to_dynamics(const ProtocolKind& protocol) {
  switch (protocol.tag()) {
    case Protocol::kBNN: return DynamicsKind::bnn();
    case Protocol::kSmith: return DynamicsKind::smith();
    case Protocol::kSRP: return DynamicsKind::srp(protocol.bounds());
  }
  throw std::logic_error("to_dynamics: bad protocol");
}

namespace {

inline double pos(double z) { return z > 0.0 ? z : 0.0; }

}  // namespace

std::vector<double> erid_delta(const SimplexVector& policy, const AverageRewards& avg,
                               const ProtocolKind& protocol) {
  const std::size_t m = policy.size();
  if (avg.per_action.size() != m) {
    throw std::invalid_argument("erid_delta: reward/policy dimension mismatch");
  }
  const std::vector<double>& r = avg.per_action;
  std::vector<double> delta(m, 0.0);

  switch (protocol.tag()) {
    case Protocol::kBNN: {
      double excess_sum = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        delta[i] = pos(r[i] - avg.overall);
        excess_sum += delta[i];
      }
      for (std::size_t i = 0; i < m; ++i) delta[i] -= policy[i] * excess_sum;
      break;
    }
    case Protocol::kSmith: {
      for (std::size_t i = 0; i < m; ++i) {
        double in = 0.0, out = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
          in += policy[j] * pos(r[i] - r[j]);
          out += pos(r[j] - r[i]);
        }
        delta[i] = in - policy[i] * out;
      }
      break;
    }
    case Protocol::kSRP: {
      const BoxBounds box = protocol.box_for(m);
      if (!box.contains(policy)) {
        throw std::domain_error("erid_delta: policy outside the SRP box");
      }
      for (std::size_t i = 0; i < m; ++i) {
        const double up_i = box.upper(i) - policy[i];
        const double lo_i = policy[i] - box.lower(i);
        double v = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
          v += (policy[j] - box.lower(j)) * up_i * pos(r[i] - r[j]) -
               lo_i * (box.upper(j) - policy[j]) * pos(r[j] - r[i]);
        }
        delta[i] = v;
      }
      break;
    }
  }
  return delta;
}

StepBoundError::StepBoundError(std::size_t component, double value)
    : std::runtime_error("policy component " + std::to_string(component) +
                         " left the simplex (" + std::to_string(value) +
                         "); learning rate exceeds the step bound"),
      component_(component),
      value_(value) {}

namespace {

// Applies policy[i] += alpha * delta[i] and revalidates. Entries below
// -kSimplexTol mean the learning rate violates its step bound and raise.
// Sub-tolerance overshoot is repaired by projection and counted.
SimplexVector apply_delta(const SimplexVector& policy, std::span<const double> delta,
                          double alpha, std::int64_t& projection_events) {
  std::vector<double> next = policy.probs();
  for (std::size_t i = 0; i < next.size(); ++i) next[i] += alpha * delta[i];

  bool needs_projection = false;
  double sum = 0.0;
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (next[i] < -kSimplexTol) throw StepBoundError(i, next[i]);
    if (next[i] < 0.0) needs_projection = true;
    sum += next[i];
  }
  if (std::abs(sum - 1.0) > kSimplexTol) needs_projection = true;
  if (needs_projection) {
    ++projection_events;
    return project_to_simplex(next);
  }
  return SimplexVector(std::move(next));
}

}  // namespace

EridAgent::EridAgent(SimplexVector initial, std::size_t buffer_capacity, double alpha,
                     ProtocolKind protocol)
    : policy_(std::move(initial)),
      buffer_(buffer_capacity, policy_.size()),
      alpha_(alpha),
      protocol_(std::move(protocol)) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("EridAgent: learning rate must be positive");
  }
}

void EridAgent::step(std::size_t action, double reward) {
  buffer_.push(action, reward);
  const std::vector<double> delta = erid_delta(policy_, buffer_.average_rewards(), protocol_);
  policy_ = apply_delta(policy_, delta, alpha_, projection_events_);
}

CrossLearningAgent::CrossLearningAgent(SimplexVector initial, double alpha,
                                       std::optional<PayoffRange> normalizer)
    : policy_(std::move(initial)), alpha_(alpha), normalizer_(normalizer) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("CrossLearningAgent: need 0 < alpha <= 1");
  }
  if (normalizer_ && !(normalizer_->r_min <= normalizer_->r_max) ) {
    throw std::invalid_argument("CrossLearningAgent: inverted reward range");
  }
}

void CrossLearningAgent::step(std::size_t action, double reward) {
  if (action >= policy_.size()) {
    throw std::out_of_range("CrossLearningAgent: action out of range");
  }
  if (!std::isfinite(reward)) {
    throw std::invalid_argument("CrossLearningAgent: non-finite reward");
  }
  double scaled = reward;
  if (normalizer_) {
    const double width = normalizer_->width();
    if (width == 0.0) {
      if (std::abs(reward - normalizer_->r_min) > 1e-12) {
        throw std::domain_error("CrossLearningAgent: degenerate range cannot cover reward");
      }
      scaled = 0.0;
    } else {
      scaled = (reward - normalizer_->r_min) / width;
      if (scaled < -1e-12 || scaled > 1.0 + 1e-12) {
        throw std::domain_error("CrossLearningAgent: reward outside normalizer range");
      }
    }
  }

  std::vector<double> next = policy_.probs();
  for (std::size_t i = 0; i < next.size(); ++i) {
    next[i] += i == action ? alpha_ * scaled * (1.0 - next[i]) : -alpha_ * scaled * next[i];
  }
  // Normalized rewards keep every entry a convex-style combination; raw
  // signed rewards can overshoot at the boundary, which projection repairs.
  bool out_of_box = false;
  for (double p : next) out_of_box = out_of_box || p < 0.0 || p > 1.0;
  if (out_of_box) {
    if (normalizer_) {
      const auto worst = std::min_element(next.begin(), next.end());
      throw StepBoundError(static_cast<std::size_t>(worst - next.begin()), *worst);
    }
    ++projection_events_;
    policy_ = project_to_simplex(next);
  } else {
    policy_ = SimplexVector(std::move(next));
  }
}

HedgeAgent::HedgeAgent(std::size_t num_actions, double rate)
    : cumulative_(num_actions, 0.0), rate_(rate), policy_(SimplexVector::uniform(num_actions)) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("HedgeAgent: rate must be positive");
  }
}

void HedgeAgent::step(std::span<const double> payoff_vector) {
  if (payoff_vector.size() != cumulative_.size()) {
    throw std::invalid_argument("HedgeAgent: payoff vector dimension mismatch");
  }
  for (double v : payoff_vector) {
    if (!std::isfinite(v)) throw std::invalid_argument("HedgeAgent: non-finite payoff");
  }
  for (std::size_t i = 0; i < cumulative_.size(); ++i) cumulative_[i] += payoff_vector[i];

  // Softmax with max subtraction; strictly positive entries by construction.
  const double top = rate_ * *std::max_element(cumulative_.begin(), cumulative_.end());
  std::vector<double> w(cumulative_.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(rate_ * cumulative_[i] - top);
    sum += w[i];
  }
  for (double& p : w) p /= sum;
  policy_ = SimplexVector(std::move(w));
}

}  // namespace erid

#include "erid/replay.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace erid {

ReplayBuffer::ReplayBuffer(std::size_t capacity, std::size_t num_actions)
    : capacity_(capacity), per_action_sum_(num_actions, 0.0), per_action_count_(num_actions, 0) {
  if (capacity == 0) throw std::invalid_argument("ReplayBuffer: zero capacity");
  if (num_actions < 2) throw std::invalid_argument("ReplayBuffer: need at least 2 actions");
  slots_.reserve(capacity);
}

void ReplayBuffer::push(std::size_t action, double reward) {
  if (action >= per_action_count_.size()) {
    throw std::out_of_range("ReplayBuffer: action " + std::to_string(action) +
                            " out of range");
  }
  if (!std::isfinite(reward)) {
    throw std::invalid_argument("ReplayBuffer: non-finite reward");
  }
  if (size_ == capacity_) {
    auto& oldest = slots_[head_];
    per_action_sum_[oldest.first] -= oldest.second;
    per_action_count_[oldest.first] -= 1;
    oldest = {action, reward};
    head_ = (head_ + 1) % capacity_;
  } else {
    slots_.emplace_back(action, reward);
    ++size_;
  }
  per_action_sum_[action] += reward;
  per_action_count_[action] += 1;
}

AverageRewards ReplayBuffer::average_rewards() const {
  if (size_ == 0) throw std::logic_error("ReplayBuffer: average of empty buffer");
  AverageRewards avg;
  avg.per_action.resize(per_action_sum_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < per_action_sum_.size(); ++i) {
    avg.per_action[i] = per_action_count_[i] > 0
                            ? per_action_sum_[i] / static_cast<double>(per_action_count_[i])
                            : 0.0;
    total += per_action_sum_[i];
  }
  avg.overall = total / static_cast<double>(size_);
  return avg;
}

std::vector<std::pair<std::size_t, double>> ReplayBuffer::entries() const {
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(size_);
  for (std::size_t k = 0; k < size_; ++k) {
    out.push_back(slots_[(head_ + k) % size_]);
  }
  return out;
}

}  // namespace erid

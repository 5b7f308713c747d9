#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace erid {

// Average rewards read out of a replay buffer: one mean per action (zero for
// actions with no samples) and the mean over every stored sample.
struct AverageRewards {
  std::vector<double> per_action;
  double overall = 0.0;
};

// Fixed-capacity FIFO store of (action, reward) samples. Per-action running
// sums and counts are maintained incrementally so the average readout is
// O(num_actions) rather than O(capacity); the inner learning loop calls it
// every step.
class ReplayBuffer {
 public:
  ReplayBuffer(std::size_t capacity, std::size_t num_actions);

  // Appends a sample, evicting the oldest one once the buffer is full.
  void push(std::size_t action, double reward);

  // Throws std::logic_error on an empty buffer. Before the buffer first
  // fills, the overall mean divides by the current occupancy, not the
  // capacity; a capacity divisor would drag the mean toward zero during
  // warm-up.
  AverageRewards average_rewards() const;

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t num_actions() const { return per_action_count_.size(); }
  bool full() const { return size_ == capacity_; }

  // Number of stored samples for one action (the size of its index set).
  std::size_t count(std::size_t action) const { return per_action_count_[action]; }

  // Stored samples in arrival order, oldest first.
  std::vector<std::pair<std::size_t, double>> entries() const;

 private:
  std::size_t capacity_;
  std::vector<std::pair<std::size_t, double>> slots_;
  std::size_t head_ = 0;  // index of the oldest entry once full
  std::size_t size_ = 0;
  std::vector<double> per_action_sum_;
  std::vector<std::size_t> per_action_count_;
};

}  // namespace erid

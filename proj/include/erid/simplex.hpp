#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace erid {

// Absolute tolerance on simplex membership (sum-to-one and nonnegativity).
inline constexpr double kSimplexTol = 1e-9;

// A probability distribution over M >= 2 actions. Construction validates;
// invalid input is rejected, never silently repaired. Repair is available
// only through the explicit project_to_simplex below.
class SimplexVector {
 public:
  explicit SimplexVector(std::vector<double> probs);

  static SimplexVector uniform(std::size_t m);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }
  std::span<const double> span() const { return probs_; }

  bool operator==(const SimplexVector& other) const = default;

 private:
  std::vector<double> probs_;
};

// Clips negative entries to zero and renormalizes. Idempotent on valid
// simplex vectors. Throws std::domain_error when nothing positive remains.
SimplexVector project_to_simplex(std::span<const double> v);

// Max-norm distance between two distributions of equal dimension.
double simplex_distance(const SimplexVector& a, const SimplexVector& b);

// A mixed-strategy pair, one distribution per player.
struct PolicyProfile {
  SimplexVector player1;
  SimplexVector player2;
};

// Per-action box constraints [lower_i, upper_i] on a distribution.
// Requires 0 <= lower_i < upper_i <= 1, sum(lower) <= 1 <= sum(upper).
class BoxBounds {
 public:
  BoxBounds(std::vector<double> lower, std::vector<double> upper);

  static BoxBounds unit(std::size_t m);  // [0,1] per action

  std::size_t size() const { return lower_.size(); }
  double lower(std::size_t i) const { return lower_[i]; }
  double upper(std::size_t i) const { return upper_[i]; }
  bool contains(const SimplexVector& x, double tol = kSimplexTol) const;

  bool operator==(const BoxBounds& other) const = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

}  // namespace erid

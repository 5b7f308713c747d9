#include "erid/simplex.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace erid {

namespace {

void check_dimension(std::size_t m) {
  if (m < 2) {
    throw std::invalid_argument("SimplexVector: need at least 2 actions, got " +
                                std::to_string(m));
  }
}

}  // namespace

SimplexVector::SimplexVector(std::vector<double> probs) : probs_(std::move(probs)) {
  check_dimension(probs_.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("SimplexVector: entry " + std::to_string(i) +
                                  " is " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTol) {
    throw std::invalid_argument("SimplexVector: entries sum to " + std::to_string(sum));
  }
}

SimplexVector SimplexVector::uniform(std::size_t m) {
  check_dimension(m);
  return SimplexVector(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

SimplexVector project_to_simplex(std::span<const double> v) {
  check_dimension(v.size());
  std::vector<double> clipped(v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw std::invalid_argument("project_to_simplex: non-finite entry");
    }
    clipped[i] = v[i] > 0.0 ? v[i] : 0.0;
    sum += clipped[i];
  }
  if (sum <= 0.0) {
    throw std::domain_error("project_to_simplex: no positive mass to normalize");
  }
  for (double& p : clipped) p /= sum;
  return SimplexVector(std::move(clipped));
}

double simplex_distance(const SimplexVector& a, const SimplexVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("simplex_distance: dimension mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

BoxBounds::BoxBounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size() || lower_.empty()) {
    throw std::invalid_argument("BoxBounds: lower/upper size mismatch");
  }
  double lo_sum = 0.0, hi_sum = 0.0;
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] >= 0.0) || !(lower_[i] < upper_[i]) || !(upper_[i] <= 1.0)) {
      throw std::invalid_argument("BoxBounds: need 0 <= lower < upper <= 1 at index " +
                                  std::to_string(i));
    }
    lo_sum += lower_[i];
    hi_sum += upper_[i];
  }
  if (lo_sum > 1.0 || hi_sum < 1.0) {
    throw std::invalid_argument("BoxBounds: box does not intersect the simplex");
  }
}

BoxBounds BoxBounds::unit(std::size_t m) {
  return BoxBounds(std::vector<double>(m, 0.0), std::vector<double>(m, 1.0));
}

bool BoxBounds::contains(const SimplexVector& x, double tol) const {
  if (x.size() != lower_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lower_[i] - tol || x[i] > upper_[i] + tol) return false;
  }
  return true;
}

}  // namespace erid

#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "cvxgap/errors.hpp"

namespace cvxgap {

/// Two nonnegative weights summing to one; q is stored as 1 - p so the
/// sum holds exactly. p in {0, 1} is legal (degenerate but meaningful).
class WeightPair {
public:
  explicit WeightPair(double p) : p_(p) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0)
      throw ConstraintError("weight p must lie in [0, 1], got " + std::to_string(p));
  }

  double p() const { return p_; }
  double q() const { return 1.0 - p_; }

private:
  double p_;
};

/// n >= 2 nonnegative weights summing to one. Construction requires the
/// input to sum to 1 within 1e-12 and then renormalizes by the computed
/// sum; `normalized` accepts any nonnegative vector with positive sum.
class WeightVector {
public:
  explicit WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    validate_nonnegative();
    const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-12)
      throw ConstraintError("weights must sum to 1 within 1e-12, got sum " +
                            std::to_string(sum));
    for (double& w : weights_) w /= sum;
  }

  static WeightVector normalized(std::vector<double> raw) {
    WeightVector out(private_tag{}, std::move(raw));
    out.validate_nonnegative();
    const double sum = std::accumulate(out.weights_.begin(), out.weights_.end(), 0.0);
    if (!(sum > 0.0))
      throw ConstraintError("weight normalization requires a positive sum");
    for (double& w : out.weights_) w /= sum;
    return out;
  }

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

private:
  struct private_tag {};
  WeightVector(private_tag, std::vector<double> w) : weights_(std::move(w)) {}

  void validate_nonnegative() const {
    if (weights_.size() < 2)
      throw ConstraintError("weight vector needs at least 2 entries");
    for (double w : weights_) {
      if (!std::isfinite(w) || w < 0.0)
        throw ConstraintError("weights must be finite and nonnegative");
    }
  }

  std::vector<double> weights_;
};

}  // namespace cvxgap

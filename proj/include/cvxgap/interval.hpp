#pragma once

#include <cmath>
#include <string>

#include "cvxgap/errors.hpp"

namespace cvxgap {

/// Closed interval [a, b] with finite endpoints and a < b.
class Interval {
public:
  Interval(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b))
      throw DomainError("interval endpoints must be finite");
    if (!(a < b))
      throw DomainError("interval requires a < b, got [" + std::to_string(a) +
                        ", " + std::to_string(b) + "]");
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  double midpoint() const { return (a_ + b_) / 2; }

  bool contains(double x) const { return a_ <= x && x <= b_; }
  double clamp(double x) const { return x < a_ ? a_ : (x > b_ ? b_ : x); }

  /// Mirror point of t across the midpoint: a + b - t.
  double reflect(double t) const { return a_ + b_ - t; }

  /// Convex combination p*a + (1-p)*b.
  double weighted_point(double p) const { return p * a_ + (1 - p) * b_; }

  friend bool operator==(const Interval& lhs, const Interval& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }

private:
  double a_;
  double b_;
};

}  // namespace cvxgap

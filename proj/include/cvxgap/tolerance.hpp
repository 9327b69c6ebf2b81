#pragma once

#include <algorithm>
#include <cmath>

namespace cvxgap {

/// Uniform slack convention for inequalities that are exact in real
/// arithmetic: lhs <= rhs "holds" iff lhs <= rhs + atol + rtol*max(|lhs|,|rhs|).
struct Tolerance {
  double atol = 1e-9;
  double rtol = 1e-9;

  double slack(double lhs, double rhs) const {
    return atol + rtol * std::max(std::abs(lhs), std::abs(rhs));
  }

  bool leq(double lhs, double rhs) const { return lhs <= rhs + slack(lhs, rhs); }
  bool geq(double lhs, double rhs) const { return leq(rhs, lhs); }
  bool close(double x, double y) const { return std::abs(x - y) <= slack(x, y); }
};

}  // namespace cvxgap

#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "cvxgap/errors.hpp"

namespace cvxgap {

struct GoldenResult {
  double arg;
  double value;
  int iterations;
};

/// Golden-section maximization of a concave function on [lo, hi].
/// Derivative-free and globally correct for concave objectives, including
/// piecewise-linear ones. Stops when the bracket is narrower than tol.
template <class F>
GoldenResult golden_section_max(F&& h, double lo, double hi, double tol,
                                int max_iterations = 200) {
  if (!(tol > 0)) throw ToleranceError("golden-section tolerance must be > 0");
  if (!(lo < hi)) throw OrderError("golden-section bracket requires lo < hi");

  static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - (hi - lo) * invphi;
  double d = lo + (hi - lo) * invphi;
  double hc = h(c);
  double hd = h(d);

  int iter = 0;
  while (hi - lo > tol) {
    if (++iter > max_iterations)
      throw ConvergenceError("golden-section search exceeded " +
                             std::to_string(max_iterations) + " iterations");
    if (hc > hd) {
      hi = d;
      d = c;
      hd = hc;
      c = hi - (hi - lo) * invphi;
      hc = h(c);
    } else {
      lo = c;
      c = d;
      hc = hd;
      d = lo + (hi - lo) * invphi;
      hd = h(d);
    }
  }

  const double arg = (lo + hi) / 2;
  return GoldenResult{arg, h(arg), iter};
}

}  // namespace cvxgap

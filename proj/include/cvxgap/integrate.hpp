#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "cvxgap/errors.hpp"
#include "cvxgap/interval.hpp"

namespace cvxgap {

namespace detail {

template <class F>
double eval_interior(F& h, double x) {
  const double v = h(x);
  if (!std::isfinite(v))
    throw NonFiniteError("integrand non-finite at interior point " + std::to_string(x));
  return v;
}

template <class F>
double simpson_fixed(F& h, double a, double b, int panels) {
  double sum = 0;
  double xl = a, fl = eval_interior(h, a);
  for (int i = 1; i <= panels; ++i) {
    const double xr = i == panels ? b : a + (b - a) * i / panels;
    const double fm = eval_interior(h, (xl + xr) / 2);
    const double fr = eval_interior(h, xr);
    sum += (xr - xl) / 6 * (fl + 4 * fm + fr);
    xl = xr;
    fl = fr;
  }
  return sum;
}

// Classic adaptive Simpson: accept a panel when the two-half refinement
// moves the estimate by at most 15x the local budget, which bounds the
// extrapolated error by the budget itself.
template <class F>
double adaptive_simpson(F& h, double a, double b, double fa, double fm, double fb,
                        double whole, double abs_tol, int depth) {
  const double m = (a + b) / 2;
  const double lm = (a + m) / 2, rm = (m + b) / 2;
  if (!(a < lm && lm < m && m < rm && rm < b)) return whole;  // width at rounding floor
  const double flm = eval_interior(h, lm);
  const double frm = eval_interior(h, rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (!std::isfinite(left) || !std::isfinite(right))
    throw ConvergenceError("Simpson panel sum overflowed near " + std::to_string(a) +
                           "; integrand magnitude exceeds the representable range");
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15 * abs_tol) return left + right + delta / 15;
  if (depth >= 60)
    throw ConvergenceError("adaptive Simpson exceeded recursion depth 60 on [" +
                           std::to_string(a) + ", " + std::to_string(b) + "]");
  return adaptive_simpson(h, a, m, fa, flm, fm, left, abs_tol / 2, depth + 1) +
         adaptive_simpson(h, m, b, fm, frm, fb, right, abs_tol / 2, depth + 1);
}

template <class F>
double integrate_closed(F& h, double a, double b, double abs_tol, int panels = 8) {
  double sum = 0;
  double xl = a, fl = eval_interior(h, a);
  for (int i = 1; i <= panels; ++i) {
    const double xr = i == panels ? b : a + (b - a) * i / panels;
    const double fm = eval_interior(h, (xl + xr) / 2);
    const double fr = eval_interior(h, xr);
    const double whole = (xr - xl) / 6 * (fl + 4 * fm + fr);
    if (!std::isfinite(whole))
      throw ConvergenceError("Simpson panel sum overflowed near " + std::to_string(xl));
    sum += adaptive_simpson(h, xl, xr, fl, fm, fr, whole, abs_tol / panels, 0);
    xl = xr;
    fl = fr;
  }
  return sum;
}

// Integrates up to an endpoint where the integrand is unbounded: panels
// halve geometrically toward the singular point and the series is cut once
// a panel's contribution drops below the budget. When the panel width hits
// the rounding floor first (points closer to the singularity are not
// representable, which happens within ~50 panels near a nonzero endpoint),
// the remaining mass is extrapolated from the observed decay ratio; a
// series that is not clearly contracting is refused instead of guessed at.
template <class F>
double geometric_tail(F& h, double singular, double edge, double abs_tol) {
  double acc = 0;
  double outer = edge;
  double last = std::numeric_limits<double>::quiet_NaN();
  double ratio = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0; k < 1200; ++k) {
    const double inner = singular + (outer - singular) / 2;
    if (!(std::abs(inner - singular) > 0) || inner == outer) {
      if (std::isfinite(ratio) && ratio < 0.95) return acc + last * ratio / (1 - ratio);
      throw ConvergenceError("endpoint panel width underflowed before the tail converged");
    }
    const double lo = std::min(inner, outer), hi = std::max(inner, outer);
    const double contrib = integrate_closed(h, lo, hi, abs_tol / 1024, 2);
    acc += contrib;
    if (std::abs(contrib) <= abs_tol / 64) return acc;
    if (std::isfinite(last) && std::abs(last) > 0) ratio = std::abs(contrib) / std::abs(last);
    last = contrib;
    outer = inner;
  }
  throw ConvergenceError("endpoint tail did not converge within 1200 panels");
}

}  // namespace detail

/// Adaptive Simpson estimate of the integral of h over I, targeting
/// |error| <= tol * (1 + |result|). Endpoint values may be non-finite
/// (integrable endpoint singularities); interior non-finite values throw.
template <class F>
double integrate(F&& h, Interval I, double tol = 1e-10) {
  if (!(tol > 0)) throw ToleranceError("integrate requires tol > 0");
  const double a = I.a(), b = I.b();
  const double fa = h(a), fb = h(b);
  const bool open_left = !std::isfinite(fa);
  const bool open_right = !std::isfinite(fb);

  const double inset = I.length() / 8;
  const double lo = open_left ? a + inset : a;
  const double hi = open_right ? b - inset : b;

  const double scale = detail::simpson_fixed(h, lo, hi, 16);
  if (!std::isfinite(scale))
    throw ConvergenceError("integrand magnitude overflows the scale estimate");
  const double abs_tol = tol * (1 + std::abs(scale));

  double result = detail::integrate_closed(h, lo, hi, abs_tol);
  if (open_left) result += detail::geometric_tail(h, a, lo, abs_tol);
  if (open_right) result += detail::geometric_tail(h, b, hi, abs_tol);
  return result;
}

}  // namespace cvxgap

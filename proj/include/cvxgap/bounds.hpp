#pragma once

#include <utility>

#include "cvxgap/convex_function.hpp"
#include "cvxgap/gaps.hpp"
#include "cvxgap/golden_section.hpp"
#include "cvxgap/tolerance.hpp"
#include "cvxgap/weights.hpp"

namespace cvxgap {

struct BoundReport {
  double t_opt;      // max_p [p f(a) + q f(b) - f(pa + qb)]
  double t_prime;    // f(a) + f(b) - 2 f((a+b)/2)
  double argmax_p;   // a maximizer; non-unique when the objective plateaus
  int iterations;
};

/// T'(a, b) = F(a, b), the endpoint midpoint gap. Coarser than the optimal
/// bound but closed-form.
inline double t_prime(const ConvexFunction& f) {
  return midpoint_gap(f, f.domain().a(), f.domain().b());
}

/// Optimal global Jensen-gap bound T(a, b): maximizes
/// h(p) = p f(a) + (1-p) f(b) - f(pa + (1-p)b) over p in [0, 1].
/// h is concave for convex f, so golden-section search is globally correct.
inline BoundReport t_opt(const ConvexFunction& f, double tol_p = 1e-10) {
  if (!(tol_p > 0)) throw ToleranceError("t_opt requires tol_p > 0");
  const double a = f.domain().a(), b = f.domain().b();
  const double fa = f(a), fb = f(b);
  auto h = [&](double p) { return p * fa + (1 - p) * fb - f(p * a + (1 - p) * b); };
  const GoldenResult r = golden_section_max(h, 0.0, 1.0, tol_p);
  return BoundReport{r.value, t_prime(f), r.arg, r.iterations};
}

/// The two links of the chain F*(p, q; x, y) <= F(x, y) <= F(a, b),
/// reported separately for diagnosability.
inline std::pair<bool, bool> prop_z_links(const ConvexFunction& f, WeightPair w,
                                          double x, double y, Tolerance tol = {}) {
  const double fstar = weighted_gap(f, w, x, y);
  const double gap_xy = midpoint_gap(f, x, y);
  const double gap_ab = midpoint_gap(f, f.domain().a(), f.domain().b());
  return {tol.leq(fstar, gap_xy), tol.leq(gap_xy, gap_ab)};
}

inline bool prop_z_check(const ConvexFunction& f, WeightPair w, double x, double y,
                         Tolerance tol = {}) {
  const auto [link1, link2] = prop_z_links(f, w, x, y, tol);
  return link1 && link2;
}

}  // namespace cvxgap

#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvxgap/convex_function.hpp"
#include "cvxgap/errors.hpp"
#include "cvxgap/tolerance.hpp"
#include "cvxgap/weights.hpp"

namespace cvxgap {

/// F(s, t) = f(s) + f(t) - 2 f((s+t)/2). Symmetric in (s, t); nonnegative
/// for convex f.
inline double midpoint_gap(const ConvexFunction& f, double s, double t) {
  f.require_inside(s);
  f.require_inside(t);
  return f(s) + f(t) - 2 * f((s + t) / 2);
}

/// F*(p, q; x, y) = p f(x) + q f(y) - f(px + qy).
inline double weighted_gap(const ConvexFunction& f, WeightPair w, double x, double y) {
  f.require_inside(x);
  f.require_inside(y);
  return w.p() * f(x) + w.q() * f(y) - f(w.p() * x + w.q() * y);
}

/// J(p, x) = sum p_i f(x_i) - f(sum p_i x_i).
inline double jensen_functional(const ConvexFunction& f, const WeightVector& w,
                                std::span<const double> xs) {
  if (xs.size() != w.size())
    throw LengthMismatchError("weight count " + std::to_string(w.size()) +
                              " != point count " + std::to_string(xs.size()));
  double mean = 0, fsum = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    f.require_inside(xs[i]);
    mean += w[i] * xs[i];
    fsum += w[i] * f(xs[i]);
  }
  return fsum - f(mean);
}

inline double jensen_functional(const ConvexFunction& f, const WeightVector& w,
                                const std::vector<double>& xs) {
  return jensen_functional(f, w, std::span<const double>(xs));
}

struct Lemma1Sides {
  double lhs_i, rhs_i;    // (f(x2)-f(x1))/2  vs  f((x2+x3)/2) - f((x1+x3)/2)
  double lhs_ii, rhs_ii;  // (f(x3)-f(x2))/2  vs  f((x1+x3)/2) - f((x1+x2)/2)
};

inline Lemma1Sides lemma1_sides(const ConvexFunction& f, double x1, double x2, double x3) {
  if (!(x1 < x2 && x2 < x3))
    throw OrderError("lemma requires x1 < x2 < x3");
  f.require_inside(x1);
  f.require_inside(x2);
  f.require_inside(x3);
  Lemma1Sides s;
  s.lhs_i = (f(x2) - f(x1)) / 2;
  s.rhs_i = f((x2 + x3) / 2) - f((x1 + x3) / 2);
  s.lhs_ii = (f(x3) - f(x2)) / 2;
  s.rhs_ii = f((x1 + x3) / 2) - f((x1 + x2) / 2);
  return s;
}

/// Both one-sided chord estimates; for convex f each holds.
inline std::pair<bool, bool> lemma1_check(const ConvexFunction& f, double x1, double x2,
                                          double x3, Tolerance tol = {}) {
  const Lemma1Sides s = lemma1_sides(f, x1, x2, x3);
  return {tol.leq(s.lhs_i, s.rhs_i), tol.geq(s.lhs_ii, s.rhs_ii)};
}

/// For x + y = a + b: f(x) + f(y) <= f(a) + f(b).
inline bool chord_sum_check(const ConvexFunction& f, double x, double y,
                            Tolerance tol = {}) {
  f.require_inside(x);
  f.require_inside(y);
  const double a = f.domain().a(), b = f.domain().b();
  if (std::abs((x + y) - (a + b)) > 1e-12)
    throw ConstraintError("chord_sum_check requires x + y = a + b (within 1e-12)");
  return tol.leq(f(x) + f(y), f(a) + f(b));
}

struct Chain4 {
  double lower;   // 2 f((a+b)/2)
  double middle;  // f(pa + qb) + f(pb + qa)
  double upper;   // f(a) + f(b)
};

/// The pointwise-in-p chain 2f((a+b)/2) <= f(pa+qb) + f(pb+qa) <= f(a)+f(b).
inline Chain4 chain4_bounds(const ConvexFunction& f, WeightPair w) {
  const double a = f.domain().a(), b = f.domain().b();
  Chain4 c;
  c.lower = 2 * f(f.domain().midpoint());
  c.middle = f(w.p() * a + w.q() * b) + f(w.p() * b + w.q() * a);
  c.upper = f(a) + f(b);
  return c;
}

}  // namespace cvxgap

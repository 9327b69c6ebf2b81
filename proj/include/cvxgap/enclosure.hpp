#pragma once

#include <cmath>
#include <string>

#include "cvxgap/convex_function.hpp"
#include "cvxgap/errors.hpp"
#include "cvxgap/integrate.hpp"
#include "cvxgap/kernel.hpp"
#include "cvxgap/tolerance.hpp"

namespace cvxgap {

/// Certified bracket of a weighted integral of f:
///   lower = 2 f((a+b)/2) * M,  middle = int (g(t) + g(a+b-t)) f(t) dt,
///   upper = (f(a) + f(b)) * M,  with M = int g.
/// For convex f the chain lower <= middle <= upper holds.
struct Enclosure {
  double lower;
  double middle;
  double upper;
  double kernel_mass;

  bool holds(Tolerance tol = {}) const {
    return tol.leq(lower, middle) && tol.leq(middle, upper);
  }

  /// Chain divided by the kernel mass (the normalized corollary displays).
  Enclosure normalized() const {
    if (!(kernel_mass > 0)) throw ParameterError("normalization requires positive kernel mass");
    return Enclosure{lower / kernel_mass, middle / kernel_mass, upper / kernel_mass,
                     kernel_mass};
  }
};

namespace detail {

inline void require_same_domain(const ConvexFunction& f, const Kernel& g) {
  const Interval &df = f.domain(), &dg = g.domain();
  const double slack =
      1e-12 * (1 + std::abs(df.a()) + std::abs(df.b()) + std::abs(dg.a()) + std::abs(dg.b()));
  if (std::abs(df.a() - dg.a()) > slack || std::abs(df.b() - dg.b()) > slack)
    throw DomainMismatchError("function domain [" + std::to_string(df.a()) + ", " +
                              std::to_string(df.b()) + "] != kernel domain [" +
                              std::to_string(dg.a()) + ", " + std::to_string(dg.b()) + "]");
}

}  // namespace detail

/// Integral enclosure with the symmetrized kernel weight g(t) + g(a+b-t),
/// exactly as the chain is stated; the pre-symmetrized identity is a
/// property checked in tests, not assumed here.
inline Enclosure weighted_enclosure(const ConvexFunction& f, const Kernel& g,
                                    double quad_tol = 1e-10) {
  detail::require_same_domain(f, g);
  const Interval I = f.domain();
  const double mass = integrate([&](double t) { return g(t); }, g.domain(), quad_tol);
  const double middle =
      integrate([&](double t) { return (g(t) + g(I.reflect(t))) * f(t); }, I, quad_tol);
  const double lower = 2 * f(I.midpoint()) * mass;
  const double upper = (f(I.a()) + f(I.b())) * mass;
  return Enclosure{lower, middle, upper, mass};
}

/// The symmetric-interval specialization: on [-a, a] the reflection
/// t -> a+b-t is just t -> -t, so the chain reads
///   2 f(0) M <= int (g(-t) + g(t)) f(t) dt <= (f(-a) + f(a)) M.
inline Enclosure symmetric_convolution_enclosure(const ConvexFunction& f, const Kernel& g,
                                                 double half_width,
                                                 double quad_tol = 1e-10) {
  if (!(half_width > 0))
    throw DomainError("symmetric convolution requires half-width a > 0");
  const Interval& d = f.domain();
  const double slack = 1e-12 * (1 + std::abs(half_width));
  if (std::abs(d.a() + half_width) > slack || std::abs(d.b() - half_width) > slack)
    throw DomainError("domain must be [-a, a] with a = " + std::to_string(half_width));
  return weighted_enclosure(f, g, quad_tol);
}

struct HHChain {
  double lower;   // f((a+b)/2)
  double middle;  // (1/(b-a)) int f
  double upper;   // (f(a) + f(b))/2
};

/// Recovers the midpoint/mean/endpoint-average chain by averaging the
/// two-point chain over the weight p. The p-average (midpoint rule, n_p
/// cells) and the direct quadrature route must agree within 10/n_p^2
/// relative; disagreement signals a quadrature failure.
inline HHChain hh_recover(const ConvexFunction& f, int n_p = 10000,
                          double quad_tol = 1e-10) {
  if (n_p < 2) throw ParameterError("hh_recover requires n_p >= 2");
  const Interval I = f.domain();
  const double a = I.a(), b = I.b();

  double avg = 0;
  for (int k = 0; k < n_p; ++k) {
    const double p = (k + 0.5) / n_p;
    avg += f(p * a + (1 - p) * b) + f(p * b + (1 - p) * a);
  }
  avg /= 2 * n_p;

  const double mean = integrate([&](double t) { return f(t); }, I, quad_tol) / I.length();

  const double tol = 10.0 / (static_cast<double>(n_p) * n_p);
  if (std::abs(avg - mean) > tol * (1 + std::max(std::abs(avg), std::abs(mean))))
    throw CrossCheckError("p-averaged chain " + std::to_string(avg) +
                          " disagrees with quadrature mean " + std::to_string(mean));

  return HHChain{f(I.midpoint()), mean, (f(a) + f(b)) / 2};
}

}  // namespace cvxgap

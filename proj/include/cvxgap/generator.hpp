#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cvxgap/convex_function.hpp"
#include "cvxgap/errors.hpp"
#include "cvxgap/interval.hpp"
#include "cvxgap/rng.hpp"

namespace cvxgap {

/// Recipe for a random convex function
///   f(x) = c0 + c1 x + q x^2 + sum_k w_k max(0, x - t_k)
/// with q >= 0, w_k >= 0 and knots strictly inside the interval.
/// Identical (spec, interval) gives a bit-identical function.
struct ConvexGeneratorSpec {
  int n_hinges = 3;
  std::pair<double, double> quad_coeff_range{0.0, 2.0};
  std::pair<double, double> hinge_weight_range{0.0, 2.0};
  std::pair<double, double> affine_range{-2.0, 2.0};
  std::uint64_t seed = 0;
};

namespace detail {

inline void validate(const ConvexGeneratorSpec& s) {
  if (s.n_hinges < 0) throw RangeError("n_hinges must be >= 0");
  auto ordered = [](const std::pair<double, double>& r) { return r.first <= r.second; };
  if (!ordered(s.quad_coeff_range) || !ordered(s.hinge_weight_range) ||
      !ordered(s.affine_range))
    throw RangeError("generator ranges must satisfy lo <= hi");
  if (s.quad_coeff_range.first < 0)
    throw RangeError("quadratic coefficient range must be nonnegative");
  if (s.hinge_weight_range.first < 0)
    throw RangeError("hinge weight range must be nonnegative");
}

}  // namespace detail

inline QuadHinge draw_quad_hinge(const ConvexGeneratorSpec& spec, Interval domain) {
  detail::validate(spec);
  Rng rng(spec.seed);
  QuadHinge c;
  c.c0 = rng.uniform(spec.affine_range.first, spec.affine_range.second);
  c.c1 = rng.uniform(spec.affine_range.first, spec.affine_range.second);
  c.quad = rng.uniform(spec.quad_coeff_range.first, spec.quad_coeff_range.second);
  c.hinges.reserve(static_cast<std::size_t>(spec.n_hinges));
  for (int k = 0; k < spec.n_hinges; ++k) {
    const double w = rng.uniform(spec.hinge_weight_range.first, spec.hinge_weight_range.second);
    // knot kept strictly interior: map [0,1) into [0.01, 0.99)
    const double u = 0.01 + 0.98 * rng.uniform01();
    c.hinges.emplace_back(w, domain.a() + domain.length() * u);
  }
  return c;
}

inline ConvexFunction generate_convex(const ConvexGeneratorSpec& spec, Interval domain) {
  return make_quad_hinge(domain, draw_quad_hinge(spec, domain),
                         "quad_hinge:" + std::to_string(spec.seed));
}

}  // namespace cvxgap

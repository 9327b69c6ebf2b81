#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvxgap/bounds.hpp"
#include "cvxgap/convex_function.hpp"
#include "cvxgap/errors.hpp"
#include "cvxgap/gaps.hpp"
#include "cvxgap/generator.hpp"
#include "cvxgap/tolerance.hpp"

namespace cvxgap {

/// Exhaustive-grid maximum of a two-point gap functional. endpoint_value is
/// the value at (a, b); the endpoint-max claim passes when the grid max does
/// not exceed it beyond tolerance.
struct GridOracleResult {
  double max_value;
  std::pair<double, double> argmax;
  double endpoint_value;
  int grid_size;

  bool endpoint_is_max(Tolerance tol = {}) const {
    return tol.leq(max_value, endpoint_value);
  }
};

namespace detail {

inline double grid_point(const Interval& I, int i, int n) {
  return i == n - 1 ? I.b() : I.a() + I.length() * i / (n - 1);
}

template <class Gap>
GridOracleResult grid_scan(const ConvexFunction& f, int n, Gap&& gap) {
  if (n < 2) throw ParameterError("grid scan requires n >= 2");
  const Interval& I = f.domain();
  double best = -std::numeric_limits<double>::infinity();
  std::pair<double, double> arg{I.a(), I.a()};
  for (int i = 0; i < n; ++i) {
    const double s = grid_point(I, i, n);
    for (int j = 0; j < n; ++j) {
      const double t = grid_point(I, j, n);
      const double v = gap(s, t);
      if (v > best) {
        best = v;
        arg = {s, t};
      }
    }
  }
  return GridOracleResult{best, arg, gap(I.a(), I.b()), n};
}

}  // namespace detail

/// Brute-force oracle for the endpoint-max theorem on F(s, t): scans an
/// n x n uniform grid (corners included, so the predicted argmax is
/// representable) and reports the max alongside F(a, b).
inline GridOracleResult grid_max_F(const ConvexFunction& f, int n = 101) {
  return detail::grid_scan(f, n,
                           [&](double s, double t) { return midpoint_gap(f, s, t); });
}

/// Same scan for F*(p, q; x, y) at fixed weights. No inequality asserted:
/// the endpoint-max claim is generally false here and this oracle exists to
/// explore where it breaks.
inline GridOracleResult grid_max_Fstar(const ConvexFunction& f, WeightPair w, int n = 101) {
  return detail::grid_scan(f, n,
                           [&](double x, double y) { return weighted_gap(f, w, x, y); });
}

struct FstarCounterexample {
  std::uint64_t seed;
  double interval_a, interval_b;
  double p;
  double x, y;
  double fstar_xy;  // strictly exceeds fstar_ab beyond tolerance
  double fstar_ab;
  double f_ab;      // F(a, b); always an upper bound on fstar_xy
};

/// Searches generated convex functions for witnesses that the endpoint-max
/// claim fails for F* at unequal weights. Every record is re-verified by
/// fresh evaluation, and the F* <= F(a, b) cap must still hold on each one;
/// a cap violation means a convexity certificate lied.
inline std::vector<FstarCounterexample> fstar_counterexample_search(
    std::span<const ConvexGeneratorSpec> specs, Interval domain,
    std::span<const double> p_grid, int n, Tolerance tol = {}) {
  if (specs.empty() || p_grid.empty() || n < 2)
    throw ParameterError("counterexample search needs specs, a p-grid and n >= 2");
  std::vector<FstarCounterexample> found;
  for (const ConvexGeneratorSpec& spec : specs) {
    const ConvexFunction f = generate_convex(spec, domain);
    const double f_ab = midpoint_gap(f, domain.a(), domain.b());
    for (const double p : p_grid) {
      const WeightPair w(p);
      const double fstar_ab = weighted_gap(f, w, domain.a(), domain.b());
      for (int i = 0; i < n; ++i) {
        const double x = detail::grid_point(domain, i, n);
        for (int j = 0; j < n; ++j) {
          const double y = detail::grid_point(domain, j, n);
          const double v = w.p() * f(x) + w.q() * f(y) - f(w.p() * x + w.q() * y);
          if (v <= fstar_ab + tol.slack(v, fstar_ab)) continue;
          const double fresh = weighted_gap(f, w, x, y);
          if (fresh <= fstar_ab + tol.slack(fresh, fstar_ab)) continue;
          if (!tol.leq(fresh, f_ab))
            throw CrossCheckError("F* exceeded F(a,b) for seed " +
                                  std::to_string(spec.seed) + " at p=" + std::to_string(p));
          found.push_back(FstarCounterexample{spec.seed, domain.a(), domain.b(), p, x, y,
                                              fresh, fstar_ab, f_ab});
        }
      }
    }
  }
  return found;
}

}  // namespace cvxgap

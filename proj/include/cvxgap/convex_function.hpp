#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cvxgap/errors.hpp"
#include "cvxgap/interval.hpp"
#include "cvxgap/rng.hpp"
#include "cvxgap/tolerance.hpp"

namespace cvxgap {

enum class Certificate {
  ProvablyConvex,  // convex by construction
  Sampled,         // convexity spot-checked on a probe set
  Asserted,        // caller's claim, unchecked
};

inline const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::ProvablyConvex: return "provably_convex";
    case Certificate::Sampled: return "sampled";
    default: return "asserted";
  }
}

/// Immutable evaluable function on a closed interval, tagged with a
/// convexity certificate. Evaluation clamps arguments that overshoot the
/// domain by rounding noise (convex combinations can land an ulp outside);
/// anything further out throws DomainError.
class ConvexFunction {
public:
  ConvexFunction(Interval domain, std::function<double(double)> evaluator,
                 Certificate certificate, std::string label,
                 int probe_points = 257)
      : domain_(domain),
        eval_(std::move(evaluator)),
        certificate_(certificate),
        label_(std::move(label)) {
    if (!eval_) throw ParameterError("null evaluator for '" + label_ + "'");
    probe_finite(probe_points);
  }

  double operator()(double x) const {
    if (!domain_.contains(x)) {
      if (std::abs(x - domain_.clamp(x)) <= round_slack())
        x = domain_.clamp(x);
      else
        throw DomainError("argument " + std::to_string(x) + " outside domain of '" +
                          label_ + "'");
    }
    return eval_(x);
  }

  const Interval& domain() const { return domain_; }
  Certificate certificate() const { return certificate_; }
  const std::string& label() const { return label_; }

  void require_inside(double x) const {
    if (!domain_.contains(x))
      throw DomainError("point " + std::to_string(x) + " outside [" +
                        std::to_string(domain_.a()) + ", " +
                        std::to_string(domain_.b()) + "] of '" + label_ + "'");
  }

private:
  double round_slack() const {
    return 16 * std::numeric_limits<double>::epsilon() *
           (1 + std::abs(domain_.a()) + std::abs(domain_.b()));
  }

  void probe_finite(int n) const {
    n = std::max(n, 2);
    for (int i = 0; i < n; ++i) {
      const double x = i == n - 1
                           ? domain_.b()
                           : domain_.a() + domain_.length() * i / (n - 1);
      if (!std::isfinite(eval_(x)))
        throw NonFiniteError("evaluator of '" + label_ + "' non-finite at " +
                             std::to_string(x));
    }
  }

  Interval domain_;
  std::function<double(double)> eval_;
  Certificate certificate_;
  std::string label_;
};

/// Piecewise-linear interpolant over strictly increasing breakpoints.
/// Convexity of the interpolant is exactly testable: chord slopes must be
/// nondecreasing.
class PiecewiseLinear {
public:
  PiecewiseLinear(std::vector<double> xs, std::vector<double> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size()) throw LengthMismatchError("x/y sample counts differ");
    if (xs_.size() < 2) throw ConstraintError("need at least 2 sample points");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i]))
        throw NonFiniteError("non-finite sample point");
      if (i > 0 && !(xs_[i] > xs_[i - 1]))
        throw ConstraintError("sample x values must be strictly increasing");
    }
    slopes_.reserve(xs_.size() - 1);
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
      slopes_.push_back((ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]));
  }

  double operator()(double x) const {
    // segments closed left, open right; last segment closed
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = it == xs_.begin() ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
    if (i >= slopes_.size()) i = slopes_.size() - 1;
    return ys_[i] + slopes_[i] * (x - xs_[i]);
  }

  /// Exact comparison, no tolerance.
  bool has_nondecreasing_slopes() const {
    for (std::size_t i = 0; i + 1 < slopes_.size(); ++i)
      if (slopes_[i + 1] < slopes_[i]) return false;
    return true;
  }

  Interval domain() const { return Interval(xs_.front(), xs_.back()); }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  const std::vector<double>& slopes() const { return slopes_; }

private:
  std::vector<double> xs_, ys_;
  std::vector<double> slopes_;
};

/// Coefficients of c0 + c1*x + quad*x^2 + sum_k w_k * max(0, x - t_k).
/// Convex whenever quad >= 0 and every w_k >= 0.
struct QuadHinge {
  double c0 = 0;
  double c1 = 0;
  double quad = 0;
  std::vector<std::pair<double, double>> hinges;  // (weight, knot)
};

inline ConvexFunction make_square(Interval domain) {
  return ConvexFunction(domain, [](double x) { return x * x; },
                        Certificate::ProvablyConvex, "square");
}

inline ConvexFunction make_exp(Interval domain) {
  return ConvexFunction(domain, [](double x) { return std::exp(x); },
                        Certificate::ProvablyConvex, "exp");
}

inline ConvexFunction make_abs_shift(Interval domain, double center) {
  return ConvexFunction(domain, [center](double x) { return std::abs(x - center); },
                        Certificate::ProvablyConvex,
                        "abs_shift:" + std::to_string(center));
}

inline ConvexFunction make_neglog(Interval domain) {
  if (!(domain.a() > 0))
    throw DomainError("neglog requires a > 0");
  return ConvexFunction(domain, [](double x) { return -std::log(x); },
                        Certificate::ProvablyConvex, "neglog");
}

inline ConvexFunction make_affine(Interval domain, double c0, double c1,
                                  std::string label = "affine") {
  return ConvexFunction(domain, [c0, c1](double x) { return c0 + c1 * x; },
                        Certificate::ProvablyConvex, std::move(label));
}

inline ConvexFunction make_quad_hinge(Interval domain, QuadHinge coef,
                                      std::string label = "quad_hinge") {
  if (!(coef.quad >= 0)) throw ConstraintError("quadratic coefficient must be >= 0");
  for (const auto& [w, t] : coef.hinges) {
    if (!(w >= 0)) throw ConstraintError("hinge weights must be >= 0");
    if (!(domain.a() < t && t < domain.b()))
      throw ConstraintError("hinge knots must lie in the open interval");
  }
  auto eval = [coef](double x) {
    double v = coef.c0 + coef.c1 * x + coef.quad * x * x;
    for (const auto& [w, t] : coef.hinges) v += w * std::max(0.0, x - t);
    return v;
  };
  return ConvexFunction(domain, std::move(eval), Certificate::ProvablyConvex,
                        std::move(label));
}

/// ProvablyConvex iff the chord slopes are nondecreasing, Asserted otherwise.
inline ConvexFunction make_piecewise_linear(std::vector<double> xs, std::vector<double> ys,
                                            std::string label = "piecewise_linear") {
  auto pl = std::make_shared<PiecewiseLinear>(std::move(xs), std::move(ys));
  const Certificate cert = pl->has_nondecreasing_slopes() ? Certificate::ProvablyConvex
                                                          : Certificate::Asserted;
  const Interval domain = pl->domain();
  return ConvexFunction(domain, [pl](double x) { return (*pl)(x); }, cert,
                        std::move(label));
}

/// Spot-checks midpoint convexity on random point pairs; the check is a
/// probe, not a proof, hence Certificate::Sampled.
inline ConvexFunction make_sampled(Interval domain, std::function<double(double)> eval,
                                   std::string label, int checks = 200,
                                   Tolerance tol = {}) {
  ConvexFunction f(domain, std::move(eval), Certificate::Sampled, std::move(label));
  Rng rng(0x5a17u);
  for (int i = 0; i < checks; ++i) {
    const double x = rng.uniform(domain.a(), domain.b());
    const double y = rng.uniform(domain.a(), domain.b());
    const double lhs = f((x + y) / 2);
    const double rhs = (f(x) + f(y)) / 2;
    if (!tol.leq(lhs, rhs))
      throw ConstraintError("midpoint convexity spot-check failed for '" + f.label() +
                            "' at x=" + std::to_string(x) + " y=" + std::to_string(y));
  }
  return f;
}

inline ConvexFunction make_asserted(Interval domain, std::function<double(double)> eval,
                                    std::string label) {
  return ConvexFunction(domain, std::move(eval), Certificate::Asserted,
                        std::move(label));
}

}  // namespace cvxgap

#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvxgap/convex_function.hpp"
#include "cvxgap/errors.hpp"
#include "cvxgap/interval.hpp"

namespace cvxgap {

/// Nonnegative integrable weight function g on an interval. Nonnegativity
/// is probe-checked on a 1001-point interior grid at construction; kernels
/// unbounded at an endpoint carry singular_endpoints = true and are only
/// ever evaluated on the open interior by the quadrature.
class Kernel {
public:
  Kernel(Interval domain, std::function<double(double)> evaluator, std::string label,
         bool singular_endpoints = false,
         std::optional<double> closed_form_mass = std::nullopt)
      : domain_(domain),
        eval_(std::move(evaluator)),
        label_(std::move(label)),
        singular_endpoints_(singular_endpoints),
        closed_form_mass_(closed_form_mass) {
    if (!eval_) throw ParameterError("null kernel evaluator for '" + label_ + "'");
    probe_nonnegative();
  }

  double operator()(double t) const { return eval_(t); }
  const Interval& domain() const { return domain_; }
  const std::string& label() const { return label_; }
  bool singular_endpoints() const { return singular_endpoints_; }
  std::optional<double> closed_form_mass() const { return closed_form_mass_; }

private:
  void probe_nonnegative() const {
    const int n = 1001;
    for (int i = 1; i <= n; ++i) {
      const double t = domain_.a() + domain_.length() * i / (n + 1);
      const double v = eval_(t);
      if (!std::isfinite(v))
        throw NonFiniteError("kernel '" + label_ + "' non-finite at interior point " +
                             std::to_string(t));
      if (v < -1e-12)
        throw ConstraintError("kernel '" + label_ + "' negative at " + std::to_string(t) +
                              " (value " + std::to_string(v) + ")");
    }
  }

  Interval domain_;
  std::function<double(double)> eval_;
  std::string label_;
  bool singular_endpoints_;
  std::optional<double> closed_form_mass_;
};

inline Kernel uniform_kernel(Interval domain) {
  return Kernel(domain, [](double) { return 1.0; }, "uniform", false, domain.length());
}

/// g(t) = t^(alpha-1) on [a, b] with 0 < a < b; mass (b^alpha - a^alpha)/alpha.
/// For alpha < 1 the kernel steepens sharply toward a, so it is flagged for
/// open-endpoint treatment even though it stays finite on a > 0.
inline Kernel power_kernel(Interval domain, double alpha) {
  if (!(domain.a() > 0)) throw DomainError("power kernel requires a > 0");
  if (alpha == 0) throw ParameterError("power kernel requires alpha != 0");
  const double mass = (std::pow(domain.b(), alpha) - std::pow(domain.a(), alpha)) / alpha;
  return Kernel(domain, [alpha](double t) { return std::pow(t, alpha - 1); },
                "power:" + std::to_string(alpha), alpha < 1, mass);
}

/// g(t) = 1/(t (a+b-t)) on [a, b] with a > 0; the alpha -> 0 limit of the
/// power kernel after normalization. Symmetric under t -> a+b-t, and
/// integrates to 2 log(b/a)/(a+b) by partial fractions.
inline Kernel log_limit_kernel(Interval domain) {
  if (!(domain.a() > 0)) throw DomainError("log-limit kernel requires a > 0");
  const double c = domain.a() + domain.b();
  const double mass = 2 * std::log(domain.b() / domain.a()) / c;
  return Kernel(domain, [c](double t) { return 1 / (t * (c - t)); }, "loglimit", false,
                mass);
}

enum class SineVariant {
  FullSine,    // g = sin on [0, pi]; symmetric, mass 2
  SinPlusCos,  // g = sin on [0, pi/2]; symmetrization is sin + cos, mass 1
};

inline Kernel sine_kernel(SineVariant variant) {
  if (variant == SineVariant::FullSine) {
    return Kernel(Interval(0, std::numbers::pi), [](double t) { return std::sin(t); },
                  "sine", false, 2.0);
  }
  return Kernel(Interval(0, std::numbers::pi / 2), [](double t) { return std::sin(t); },
                "sinpluscos", false, 1.0);
}

/// Piecewise-linear kernel from samples; no convexity requirement, but the
/// nonnegativity probe still applies. Mass is the exact trapezoid sum.
inline Kernel kernel_from_samples(std::vector<double> xs, std::vector<double> ys,
                                  std::string label = "file") {
  auto pl = std::make_shared<PiecewiseLinear>(std::move(xs), std::move(ys));
  double mass = 0;
  const auto& x = pl->xs();
  const auto& y = pl->ys();
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    mass += (x[i + 1] - x[i]) * (y[i] + y[i + 1]) / 2;
  const Interval domain = pl->domain();
  return Kernel(domain, [pl](double t) { return (*pl)(t); }, std::move(label), false,
                mass);
}

}  // namespace cvxgap

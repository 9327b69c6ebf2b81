#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "cvxgap/enclosure.hpp"
#include "cvxgap/generator.hpp"
#include "cvxgap/integrate.hpp"

#include "helpers.hpp"

using namespace cvxgap;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("uniform enclosure of the square") {
  const Interval I(0.0, 1.0);
  const Enclosure e = weighted_enclosure(make_square(I), uniform_kernel(I));
  REQUIRE(e.lower == 0.5);
  REQUIRE_THAT(e.middle, Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-9));
  REQUIRE(e.upper == 1.0);
  REQUIRE_THAT(e.kernel_mass, Catch::Matchers::WithinRel(1.0, 1e-12));
  REQUIRE(e.holds());
}

TEST_CASE("sine-kernel enclosure of exp has the closed-form middle") {
  const Kernel g = sine_kernel(SineVariant::FullSine);
  const Enclosure e = weighted_enclosure(make_exp(g.domain()), g);
  // int 2 sin(t) e^t dt over [0, pi] = e^pi + 1
  REQUIRE_THAT(e.middle, Catch::Matchers::WithinRel(std::exp(pi) + 1.0, 1e-8));
  REQUIRE(e.holds());
}

TEST_CASE("affine functions give equality throughout the chain") {
  const Tolerance rel{1e-12, 1e-8};
  const Interval I(0.5, 2.0);
  const ConvexFunction f = make_affine(I, 0.7, -0.4);
  for (const Kernel& g : {uniform_kernel(I), power_kernel(I, 0.5), power_kernel(I, 3.0),
                          log_limit_kernel(I)}) {
    const Enclosure e = weighted_enclosure(f, g);
    REQUIRE(rel.close(e.lower, e.middle));
    REQUIRE(rel.close(e.middle, e.upper));
  }
}

TEST_CASE("enclosure holds across a generated pool and the kernel catalog") {
  const Tolerance rel{1e-12, 1e-8};
  const auto pool = testutil::make_pool(10, 57, 0.3, 1.5, 0.5, 2.0);  // a > 0 for power kernels
  for (const auto& e : pool) {
    for (const Kernel& g :
         {uniform_kernel(e.interval), power_kernel(e.interval, 0.5),
          power_kernel(e.interval, 2.0), log_limit_kernel(e.interval)}) {
      const Enclosure enc = weighted_enclosure(e.f, g);
      INFO("kernel " << g.label() << " seed " << e.seed);
      REQUIRE(rel.leq(enc.lower, enc.middle));
      REQUIRE(rel.leq(enc.middle, enc.upper));
    }
  }
}

TEST_CASE("the change-of-variables identity behind the chain") {
  const auto pool = testutil::make_pool(17, 71, 0.3, 1.5, 0.5, 2.0);
  for (const auto& e : pool) {  // 17 x 3 = 51 random (f, g) pairs
    const Interval I = e.interval;
    for (const Kernel& g : {power_kernel(I, 0.5), power_kernel(I, 2.0), uniform_kernel(I)}) {
      const double via_g = integrate(
          [&](double t) { return (g(t) + g(I.reflect(t))) * e.f(t); }, I);
      const double via_f = integrate(
          [&](double t) { return (e.f(t) + e.f(I.reflect(t))) * g(t); }, I);
      REQUIRE_THAT(via_g, Catch::Matchers::WithinRel(via_f, 1e-8));
    }
  }
}

TEST_CASE("log-limit chain for the square has closed-form values") {
  const Interval I(1.0, 2.0);
  const Enclosure e = weighted_enclosure(make_square(I), log_limit_kernel(I));
  const double mass = 2.0 * std::log(2.0) / 3.0;
  REQUIRE_THAT(e.kernel_mass, Catch::Matchers::WithinRel(mass, 1e-9));
  REQUIRE_THAT(e.lower, Catch::Matchers::WithinRel(4.5 * mass, 1e-9));
  // int 2 t^2/(t(3-t)) dt = 2 (3 log 2 - 1)
  REQUIRE_THAT(e.middle, Catch::Matchers::WithinRel(2 * (3 * std::log(2.0) - 1), 1e-9));
  REQUIRE_THAT(e.upper, Catch::Matchers::WithinRel(5.0 * mass, 1e-9));
  REQUIRE(e.holds());
}

TEST_CASE("domain mismatch is rejected") {
  REQUIRE_THROWS_AS(
      weighted_enclosure(make_square(Interval(0.0, 1.0)), uniform_kernel(Interval(0.0, 2.0))),
      DomainMismatchError);
}

TEST_CASE("normalized view divides the chain by the mass") {
  const Interval I(1.0, 2.0);
  const Enclosure e = weighted_enclosure(make_square(I), power_kernel(I, 2.0));
  const Enclosure n = e.normalized();
  REQUIRE_THAT(n.lower, Catch::Matchers::WithinRel(e.lower / e.kernel_mass, 1e-15));
  REQUIRE_THAT(n.middle, Catch::Matchers::WithinRel(e.middle / e.kernel_mass, 1e-15));
  REQUIRE_THAT(n.upper, Catch::Matchers::WithinRel(e.upper / e.kernel_mass, 1e-15));
  // the normalized chain brackets between 2 f(mid) and f(a) + f(b)
  REQUIRE_THAT(n.lower, Catch::Matchers::WithinRel(2 * 2.25, 1e-10));
  REQUIRE_THAT(n.upper, Catch::Matchers::WithinRel(5.0, 1e-10));
}

TEST_CASE("power-kernel chain approaches the log-limit chain as alpha -> 0") {
  const Interval I(1.0, 2.0);
  const ConvexFunction f = make_exp(I);
  const Enclosure limit = weighted_enclosure(f, log_limit_kernel(I)).normalized();
  const Enclosure above = weighted_enclosure(f, power_kernel(I, 1e-4)).normalized();
  const Enclosure below = weighted_enclosure(f, power_kernel(I, -1e-4)).normalized();
  REQUIRE_THAT(above.middle, Catch::Matchers::WithinRel(limit.middle, 1e-3));
  REQUIRE_THAT(below.middle, Catch::Matchers::WithinRel(limit.middle, 1e-3));
  // the two signs bracket the limit
  REQUIRE(std::min(above.middle, below.middle) <= limit.middle * (1 + 1e-12));
  REQUIRE(limit.middle <= std::max(above.middle, below.middle) * (1 + 1e-12));
}

TEST_CASE("symmetric convolution enclosure") {
  const Interval I(-1.0, 1.0);
  const Enclosure e =
      symmetric_convolution_enclosure(make_square(I), uniform_kernel(I), 1.0);
  REQUIRE(e.lower == 0.0);
  REQUIRE_THAT(e.middle, Catch::Matchers::WithinRel(4.0 / 3.0, 1e-9));
  REQUIRE_THAT(e.upper, Catch::Matchers::WithinRel(4.0, 1e-12));
  REQUIRE(e.holds());

  // cosh against a tent kernel, certified by the quadrature oracle
  const ConvexFunction ch = make_sampled(I, [](double x) { return std::cosh(x); }, "cosh");
  const Kernel tent = kernel_from_samples({-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}, "tent");
  const Enclosure t = symmetric_convolution_enclosure(ch, tent, 1.0);
  REQUIRE(t.holds());
  const double oracle =
      integrate([&](double x) { return (tent(x) + tent(-x)) * std::cosh(x); }, I);
  REQUIRE_THAT(t.middle, Catch::Matchers::WithinRel(oracle, 1e-9));

  REQUIRE_THROWS_AS(
      symmetric_convolution_enclosure(make_square(Interval(0.0, 1.0)),
                                      uniform_kernel(Interval(0.0, 1.0)), 1.0),
      DomainError);
  REQUIRE_THROWS_AS(
      symmetric_convolution_enclosure(make_square(I), uniform_kernel(I), 2.0),
      DomainError);
}

TEST_CASE("linear functions collapse the symmetric convolution to one value") {
  const Interval I(-2.0, 2.0);
  const ConvexFunction f = make_affine(I, 0.3, 1.7);
  const Kernel tent = kernel_from_samples({-2.0, 0.5, 2.0}, {0.1, 1.0, 0.3}, "skew_tent");
  const Enclosure e = symmetric_convolution_enclosure(f, tent, 2.0);
  const Tolerance rel{1e-12, 1e-8};
  REQUIRE(rel.close(e.lower, e.middle));
  REQUIRE(rel.close(e.middle, e.upper));
}

TEST_CASE("midpoint-mean-endpoint chain closed forms") {
  const HHChain sq = hh_recover(make_square(Interval(0.0, 1.0)));
  REQUIRE(sq.lower == 0.25);
  REQUIRE_THAT(sq.middle, Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-9));
  REQUIRE(sq.upper == 0.5);

  const HHChain ex = hh_recover(make_exp(Interval(0.0, 1.0)));
  REQUIRE_THAT(ex.lower, Catch::Matchers::WithinAbs(std::exp(0.5), 1e-12));
  REQUIRE_THAT(ex.middle, Catch::Matchers::WithinAbs(std::exp(1.0) - 1.0, 1e-9));
  REQUIRE_THAT(ex.upper, Catch::Matchers::WithinAbs((1.0 + std::exp(1.0)) / 2, 1e-12));

  const HHChain af = hh_recover(make_affine(Interval(-1.0, 3.0), 0.5, 2.0));
  REQUIRE_THAT(af.lower, Catch::Matchers::WithinAbs(af.middle, 1e-9));
  REQUIRE_THAT(af.middle, Catch::Matchers::WithinAbs(af.upper, 1e-9));

  REQUIRE_THROWS_AS(hh_recover(make_square(Interval(0.0, 1.0)), 1), ParameterError);
}

TEST_CASE("the two averaging routes cross-check each other") {
  // a spike centered on one of the 100 p-samples: the midpoint rule sees a
  // full-height sample while its true average is tiny, so the two routes
  // must disagree loudly
  const ConvexFunction spike = make_asserted(
      Interval(0.0, 1.0),
      [](double x) { return std::exp(-1e6 * (x - 0.305) * (x - 0.305)); }, "spike");
  REQUIRE_THROWS_AS(hh_recover(spike, 100), CrossCheckError);
}

TEST_CASE("chain ordering for the generated pool") {
  const Tolerance tol;
  for (const auto& e : testutil::make_pool(10, 97, -2.0, 1.0, 0.5, 2.0, 3)) {
    const HHChain c = hh_recover(e.f);
    REQUIRE(tol.leq(c.lower, c.middle));
    REQUIRE(tol.leq(c.middle, c.upper));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cvxgap/bounds.hpp"
#include "cvxgap/golden_section.hpp"

#include "helpers.hpp"

using namespace cvxgap;

namespace {

const Interval unit(0.0, 1.0);

// Independent oracle: dense uniform scan of h(p) over [0, 1].
double grid_max_h(const ConvexFunction& f, int n = 1000001) {
  const double a = f.domain().a(), b = f.domain().b();
  const double fa = f(a), fb = f(b);
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double p = static_cast<double>(i) / (n - 1);
    best = std::max(best, p * fa + (1 - p) * fb - f(p * a + (1 - p) * b));
  }
  return best;
}

}  // namespace

TEST_CASE("golden section maximizes a known concave function") {
  const GoldenResult r =
      golden_section_max([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-10);
  REQUIRE_THAT(r.arg, Catch::Matchers::WithinAbs(0.3, 1e-9));
  REQUIRE_THAT(r.value, Catch::Matchers::WithinAbs(0.0, 1e-15));
  REQUIRE(r.iterations > 0);
  REQUIRE(r.iterations <= 200);
  REQUIRE_THROWS_AS(golden_section_max([](double x) { return x; }, 0.0, 1.0, 0.0),
                    ToleranceError);
  REQUIRE_THROWS_AS(golden_section_max([](double x) { return x; }, 1.0, 0.0, 1e-6),
                    OrderError);
}

TEST_CASE("endpoint bound closed forms") {
  REQUIRE(t_prime(make_square(unit)) == 0.5);
  REQUIRE(std::abs(t_prime(make_affine(unit, 1.0, 2.0))) <= 1e-15);
  const double expected = 1.0 + std::exp(1.0) - 2.0 * std::exp(0.5);
  REQUIRE_THAT(t_prime(make_exp(unit)), Catch::Matchers::WithinAbs(expected, 1e-14));
}

TEST_CASE("optimal bound for the square is a quarter at the half weight") {
  const BoundReport r = t_opt(make_square(unit));
  REQUIRE_THAT(r.t_opt, Catch::Matchers::WithinAbs(0.25, 1e-10));
  REQUIRE_THAT(r.argmax_p, Catch::Matchers::WithinAbs(0.5, 1e-6));
  REQUIRE(r.t_prime == 0.5);
  REQUIRE(r.iterations > 0);
  REQUIRE_THROWS_AS(t_opt(make_square(unit), 0.0), ToleranceError);
  REQUIRE_THROWS_AS(t_opt(make_square(unit), -1.0), ToleranceError);
}

TEST_CASE("optimal bound matches the dense grid oracle") {
  const BoundReport r = t_opt(make_exp(unit));
  REQUIRE_THAT(r.t_opt, Catch::Matchers::WithinAbs(grid_max_h(make_exp(unit)), 1e-8));
}

TEST_CASE("optimal bound of an affine function is zero") {
  const BoundReport r = t_opt(make_affine(Interval(-1.0, 2.0), 0.4, -0.9));
  REQUIRE(std::abs(r.t_opt) <= 1e-12);
  REQUIRE(std::abs(r.t_prime) <= 1e-12);
  // argmax is a plateau stall point; only the value is contractual
  REQUIRE((0.0 <= r.argmax_p && r.argmax_p <= 1.0));
}

TEST_CASE("bound report invariants over a generated pool") {
  const Tolerance tol;
  for (const auto& e : testutil::make_pool(25, 7)) {
    const BoundReport r = t_opt(e.f);
    REQUIRE(tol.leq(r.t_opt, r.t_prime));
    REQUIRE(r.t_opt >= -1e-9);
    REQUIRE(r.t_prime >= -1e-9);
  }
}

TEST_CASE("golden section certificate against the dense grid") {
  for (const auto& e : testutil::make_pool(5, 19)) {
    const BoundReport r = t_opt(e.f);
    REQUIRE_THAT(r.t_opt, Catch::Matchers::WithinAbs(grid_max_h(e.f), 1e-8));
  }
}

TEST_CASE("the p-objective is midpoint concave") {
  for (const auto& e : testutil::make_pool(5, 29)) {
    const double a = e.interval.a(), b = e.interval.b();
    auto h = [&](double p) {
      return p * e.f(a) + (1 - p) * e.f(b) - e.f(p * a + (1 - p) * b);
    };
    Rng rng(e.seed ^ 0x999);
    for (int i = 0; i < 100; ++i) {
      double p1 = rng.uniform01(), p3 = rng.uniform01();
      if (p1 > p3) std::swap(p1, p3);
      const double scale = std::abs(h(p1)) + std::abs(h(p3)) + 1;
      REQUIRE(h((p1 + p3) / 2) >= (h(p1) + h(p3)) / 2 - 1e-9 * scale);
    }
  }
}

TEST_CASE("proposition-z chain on quadratic closed forms") {
  const ConvexFunction sq = make_square(unit);
  // F* = p q (x-y)^2 = 0.3*0.7*0.49, F(x,y) = (x-y)^2/2, F(a,b) = 0.5
  REQUIRE(prop_z_check(sq, WeightPair(0.3), 0.2, 0.9));
  REQUIRE_THAT(weighted_gap(sq, WeightPair(0.3), 0.2, 0.9),
               Catch::Matchers::WithinAbs(0.1029, 1e-15));
  REQUIRE_THAT(midpoint_gap(sq, 0.2, 0.9), Catch::Matchers::WithinAbs(0.245, 1e-15));

  // consistency case: at the endpoints with p = 1/2, F* is exactly F(a,b)/2
  const auto [link1, link2] = prop_z_links(sq, WeightPair(0.5), 0.0, 1.0);
  REQUIRE(link1);
  REQUIRE(link2);
  REQUIRE(weighted_gap(sq, WeightPair(0.5), 0.0, 1.0) == midpoint_gap(sq, 0.0, 1.0) / 2);

  REQUIRE_THROWS_AS(prop_z_check(sq, WeightPair(0.5), -0.1, 0.5), DomainError);
}

TEST_CASE("proposition-z chain over random draws") {
  const ConvexFunction ex = make_exp(Interval(0.0, 2.0));
  Rng rng(41);
  for (int i = 0; i < 10000; ++i) {
    const double p = rng.uniform01();
    const double x = rng.uniform(0.0, 2.0);
    const double y = rng.uniform(0.0, 2.0);
    REQUIRE(prop_z_check(ex, WeightPair(p), x, y));
  }
}

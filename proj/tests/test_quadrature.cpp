#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hardymeans/quadrature.hpp"

using namespace hardymeans;

TEST_CASE("constants integrate exactly") {
  QuadratureResult r = integrate_unit([](double) { return 3.0; });
  CHECK(r.value == 3.0);
  CHECK(r.converged);
  QuadratureResult s = integrate([](double) { return 0.5; }, 2.0, 5.0);
  CHECK(s.value == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(s.converged);
}

TEST_CASE("smooth integrands reach the requested tolerance") {
  QuadratureResult lin = integrate_unit([](double t) { return t; });
  CHECK(lin.value == doctest::Approx(0.5).epsilon(1e-13));

  QuadratureResult ex = integrate_unit([](double t) { return std::exp(t); });
  CHECK(ex.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-10));
  CHECK(ex.converged);
  CHECK(ex.evaluations > 0);
  CHECK(ex.levels_used >= 1);
  CHECK(ex.error_estimate < 1e-8);

  QuadratureResult sq = integrate([](double t) { return t * t; }, 1.0, 3.0);
  CHECK(sq.value == doctest::Approx(26.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("integrable endpoint singularities converge") {
  QuadratureResult a =
      integrate_unit([](double t) { return 1.0 / std::sqrt(t); });
  CHECK(a.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(a.converged);

  QuadratureResult b =
      integrate_unit([](double t) { return std::pow(t, -0.9); });
  CHECK(b.value == doctest::Approx(10.0).epsilon(1e-8));
  CHECK(b.converged);

  QuadratureResult c = integrate_unit([](double t) { return -std::log(t); });
  CHECK(c.value == doctest::Approx(1.0).epsilon(1e-9));

  // Singular factor times a smooth one: t^(-1/4) (1 + t).
  QuadratureResult d = integrate_unit(
      [](double t) { return std::pow(t, -0.25) * (1.0 + t); });
  CHECK(d.value == doctest::Approx(4.0 / 3.0 + 4.0 / 7.0).epsilon(1e-9));

}

TEST_CASE("a non-default grading ratio still converges") {
  QuadratureConfig cfg;
  cfg.grading_ratio = 0.25;
  QuadratureResult r =
      integrate_unit([](double t) { return 1.0 / std::sqrt(t); }, cfg);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("divergent integrands are reported, not averaged over") {
  CHECK_THROWS_AS(integrate_unit([](double t) { return 1.0 / t; }),
                  integrability_error);
  CHECK_THROWS_AS(integrate_unit([](double t) { return std::pow(t, -1.5); }),
                  integrability_error);
}

TEST_CASE("barely integrable tails beyond double precision are refused") {
  // t^(-0.999) has a finite integral (1000), but the tail only drops below
  // any reasonable tolerance at depths no double can represent: the samples
  // overflow long before the tail decays.
  CHECK_THROWS_AS(integrate_unit([](double t) { return std::pow(t, -0.999); }),
                  integrability_error);
  // A singularity at the left endpoint of a shifted interval collapses onto
  // the endpoint once the offset drops below one ulp, so the sub-ulp mass is
  // unreachable and the evaluation blows up there.
  CHECK_THROWS_AS(integrate([](double t) { return 1.0 / std::sqrt(t - 2.0); },
                            2.0, 3.0),
                  integrability_error);
}

TEST_CASE("configuration and interval validation") {
  QuadratureConfig bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(integrate_unit([](double) { return 1.0; }, bad),
                  std::invalid_argument);
  bad = {};
  bad.grading_ratio = 1.0;
  CHECK_THROWS_AS(integrate_unit([](double) { return 1.0; }, bad),
                  std::invalid_argument);
  bad = {};
  bad.grading_ratio = 0.0;
  CHECK_THROWS_AS(integrate_unit([](double) { return 1.0; }, bad),
                  std::invalid_argument);
  bad = {};
  bad.max_depth = 0;
  CHECK_THROWS_AS(integrate_unit([](double) { return 1.0; }, bad),
                  std::invalid_argument);
  auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate(one, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate(one, 2.0, 1.0), std::invalid_argument);
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(integrate(one, 0.0, inf), std::invalid_argument);
}

TEST_CASE("tighter tolerances cost more evaluations") {
  auto h = [](double t) { return std::exp(t); };
  QuadratureConfig loose;
  loose.tol = 1e-6;
  QuadratureConfig tight;
  tight.tol = 1e-12;
  QuadratureResult rl = integrate_unit(h, loose);
  QuadratureResult rt = integrate_unit(h, tight);
  CHECK(rt.evaluations >= rl.evaluations);
  CHECK(rt.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("frozen grid mirrors the adaptive layout") {
  auto ref = [](double t) { return 1.0 / std::sqrt(t); };
  std::vector<QuadratureNode> grid = frozen_unit_grid(ref, 3);
  REQUIRE(!grid.empty());
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(grid[i].t > 0.0);
    CHECK(grid[i].t < 1.0);
    CHECK(grid[i].weight > 0.0);
    if (i > 0) CHECK(grid[i].t > grid[i - 1].t);
    weight_sum += grid[i].weight;
  }
  // The grid covers [floor, 1); only a sub-tolerance sliver at 0 is missing.
  CHECK(weight_sum <= 1.0 + 1e-12);
  CHECK(weight_sum > 1.0 - 1e-5);

  // Midpoint sums over the frozen grid approximate the integral.
  std::vector<QuadratureNode> fine = frozen_unit_grid(ref, 6);
  double est = 0.0;
  for (const QuadratureNode& node : fine) est += ref(node.t) * node.weight;
  CHECK(est == doctest::Approx(2.0).epsilon(1e-3));

  // Refinement multiplies nodes per octave.
  CHECK(fine.size() > grid.size());
  CHECK_THROWS_AS(frozen_unit_grid(ref, -1), std::invalid_argument);
  CHECK_THROWS_AS(frozen_unit_grid(ref, 99), std::invalid_argument);
}

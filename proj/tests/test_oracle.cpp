#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "support.hpp"
#include "troprate/errors.hpp"
#include "troprate/oracle.hpp"

using namespace troprate;
using troprate::testing::near;

namespace {

double max_step(const oracle::GridSpec& spec) {
  double step = 0.0;
  for (const auto& [lo, hi] : spec.log_ranges)
    step = std::max(step, (hi - lo) / static_cast<double>(spec.resolution - 1));
  return step;
}

}  // namespace

TEST_CASE("enum_fkm") {
  const auto two = troprate::testing::two_alternatives();
  CHECK(approx_equal(oracle::enum_fkm(two.a, two.b, 1, 1), two.a * two.b + two.b * two.a));
  const auto four = troprate::testing::four_alternatives();
  CHECK(near(trace(oracle::enum_fkm(four.a, four.b, 3, 1)), 24));
  CHECK_THROWS_AS(oracle::enum_fkm(four.a, four.b, 5, 4), ResourceError);
  CHECK_THROWS_AS(oracle::enum_fkm(four.a, two.b, 1, 1), DimensionError);

  std::mt19937 rng(51);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = troprate::testing::random_matrix(rng, 3, 3, 8.0, 0.2);
    const Matrix b = troprate::testing::random_matrix(rng, 3, 3, 8.0, 0.2);
    const FkmTable table(a, b, 5);
    for (std::size_t k = 0; k <= 5; ++k)
      for (std::size_t m = 0; k + m <= 5; ++m)
        CHECK(approx_equal(table(k, m), oracle::enum_fkm(a, b, k, m)));
  }
}

TEST_CASE("grid specification") {
  const auto two = troprate::testing::two_alternatives();
  const auto spec = oracle::GridSpec::for_instance(two, 10);
  REQUIRE(spec.log_ranges.size() == 2);
  CHECK(spec.log_ranges[0].first == doctest::Approx(std::log(1.0 / 3)));
  CHECK(spec.log_ranges[0].second == doctest::Approx(std::log(0.5)));
  CHECK(spec.size() == 100);

  const auto free = oracle::GridSpec::for_instance(ProblemInstance::unconstrained(two.a, two.b), 10);
  CHECK(free.log_ranges[0].first == 0.0);
  CHECK(free.log_ranges[0].second == 0.0);
  CHECK(free.size() == 10);

  auto mixed = two;
  mixed.h[0] = Scalar::top();
  CHECK_THROWS_AS(oracle::GridSpec::for_instance(mixed, 10), DomainError);
  CHECK_THROWS_AS(oracle::GridSpec::for_instance(two, 1), DomainError);
  CHECK_THROWS_AS(oracle::grid_pareto(two, spec, 50), ResourceError);
}

TEST_CASE("grid envelope of the two-alternative instance") {
  const auto inst = troprate::testing::two_alternatives();
  const auto envelope = oracle::grid_pareto(inst, oracle::GridSpec::for_instance(inst, 400));
  REQUIRE_FALSE(envelope.empty());
  const double tol = std::log(1.02);
  for (std::size_t i = 0; i < envelope.size(); ++i) {
    const oracle::GridPoint& p = envelope[i];
    if (i > 0) {
      CHECK(envelope[i - 1].alpha < p.alpha);
      CHECK(envelope[i - 1].beta > p.beta);
    }
    // Each pair lies on or above beta = 6 / alpha, and near it where alpha is in range.
    const double product = p.alpha.log() + p.beta.log() - std::log(6.0);
    CHECK(product >= -1e-9);
    if (p.alpha.value() >= 4.0 / 3 && p.alpha.value() <= 3.0) CHECK(product <= tol);
  }
  const auto agreement = oracle::compare_front(compute_front(inst), envelope, tol);
  CHECK(agreement.agrees);
}

TEST_CASE("grid search on the four-alternative instance") {
  const auto inst = troprate::testing::four_alternatives();
  const auto spec = oracle::GridSpec::for_instance(inst, 60);
  CHECK(spec.size() == 60.0 * 60 * 60);
  const auto envelope = oracle::grid_pareto(inst, spec);
  REQUIRE_FALSE(envelope.empty());
  double best = std::numeric_limits<double>::infinity();
  for (const oracle::GridPoint& p : envelope) {
    // (2, 3) is the ideal point: no feasible pair is below it in either objective.
    CHECK(leq(Scalar::from_value(2), p.alpha));
    CHECK(leq(Scalar::from_value(3), p.beta));
    best = std::min(best, std::max(p.alpha.log() - std::log(2.0), p.beta.log() - std::log(3.0)));
  }
  CHECK(best <= std::log(1.05));
}

TEST_CASE("grid search with one alternative") {
  const ProblemInstance inst{Matrix::from_values({{2.5}}), Matrix::from_values({{0.5}}),
                             Vector::from_values({0}), Vector::from_values({1})};
  const auto envelope = oracle::grid_pareto(inst, oracle::GridSpec::for_instance(inst, 5));
  REQUIRE(envelope.size() == 1);
  CHECK(near(envelope[0].alpha, 2.5));
  CHECK(near(envelope[0].beta, 0.5));
}

TEST_CASE("grid minimum bounds the spectral radius") {
  std::mt19937 rng(52);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = troprate::testing::random_reciprocal(rng, 3);
    const auto spec = oracle::GridSpec::for_instance(ProblemInstance::unconstrained(a, a), 200);
    const Scalar grid = oracle::grid_min_objective(a, spec);
    const Scalar exact = spectral_radius(a);
    CHECK(leq(exact, grid));
    CHECK(grid.log() - exact.log() <= 2 * max_step(spec));
  }
}

TEST_CASE("analytic fronts agree with the grid on random instances") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 16; ++t) {
    const std::size_t n = 2 + t % 2;
    ProblemInstance inst{troprate::testing::random_reciprocal(rng, n),
                         troprate::testing::random_reciprocal(rng, n), Vector(n), Vector(n)};
    for (std::size_t i = 0; i < n; ++i) {
      inst.h[i] = Scalar::from_log(std::log(4.0) * (2 * unit(rng) - 1));
      inst.g[i] = inst.h[i] * Scalar::from_log(-std::log(16.0) * unit(rng));
    }
    const auto spec = oracle::GridSpec::for_instance(inst, n == 2 ? 300 : 80);
    const auto agreement = oracle::compare_front(
        compute_front(inst), oracle::grid_pareto(inst, spec), 2 * max_step(spec));
    CHECK(agreement.max_dominance <= 1e-9);
    CHECK(agreement.agrees);
  }
}

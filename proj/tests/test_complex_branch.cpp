#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "nball/complex_branch.hpp"

using namespace nball;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("log identities on the fixed branch", "[branch]") {
  CHECK(approx_equal(principal_log(kImagUnit), {0.0, pi / 2}, 1e-15));
  CHECK(approx_equal(principal_log({0.0, -1.0}), {0.0, -pi / 2}, 1e-15));
  CHECK(approx_equal(principal_log({-1.0, 0.0}), {0.0, -pi}, 1e-15));
  CHECK(approx_equal(principal_log({1.0, 0.0}), {0.0, 0.0}, 0.0));
}

TEST_CASE("the negative real axis sits at angle -pi", "[branch]") {
  for (double x : {0.5, 1.0, 3.0, 1e10}) {
    CHECK(branch_arg({-x, 0.0}) == -pi);
    CHECK(principal_log({-x, 0.0}).im() == -pi);
  }
  // Just above and below the cut.
  CHECK(branch_arg({-1.0, 1e-300}) == -pi);
  CHECK_THAT(branch_arg({-1.0, -1e-12}), WithinAbs(-pi, 1e-11));
}

TEST_CASE("cpow examples", "[branch]") {
  CHECK(approx_equal(cpow({-1.0, 0.0}, 0.5), {0.0, -1.0}, 1e-15));
  CHECK(approx_equal(cpow(kImagUnit, 2.0), {-1.0, 0.0}));
  CHECK(approx_equal(cpow({4.0, 0.0}, 0.5), {2.0, 0.0}));
  CHECK(cpow({0.0, 0.0}, 2.5).is_zero());
  CHECK_THROWS_AS(cpow({0.0, 0.0}, -1.0), domain_error);
  CHECK_THROWS_AS(cpow({0.0, 0.0}, ComplexValue(1.0, 1.0)), domain_error);
  CHECK_THROWS_AS(principal_log({0.0, 0.0}), domain_error);
  CHECK_THROWS_AS(principal_log({NAN, 0.0}), domain_error);
}

TEST_CASE("appendix identity", "[branch]") {
  for (int twice = 1; twice <= 31; twice += 2) {
    CHECK((appendix_identity(twice / 2.0) - ComplexValue(1.0)).abs() <= 1e-12);
  }
  CHECK_THROWS_AS(appendix_identity(1.0), domain_error);
  CHECK_THROWS_AS(appendix_identity(-0.5), domain_error);
  CHECK_THROWS_AS(appendix_identity(0.25), domain_error);
}

TEST_CASE("(ik)^p = i^p k^p for real k != 0", "[branch][property]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mag(0.01, 50.0);
  std::uniform_real_distribution<double> power(-4.0, 4.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double k = (trial % 2 == 0 ? 1 : -1) * mag(rng);
    const double p = power(rng);
    const ComplexValue lhs = cpow({0.0, k}, p);
    const ComplexValue rhs = cpow(kImagUnit, p) * cpow({k, 0.0}, p);
    CHECK((lhs - rhs).abs() <= 1e-12 * std::max(1.0, lhs.abs()));
  }
}

TEST_CASE("exp(log z) = z and the angle stays in [-pi, pi)", "[branch][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const ComplexValue z{u(rng), trial % 50 == 0 ? 0.0 : u(rng)};
    const ComplexValue w = principal_log(z);
    CHECK((cexp(w) - z).abs() <= 1e-12 * z.abs());
    CHECK(w.im() >= -pi);
    CHECK(w.im() < pi);
  }
}

TEST_CASE("integer powers agree with repeated multiplication", "[branch][property]") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 300; ++trial) {
    const ComplexValue z{u(rng), u(rng)};
    if (z.abs() < 1e-3) continue;
    for (int n = -5; n <= 8; ++n) {
      ComplexValue product{1.0, 0.0};
      for (int j = 0; j < std::abs(n); ++j) product *= z;
      if (n < 0) product = ComplexValue(1.0) / product;
      const ComplexValue power = cpow(z, static_cast<double>(n));
      CHECK((power - product).abs() <= 1e-11 * std::max(1.0, product.abs()));
    }
  }
}

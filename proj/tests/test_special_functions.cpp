#include <catch_amalgamated.hpp>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "nball/special_functions.hpp"

using namespace nball;

TEST_CASE("factorial", "[special]") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == ExactRational(BigInt("2432902008176640000")));
  CHECK_THROWS_AS(factorial(-1), domain_error);
}

TEST_CASE("double factorial examples", "[special]") {
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(8) == 384);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(-3) == -1);
  CHECK(double_factorial(-5) == rational(1, 3));
  CHECK_THROWS_AS(double_factorial(-2), domain_error);
}

TEST_CASE("double factorial reflection (-n)!! n!! = (-1)^((n-1)/2) n", "[special][property]") {
  for (long long n = 1; n <= 41; n += 2) {
    const ExactRational sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(double_factorial(-n) * double_factorial(n) == sign * n);
  }
}

TEST_CASE("even double factorial n!! = 2^(n/2) (n/2)!", "[special][property]") {
  for (long long n = 0; n <= 40; n += 2) {
    CHECK(double_factorial(n) == pow_int(ExactRational(2), n / 2) * factorial(n / 2));
  }
}

TEST_CASE("exact gamma at integers and half-integers", "[special]") {
  const ExactGamma half = gamma_exact(rational(1, 2));
  CHECK(half.coeff == 1);
  CHECK(half.sqrt_pi_power == 1);
  const ExactGamma five_halves = gamma_exact(rational(5, 2));
  CHECK(five_halves.coeff == rational(3, 4));
  const ExactGamma minus_half = gamma_exact(rational(-1, 2));
  CHECK(minus_half.coeff == -2);
  CHECK(gamma_exact(4).coeff == 6);
  CHECK(gamma_exact(4).sqrt_pi_power == 0);
  CHECK_THROWS_AS(gamma_exact(0), domain_error);
  CHECK_THROWS_AS(gamma_exact(-3), domain_error);
  CHECK_THROWS_AS(gamma_exact(rational(1, 3)), domain_error);
}

TEST_CASE("gamma recurrence Gamma(x+1) = x Gamma(x)", "[special][property]") {
  for (int twice = -19; twice <= 40; twice += 2) {
    const ExactRational x = rational(twice, 2);
    const ExactGamma g = gamma_exact(x);
    const ExactGamma g1 = gamma_exact(x + 1);
    CHECK(g1.coeff == x * g.coeff);
    CHECK(g1.sqrt_pi_power == g.sqrt_pi_power);
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 30.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = u(rng);
    CHECK(std::abs(nball::gamma(x + 1) - x * nball::gamma(x)) <= 1e-12 * std::abs(nball::gamma(x + 1)));
  }
}

TEST_CASE("gamma against Boost", "[special][property]") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-10.0, 40.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double x = u(rng);
    if (std::abs(x - std::round(x)) < 1e-6 && x <= 0) continue;
    const double reference = boost::math::tgamma(x);
    CHECK(std::abs(nball::gamma(x) - reference) <= 1e-12 * std::abs(reference));
  }
  for (int twice = -21; twice <= 60; ++twice) {
    if (twice <= 0 && twice % 2 == 0) continue;
    const double x = twice / 2.0;
    const double reference = boost::math::tgamma(x);
    CHECK(std::abs(nball::gamma(x) - reference) <= 1e-14 * std::abs(reference));
  }
}

TEST_CASE("gamma poles and non-finite input", "[special]") {
  CHECK_THROWS_AS(nball::gamma(0.0), domain_error);
  CHECK_THROWS_AS(nball::gamma(-2.0), domain_error);
  CHECK_THROWS_AS(nball::gamma(NAN), domain_error);
  CHECK(nball::gamma(0.5) == Catch::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
}

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "nball/volume.hpp"

using namespace nball;

TEST_CASE("closed-form table", "[volume]") {
  CHECK(volume_closed_form(1).exact == ExactValue(2));
  CHECK(volume_closed_form(2).exact == ExactValue(1, 2));
  CHECK(volume_closed_form(3).exact == ExactValue(rational(4, 3), 2));
  CHECK(volume_closed_form(11).exact == ExactValue(rational(64, 10395), 10));
  CHECK(volume_closed_form(12).exact == ExactValue(rational(1, 720), 12));
  CHECK(volume_closed_form(3, Radius(ExactRational(2))).exact == ExactValue(rational(32, 3), 2));
  CHECK(volume_closed_form(0).exact == ExactValue(1));
  CHECK(volume_closed_form(-1).exact == ExactValue(1, -2));
}

TEST_CASE("closed form for real dimensions and symbolic radii", "[volume]") {
  const VolumeReport r = volume_closed_form(2.5);
  CHECK_FALSE(r.exact.has_value());
  CHECK(r.value == Catch::Approx(std::pow(std::numbers::pi, 1.25) / std::tgamma(2.25)).epsilon(1e-13));
  const VolumeReport s = volume_closed_form(3, Radius(1.7));
  REQUIRE(s.exact);
  CHECK(s.exact->r_power() == 3);
  CHECK(s.value == Catch::Approx(4.0 / 3.0 * std::numbers::pi * std::pow(1.7, 3)).epsilon(1e-14));
  CHECK_THROWS_AS(volume_closed_form(-2), domain_error);
  CHECK_THROWS_AS(volume_closed_form(-3.5), domain_error);
  CHECK_THROWS_AS(volume_closed_form(NAN), domain_error);
  CHECK_THROWS_AS(Radius(-1.0), domain_error);
  CHECK_THROWS_AS(Radius::parse("0"), domain_error);
}

TEST_CASE("distributional pipeline equals the closed form", "[volume]") {
  for (const char* r : {"1/2", "1", "2", "3/7"}) {
    const Radius radius = Radius::parse(r);
    for (int n = 1; n <= 24; ++n) {
      CHECK(volume_distributional(n, radius) == *volume_closed_form(n, radius).exact);
    }
  }
  CHECK(volume_distributional(3, Radius(1.5)) == ExactValue(rational(4, 3), 2, 3));
  CHECK_THROWS_AS(volume_distributional(0), domain_error);
}

TEST_CASE("recursion Vol_n / Vol_{n-2} = 2 pi / n", "[volume][property]") {
  for (int n = 3; n <= 40; ++n) {
    const ExactValue ratio = *volume_closed_form(n).exact / *volume_closed_form(n - 2).exact;
    CHECK(ratio == ExactValue(rational(2, n), 2));
  }
}

TEST_CASE("volume scales as r^n", "[volume][property]") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> nums(1, 30);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 12;
    const ExactRational r = rational(nums(rng), nums(rng));
    CHECK(*volume_closed_form(n, Radius(r)).exact ==
          ExactValue(pow_int(r, n), 0) * *volume_closed_form(n).exact);
  }
}

TEST_CASE("unit-ball volume peaks at n = 5", "[volume]") {
  for (int n = 1; n < 5; ++n) CHECK(volume_closed_form(n).value < volume_closed_form(n + 1).value);
  for (int n = 5; n < 30; ++n) CHECK(volume_closed_form(n).value > volume_closed_form(n + 1).value);
}

TEST_CASE("zeta-regularized products", "[volume]") {
  CHECK(zeta_at_zero() == rational(-1, 2));
  const ModeFactor gaussian{Scalar::pi_power(2), -1};
  const ModeFactor product = zeta_regularized_product(gaussian);
  CHECK(product.constant.exactly_equals(Scalar::pi_power(-1)));
  CHECK(product.shift_power == rational(1, 2));
  CHECK(to_string(product) == "pi^(-1/2)*(eps+i*k)^(1/2)");
  CHECK(zeta_regularized_product(ModeFactor{Scalar::exact(4), 0}).constant.exactly_equals(Scalar::exact(rational(1, 2))));
  CHECK(zeta_regularized_product(ModeFactor{Scalar::exact(1), 0}).constant.exactly_equals(Scalar::exact(1)));
  const std::vector<ModeFactor> mixed{{Scalar::exact(1), 0}, {Scalar::exact(2), 0}};
  CHECK_THROWS_AS(zeta_regularized_product(mixed), unsupported_expression);
  const std::vector<ModeFactor> same{gaussian, gaussian, gaussian};
  CHECK(zeta_regularized_product(same).shift_power == rational(1, 2));
}

TEST_CASE("infinite-dimensional ball", "[volume]") {
  double previous = INFINITY;
  for (int r : {1, 2, 3, 10}) {
    const Radius radius{ExactRational(r)};
    const InfiniteDimTrace t = volume_infinite_dim(radius);
    CHECK(t.volume == ExactValue(rational(1, r), -2));
    CHECK(t.volume == *volume_closed_form(-1, radius).exact);
    CHECK(t.transform_prefactor.exactly_equals(Scalar::pi_power(-1)));
    // Both routes to the inverse transform agree.
    CHECK((t.direct_route.value() - (t.transform_prefactor * t.inverse_value).value()).abs() <= 1e-14);
    CHECK((t.direct_route.value() - ComplexValue(t.volume.to_double())).abs() <= 1e-14);
    CHECK(t.volume.to_double() < previous);
    previous = t.volume.to_double();
  }
  const InfiniteDimTrace symbolic = volume_infinite_dim(Radius(2.5));
  CHECK(symbolic.volume == ExactValue(1, -2, -1));
  CHECK(symbolic.volume.to_double(2.5) == Catch::Approx(1.0 / (std::numbers::pi * 2.5)).epsilon(1e-15));
}

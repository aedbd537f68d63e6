#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "nball/quadrature.hpp"

using namespace nball;

TEST_CASE("Gauss-Kronrod 15 integrates polynomials up to degree 22 exactly", "[quad]") {
  for (int degree = 0; degree <= 22; ++degree) {
    auto f = [&](double x) { return std::complex<double>(std::pow(x, degree), 0.0); };
    const Panel p = gauss_kronrod_15(f, -1.0, 2.0);
    const double exact = (std::pow(2.0, degree + 1) - std::pow(-1.0, degree + 1)) / (degree + 1);
    CHECK(std::abs(p.value.real() - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("the embedded Gauss rule is exact to degree 13", "[quad]") {
  auto f = [](double x) { return std::complex<double>(std::pow(x, 13) + x * x, 0.0); };
  const Panel p = gauss_kronrod_15(f, 0.0, 1.0);
  CHECK(p.error <= 1e-14);
}

TEST_CASE("adaptive integration of oscillatory and peaked integrands", "[quad]") {
  auto osc = [](double x) { return std::exp(std::complex<double>(0.0, 40.0 * x)); };
  const QuadResult r = integrate_adaptive(osc, 0.0, 3.0, 1e-12);
  const std::complex<double> exact = (std::exp(std::complex<double>(0.0, 120.0)) - 1.0) /
                                     std::complex<double>(0.0, 40.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - exact) <= 1e-11);

  auto peak = [](double x) { return std::complex<double>(1e-3 / (x * x + 1e-6), 0.0); };
  const QuadResult q = integrate_adaptive(peak, -1.0, 1.0, 1e-9, 100000);
  CHECK(q.converged);
  CHECK(std::abs(q.value.real() - 2.0 * std::atan(1000.0)) <= 1e-8);
}

TEST_CASE("breakpoints and budget", "[quad]") {
  const auto pts = uniform_breakpoints(0.0, 10.0, 3.0);
  REQUIRE(pts.size() == 5);
  CHECK(pts.back() == 10.0);
  auto rough = [](double x) { return std::complex<double>(std::sqrt(std::abs(x)), 0.0); };
  const QuadResult r = integrate_adaptive(rough, -1.0, 1.0, 1e-15, 2);
  CHECK_FALSE(r.converged);
  CHECK(r.subdivisions == 2);
  CHECK_THROWS_AS(integrate_adaptive(rough, 0.0, 1.0, 0.0), domain_error);
}

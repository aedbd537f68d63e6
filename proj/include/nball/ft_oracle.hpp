#pragma once

// Numerical Fourier transform of x^alpha, -1 < alpha < 0, where the classical
// improper integral exists. Independent of the symbolic Gamma-function rules:
// it uses only the branch power, Gauss-Kronrod quadrature and the
// integration-by-parts expansion of the oscillatory tail.

#include <cmath>
#include <complex>
#include <numbers>

#include "nball/complex_branch.hpp"
#include "nball/errors.hpp"
#include "nball/quadrature.hpp"

namespace nball {

namespace detail {

// integral_0^inf (sign * t)^alpha exp(-i omega t) dt, Abel-summed at infinity.
inline ComplexValue oscillatory_half_line(double alpha, double omega, double sign) {
  using cd = std::complex<double>;
  constexpr double tol = 1e-12;
  const cd minus_i_omega(0.0, -omega);
  auto f = [&](double t) { return cpow(ComplexValue(sign * t), ComplexValue(alpha)).std(); };

  // [0, 1] with t = u^p, p = 1/(1+alpha), which removes the t^alpha singularity.
  const double p = 1.0 / (1.0 + alpha);
  auto head_integrand = [&](double u) -> cd {
    const double t = std::pow(u, p);
    return f(t) * (p * std::pow(u, p - 1.0)) * std::exp(minus_i_omega * t);
  };
  const QuadResult head = integrate_adaptive(head_integrand, 0.0, 1.0, tol, 20000);

  // [1, X], one panel per period, with |omega| X >= 60.
  const double period = 2.0 * std::numbers::pi / std::abs(omega);
  const double periods = std::ceil(60.0 / (2.0 * std::numbers::pi));
  const double upper = 1.0 + periods * period;
  const auto points = uniform_breakpoints(1.0, upper, period);
  auto body_integrand = [&](double t) -> cd { return f(t) * std::exp(minus_i_omega * t); };
  const QuadResult body = integrate_adaptive(body_integrand, points, tol, 20000);
  if (!head.converged || !body.converged) {
    throw convergence_error("ft_numeric_oracle: quadrature did not converge",
                            (head.value + body.value).real());
  }

  // Tail: exp(-i omega X) sum_j f^(j)(X) / (i omega)^(j+1),
  // f^(j)(X) = f(X) alpha (alpha-1) ... (alpha-j+1) / X^j.
  const cd i_omega(0.0, omega);
  cd term = f(upper) / i_omega;
  cd tail = term;
  for (int j = 1; j < 60; ++j) {
    term *= (alpha - (j - 1)) / (upper * i_omega);
    tail += term;
    if (std::abs(term) < 1e-18) break;
  }
  tail *= std::exp(minus_i_omega * upper);
  return ComplexValue(head.value + body.value + tail);
}

inline void check_oracle_domain(double alpha, double k) {
  if (!std::isfinite(alpha) || !std::isfinite(k) || !(alpha > -1.0 && alpha < 0.0) || k == 0.0) {
    throw domain_error("ft_numeric_oracle: requires -1 < alpha < 0 and k != 0");
  }
}

}  // namespace detail

// integral_0^inf x^alpha exp(-i k x) dx
inline ComplexValue ft_numeric_oracle_half_line(double alpha, double k) {
  detail::check_oracle_domain(alpha, k);
  return detail::oscillatory_half_line(alpha, k, 1.0);
}

// integral_R x^alpha exp(-i k x) dx, with x^alpha on the fixed branch for x < 0.
inline ComplexValue ft_numeric_oracle(double alpha, double k) {
  detail::check_oracle_domain(alpha, k);
  return detail::oscillatory_half_line(alpha, k, 1.0) +
         detail::oscillatory_half_line(alpha, -k, -1.0);
}

}  // namespace nball

#pragma once

#include <cmath>
#include <numbers>

#include "nball/errors.hpp"
#include "nball/rational.hpp"

namespace nball {

inline ExactRational factorial(long long n) {
  if (n < 0) throw domain_error("factorial: negative argument is a pole");
  BigInt result = 1;
  for (long long k = 2; k <= n; ++k) result *= k;
  return ExactRational(result);
}

// n!! for n >= 0 (0!! = 1) and for negative odd n through the reflection
//   (-n)!! * n!! = (-1)^((n-1)/2) * n,  n odd.
// Negative even arguments have no value.
inline ExactRational double_factorial(long long n) {
  if (n >= 0) {
    BigInt result = 1;
    for (long long k = n; k > 1; k -= 2) result *= k;
    return ExactRational(result);
  }
  if (n % 2 == 0) throw domain_error("double_factorial: negative even argument");
  const long long k = -n;
  const ExactRational sign = ((k - 1) / 2) % 2 == 0 ? 1 : -1;
  return sign * ExactRational(k) / double_factorial(k);
}

// Gamma at a positive integer or any half-integer, as coeff * sqrt(pi)^sqrt_pi_power
// with sqrt_pi_power in {0, 1}.
struct ExactGamma {
  ExactRational coeff;
  int sqrt_pi_power = 0;

  double value() const {
    return to_double(coeff) * (sqrt_pi_power ? std::sqrt(std::numbers::pi) : 1.0);
  }
};

// Recurrence from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi), stepping up with
// Gamma(x+1) = x Gamma(x) or down with Gamma(x-1) = Gamma(x) / (x-1).
inline ExactGamma gamma_exact(const ExactRational& x) {
  if (is_integer(x)) {
    if (x <= 0) throw domain_error("gamma: pole at non-positive integer");
    return {factorial(num(x).convert_to<long long>() - 1), 0};
  }
  if (!is_half_integer(x)) throw domain_error("gamma_exact: argument must be an integer or half-integer");
  const ExactRational half = rational(1, 2);
  ExactRational coeff = 1;
  ExactRational at = half;
  while (at < x) {
    coeff *= at;
    at += 1;
  }
  while (at > x) {
    at -= 1;
    coeff /= at;
  }
  return {coeff, 1};
}

// Gamma(x) for real x. Integers and half-integers use the exact recurrence;
// other points use the C library's tgamma.
inline double gamma(double x) {
  if (!std::isfinite(x)) throw domain_error("gamma: non-finite argument");
  if (x <= 0 && x == std::floor(x)) throw domain_error("gamma: pole at non-positive integer");
  if (const double twice = 2.0 * x; twice == std::floor(twice) && std::abs(x) < 170) {
    return gamma_exact(exact_from_double(x)).value();
  }
  return std::tgamma(x);
}

}  // namespace nball

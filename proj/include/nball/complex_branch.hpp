#pragma once

// Complex logarithm and power on the branch arg(z) in [-pi, pi).
//
// The half-open interval puts the negative real axis at angle -pi, so
// log(-1) = -i*pi, log(i) = i*pi/2, log(-i) = -i*pi/2. Every multivalued
// expression in this library goes through principal_log / cpow.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "nball/errors.hpp"

namespace nball {

inline constexpr double kDefaultTolerance = 1e-12;

// Finite complex number. No operator==; use approx_equal.
class ComplexValue {
 public:
  constexpr ComplexValue() = default;
  constexpr ComplexValue(double re, double im = 0.0) : z_(re, im) {}
  constexpr explicit ComplexValue(std::complex<double> z) : z_(z) {}

  constexpr double re() const { return z_.real(); }
  constexpr double im() const { return z_.imag(); }
  constexpr std::complex<double> std() const { return z_; }

  double abs() const { return std::abs(z_); }
  bool is_zero() const { return z_ == std::complex<double>{}; }
  bool is_finite() const { return std::isfinite(z_.real()) && std::isfinite(z_.imag()); }

  ComplexValue conj() const { return ComplexValue(std::conj(z_)); }

  ComplexValue& operator+=(const ComplexValue& o) { z_ += o.z_; return *this; }
  ComplexValue& operator-=(const ComplexValue& o) { z_ -= o.z_; return *this; }
  ComplexValue& operator*=(const ComplexValue& o) { z_ *= o.z_; return *this; }
  ComplexValue& operator/=(const ComplexValue& o) { z_ /= o.z_; return *this; }

  friend ComplexValue operator+(ComplexValue a, const ComplexValue& b) { return a += b; }
  friend ComplexValue operator-(ComplexValue a, const ComplexValue& b) { return a -= b; }
  friend ComplexValue operator*(ComplexValue a, const ComplexValue& b) { return a *= b; }
  friend ComplexValue operator/(ComplexValue a, const ComplexValue& b) { return a /= b; }
  friend ComplexValue operator-(const ComplexValue& a) { return ComplexValue(-a.z_); }

 private:
  std::complex<double> z_{};
};

inline constexpr ComplexValue kImagUnit{0.0, 1.0};

inline bool approx_equal(const ComplexValue& a, const ComplexValue& b,
                         double abs_tol = kDefaultTolerance) {
  return std::abs(a.std() - b.std()) <= abs_tol;
}

inline ComplexValue checked(const ComplexValue& z, const char* op) {
  if (!z.is_finite()) throw domain_error(std::string(op) + ": non-finite result");
  return z;
}

// Argument in [-pi, pi). atan2 returns (-pi, pi]; +pi is folded onto -pi.
inline double branch_arg(const ComplexValue& z) {
  double phi = std::atan2(z.im(), z.re());
  if (phi >= std::numbers::pi) phi = -std::numbers::pi;
  return phi;
}

inline ComplexValue principal_log(const ComplexValue& z) {
  if (!z.is_finite()) throw domain_error("principal_log: non-finite input");
  if (z.is_zero()) throw domain_error("principal_log: log(0) is undefined");
  return ComplexValue(std::log(z.abs()), branch_arg(z));
}

inline ComplexValue cexp(const ComplexValue& w) {
  return checked(ComplexValue(std::exp(w.std())), "cexp");
}

// z^w = exp(w * log z) on the fixed branch.
inline ComplexValue cpow(const ComplexValue& z, const ComplexValue& w) {
  if (!z.is_finite() || !w.is_finite()) throw domain_error("cpow: non-finite input");
  if (z.is_zero()) {
    if (w.im() == 0.0 && w.re() > 0.0) return ComplexValue{};
    throw domain_error("cpow: zero base requires a positive real exponent");
  }
  return checked(cexp(w * principal_log(z)), "cpow");
}

// Evaluates (-1)^(m+1/2) * (-i)^m * i^(-m-1) for m in {1/2, 3/2, ...}.
// On this branch the product is identically 1.
inline ComplexValue appendix_identity(double m) {
  const double twice = 2.0 * m;
  if (!std::isfinite(m) || m < 0.5 || twice != std::floor(twice) ||
      std::fmod(twice, 2.0) != 1.0) {
    throw domain_error("appendix_identity: m must be a positive half-integer");
  }
  const ComplexValue minus_one{-1.0, 0.0};
  const ComplexValue minus_i{0.0, -1.0};
  return cpow(minus_one, m + 0.5) * cpow(minus_i, m) * cpow(kImagUnit, -m - 1.0);
}

}  // namespace nball

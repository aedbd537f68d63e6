#pragma once

// Exact-or-float complex scalar for distribution coefficients.
//
// The exact form is (a + b i) * pi^(p/2) * sqrt(2)^s with a, b rational and
// s in {0, 1}. It covers every coefficient produced by integer and
// half-integer exponents: factorials, double factorials, sqrt(pi), and the
// eighth roots of unity that half-integer powers of +-1, +-i produce on the
// fixed branch. The float value is always carried; exactness is an extra.

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>

#include "nball/complex_branch.hpp"
#include "nball/rational.hpp"

namespace nball {

struct ExactCoeff {
  ExactRational re = 0;
  ExactRational im = 0;
  int pi_half_power = 0;
  int sqrt2_power = 0;  // 0 or 1

  bool is_zero() const { return re == 0 && im == 0; }

  void normalize() {
    if (is_zero()) {
      pi_half_power = 0;
      sqrt2_power = 0;
    }
  }

  ComplexValue value() const {
    const double scale = std::pow(std::numbers::pi, pi_half_power / 2.0) *
                         (sqrt2_power ? std::numbers::sqrt2 : 1.0);
    return ComplexValue(to_double(re) * scale, to_double(im) * scale);
  }

  friend bool operator==(const ExactCoeff&, const ExactCoeff&) = default;
};

// Units on the fixed branch, with arg/pi in [-1, 1).
enum class Unit { one, i, minus_one, minus_i };

inline ComplexValue unit_value(Unit u) {
  switch (u) {
    case Unit::one: return {1.0, 0.0};
    case Unit::i: return {0.0, 1.0};
    case Unit::minus_one: return {-1.0, 0.0};
    case Unit::minus_i: return {0.0, -1.0};
  }
  return {};
}

inline ExactRational unit_arg_over_pi(Unit u) {
  switch (u) {
    case Unit::one: return 0;
    case Unit::i: return rational(1, 2);
    case Unit::minus_one: return -1;
    case Unit::minus_i: return rational(-1, 2);
  }
  return 0;
}

inline std::optional<Unit> as_unit(const ComplexValue& z) {
  if (z.re() == 1.0 && z.im() == 0.0) return Unit::one;
  if (z.re() == 0.0 && z.im() == 1.0) return Unit::i;
  if (z.re() == -1.0 && z.im() == 0.0) return Unit::minus_one;
  if (z.re() == 0.0 && z.im() == -1.0) return Unit::minus_i;
  return std::nullopt;
}

class Scalar {
 public:
  Scalar() : Scalar(exact(0)) {}

  static Scalar exact(ExactRational re, ExactRational im = 0, int pi_half_power = 0,
                      int sqrt2_power = 0) {
    ExactCoeff c{std::move(re), std::move(im), pi_half_power, sqrt2_power};
    if (c.sqrt2_power < 0 || c.sqrt2_power > 1) {
      // sqrt(2)^s = 2^floor(s/2) * sqrt(2)^(s mod 2)
      const int s = c.sqrt2_power;
      const int r = ((s % 2) + 2) % 2;
      const ExactRational two_pow = pow_int(ExactRational(2), (s - r) / 2);
      c.re *= two_pow;
      c.im *= two_pow;
      c.sqrt2_power = r;
    }
    c.normalize();
    return Scalar(c);
  }

  static Scalar numeric(const ComplexValue& v) { return Scalar(checked(v, "Scalar")); }

  static Scalar pi_power(int half_power) { return exact(1, 0, half_power); }

  static Scalar i() { return exact(0, 1); }

  const ComplexValue& value() const { return value_; }
  const std::optional<ExactCoeff>& exact_form() const { return exact_; }
  bool is_exact() const { return exact_.has_value(); }

  bool is_zero() const { return exact_ ? exact_->is_zero() : value_.is_zero(); }

  // Exact structural equality; false when either side is float-only.
  bool exactly_equals(const Scalar& o) const { return exact_ && o.exact_ && *exact_ == *o.exact_; }

  Scalar operator-() const {
    if (exact_) return exact(-exact_->re, -exact_->im, exact_->pi_half_power, exact_->sqrt2_power);
    return numeric(-value_);
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
      const ExactCoeff& x = *a.exact_;
      const ExactCoeff& y = *b.exact_;
      return exact(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re,
                   x.pi_half_power + y.pi_half_power, x.sqrt2_power + y.sqrt2_power);
    }
    return numeric(a.value_ * b.value_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
      if (a.exact_->is_zero()) return b;
      if (b.exact_->is_zero()) return a;
      const ExactCoeff& x = *a.exact_;
      const ExactCoeff& y = *b.exact_;
      if (x.pi_half_power == y.pi_half_power && x.sqrt2_power == y.sqrt2_power) {
        return exact(x.re + y.re, x.im + y.im, x.pi_half_power, x.sqrt2_power);
      }
    }
    return numeric(a.value_ + b.value_);
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  Scalar inverse() const {
    if (is_zero()) throw domain_error("Scalar: division by zero");
    if (exact_) {
      const ExactCoeff& x = *exact_;
      const ExactRational norm = x.re * x.re + x.im * x.im;
      // 1/sqrt(2) = sqrt(2)/2
      const ExactRational s = x.sqrt2_power ? rational(1, 2) : ExactRational(1);
      return exact(s * x.re / norm, -s * x.im / norm, -x.pi_half_power, x.sqrt2_power);
    }
    return numeric(ComplexValue(1.0) / value_);
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

 private:
  explicit Scalar(const ExactCoeff& c) : value_(c.value()), exact_(c) {}
  explicit Scalar(const ComplexValue& v) : value_(v) {}

  ComplexValue value_;
  std::optional<ExactCoeff> exact_;
};

inline Scalar rational_scalar(const ExactRational& q) { return Scalar::exact(q); }

// u^e on the fixed branch. The float value comes from cpow; the exact form is
// recovered from the rational phase e * arg(u) when it is a multiple of pi/4.
inline Scalar unit_power(Unit u, const ExactRational& e) {
  const ComplexValue numeric = cpow(unit_value(u), ComplexValue(to_double(e)));
  const ExactRational theta = e * unit_arg_over_pi(u);  // phase / pi
  const ExactRational quarter_turns = theta * 4;
  if (!is_integer(quarter_turns)) return Scalar::numeric(numeric);
  const long long k = ((num(quarter_turns) % 8 + 8) % 8).convert_to<long long>();
  const ExactRational h = rational(1, 2);
  switch (k) {
    case 0: return Scalar::exact(1);
    case 1: return Scalar::exact(h, h, 0, 1);
    case 2: return Scalar::exact(0, 1);
    case 3: return Scalar::exact(-h, h, 0, 1);
    case 4: return Scalar::exact(-1);
    case 5: return Scalar::exact(-h, -h, 0, 1);
    case 6: return Scalar::exact(0, -1);
    default: return Scalar::exact(h, -h, 0, 1);
  }
}

// q^e for rational q > 0. Exact when e has denominator <= 2 and the root is
// rational, or rational times sqrt(2).
inline Scalar positive_real_power(const ExactRational& q, const ExactRational& e) {
  if (q <= 0) throw domain_error("positive_real_power: base must be positive");
  if (auto r = rational_power(q, e)) return Scalar::exact(*r);
  if (is_half_integer(e)) {
    if (auto r = rational_power(q / 2, e)) {
      // (2 * q/2)^e = (q/2)^e * 2^(e - 1/2) * sqrt(2)
      const ExactRational shift = e - rational(1, 2);
      return Scalar::exact(*r * pow_int(ExactRational(2), num(shift).convert_to<long long>()), 0, 0,
                           1);
    }
  }
  return Scalar::numeric(ComplexValue(std::pow(to_double(q), to_double(e))));
}

// (u * x)^e for a unit u and real x != 0, on the fixed branch. Uses
// arg(u * x) = arg(u * sgn x), so the result splits as (u sgn x)^e |x|^e.
inline Scalar unit_times_real_power(Unit u, const ExactRational& x, const ExactRational& e) {
  if (x == 0) throw domain_error("unit_times_real_power: zero base");
  Unit signed_unit = u;
  if (x < 0) {
    switch (u) {
      case Unit::one: signed_unit = Unit::minus_one; break;
      case Unit::i: signed_unit = Unit::minus_i; break;
      case Unit::minus_one: signed_unit = Unit::one; break;
      case Unit::minus_i: signed_unit = Unit::i; break;
    }
  }
  const ExactRational magnitude = x < 0 ? ExactRational(-x) : x;
  return unit_power(signed_unit, e) * positive_real_power(magnitude, e);
}

// Scalar raised to a rational power on the fixed branch. Exact for exact real
// positive bases whose rational and pi parts have exact roots.
inline Scalar scalar_power(const Scalar& base, const ExactRational& e) {
  if (base.is_zero()) throw domain_error("scalar_power: zero base");
  if (const auto& x = base.exact_form(); x && x->im == 0 && x->re > 0) {
    const ExactRational pi_exponent = ExactRational(x->pi_half_power) * e;
    const ExactRational sqrt2_exponent = ExactRational(x->sqrt2_power) * e;
    if (is_integer(pi_exponent) && is_integer(sqrt2_exponent)) {
      const Scalar rational_part = positive_real_power(x->re, e);
      if (rational_part.is_exact()) {
        return rational_part *
               Scalar::exact(1, 0, num(pi_exponent).convert_to<int>(),
                             num(sqrt2_exponent).convert_to<int>());
      }
    }
  }
  return Scalar::numeric(cpow(base.value(), ComplexValue(to_double(e))));
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

namespace detail {

inline std::string pi_factor(int half_power) {
  if (half_power == 0) return {};
  if (half_power == 2) return "pi";
  if (half_power == 1) return "sqrt(pi)";
  if (half_power % 2 == 0) return "pi^(" + std::to_string(half_power / 2) + ")";
  return "pi^(" + std::to_string(half_power) + "/2)";
}

}  // namespace detail

// Compact rendering: "2*pi", "-i*pi", "2*sqrt(pi)", "(1/2+1/2*i)*sqrt(2)".
inline std::string to_string(const Scalar& s) {
  if (!s.exact_form()) {
    const ComplexValue v = s.value();
    if (v.im() == 0.0) return format_double(v.re());
    std::string out = "(" + format_double(v.re());
    out += v.im() < 0 ? "-" : "+";
    return out + format_double(std::abs(v.im())) + "*i)";
  }
  const ExactCoeff& c = *s.exact_form();
  if (c.is_zero()) return "0";

  std::string gaussian;
  bool unit_magnitude = false;  // gaussian part is +-1, may be elided
  bool negative = false;
  if (c.im == 0) {
    negative = c.re < 0;
    const ExactRational mag = negative ? ExactRational(-c.re) : c.re;
    unit_magnitude = mag == 1;
    gaussian = to_string(mag);
  } else if (c.re == 0) {
    negative = c.im < 0;
    const ExactRational mag = negative ? ExactRational(-c.im) : c.im;
    gaussian = mag == 1 ? "i" : to_string(mag) + "*i";
  } else {
    gaussian = "(" + to_string(c.re) + (c.im < 0 ? "-" : "+");
    const ExactRational mag = c.im < 0 ? ExactRational(-c.im) : c.im;
    gaussian += (mag == 1 ? std::string("i") : to_string(mag) + "*i") + ")";
  }

  std::string rest = detail::pi_factor(c.pi_half_power);
  if (c.sqrt2_power) rest += (rest.empty() ? "" : "*") + std::string("sqrt(2)");

  std::string out = negative ? "-" : "";
  if (unit_magnitude && !rest.empty()) return out + rest;
  out += gaussian;
  if (!rest.empty()) out += "*" + rest;
  return out;
}

}  // namespace nball

#pragma once

// Symbolic tempered-distribution expressions built from a closed set of
// power-law term kinds, with the Fourier rules for power laws.
//
// Fourier convention (fixed library-wide):
//   F f(k)      = integral f(x) exp(-i k x) dx
//   F^-1 g(x)   = (1 / 2 pi) integral g(k) exp(i k x) dk
// With it, F^-1 [2 pi delta] = 1 and the step-function representation used
// by the volume pipeline reproduces the known ball volumes.
//
// All non-integer powers are taken on the branch arg in [-pi, pi). Under that
// branch (i k)^p = i^p k^p for every real k != 0, which the inverse rules use.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "nball/complex_branch.hpp"
#include "nball/errors.hpp"
#include "nball/rational.hpp"
#include "nball/scalar.hpp"
#include "nball/special_functions.hpp"

namespace nball {

// delta^(order)(x)
struct DeltaDeriv {
  int order = 0;
};

// Pf x^exponent sgn(x)
struct PfPowerSgn {
  double exponent = 0;
};

// Pf x^exponent
struct PfPower {
  double exponent = 0;
};

// Pf (sign * i * x)^exponent
struct PfImagPower {
  int sign = 1;
  double exponent = 0;
};

// Theta(side * x) * (phase * |x|)^exponent
struct ThetaGatedPower {
  int side = 1;
  double exponent = 0;
  ComplexValue phase{1.0, 0.0};
};

using TermShape = std::variant<DeltaDeriv, PfPowerSgn, PfPower, PfImagPower, ThetaGatedPower>;

namespace detail {

inline auto shape_key(const TermShape& s) {
  return std::visit(
      [&](const auto& t) -> std::tuple<std::size_t, double, double, double, double> {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, DeltaDeriv>) return {s.index(), t.order, 0, 0, 0};
        if constexpr (std::is_same_v<T, PfPowerSgn>) return {s.index(), t.exponent, 0, 0, 0};
        if constexpr (std::is_same_v<T, PfPower>) return {s.index(), t.exponent, 0, 0, 0};
        if constexpr (std::is_same_v<T, PfImagPower>) return {s.index(), t.exponent, t.sign, 0, 0};
        if constexpr (std::is_same_v<T, ThetaGatedPower>)
          return {s.index(), t.exponent, t.side, t.phase.re(), t.phase.im()};
      },
      s);
}

}  // namespace detail

struct DistTerm {
  Scalar coefficient;
  TermShape shape;
};

// Finite linear combination of DistTerms, kept canonical: sorted by kind then
// parameters, equal shapes merged, zero coefficients dropped.
class DistExpr {
 public:
  DistExpr() = default;

  explicit DistExpr(std::vector<DistTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

  DistExpr(Scalar coefficient, TermShape shape)
      : DistExpr(std::vector<DistTerm>{{std::move(coefficient), shape}}) {}

  const std::vector<DistTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend DistExpr operator+(const DistExpr& a, const DistExpr& b) {
    std::vector<DistTerm> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return DistExpr(std::move(all));
  }

  friend DistExpr operator*(const Scalar& c, const DistExpr& e) {
    std::vector<DistTerm> scaled;
    for (const auto& t : e.terms_) scaled.push_back({c * t.coefficient, t.shape});
    return DistExpr(std::move(scaled));
  }

 private:
  void canonicalize() {
    for (const auto& t : terms_) {
      if (const auto* d = std::get_if<DeltaDeriv>(&t.shape); d && d->order < 0) {
        throw domain_error("DeltaDeriv: order must be non-negative");
      }
    }
    std::stable_sort(terms_.begin(), terms_.end(), [](const DistTerm& a, const DistTerm& b) {
      return detail::shape_key(a.shape) < detail::shape_key(b.shape);
    });
    std::vector<DistTerm> merged;
    for (auto& t : terms_) {
      if (!merged.empty() && detail::shape_key(merged.back().shape) == detail::shape_key(t.shape)) {
        merged.back().coefficient += t.coefficient;
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [](const DistTerm& t) { return t.coefficient.is_zero(); });
    terms_ = std::move(merged);
  }

  std::vector<DistTerm> terms_;
};

// ---------------------------------------------------------------------------
// Exponent helpers

namespace detail {

inline std::optional<ExactRational> exact_exponent(double p) { return small_rational(p, 64); }

inline bool is_integral(double x) { return std::isfinite(x) && x == std::floor(x); }

inline bool is_half_integral(double x) {
  return std::isfinite(x) && !is_integral(x) && is_integral(2.0 * x);
}

inline Scalar gamma_scalar(double x) {
  if (is_integral(2.0 * x) && std::abs(x) < 170) {
    const ExactGamma g = gamma_exact(exact_from_double(x));
    return Scalar::exact(g.coeff, 0, g.sqrt_pi_power);
  }
  return Scalar::numeric(ComplexValue(gamma(x)));
}

// (phase * x)^p for real x != 0. Exact when phase is a unit and p rational.
inline Scalar phased_power(const ComplexValue& phase, const ExactRational& x, double p) {
  const auto unit = as_unit(phase);
  const auto e = exact_exponent(p);
  if (unit && e) return unit_times_real_power(*unit, x, *e);
  return Scalar::numeric(cpow(phase * ComplexValue(to_double(x)), ComplexValue(p)));
}

inline Scalar unit_pow(Unit u, double p) {
  if (const auto e = exact_exponent(p)) return unit_power(u, *e);
  return Scalar::numeric(cpow(unit_value(u), ComplexValue(p)));
}

inline int sign_of(const ExactRational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline const Scalar& two_pi_inverse() {
  static const Scalar value = Scalar::exact(rational(1, 2), 0, -2);
  return value;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Forward transforms of Pf x^alpha

// Generic-exponent formula, valid for every non-integer alpha:
//   Gamma(alpha+1) * ( e^{-i pi alpha} Pf (-i x)^{-alpha-1} + Pf (i x)^{-alpha-1} )
// with e^{-i pi alpha} = (-1)^alpha on the fixed branch.
inline DistExpr ft_powerlaw_generic(double alpha) {
  if (!std::isfinite(alpha)) throw domain_error("ft_powerlaw: non-finite exponent");
  if (detail::is_integral(alpha)) {
    throw domain_error("ft_powerlaw_generic: integer exponents use the delta / sgn rules");
  }
  const Scalar g = detail::gamma_scalar(alpha + 1.0);
  const Scalar phase = detail::unit_pow(Unit::minus_one, alpha);
  const double p = -alpha - 1.0;
  return DistExpr({{g * phase, PfImagPower{-1, p}}, {g, PfImagPower{1, p}}});
}

// Half-integer specialization for F Pf x^{-m}, m in {+-1/2, +-3/2, ...}:
//   sqrt(pi) 2^{m+1/2} (-2m)!! Theta(-x) (-i|x|)^{m-1}
inline DistExpr ft_half_integer_row(double m) {
  if (!detail::is_half_integral(m)) throw domain_error("ft_half_integer_row: m must be a half-integer");
  const long long two_m = std::llround(2.0 * m);
  const long long pow2 = std::llround(m + 0.5);
  const Scalar c = Scalar::exact(pow_int(ExactRational(2), pow2) * double_factorial(-two_m), 0, 1);
  return DistExpr(c, ThetaGatedPower{-1, m - 1.0, ComplexValue(0.0, -1.0)});
}

// F Pf x^alpha for any finite real alpha:
//   alpha = 0, 1, 2, ...     ->  2 pi i^alpha delta^(alpha)
//   alpha = -1, -2, ...      ->  pi i^alpha / (-alpha-1)! Pf x^{-alpha-1} sgn(x)
//   alpha half-integer       ->  the half-integer row
//   otherwise                ->  the generic formula
inline DistExpr ft_powerlaw(double alpha) {
  if (!std::isfinite(alpha)) throw domain_error("ft_powerlaw: non-finite exponent");
  if (detail::is_integral(alpha)) {
    const long long a = std::llround(alpha);
    const Scalar i_pow = unit_power(Unit::i, ExactRational(a));
    if (a >= 0) {
      return DistExpr(Scalar::exact(2, 0, 2) * i_pow, DeltaDeriv{static_cast<int>(a)});
    }
    const long long j = -a - 1;
    return DistExpr(Scalar::exact(1 / factorial(j), 0, 2) * i_pow,
                    PfPowerSgn{static_cast<double>(j)});
  }
  if (detail::is_half_integral(alpha)) return ft_half_integer_row(-alpha);
  return ft_powerlaw_generic(alpha);
}

// S'-limit as eps -> 0+ of (eps + i x)^{-(m+1)}:
//   m = 1, 2, ...        ->  pi i^m / m! delta^(m) + Pf (i x)^{-m-1}
//   m half-integer       ->  Pf (i x)^{-m-1}
inline DistExpr eps_limit_inverse_power(double m) {
  const double p = -m - 1.0;
  if (detail::is_integral(m) && m >= 1) {
    const long long mi = std::llround(m);
    const Scalar c = Scalar::exact(1 / factorial(mi), 0, 2) * unit_power(Unit::i, ExactRational(mi));
    return DistExpr({{c, DeltaDeriv{static_cast<int>(mi)}}, {Scalar::exact(1), PfImagPower{1, p}}});
  }
  if (detail::is_half_integral(m)) return DistExpr(Scalar::exact(1), PfImagPower{1, p});
  throw domain_error("eps_limit_inverse_power: m must be a positive integer or a half-integer");
}

// ---------------------------------------------------------------------------
// Pointwise evaluation away from the origin

inline Scalar evaluate_term(const DistTerm& term, const ExactRational& k) {
  if (k == 0) throw domain_error("evaluate_at: distributions are evaluated only at k != 0");
  const Scalar value = std::visit(
      [&](const auto& t) -> Scalar {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, DeltaDeriv>) {
          return Scalar::exact(0);
        } else if constexpr (std::is_same_v<T, PfPowerSgn>) {
          return Scalar::exact(detail::sign_of(k)) * detail::phased_power({1.0, 0.0}, k, t.exponent);
        } else if constexpr (std::is_same_v<T, PfPower>) {
          return detail::phased_power({1.0, 0.0}, k, t.exponent);
        } else if constexpr (std::is_same_v<T, PfImagPower>) {
          return detail::phased_power({0.0, static_cast<double>(t.sign)}, k, t.exponent);
        } else {
          if (detail::sign_of(k) != t.side) return Scalar::exact(0);
          return detail::phased_power(t.phase, k < 0 ? ExactRational(-k) : k, t.exponent);
        }
      },
      term.shape);
  return term.coefficient * value;
}

// Value of the regular part of expr at k != 0; delta terms vanish there.
inline Scalar evaluate_at(const DistExpr& expr, const ExactRational& k) {
  Scalar sum = Scalar::exact(0);
  for (const auto& t : expr.terms()) sum += evaluate_term(t, k);
  return sum;
}

inline Scalar evaluate_at(const DistExpr& expr, double k) {
  return evaluate_at(expr, exact_from_double(k));
}

// ---------------------------------------------------------------------------
// Inverse Fourier transform, evaluated pointwise

namespace detail {

inline Scalar inverse_imag_power(int sign, double p, const ExactRational& x);

// F^-1 [c delta^(m)](x) = c (-i x)^m / 2 pi
inline Scalar inverse_delta(int m, const ExactRational& x) {
  if (x == 0) return Scalar::exact(m == 0 ? 1 : 0) * two_pi_inverse();
  return unit_times_real_power(Unit::minus_i, x, m) * two_pi_inverse();
}

// F^-1 [Pf k^j sgn k](x) = j! i^{j+1} / pi * x^{-j-1}, j = 0, 1, ...
inline Scalar inverse_power_sgn(double p, const ExactRational& x) {
  if (!is_integral(p) || p < 0) {
    throw unsupported_expression("inverse_ft_eval: Pf x^p sgn(x) needs a non-negative integer p");
  }
  if (x == 0) throw domain_error("inverse_ft_eval: result is singular at x = 0");
  const long long j = std::llround(p);
  return Scalar::exact(factorial(j), 0, -2) * unit_power(Unit::i, ExactRational(j + 1)) *
         Scalar::exact(pow_int(x, -j - 1));
}

// F^-1 [Pf (sign i k)^p](x) with beta = -p:
//   beta = 1, 2, ...       sign^beta sgn(x) x^{beta-1} / (2 (beta-1)!)
//   beta half-int, sign=+  (1/2pi) i^{-beta} [F Pf k^{-beta}](-x), half-integer row
//   beta other non-int     Theta(sign x) |x|^{beta-1} / Gamma(beta)
inline Scalar inverse_imag_power(int sign, double p, const ExactRational& x) {
  const double beta = -p;
  if (is_integral(beta)) {
    if (beta <= 0) {
      throw unsupported_expression(
          "inverse_ft_eval: Pf (i k)^n with n >= 0 transforms to a delta derivative");
    }
    const long long b = std::llround(beta);
    if (x == 0) return Scalar::exact(0);
    const ExactRational sign_pow = (sign < 0 && b % 2 != 0) ? -1 : 1;
    return Scalar::exact(sign_pow * sign_of(x) * pow_int(x, b - 1) / (2 * factorial(b - 1)));
  }
  if (x == 0) {
    if (beta > 1) return Scalar::exact(0);
    throw domain_error("inverse_ft_eval: result is singular at x = 0");
  }
  if (is_half_integral(beta) && sign > 0) {
    const Scalar row = evaluate_at(ft_half_integer_row(beta), ExactRational(-x));
    return two_pi_inverse() * unit_pow(Unit::i, -beta) * row;
  }
  if (sign_of(x) != sign) return Scalar::exact(0);
  const ExactRational magnitude = x < 0 ? ExactRational(-x) : x;
  return phased_power({1.0, 0.0}, magnitude, beta - 1.0) / gamma_scalar(beta);
}

// Pf k^p = i^{-p} Pf (i k)^p on the fixed branch.
inline Scalar inverse_power(double p, const ExactRational& x) {
  return unit_pow(Unit::i, -p) * inverse_imag_power(1, p, x);
}

// F^-1 [Theta(side k) (phase |k|)^p](x) = phase^p Gamma(p+1) / 2pi * (-i side x)^{-p-1}
inline Scalar inverse_theta_power(const ThetaGatedPower& t, const ExactRational& x) {
  if (is_integral(t.exponent) && t.exponent < 0) {
    throw unsupported_expression("inverse_ft_eval: Theta-gated power with negative integer exponent");
  }
  if (x == 0) throw domain_error("inverse_ft_eval: result is singular at x = 0");
  Scalar phase_pow = Scalar::numeric(cpow(t.phase, ComplexValue(t.exponent)));
  if (const auto u = as_unit(t.phase)) phase_pow = unit_pow(*u, t.exponent);
  const ComplexValue kernel{0.0, t.side > 0 ? -1.0 : 1.0};
  return phase_pow * gamma_scalar(t.exponent + 1.0) * two_pi_inverse() *
         phased_power(kernel, x, -t.exponent - 1.0);
}

}  // namespace detail

inline Scalar inverse_ft_eval_term(const DistTerm& term, const ExactRational& x) {
  const Scalar value = std::visit(
      [&](const auto& t) -> Scalar {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, DeltaDeriv>) return detail::inverse_delta(t.order, x);
        if constexpr (std::is_same_v<T, PfPowerSgn>) return detail::inverse_power_sgn(t.exponent, x);
        if constexpr (std::is_same_v<T, PfPower>) return detail::inverse_power(t.exponent, x);
        if constexpr (std::is_same_v<T, PfImagPower>)
          return detail::inverse_imag_power(t.sign, t.exponent, x);
        if constexpr (std::is_same_v<T, ThetaGatedPower>) return detail::inverse_theta_power(t, x);
      },
      term.shape);
  return term.coefficient * value;
}

// Value at x of F^-1 expr. Throws unsupported_expression for terms whose
// inverse is not a regular function at x.
inline Scalar inverse_ft_eval(const DistExpr& expr, const ExactRational& x) {
  Scalar sum = Scalar::exact(0);
  for (const auto& t : expr.terms()) sum += inverse_ft_eval_term(t, x);
  return sum;
}

inline Scalar inverse_ft_eval(const DistExpr& expr, double x) {
  return inverse_ft_eval(expr, exact_from_double(x));
}

// Degree d with F^-1 expr (lambda x) = lambda^d F^-1 expr (x) for lambda > 0,
// when every term shares one degree.
inline std::optional<double> inverse_ft_degree(const DistExpr& expr) {
  std::optional<double> degree;
  for (const auto& term : expr.terms()) {
    const double d = std::visit(
        [](const auto& t) -> double {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, DeltaDeriv>) return t.order;
          else return -t.exponent - 1.0;
        },
        term.shape);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

// ---------------------------------------------------------------------------
// Printer
//
// Grammar (stable, used by the CLI and golden tests):
//   expr   := "0" | term { (" + " | " - ") term }
//   term   := [coeff "*"] shape
//   shape  := "delta^(" m ")(x)"
//           | "Pf[sgn(x)]" | "Pf[x^(" p ")*sgn(x)]"
//           | "Pf[x^(" p ")]"
//           | "Pf[(i*x)^(" p ")]" | "Pf[(-i*x)^(" p ")]"
//           | "Theta(" ["-"] "x)*(" phase "|x|)^(" p ")"
//   coeff  := Scalar rendering, e.g. "2*pi", "-i*pi", "2*sqrt(pi)"
// Exponents print as integers or reduced fractions when exact (denominator
// <= 64), else as %.15g.

inline std::string format_exponent(double p) {
  if (const auto q = detail::exact_exponent(p)) return to_string(*q);
  return format_double(p);
}

namespace detail {

inline std::string phase_prefix(const ComplexValue& phase) {
  if (const auto u = as_unit(phase)) {
    switch (*u) {
      case Unit::one: return "";
      case Unit::i: return "i*";
      case Unit::minus_one: return "-";
      case Unit::minus_i: return "-i*";
    }
  }
  return to_string(Scalar::numeric(phase)) + "*";
}

inline std::string shape_string(const TermShape& shape) {
  return std::visit(
      [](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, DeltaDeriv>) {
          return "delta^(" + std::to_string(t.order) + ")(x)";
        } else if constexpr (std::is_same_v<T, PfPowerSgn>) {
          if (t.exponent == 0) return "Pf[sgn(x)]";
          return "Pf[x^(" + format_exponent(t.exponent) + ")*sgn(x)]";
        } else if constexpr (std::is_same_v<T, PfPower>) {
          return "Pf[x^(" + format_exponent(t.exponent) + ")]";
        } else if constexpr (std::is_same_v<T, PfImagPower>) {
          return std::string("Pf[(") + (t.sign > 0 ? "i" : "-i") + "*x)^(" +
                 format_exponent(t.exponent) + ")]";
        } else {
          return std::string("Theta(") + (t.side > 0 ? "x" : "-x") + ")*(" +
                 phase_prefix(t.phase) + "|x|)^(" + format_exponent(t.exponent) + ")";
        }
      },
      shape);
}

}  // namespace detail

inline std::string to_string(const DistTerm& term) {
  const std::string c = to_string(term.coefficient);
  const std::string s = detail::shape_string(term.shape);
  if (c == "1") return s;
  if (c == "-1") return "-" + s;
  return c + "*" + s;
}

inline std::string to_string(const DistExpr& expr) {
  if (expr.empty()) return "0";
  std::string out;
  for (std::size_t n = 0; n < expr.terms().size(); ++n) {
    const std::string t = to_string(expr.terms()[n]);
    if (n == 0) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

}  // namespace nball

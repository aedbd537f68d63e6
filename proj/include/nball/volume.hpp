#pragma once

// Volumes of balls: the closed form, the distributional pipeline in finite
// dimension, and the zeta-regularized volume of the ball in l^2(C).

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nball/dist_expr.hpp"
#include "nball/errors.hpp"
#include "nball/exact_value.hpp"
#include "nball/rational.hpp"
#include "nball/scalar.hpp"
#include "nball/special_functions.hpp"

namespace nball {

enum class Method { closed_form, distributional, quadrature, monte_carlo, infinite_dim };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::distributional: return "distributional";
    case Method::quadrature: return "quadrature";
    case Method::monte_carlo: return "monte_carlo";
    case Method::infinite_dim: return "infinite_dim";
  }
  return "unknown";
}

// Ball radius. Exact radii are folded into exact results; a radius given only
// as a double stays symbolic (r^k) in the exact form.
class Radius {
 public:
  Radius() : Radius(ExactRational(1)) {}

  explicit Radius(ExactRational r) : value_(nball::to_double(r)), exact_(std::move(r)) {
    if (*exact_ <= 0) throw domain_error("radius must be positive");
  }

  explicit Radius(double r) : value_(r) {
    if (!std::isfinite(r) || r <= 0) throw domain_error("radius must be positive and finite");
  }

  static Radius parse(std::string_view text) { return Radius(parse_rational(text)); }

  double value() const { return value_; }
  const std::optional<ExactRational>& exact() const { return exact_; }

 private:
  double value_;
  std::optional<ExactRational> exact_;
};

using DiagnosticValue =
    std::variant<std::int64_t, std::uint64_t, double, std::string, std::vector<double>>;
using Diagnostics = std::map<std::string, DiagnosticValue>;

struct VolumeReport {
  double dimension = 0;
  double radius = 1;
  Method method = Method::closed_form;
  std::optional<ExactValue> exact;
  double value = 0;
  Diagnostics diagnostics;
};

inline ExactValue bind(const ExactValue& v, const Radius& r) {
  return r.exact() ? v.bind_radius(*r.exact()) : v;
}

inline VolumeReport exact_report(double n, const Radius& r, Method method, const ExactValue& v) {
  VolumeReport report{n, r.value(), method, v, v.to_double(r.value()), {}};
  return report;
}

// pi^(n/2) / Gamma(n/2 + 1) * r^n for real n > -2. Exact for integer n >= 0
// and for n = -1; n = 0 gives 1 (the point ball).
inline VolumeReport volume_closed_form(double n, const Radius& r = Radius()) {
  if (!std::isfinite(n) || n <= -2.0) throw domain_error("volume_closed_form: dimension must be > -2");
  const bool integral = n == std::floor(n);
  if (integral && (n >= 0 || n == -1)) {
    const long long d = std::llround(n);
    const ExactGamma g = gamma_exact(rational(d + 2, 2));
    const ExactValue v(1 / g.coeff, static_cast<int>(d) - g.sqrt_pi_power, static_cast<int>(d));
    VolumeReport report = exact_report(n, r, Method::closed_form, bind(v, r));
    if (d == 0) report.diagnostics["note"] = std::string("n = 0 uses the point-ball convention");
    return report;
  }
  const double value = std::pow(std::numbers::pi, n / 2.0) / gamma(n / 2.0 + 1.0) * std::pow(r.value(), n);
  return {n, r.value(), Method::closed_form, std::nullopt, value, {}};
}

// Distributional pipeline for integer n >= 1, m = n/2:
//   S'-lim (eps + i k)^{-(m+1)}  ->  F^-1 at x = 1  ->  * pi^{n/2}  ->  * r^n
inline ExactValue volume_distributional(int n, const Radius& r = Radius()) {
  if (n < 1) throw domain_error("volume_distributional: dimension must be >= 1");
  const DistExpr limit = eps_limit_inverse_power(n / 2.0);
  const Scalar at_one = inverse_ft_eval(limit, ExactRational(1));
  const auto v = to_exact_value(Scalar::pi_power(n) * at_one);
  if (!v) {
    throw std::logic_error("volume_distributional: pipeline left the exact real ring: " +
                           to_string(at_one));
  }
  return bind(v->with_r_power(n), r);
}

// ---------------------------------------------------------------------------
// Zeta regularization

// zeta(0) = -1/2, the value assigned to 1 + 1 + 1 + ... (Riemann zeta
// continued to s = 0).
inline ExactRational zeta_at_zero() { return rational(-1, 2); }

// constant * (eps + i k)^shift_power
struct ModeFactor {
  Scalar constant;
  ExactRational shift_power = 0;

  friend ModeFactor operator*(const ModeFactor& a, const ModeFactor& b) {
    return {a.constant * b.constant, a.shift_power + b.shift_power};
  }
};

inline std::string to_string(const ModeFactor& f) {
  const std::string c = to_string(f.constant);
  if (f.shift_power == 0) return c;
  const std::string power = "(eps+i*k)^(" + to_string(f.shift_power) + ")";
  return c == "1" ? power : c + "*" + power;
}

// prod_{n>=1} a = a^{sum 1} = a^{zeta(0)} for a constant per-mode factor a.
// Both parts of a sit in the right half-plane branch domain, so the power
// distributes over the product.
inline ModeFactor zeta_regularized_product(const ModeFactor& a) {
  const ExactRational z = zeta_at_zero();
  return {scalar_power(a.constant, z), a.shift_power * z};
}

inline ModeFactor zeta_regularized_product(std::span<const ModeFactor> modes) {
  if (modes.empty()) throw domain_error("zeta_regularized_product: no modes");
  for (const auto& m : modes) {
    const bool same_constant = m.constant.exactly_equals(modes.front().constant) ||
                               (!m.constant.is_exact() && !modes.front().constant.is_exact() &&
                                m.constant.value().std() == modes.front().constant.value().std());
    if (!same_constant || m.shift_power != modes.front().shift_power) {
      throw unsupported_expression("zeta_regularized_product: per-mode factors must be identical");
    }
  }
  return zeta_regularized_product(modes.front());
}

// Every intermediate of the infinite-dimensional computation.
struct InfiniteDimTrace {
  ModeFactor mode_factor;          // pi / (eps + i k): one complex Gaussian mode
  ModeFactor regularized_product;  // sqrt((eps + i k) / pi)
  ModeFactor step_kernel;          // 1 / (2 pi i (k - i eps)) = (1/2pi) (eps + i k)^-1
  ModeFactor integrand;            // 1 / (2 pi^{3/2}) (eps + i k)^{-1/2}
  Scalar transform_prefactor;      // integrand constant * 2 pi = 1/sqrt(pi)
  DistExpr limit;                  // S'-lim of (eps + i k)^{-1/2}
  ExactRational evaluated_at;      // x = r^2, or 1 when r is symbolic
  Scalar inverse_value;            // F^-1 limit at evaluated_at
  Scalar direct_route;             // 1/sqrt(i pi) * F^-1 [Pf k^{-1/2}] at evaluated_at
  ExactValue volume;               // 1 / (pi r)
};

inline InfiniteDimTrace volume_infinite_dim(const Radius& r) {
  InfiniteDimTrace t;
  t.mode_factor = {Scalar::pi_power(2), -1};
  t.regularized_product = zeta_regularized_product(t.mode_factor);
  t.step_kernel = {Scalar::exact(rational(1, 2), 0, -2), -1};
  t.integrand = t.step_kernel * t.regularized_product;
  t.transform_prefactor = t.integrand.constant * Scalar::exact(2, 0, 2);

  // (eps + i k)^{-(m+1)} with m + 1 = -shift_power
  const ExactRational m = -t.integrand.shift_power - 1;
  t.limit = eps_limit_inverse_power(to_double(m));

  t.evaluated_at = r.exact() ? ExactRational(*r.exact() * *r.exact()) : ExactRational(1);
  t.inverse_value = inverse_ft_eval(t.limit, t.evaluated_at);

  const Scalar inv_sqrt_i_pi = unit_power(Unit::i, rational(-1, 2)) * Scalar::pi_power(-1);
  t.direct_route = inv_sqrt_i_pi * inverse_ft_eval(DistExpr(Scalar::exact(1), PfPower{-0.5}),
                                                   t.evaluated_at);

  const auto v = to_exact_value(t.transform_prefactor * t.inverse_value);
  if (!v) throw std::logic_error("volume_infinite_dim: pipeline left the exact real ring");
  if (r.exact()) {
    t.volume = *v;
  } else {
    const auto degree = inverse_ft_degree(t.limit);
    t.volume = v->with_r_power(static_cast<int>(std::lround(2.0 * degree.value())));
  }
  return t;
}

}  // namespace nball

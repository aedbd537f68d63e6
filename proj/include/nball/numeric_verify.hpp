#pragma once

// Numerical oracles for the ball volume: eps-regularized oscillatory
// quadrature of
//   Vol(B^n) = pi^{n/2-1} / 2 * lim_{eps->0} integral_R e^{ik} (eps + ik)^{-(n/2+1)} dk
// and seeded Monte Carlo on the indicator Theta(r^2 - |x|^2).

#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <numbers>
#include <optional>
#include <thread>
#include <vector>

#include "nball/complex_branch.hpp"
#include "nball/errors.hpp"
#include "nball/quadrature.hpp"
#include "nball/volume.hpp"

namespace nball {

struct QuadratureConfig {
  std::vector<double> epsilons{1e-2, 1e-3, 1e-4};
  std::optional<double> truncation;  // K; derived from abs_tol when empty
  double abs_tol = 1e-8;             // per fixed-eps integral
  std::size_t max_subdivisions = 100000;
  unsigned jobs = 1;

  void validate() const {
    if (epsilons.empty()) throw domain_error("QuadratureConfig: empty epsilon list");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
      if (!(epsilons[i] > 0) || !std::isfinite(epsilons[i])) {
        throw domain_error("QuadratureConfig: epsilons must be positive");
      }
      if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
        throw domain_error("QuadratureConfig: epsilons must be strictly decreasing");
      }
    }
    if (truncation && !(*truncation > 0)) throw domain_error("QuadratureConfig: K must be positive");
    if (!(abs_tol > 0)) throw domain_error("QuadratureConfig: abs_tol must be positive");
  }
};

// Half-width of the subtraction window around k = 0.
inline constexpr double kInnerWindow = 1.0;

// Smallest K with 4 K^{-s} <= abs_tol / 2, s = n/2 + 1. Integrating by parts
// once, each tail |integral_K^inf e^{ik} g| <= |g(K)| + integral_K^inf |g'| <= 2 K^{-s}
// for g = (eps + ik)^{-s}.
inline double auto_truncation(int n, double abs_tol) {
  const double s = n / 2.0 + 1.0;
  return std::max(std::pow(8.0 / abs_tol, 1.0 / s), kInnerWindow + 2.0 * std::numbers::pi);
}

struct FixedEpsIntegral {
  double eps = 0;
  double truncation = 0;
  std::complex<double> integral{};  // integral_{-K}^{K} e^{ik} (eps+ik)^{-s} dk
  std::complex<double> volume{};    // integral * pi^{n/2-1} / 2
  double abs_error = 0;
  std::size_t panels = 0;
  bool converged = false;
};

namespace detail {

// e^z - sum_{j<J} z^j / j! for |z| <= 1, summed directly to avoid cancellation.
inline std::complex<double> exp_remainder(std::complex<double> z, int order) {
  std::complex<double> term = 1.0;
  for (int j = 1; j <= order; ++j) term *= z / static_cast<double>(j);
  std::complex<double> sum = term;
  for (int j = order + 1; j < order + 40; ++j) {
    term *= z / static_cast<double>(j);
    sum += term;
    if (std::abs(term) <= 1e-19 * std::abs(sum)) break;
  }
  return sum;
}

inline double binomial(int n, int k) {
  double b = 1;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

// integral_{-a}^{a} (ik)^j (eps + ik)^{-s} dk, through u = eps + ik:
//   (1/i) sum_l C(j,l) (-eps)^{j-l} [u^{l-s+1} / (l-s+1)]  (log u when l-s+1 = 0)
inline std::complex<double> moment(int j, double s, double eps, double a) {
  const ComplexValue u0{eps, -a};
  const ComplexValue u1{eps, a};
  std::complex<double> total = 0;
  for (int l = 0; l <= j; ++l) {
    const double power = l - s + 1.0;
    std::complex<double> span;
    if (power == 0.0) {
      span = (principal_log(u1) - principal_log(u0)).std();
    } else {
      span = (cpow(u1, ComplexValue(power)) - cpow(u0, ComplexValue(power))).std() / power;
    }
    total += binomial(j, l) * std::pow(-eps, j - l) * span;
  }
  return total / std::complex<double>(0.0, 1.0);
}

}  // namespace detail

// One fixed-eps integral. Near k = 0 the integrand peaks at eps^{-s} and the
// peak integrates to O(1) by cancellation, so on [-a, a] the Taylor part of
// e^{ik} up to order J = ceil(s) is integrated in closed form and only the
// bounded remainder goes through quadrature.
inline FixedEpsIntegral f2_integral(int n, double eps, const QuadratureConfig& config) {
  using cd = std::complex<double>;
  if (n < 1) throw domain_error("volume_quadrature: dimension must be >= 1");
  const double s = n / 2.0 + 1.0;
  const int order = static_cast<int>(std::ceil(s));
  const double a = kInnerWindow;
  const double K = config.truncation ? std::max(*config.truncation, a + 1e-9)
                                     : auto_truncation(n, config.abs_tol);

  const ComplexValue exponent(-s);
  auto g = [&](double k) { return cpow(ComplexValue(eps, k), exponent).std(); };
  auto integrand = [&](double k) -> cd {
    if (std::abs(k) <= a) return detail::exp_remainder(cd(0.0, k), order) * g(k);
    return std::exp(cd(0.0, k)) * g(k);
  };

  std::vector<double> points;
  const auto right = uniform_breakpoints(a, K, 2.0 * std::numbers::pi);
  points.reserve(2 * right.size());
  for (auto it = right.rbegin(); it != right.rend(); ++it) points.push_back(-*it);
  points.insert(points.end(), right.begin(), right.end());

  const QuadResult quad =
      integrate_adaptive(integrand, points, config.abs_tol / 4.0, config.max_subdivisions);

  cd analytic = 0;
  double factorial = 1;
  for (int j = 0; j < order; ++j) {
    if (j > 0) factorial *= j;
    analytic += detail::moment(j, s, eps, a) / factorial;
  }

  FixedEpsIntegral out;
  out.eps = eps;
  out.truncation = K;
  out.integral = quad.value + analytic;
  out.volume = out.integral * (std::pow(std::numbers::pi, n / 2.0 - 1.0) / 2.0);
  out.abs_error = quad.abs_error;
  out.panels = quad.panels;
  out.converged = quad.converged;
  return out;
}

// Linear extrapolation to eps = 0 through the last two points.
inline double richardson_to_zero(double eps1, double v1, double eps2, double v2) {
  return (eps1 * v2 - eps2 * v1) / (eps1 - eps2);
}

inline VolumeReport volume_quadrature(int n, const QuadratureConfig& config = {},
                                      const Radius& r = Radius()) {
  if (n < 1) throw domain_error("volume_quadrature: dimension must be >= 1");
  config.validate();

  std::vector<FixedEpsIntegral> runs(config.epsilons.size());
  if (config.jobs > 1) {
    std::vector<std::future<FixedEpsIntegral>> pending;
    for (double eps : config.epsilons) {
      pending.push_back(std::async(std::launch::async, [=, &config] { return f2_integral(n, eps, config); }));
    }
    for (std::size_t i = 0; i < pending.size(); ++i) runs[i] = pending[i].get();
  } else {
    for (std::size_t i = 0; i < runs.size(); ++i) runs[i] = f2_integral(n, config.epsilons[i], config);
  }

  std::vector<double> real_parts;
  std::vector<double> imag_parts;
  std::vector<double> errors;
  for (const auto& run : runs) {
    real_parts.push_back(run.volume.real());
    imag_parts.push_back(run.volume.imag());
    errors.push_back(run.abs_error);
  }
  const std::size_t last = runs.size() - 1;
  const double extrapolated =
      runs.size() == 1 ? real_parts[0]
                       : richardson_to_zero(config.epsilons[last - 1], real_parts[last - 1],
                                            config.epsilons[last], real_parts[last]);
  const double scale = std::pow(r.value(), n);

  for (const auto& run : runs) {
    if (!run.converged) {
      throw convergence_error("volume_quadrature: tolerance not met at eps = " +
                                  format_double(run.eps),
                              extrapolated * scale);
    }
  }

  VolumeReport report{static_cast<double>(n), r.value(), Method::quadrature, std::nullopt,
                      extrapolated * scale, {}};
  report.diagnostics["epsilons"] = config.epsilons;
  report.diagnostics["eps_values"] = real_parts;
  report.diagnostics["eps_imag_parts"] = imag_parts;
  report.diagnostics["eps_abs_errors"] = errors;
  report.diagnostics["truncation_K"] = runs.front().truncation;
  report.diagnostics["abs_tol"] = config.abs_tol;
  report.diagnostics["extrapolated_unit_ball"] = extrapolated;
  return report;
}

// ---------------------------------------------------------------------------
// Monte Carlo

struct MonteCarloConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20240611;
  unsigned shards = 1;
};

// Counter-based generator: the SplitMix64 output for position `counter` of
// the stream started at `seed`. Any sample can be drawn independently.
inline std::uint64_t counter_random(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform in [-1, 1).
inline double counter_uniform_sym(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(counter_random(seed, counter) >> 11) * 0x1.0p-52 - 1.0;
}

namespace detail {

inline std::uint64_t count_hits(int n, std::uint64_t seed, std::uint64_t first, std::uint64_t last) {
  std::uint64_t hits = 0;
  const auto dim = static_cast<std::uint64_t>(n);
  for (std::uint64_t i = first; i < last; ++i) {
    double norm2 = 0;
    for (std::uint64_t d = 0; d < dim; ++d) {
      const double x = counter_uniform_sym(seed, i * dim + d);
      norm2 += x * x;
    }
    hits += norm2 <= 1.0 ? 1 : 0;
  }
  return hits;
}

}  // namespace detail

// Samples [-r, r]^n uniformly; estimate = (2r)^n hits / samples. Sample i uses
// stream positions i*n .. i*n+n-1, so the estimate does not depend on how the
// samples are split across shards.
inline VolumeReport volume_monte_carlo(int n, const Radius& r, const MonteCarloConfig& config) {
  if (n < 1) throw domain_error("volume_monte_carlo: dimension must be >= 1");
  if (config.samples == 0) throw domain_error("volume_monte_carlo: samples must be >= 1");
  const unsigned shards = std::max(1u, config.shards);

  std::vector<std::uint64_t> shard_hits(shards, 0);
  std::vector<std::thread> workers;
  for (unsigned s = 0; s < shards; ++s) {
    const std::uint64_t first = config.samples * s / shards;
    const std::uint64_t last = config.samples * (s + 1) / shards;
    auto work = [&, s, first, last] { shard_hits[s] = detail::count_hits(n, config.seed, first, last); };
    if (shards == 1) {
      work();
    } else {
      workers.emplace_back(work);
    }
  }
  for (auto& w : workers) w.join();
  std::uint64_t hits = 0;
  for (auto h : shard_hits) hits += h;

  const double cube = std::pow(2.0 * r.value(), n);
  const double p = static_cast<double>(hits) / static_cast<double>(config.samples);
  VolumeReport report{static_cast<double>(n), r.value(), Method::monte_carlo, std::nullopt, cube * p, {}};
  report.diagnostics["samples"] = config.samples;
  report.diagnostics["seed"] = config.seed;
  report.diagnostics["shards"] = static_cast<std::int64_t>(shards);
  report.diagnostics["hits"] = hits;
  report.diagnostics["stderr"] = cube * std::sqrt(p * (1.0 - p) / static_cast<double>(config.samples));
  return report;
}

}  // namespace nball

#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature for complex-valued
// integrands over a partitioned interval.

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nball/errors.hpp"

namespace nball {

namespace gk15 {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for kNodes[1], kNodes[3], kNodes[5], kNodes[7].
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace gk15

struct Panel {
  double a = 0;
  double b = 0;
  std::complex<double> value{};
  double error = 0;
};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::complex<double> kronrod = gk15::kKronrodWeights[7] * f(center);
  std::complex<double> gauss = gk15::kGaussWeights[3] * f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * gk15::kNodes[j];
    const std::complex<double> pair = f(center - dx) + f(center + dx);
    kronrod += gk15::kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += gk15::kGaussWeights[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct QuadResult {
  std::complex<double> value{};
  double abs_error = 0;
  std::size_t panels = 0;
  std::size_t subdivisions = 0;
  bool converged = false;
};

// Integrates f over [breakpoints.front(), breakpoints.back()], starting from
// the given partition and bisecting the worst panel until the summed error
// estimate is <= abs_tol or max_subdivisions bisections have been spent.
template <class F>
QuadResult integrate_adaptive(F&& f, std::span<const double> breakpoints, double abs_tol,
                              std::size_t max_subdivisions) {
  if (breakpoints.size() < 2) throw domain_error("integrate_adaptive: need at least two breakpoints");
  if (!(abs_tol > 0)) throw domain_error("integrate_adaptive: abs_tol must be positive");
  auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };

  std::vector<Panel> heap;
  heap.reserve(breakpoints.size() - 1);
  double total_error = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    heap.push_back(gauss_kronrod_15(f, breakpoints[i], breakpoints[i + 1]));
    total_error += heap.back().error;
  }
  std::make_heap(heap.begin(), heap.end(), by_error);

  QuadResult result;
  while (total_error > abs_tol && result.subdivisions < max_subdivisions) {
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel worst = heap.back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      std::push_heap(heap.begin(), heap.end(), by_error);
      break;  // cannot split further in double precision
    }
    heap.pop_back();
    const Panel left = gauss_kronrod_15(f, worst.a, mid);
    const Panel right = gauss_kronrod_15(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    for (const Panel& p : {left, right}) {
      heap.push_back(p);
      std::push_heap(heap.begin(), heap.end(), by_error);
    }
    ++result.subdivisions;
  }

  // Ordered re-summation so the result does not depend on heap layout.
  std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const Panel& p : heap) {
    result.value += p.value;
    result.abs_error += p.error;
  }
  result.panels = heap.size();
  result.converged = result.abs_error <= abs_tol;
  return result;
}

template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                              std::size_t max_subdivisions = 10000) {
  const std::array<double, 2> ends{a, b};
  return integrate_adaptive(std::forward<F>(f), std::span<const double>(ends), abs_tol,
                            max_subdivisions);
}

// Breakpoints a, a + step, a + 2 step, ..., b (last panel may be shorter).
inline std::vector<double> uniform_breakpoints(double a, double b, double step) {
  std::vector<double> points{a};
  for (std::size_t i = 1;; ++i) {
    const double x = a + static_cast<double>(i) * step;
    if (x >= b) break;
    points.push_back(x);
  }
  points.push_back(b);
  return points;
}

}  // namespace nball

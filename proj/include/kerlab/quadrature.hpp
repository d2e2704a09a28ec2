#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "kerlab/errors.hpp"

namespace kerlab {

/// Fixed-order (32-node) Gauss-Legendre rule on a single interval.
template <class F>
double gl32(F&& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 32>::integrate(std::forward<F>(f), a, b);
}

/// Composite 32-node Gauss-Legendre rule: [a, b] is split into panels
/// no wider than max_panel.  Suitable for smooth or mildly oscillatory
/// integrands when the panel width resolves the oscillation scale.
template <class F>
double gl32_panels(F&& f, double a, double b, double max_panel) {
  if (!(b > a)) return 0.0;
  if (!(max_panel > 0.0)) throw BadParameter("gl32_panels: panel width must be positive");
  const auto panels = static_cast<std::size_t>(std::ceil((b - a) / max_panel));
  const double w = (b - a) / static_cast<double>(panels);
  double acc = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = a + w * static_cast<double>(i);
    const double hi = (i + 1 == panels) ? b : lo + w;
    acc += gl32(f, lo, hi);
  }
  return acc;
}

/// Composite Gauss-Legendre over geometrically growing panels
/// [a, 2a], [2a, 4a], ... up to b.  Efficient for rational-decay
/// integrands that are smooth on a logarithmic scale.
template <class F>
double gl32_octaves(F&& f, double a, double b) {
  if (!(a > 0.0) || !(b > a)) throw BadParameter("gl32_octaves: need 0 < a < b");
  double acc = 0.0;
  double lo = a;
  while (lo < b) {
    const double hi = std::min(2.0 * lo, b);
    acc += gl32(f, lo, hi);
    lo = hi;
  }
  return acc;
}

/// Adaptive Gauss-Kronrod integration with a relative tolerance.
/// Throws QuadratureFailure when the error estimate does not reach
/// the requested tolerance (relative to the integral scale).
template <class F>
double adaptive(F&& f, double a, double b, double rel_tol = 1e-10) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      std::forward<F>(f), a, b, 15, rel_tol, &err);
  const double scale = std::max(std::abs(v), 1e-300);
  if (!(err / scale < std::max(rel_tol * 64.0, 1e-12)))
    throw QuadratureFailure("adaptive quadrature did not converge to requested tolerance");
  return v;
}

/// Adaptive integration over [0, inf) for decaying integrands.
template <class F>
double semi_infinite(F&& f, double rel_tol = 1e-10) {
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0.0;
  const double v = integrator.integrate(std::forward<F>(f), rel_tol, &err);
  const double scale = std::max(std::abs(v), 1e-300);
  if (!(err / scale < std::max(rel_tol * 64.0, 1e-12)))
    throw QuadratureFailure("semi-infinite quadrature did not converge");
  return v;
}

/// Composite Simpson rule with n (forced even) uniform subintervals.
template <class F>
double simpson(F&& f, double a, double b, std::size_t n) {
  if (!(b > a)) return 0.0;
  if (n < 2) n = 2;
  if (n % 2) ++n;
  const double dx = (b - a) / static_cast<double>(n);
  double acc = f(a) + f(b);
  for (std::size_t i = 1; i < n; ++i) {
    const double x = a + dx * static_cast<double>(i);
    acc += f(x) * ((i % 2) ? 4.0 : 2.0);
  }
  return acc * dx / 3.0;
}

}  // namespace kerlab

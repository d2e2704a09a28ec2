#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "kerlab/collocate.hpp"
#include "kerlab/errors.hpp"
#include "kerlab/quadrature.hpp"
#include "kerlab/sites.hpp"

namespace kerlab {

/// Normalized sinc: sin(pi t)/(pi t), exact at integers so that the
/// integer-lattice interpolation matrix is exactly the identity.
inline double sincpi(double t) {
  const double r = std::nearbyint(t);
  if (t == r) return (t == 0.0) ? 1.0 : 0.0;
  return std::sin(M_PI * t) / (M_PI * t);
}

/// Bandlimited interpolant F(t) = sum_j c_j sincpi((t - h x_j)/h),
/// an element of the Paley-Wiener space with band [-pi/h, pi/h].
struct SincInterpolant {
  std::vector<double> centers;  ///< h x_j
  Eigen::VectorXd coeffs;
  double h = 1.0;

  double operator()(double t) const {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < coeffs.size(); ++j)
      acc += coeffs[j] * sincpi((t - centers[static_cast<std::size_t>(j)]) / h);
    return acc;
  }

  double bandwidth() const { return M_PI / h; }

  /// Transform on the band: F_hat(xi) = h sum_j c_j e^{-i h x_j xi}
  /// for |xi| <= pi/h, zero outside.
  std::complex<double> fourier(double xi) const {
    if (std::abs(xi) > bandwidth()) return {0.0, 0.0};
    std::complex<double> s(0.0, 0.0);
    for (Eigen::Index j = 0; j < coeffs.size(); ++j)
      s += coeffs[j] *
           std::exp(std::complex<double>(0.0, -centers[static_cast<std::size_t>(j)] * xi));
    return h * s;
  }
};

/// Solve the sinc collocation system S c = y with
/// S_ij = sincpi(x_i - x_j).  The matrix depends only on the unscaled
/// sites (it is the exponential Gram over 2 pi), so its conditioning
/// is h-independent and stays modest for Kadec-admissible families.
inline CollocationResult sinc_collocate(const SiteFamily& fam,
                                        const std::vector<double>& samples,
                                        const SolveOptions& opt = {}) {
  if (samples.size() != fam.x.size())
    throw BadParameter("sinc_collocate: sample count mismatch");
  const int n = fam.n;
  Eigen::MatrixXd S(n, n);
  for (int i = 0; i < n; ++i) {
    S(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      const double v = sincpi(fam.x[static_cast<std::size_t>(i)] -
                              fam.x[static_cast<std::size_t>(j)]);
      S(i, j) = v;
      S(j, i) = v;
    }
  }
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y[i] = samples[static_cast<std::size_t>(i)];
  return detail::solve_spd(S, y, opt);
}

inline SincInterpolant sinc_interpolant(const SiteFamily& fam, double h,
                                        const CollocationResult& res) {
  if (!(h > 0.0) || !std::isfinite(h)) throw BadH("sinc_interpolant: h must be positive");
  SincInterpolant F;
  F.h = h;
  F.coeffs = res.coeffs;
  F.centers.resize(fam.x.size());
  for (std::size_t i = 0; i < fam.x.size(); ++i) F.centers[i] = h * fam.x[i];
  return F;
}

/// Exact W_2^k seminorm of a sinc interpolant through its band-limited
/// transform: (2 pi)^{-1/2} (Int_{-sigma}^{sigma} xi^{2k} |F_hat|^2)^{1/2}
/// with sigma = pi/h, by Gauss-Legendre panels no wider than min(1, h)/2
/// (the integrand oscillates on the scale of the reciprocal site span).
inline double pw_seminorm(const SincInterpolant& F, int k) {
  const double sigma = F.bandwidth();
  const double panel = std::min(1.0, F.h) / 2.0;
  auto f2 = [&](double xi) {
    return std::pow(xi, 2 * k) * std::norm(F.fourier(xi));
  };
  const double I = 2.0 * gl32_panels(f2, 0.0, sigma, panel);
  return std::sqrt(I / (2.0 * M_PI));
}

/// Bernstein quotient ||F'||_{L2} / (sigma ||F||_{L2}), computed in the
/// transform domain; at most 1 for any function with band [-sigma, sigma].
inline double bernstein_quotient(const SincInterpolant& F) {
  const double n1 = pw_seminorm(F, 1);
  const double n0 = pw_seminorm(F, 0);
  return n1 / (F.bandwidth() * n0);
}

/// Jackson-type normalized error: ||F - g||_{L2} / (sigma^{-k} |g|_{W_2^k}).
/// For interpolation of a W_2^k target this ratio stays bounded and the
/// sigma^{-k} factor absorbs the h^k convergence rate.
inline double jackson_ratio(double err_l2, double sigma, int k, double seminorm) {
  if (!(sigma > 0.0) || !(seminorm > 0.0))
    throw BadParameter("jackson_ratio: need positive bandwidth and seminorm");
  return err_l2 / (std::pow(sigma, -k) * seminorm);
}

/// Paired inequality diagnostics for one bandlimited interpolation:
/// the Bernstein quotient of the interpolant (at most 1 for a function
/// of band pi/h) and the Jackson-normalized interpolation error.
struct BernsteinJacksonReport {
  double h = 0.0;
  double bernstein_lhs = 0.0;   ///< ||F'||_{L2} / ((pi/h) ||F||_{L2})
  double seminorm_g = 0.0;      ///< |g|_{W_2^k}
  double jackson_lhs = 0.0;     ///< ||F - g||_{L2[-T,T]}
  double ratio_jackson = 0.0;   ///< jackson_lhs / ((pi/h)^{-k} seminorm_g)
  double condition = 0.0;       ///< collocation condition estimate
};

}  // namespace kerlab

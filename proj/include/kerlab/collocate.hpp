#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "kerlab/errors.hpp"
#include "kerlab/sites.hpp"

namespace kerlab {

/// Conditioning policy shared by the collocation routines: systems are
/// always solved (with a symmetric-indefinite fallback when Cholesky
/// breaks down), but estimated condition numbers above flag_cond mark
/// the result ill-conditioned for downstream consumers.
struct SolveOptions {
  double jitter = 0.0;       ///< optional diagonal regularization (off by default)
  double flag_cond = 1e14;   ///< ill-conditioned flag threshold
  int dense_cap = 4096;      ///< refuse larger dense systems
};

/// Outcome of a dense symmetric collocation solve.
struct CollocationResult {
  Eigen::VectorXd coeffs;
  double cond_est = 0.0;      ///< one-norm condition estimate from the factorization
  double residual_inf = 0.0;  ///< max_i |(A c - y)_i| after one refinement step
  bool ill_conditioned = false;
  bool used_ldlt = false;     ///< Cholesky failed, symmetric-indefinite fallback used
};

namespace detail {

inline CollocationResult solve_spd(const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                                   const SolveOptions& opt) {
  const auto n = A.rows();
  if (n > opt.dense_cap)
    throw WindowTooLarge("collocation: dense solver capped at n <= " +
                         std::to_string(opt.dense_cap));
  Eigen::MatrixXd M = A;
  if (opt.jitter > 0.0) M.diagonal().array() += opt.jitter;

  CollocationResult out;
  Eigen::LLT<Eigen::MatrixXd> llt(M);
  if (llt.info() == Eigen::Success) {
    out.coeffs = llt.solve(y);
    out.coeffs += llt.solve(y - M * out.coeffs);  // one refinement step
    out.cond_est = 1.0 / std::max(llt.rcond(), 1e-300);
  } else {
    // Near-singular SPD systems (deep flat-limit collocation) land here;
    // they are solved anyway and flagged through the condition estimate.
    Eigen::LDLT<Eigen::MatrixXd> ldlt(M);
    if (ldlt.info() != Eigen::Success)
      throw SingularSystem("collocation matrix factorization failed");
    out.used_ldlt = true;
    out.coeffs = ldlt.solve(y);
    out.coeffs += ldlt.solve(y - M * out.coeffs);
    out.cond_est = 1.0 / std::max(ldlt.rcond(), 1e-300);
  }
  out.residual_inf = (M * out.coeffs - y).cwiseAbs().maxCoeff();
  out.ill_conditioned = out.cond_est > opt.flag_cond;
  return out;
}

}  // namespace detail

/// Gaussian interpolant F(t) = sum_j c_j exp(-lambda (t - y_j)^2) with
/// centers y_j = h x_j.
struct GaussianInterpolant {
  std::vector<double> centers;
  Eigen::VectorXd coeffs;
  double lambda = 1.0;

  double operator()(double t) const {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
      const double d = t - centers[static_cast<std::size_t>(j)];
      acc += coeffs[j] * std::exp(-lambda * d * d);
    }
    return acc;
  }

  /// Transform of the interpolant:
  /// sqrt(pi/lambda) e^{-xi^2/(4 lambda)} sum_j c_j e^{-i y_j xi}.
  std::complex<double> fourier(double xi) const {
    std::complex<double> s(0.0, 0.0);
    for (Eigen::Index j = 0; j < coeffs.size(); ++j)
      s += coeffs[j] *
           std::exp(std::complex<double>(0.0, -centers[static_cast<std::size_t>(j)] * xi));
    return std::sqrt(M_PI / lambda) * std::exp(-xi * xi / (4.0 * lambda)) * s;
  }
};

/// Interpolate the samples y_i at the scaled sites h x_i with fixed
/// (unit-width by default) gaussian translates.  As h decreases the
/// scaled sites crowd together under a kernel of unchanged width, so
/// the system conditioning degrades like exp(pi^2 / (4 lambda h^2)).
inline CollocationResult collocate_gaussian(const SiteFamily& fam, double h,
                                            const std::vector<double>& samples,
                                            double lambda = 1.0,
                                            const SolveOptions& opt = {}) {
  if (!(h > 0.0) || !std::isfinite(h)) throw BadH("collocate_gaussian: h must be positive");
  if (!(lambda > 0.0)) throw BadParameter("collocate_gaussian: lambda must be positive");
  if (samples.size() != fam.x.size())
    throw BadParameter("collocate_gaussian: sample count mismatch");
  const int n = fam.n;
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i) {
    A(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      const double d = h * fam.x[static_cast<std::size_t>(i)] -
                       h * fam.x[static_cast<std::size_t>(j)];
      const double v = std::exp(-lambda * d * d);
      A(i, j) = v;
      A(j, i) = v;
    }
  }
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y[i] = samples[static_cast<std::size_t>(i)];
  return detail::solve_spd(A, y, opt);
}

/// Assemble the interpolant object for a gaussian collocation result.
inline GaussianInterpolant gaussian_interpolant(const SiteFamily& fam, double h,
                                                const CollocationResult& res,
                                                double lambda = 1.0) {
  GaussianInterpolant F;
  F.lambda = lambda;
  F.coeffs = res.coeffs;
  F.centers.resize(fam.x.size());
  for (std::size_t i = 0; i < fam.x.size(); ++i) F.centers[i] = h * fam.x[i];
  return F;
}

}  // namespace kerlab

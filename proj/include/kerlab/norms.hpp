#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "kerlab/catalog.hpp"
#include "kerlab/errors.hpp"
#include "kerlab/quadrature.hpp"
#include "kerlab/sites.hpp"

namespace kerlab {

/// Default seed used by stochastic consistency tests and shipped
/// configurations.  Fixed so that every documented number reproduces.
inline constexpr std::uint64_t default_seed = 1729;

namespace detail {

inline double binom(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i)
    b *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return b;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

/// Head + certified tail of I = Int_0^inf xi^{2k} fourier(xi)^2 dxi for
/// a catalog member.  Throws TailNotConverged when the certificate is
/// not small relative to the head.
struct TruncatedIntegral {
  double head = 0.0;
  double tail = 0.0;      ///< analytic tail correction added to head
  double residual = 0.0;  ///< certified bound on what is still missing
};

inline TruncatedIntegral spectral_moment(const TestFunction& g, int k,
                                         double tail_rel) {
  TruncatedIntegral out;
  auto f2 = [&](double xi) {
    const double t = g.fourier(xi);
    return std::pow(xi, 2 * k) * t * t;
  };
  switch (g.id()) {
    case TestFunction::Id::gauss: {
      // fourier^2 = pi exp(-xi^2/2); integrate to a deep cutoff.
      const double cut = 42.0 + 2.0 * static_cast<double>(k);
      out.head = gl32_panels(f2, 0.0, cut, 0.5);
      out.residual = M_PI * std::pow(cut, 2 * k) * std::exp(-cut * cut / 2.0);
      break;
    }
    case TestFunction::Id::sinc_sq:
      // Compactly supported transform: polynomial integrand on [0, 1].
      out.head = gl32_panels(f2, 0.0, 1.0, 0.125);
      break;
    case TestFunction::Id::expabs:
    case TestFunction::Id::matern2: {
      // fourier^2 = c^2 (1+xi^2)^{-p}; octave panels plus a two-term
      // asymptotic tail in s = 2p - 2k >= 2.
      const double c2 = (g.id() == TestFunction::Id::expabs) ? 4.0 : 16.0;
      const double p = (g.id() == TestFunction::Id::expabs) ? 2.0 : 4.0;
      const double cut = 1048576.0;  // 2^20
      out.head = gl32(f2, 0.0, 1.0) + gl32_octaves(f2, 1.0, cut);
      const double s = 2.0 * p - 2.0 * static_cast<double>(k);
      out.tail = c2 * (std::pow(cut, -(s - 1.0)) / (s - 1.0) -
                       p * std::pow(cut, -(s + 1.0)) / (s + 1.0));
      out.residual = 2.0 * c2 * binom(static_cast<int>(p) + 1, 2) *
                     std::pow(cut, -(s + 3.0)) / (s + 3.0);
      break;
    }
    case TestFunction::Id::bspline1:
    case TestFunction::Id::bspline2:
    case TestFunction::Id::bspline3: {
      // fourier^2 = sinc_u(xi/2)^{2m+2}: oscillatory with power decay.
      // Cut at a multiple of 2 pi so the first-order oscillatory tail
      // terms vanish and only the mean term C(2m+2, m+1)/4^{m+1}
      // survives at order Xi^{-(r-1)}, r = 2m+2-2k.
      const int m = g.k_max();
      const double cut = 2.0 * M_PI * 20000.0;
      out.head = gl32_panels(f2, 0.0, cut, M_PI);
      const double r = static_cast<double>(2 * m + 2 - 2 * k);
      out.tail = binom(2 * m + 2, m + 1) / ((r - 1.0) * std::pow(cut, r - 1.0));
      out.residual = std::pow(4.0, m + 1) * 2.0 * r *
                     static_cast<double>(m + 2) / std::pow(cut, r + 1.0);
      break;
    }
  }
  const double total = out.head + out.tail;
  if (!(out.residual <= tail_rel * std::max(total, 1e-300)))
    throw TailNotConverged("spectral moment tail certificate exceeds tolerance");
  return out;
}

}  // namespace detail

/// Sobolev seminorm |g|_{W_2^k} via the transform route:
/// (2 pi)^{-1/2} ( Int |xi|^{2k} |fourier(xi)|^2 dxi )^{1/2},
/// with analytic tail corrections certified to tail_rel of the head.
inline double sobolev_seminorm(const TestFunction& g, int k, double tail_rel = 1e-12) {
  if (k < 0) throw BadParameter("sobolev_seminorm: order must be non-negative");
  if (k > g.k_max())
    throw SmoothnessExceeded(std::string(g.name()) + ": no finite order-" +
                             std::to_string(k) + " seminorm");
  const auto I = detail::spectral_moment(g, k, tail_rel);
  return std::sqrt((I.head + I.tail) / M_PI);  // 2I / (2 pi)
}

/// Same seminorm through the spatial route ||g^{(k)}||_{L2}, using
/// piecewise Gauss-Legendre panels split at the knots plus a certified
/// decay-envelope tail.  Independent of the transform route, so the
/// two serve as mutual oracles.
inline double spatial_seminorm(const TestFunction& g, int k, double tail_rel = 1e-10) {
  if (k < 0 || k > std::min(g.k_max(), 4))
    throw SmoothnessExceeded("spatial_seminorm: derivative order unavailable");
  double cut = 0.0;
  double panel = 0.5;
  switch (g.decay()) {
    case DecayClass::compact: cut = g.support_radius(); break;
    case DecayClass::gaussian: cut = 12.0 + static_cast<double>(k); break;
    case DecayClass::exponential: cut = 45.0; break;
    case DecayClass::rational2:
      // The envelope tail only decays like cut^-3; certifying 1e-10 of
      // the k = 3 head needs a deep window (the integrand is cheap trig).
      cut = 20000.0;
      panel = M_PI / 2.0;
      break;
  }
  auto f2 = [&](double x) {
    const double d = g.derivative(k, x);
    return d * d;
  };
  // (g^{(k)})^2 is even; integrate the positive half and double it,
  // splitting panels at the non-negative knots.
  std::vector<double> cuts = {0.0};
  for (double b : g.breakpoints())
    if (b > 0.0 && b < cut) cuts.push_back(b);
  cuts.push_back(cut);
  std::sort(cuts.begin(), cuts.end());
  double head = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i)
    head += gl32_panels(f2, cuts[i - 1], cuts[i], panel);
  head *= 2.0;

  double residual = 0.0;
  switch (g.decay()) {
    case DecayClass::compact: break;
    case DecayClass::gaussian: {
      const double e = g.envelope(k, cut);
      residual = 2.0 * e * e * cut;  // integrand decreasing, crude but tiny
      break;
    }
    case DecayClass::exponential: {
      const double u = 2.0 + cut;
      residual = 2.0 * std::exp(-2.0 * cut) * (u * u / 2.0 + u / 2.0 + 0.25);
      break;
    }
    case DecayClass::rational2: {
      static const double K[5] = {0.0, 2.0, 10.0, 48.0, 260.0};
      const double kk = K[k];
      residual = 2.0 / (M_PI * M_PI) *
                 (4.0 / (3.0 * std::pow(cut, 3)) + kk / std::pow(cut, 4) +
                  kk * kk / (5.0 * std::pow(cut, 5)));
      break;
    }
  }
  if (!(residual <= tail_rel * std::max(head, 1e-300)))
    throw TailNotConverged("spatial seminorm tail certificate exceeds tolerance");
  return std::sqrt(head);
}

/// ||g^{(j)}||_{L_p} for real p >= 1, by adaptive quadrature between
/// knots plus a certified envelope tail.
inline double lp_norm(const TestFunction& g, int j, double p, double tail_rel = 1e-9) {
  if (!(p >= 1.0)) throw BadParameter("lp_norm: need p >= 1");
  if (j < 0 || j > std::min(g.k_max(), 4))
    throw SmoothnessExceeded("lp_norm: derivative order unavailable");
  double cut = 0.0;
  switch (g.decay()) {
    case DecayClass::compact: cut = g.support_radius(); break;
    case DecayClass::gaussian: cut = 12.0 + static_cast<double>(j); break;
    case DecayClass::exponential: cut = 45.0; break;
    case DecayClass::rational2: cut = 2000.0; break;
  }
  auto fp = [&](double x) { return std::pow(std::abs(g.derivative(j, x)), p); };
  std::vector<double> cuts = {0.0};
  for (double b : g.breakpoints())
    if (b > 0.0 && b < cut) cuts.push_back(b);
  // |g^{(j)}|^p has kinks at the derivative's sign changes; panels must
  // not straddle them or the adaptive error estimate stalls.
  for (double b : g.derivative_sign_roots(j))
    if (b > 0.0 && b < cut) cuts.push_back(b);
  cuts.push_back(cut);
  std::sort(cuts.begin(), cuts.end());
  double head = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (g.decay() == DecayClass::rational2) {
      head += gl32_panels(fp, cuts[i - 1], cuts[i], M_PI / 2.0);
    } else {
      head += adaptive(fp, cuts[i - 1], cuts[i], 1e-11);
    }
  }
  head *= 2.0;

  double residual = 0.0;
  switch (g.decay()) {
    case DecayClass::compact: break;
    case DecayClass::gaussian: {
      const double e = std::pow(g.envelope(j, cut), p);
      residual = 2.0 * e * cut;
      break;
    }
    case DecayClass::exponential: {
      // (2+x)^p e^{-px} <= (2+cut)^p e^{-p cut} e^{p (x-cut)/(2+cut)}
      const double u = 2.0 + cut;
      residual = 2.0 * std::pow(u, p) * std::exp(-p * cut) / (p * (1.0 - 1.0 / u));
      break;
    }
    case DecayClass::rational2: {
      static const double K[5] = {0.0, 2.0, 10.0, 48.0, 260.0};
      const double c = (2.0 + K[j] / cut) / M_PI;
      residual = 2.0 * std::pow(c, p) * std::pow(cut, 1.0 - 2.0 * p) / (2.0 * p - 1.0);
      break;
    }
  }
  if (!(residual <= tail_rel * std::max(head, 1e-300)))
    throw TailNotConverged("lp norm tail certificate exceeds tolerance");
  return std::pow(head, 1.0 / p);
}

/// L2 error ||F - g||_{L2[-T,T]} by composite Simpson with a fixed
/// number of points per unit length.
template <class F, class G>
double l2_error(F&& approx, G&& target, double T, int points_per_unit = 256) {
  if (!(T > 0.0)) throw BadParameter("l2_error: window must be positive");
  if (points_per_unit < 4) throw BadParameter("l2_error: need at least 4 points per unit");
  auto d2 = [&](double x) {
    const double d = approx(x) - target(x);
    return d * d;
  };
  const auto n = static_cast<std::size_t>(std::ceil(2.0 * T * points_per_unit));
  return std::sqrt(simpson(d2, -T, T, n));
}

/// Windowed L2 error together with the target's own mass outside the
/// window, so a small in-window error is never mistaken for a small
/// global one when g still lives beyond [-T, T].
struct L2ErrorReport {
  double value = 0.0;   ///< ||F - g||_{L2[-T,T]}
  double g_tail = 0.0;  ///< certified bound on ||g||_{L2(|x|>T)}
};

template <class F>
L2ErrorReport l2_error_report(F&& approx, const TestFunction& target, double T,
                              int points_per_unit = 256) {
  L2ErrorReport rep;
  rep.value = l2_error(std::forward<F>(approx), target, T, points_per_unit);
  rep.g_tail = target.tail_l2(T);
  return rep;
}

/// Newton divided-difference table of order k over the scaled sites
/// h x_j: level-r entries divide by the level span h (x_{j+r} - x_j).
/// Returns the n-k values of order exactly k.
inline std::vector<double> divided_differences(const SiteFamily& fam, double h, int k,
                                               const std::vector<double>& samples) {
  if (!(h > 0.0) || !std::isfinite(h)) throw BadH("divided_differences: h must be positive");
  if (k < 1) throw BadParameter("divided_differences: order must be at least 1");
  if (k >= fam.n)
    throw WindowTooSmall("divided_differences: order " + std::to_string(k) +
                         " needs at least " + std::to_string(k + 1) + " sites");
  if (samples.size() != fam.x.size())
    throw BadParameter("divided_differences: sample count mismatch");
  std::vector<double> t = samples;
  for (int r = 1; r <= k; ++r) {
    const std::size_t rows = t.size() - 1;
    for (std::size_t j = 0; j < rows; ++j) {
      const double span = h * (fam.x[j + static_cast<std::size_t>(r)] - fam.x[j]);
      t[j] = (t[j + 1] - t[j]) / span;
    }
    t.resize(rows);
  }
  return t;
}

/// Result of one explicit-constant inequality check.
struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  ///< lhs / rhs; the inequality holds iff <= 1
};

/// Divided-difference bound: the l_p norm of the order-k divided
/// differences of g over the scaled sites is at most
/// (1/(k-1)!) (1/(h q))^{1/p} ||g^{(k)}||_p, q the minimal site gap.
inline BoundCheck divided_bound_check(const TestFunction& g, const SiteFamily& fam,
                                      double h, int k, double p) {
  if (!(p >= 1.0)) throw BadParameter("divided_bound_check: need p >= 1");
  std::vector<double> samples(fam.x.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = g.value(h * fam.x[i]);
  const auto dd = divided_differences(fam, h, k, samples);
  double lhs = 0.0;
  for (double v : dd) lhs += std::pow(std::abs(v), p);
  lhs = std::pow(lhs, 1.0 / p);
  const double q = fam.min_gap();
  const double rhs = (1.0 / detail::factorial(k - 1)) *
                     std::pow(1.0 / (h * q), 1.0 / p) * lp_norm(g, k, p);
  return {lhs, rhs, lhs / rhs};
}

/// Sampling bound: the l_p norm of the samples of g on a q-separated
/// scaled family is at most
///   2^{1/p'} (3/(2q))^{1/p} ||g||_p + 2^{1/p'} (2q/3)^{1/p'} ||g'||_p,
/// with p' the conjugate exponent (the p' factors degenerate to 1 at p = 1).
inline BoundCheck sample_bound_check(const TestFunction& g, const SiteFamily& fam,
                                     double h, double p) {
  if (!(p >= 1.0)) throw BadParameter("sample_bound_check: need p >= 1");
  if (!(h > 0.0)) throw BadH("sample_bound_check: h must be positive");
  double lhs = 0.0;
  for (double x : fam.x) lhs += std::pow(std::abs(g.value(h * x)), p);
  lhs = std::pow(lhs, 1.0 / p);
  const double q = h * fam.min_gap();
  double two_pow = 1.0, q_pow = 1.0;
  if (p > 1.0) {
    const double pprime = p / (p - 1.0);
    two_pow = std::pow(2.0, 1.0 / pprime);
    q_pow = std::pow(2.0 * q / 3.0, 1.0 / pprime);
  }
  const double rhs = two_pow * std::pow(3.0 / (2.0 * q), 1.0 / p) * lp_norm(g, 0, p) +
                     two_pow * q_pow * lp_norm(g, 1, p);
  return {lhs, rhs, lhs / rhs};
}

/// Result of a grid (FFT) seminorm estimate.
struct GridSeminorm {
  double value = 0.0;
  double leak = 0.0;  ///< outer-band max |sample| relative to global max
};

/// W_2^k seminorm estimate of a function given by samples on the
/// uniform grid x_i = -L + i (2L/n), i = 0..n-1 (n a power of two):
/// discrete Plancherel sum over the FFT bins.  The leak diagnostic is
/// the largest |sample| in the outer band (fraction of the grid at
/// each end) relative to the global maximum; when it exceeds the
/// threshold the window truncates the function significantly and the
/// estimate is untrustworthy (throws if requested, else recorded).
inline GridSeminorm grid_seminorm(const std::vector<double>& samples, double L, int k,
                                  double leak_threshold = 1e-3,
                                  double leak_fraction = 1.0 / 16.0,
                                  bool raise_on_leak = true) {
  const std::size_t n = samples.size();
  if (n < 16 || (n & (n - 1)) != 0)
    throw BadParameter("grid_seminorm: sample count must be a power of two >= 16");
  if (!(L > 0.0)) throw BadParameter("grid_seminorm: window must be positive");
  if (k < 0) throw BadParameter("grid_seminorm: order must be non-negative");

  double global = 0.0;
  for (double v : samples) global = std::max(global, std::abs(v));
  const auto outer = static_cast<std::size_t>(std::floor(leak_fraction * n));
  double edge = 0.0;
  for (std::size_t i = 0; i < outer; ++i) {
    edge = std::max(edge, std::abs(samples[i]));
    edge = std::max(edge, std::abs(samples[n - 1 - i]));
  }
  GridSeminorm out;
  out.leak = (global > 0.0) ? edge / global : 0.0;
  if (raise_on_leak && out.leak > leak_threshold)
    throw BoundaryLeakage("grid window truncates the function: leak " +
                          std::to_string(out.leak));

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spec;
  std::vector<double> buf = samples;
  fft.fwd(spec, buf);
  const double dx = 2.0 * L / static_cast<double>(n);
  const double dxi = M_PI / L;
  double acc = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const auto mm = (m <= n / 2) ? static_cast<double>(m)
                                 : static_cast<double>(m) - static_cast<double>(n);
    const double xi = dxi * mm;
    acc += std::pow(std::abs(xi), 2 * k) * std::norm(dx * spec[m]);
  }
  out.value = std::sqrt(acc * dxi / (2.0 * M_PI));
  return out;
}

/// Worst violation of the divided-difference mean-value property:
/// k! D_j must lie inside the sampled range of g^{(k)} over the
/// defining bracket.  Returns the largest excess, normalized by the
/// derivative scale (0 when every value is interior).
inline double mean_value_excess(const TestFunction& g, const SiteFamily& fam, double h,
                                int k, int bracket_samples = 2048) {
  std::vector<double> samples(fam.x.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = g.value(h * fam.x[i]);
  const auto dd = divided_differences(fam, h, k, samples);
  const double kfact = detail::factorial(k);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j < dd.size(); ++j) {
    const double a = h * fam.x[j];
    const double b = h * fam.x[j + static_cast<std::size_t>(k)];
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int i = 0; i <= bracket_samples; ++i) {
      const double x = a + (b - a) * static_cast<double>(i) / bracket_samples;
      const double v = g.derivative(k, x);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    scale = std::max({scale, std::abs(lo), std::abs(hi)});
    const double v = kfact * dd[j];
    worst = std::max({worst, lo - v, v - hi});
  }
  return (scale > 0.0) ? worst / scale : worst;
}

}  // namespace kerlab

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include "kerlab/errors.hpp"
#include "kerlab/quadrature.hpp"

namespace kerlab {

/// Kernel families available for collocation and regularity studies.
/// All are even, positive, integrable functions with positive Fourier
/// transforms (transform convention: phi_hat(xi) = Int phi(x) e^{-i xi x} dx).
enum class KernelFamily {
  gaussian,  ///< phi(x) = exp(-lambda x^2),            param = lambda > 0
  poisson,   ///< phi(x) = sqrt(2/a) a / (a^2 + x^2),   param = a > 0
  imq        ///< phi(x) = (x^2 + c^2)^beta,            param = c > 0, beta < -1/2
};

inline const char* to_string(KernelFamily f) {
  switch (f) {
    case KernelFamily::gaussian: return "gaussian";
    case KernelFamily::poisson: return "poisson";
    case KernelFamily::imq: return "imq";
  }
  return "?";
}

inline KernelFamily kernel_family_from_string(const std::string& s) {
  if (s == "gaussian" || s == "gauss") return KernelFamily::gaussian;
  if (s == "poisson") return KernelFamily::poisson;
  if (s == "imq" || s == "inverse-multiquadric") return KernelFamily::imq;
  throw UnknownName("unknown kernel family: " + s);
}

/// One member of a kernel family.  Closed forms are used wherever the
/// family admits them; the inverse multiquadric transform falls back
/// to oscillatory quadrature.
class Kernel {
 public:
  Kernel(KernelFamily family, double param, double beta = -1.0)
      : family_(family), param_(param), beta_(beta) {
    if (!(param > 0.0) || !std::isfinite(param))
      throw BadParameter("kernel parameter must be positive and finite");
    if (family == KernelFamily::gaussian && !(param <= 1.0))
      throw BadParameter("gaussian width must satisfy 0 < lambda <= 1");
    if (family == KernelFamily::poisson && !(param >= 1.0))
      throw BadParameter("poisson parameter must satisfy alpha >= 1");
    if (family == KernelFamily::imq && !(param >= 1.0))
      throw BadParameter("inverse multiquadric shape must satisfy c >= 1");
    if (family == KernelFamily::imq && !(beta < -0.5))
      throw BadParameter("imq exponent must satisfy beta < -1/2 for integrability");
  }

  KernelFamily family() const { return family_; }
  double param() const { return param_; }
  double beta() const { return beta_; }

  /// Spatial kernel value.
  double phi(double x) const {
    switch (family_) {
      case KernelFamily::gaussian:
        return std::exp(-param_ * x * x);
      case KernelFamily::poisson:
        return std::sqrt(2.0 / param_) * param_ / (param_ * param_ + x * x);
      case KernelFamily::imq:
        return std::pow(x * x + param_ * param_, beta_);
    }
    return 0.0;
  }

  double operator()(double x) const { return phi(x); }

  /// Fourier transform.  Gaussian and Poisson have closed forms; the
  /// inverse multiquadric is computed by Ooura's oscillatory cosine
  /// quadrature (accurate to ~1e-9 relative).
  double phi_hat(double xi) const {
    const double a = std::abs(xi);
    switch (family_) {
      case KernelFamily::gaussian:
        return std::sqrt(M_PI / param_) * std::exp(-a * a / (4.0 * param_));
      case KernelFamily::poisson:
        return std::sqrt(2.0 / param_) * M_PI * std::exp(-param_ * a);
      case KernelFamily::imq:
        return imq_hat(a);
    }
    return 0.0;
  }

  bool closed_form_transform() const { return family_ != KernelFamily::imq; }

  /// log of m(param) = min over [-pi, pi] of phi_hat.  The transforms
  /// are even and decreasing in |xi|, so the minimum sits at xi = pi.
  double log_band_min() const {
    switch (family_) {
      case KernelFamily::gaussian:
        return 0.5 * std::log(M_PI / param_) - M_PI * M_PI / (4.0 * param_);
      case KernelFamily::poisson:
        return 0.5 * std::log(2.0 / param_) + std::log(M_PI) - param_ * M_PI;
      case KernelFamily::imq:
        return std::log(imq_hat(M_PI));
    }
    return 0.0;
  }

  /// log of M_j(param) = sup over [-pi, pi] of phi_hat(xi + 2 pi j),
  /// attained at |xi + 2 pi j| = (2|j| - 1) pi by monotonicity.
  double log_alias_sup(int j) const {
    if (j == 0) throw BadParameter("log_alias_sup: j must be nonzero");
    const double t = (2.0 * std::abs(j) - 1.0) * M_PI;
    switch (family_) {
      case KernelFamily::gaussian:
        return 0.5 * std::log(M_PI / param_) - t * t / (4.0 * param_);
      case KernelFamily::poisson:
        return 0.5 * std::log(2.0 / param_) + std::log(M_PI) - param_ * t;
      case KernelFamily::imq:
        return std::log(imq_hat(t));
    }
    return 0.0;
  }

  double band_min() const { return std::exp(log_band_min()); }
  double alias_sup(int j) const { return std::exp(log_alias_sup(j)); }

 private:
  // phi_hat(0) = 2 Int_0^inf (x^2 + c^2)^beta dx; cached as the natural
  // scale against which small transform values are judged.
  double imq_scale() const {
    if (imq_scale_ < 0.0) {
      const double c = param_, b = beta_;
      imq_scale_ =
          2.0 * semi_infinite([c, b](double x) { return std::pow(x * x + c * c, b); }, 1e-12);
    }
    return imq_scale_;
  }

  double imq_hat(double a) const {
    if (a == 0.0) return imq_scale();
    static thread_local boost::math::quadrature::ooura_fourier_cos<double> integrator(1e-9);
    const double c = param_, b = beta_;
    auto [value, err] =
        integrator.integrate([c, b](double x) { return std::pow(x * x + c * c, b); }, a);
    // The estimate is relative.  Far out in the exponential tail the
    // integral drops below what cancellation allows any oscillatory rule
    // to certify relatively, so accept an absolute certificate there:
    // the value is pinned to within 1e-13 of the transform's peak scale.
    const double result = 2.0 * value;
    const bool relative_ok = err < 1e-8;
    const bool absolute_ok = err * std::abs(result) <= 1e-13 * imq_scale();
    if (!relative_ok && !absolute_ok)
      throw QuadratureFailure("imq transform quadrature did not converge");
    return result;
  }

  KernelFamily family_;
  double param_;
  double beta_;
  mutable double imq_scale_ = -1.0;
};

inline Kernel make_kernel(const std::string& family, double param, double beta = -1.0) {
  return Kernel(kernel_family_from_string(family), param, beta);
}

/// Options for the single-member regularity validation.
struct RegularityOptions {
  int band_grid = 2049;       ///< endpoint-inclusive samples per band
  int alias_terms = 8;        ///< number of alias bands M_1..M_J examined
  double positivity_tol = 1e-12;  ///< relative slack for transform positivity
  double band_match_tol = 1e-6;   ///< grid extrema vs closed form, relative
  double inversion_tol = 1e-6;    ///< |Int phi_hat - 2 pi phi(0)| relative
};

/// Result of validating conditions (A1)-(A3) for one kernel.
struct RegularityReport {
  bool a1 = false;  ///< phi and phi_hat integrable, inversion identity holds
  bool a2 = false;  ///< phi_hat >= 0 everywhere sampled, > 0 on [-pi, pi]
  bool a3 = false;  ///< alias sequence (M_j) summable (geometric decay)
  bool pass() const { return a1 && a2 && a3; }

  double phi_l1 = 0.0;           ///< Int |phi|
  double phi_hat_l1 = 0.0;       ///< Int |phi_hat|
  double inversion_gap = 0.0;    ///< relative gap in Int phi_hat = 2 pi phi(0)
  double band_min_grid = 0.0;    ///< grid minimum of phi_hat on [-pi, pi]
  double band_min_closed = 0.0;  ///< closed-form m(param)
  double band_edge_gap = 0.0;    ///< worst relative gap, grid vs closed form
  double transform_min = 0.0;    ///< most negative phi_hat sample (wide window)
  std::vector<double> alias_sups;    ///< M_1 .. M_J
  double alias_sum = 0.0;        ///< sum_{j != 0} M_j
  double alias_ratio = 0.0;      ///< alias_sum / m (log-space safe)
  double alias_decay = 0.0;      ///< M_J / M_1 (log-space safe)
  double alias_tail_fraction = 0.0;  ///< geometric tail estimate / partial sum
};

/// Positivity scan of a transform callable over the central band and
/// its first alias bands: the minimum over [-pi, pi] and the most
/// negative value anywhere sampled.  Usable with synthetic transforms
/// that no catalog family represents.
struct PositivityScan {
  bool nonnegative = false;   ///< no sample below -tol * scale
  bool band_positive = false; ///< strictly positive on [-pi, pi]
  double band_min = 0.0;      ///< grid minimum over [-pi, pi]
  double transform_min = 0.0; ///< smallest sample over all scanned bands
};

template <class F>
PositivityScan scan_transform_positivity(F&& phi_hat, const RegularityOptions& opt = {}) {
  if (opt.band_grid < 3 || opt.band_grid % 2 == 0)
    throw BadWindow("band grid must be odd and at least 3 points");
  if (opt.alias_terms < 1) throw BadWindow("need at least one alias band");
  const int n = opt.band_grid;
  const double scale0 = phi_hat(0.0);
  double tmin = std::numeric_limits<double>::infinity();
  double band_min = std::numeric_limits<double>::infinity();
  for (int band = -opt.alias_terms; band <= opt.alias_terms; ++band) {
    for (int i = 0; i < n; ++i) {
      const double xi = 2.0 * M_PI * band +
                        (-M_PI + 2.0 * M_PI * static_cast<double>(i) / (n - 1));
      const double v = phi_hat(xi);
      tmin = std::min(tmin, v);
      if (band == 0) band_min = std::min(band_min, v);
    }
  }
  PositivityScan out;
  out.band_min = band_min;
  out.transform_min = tmin;
  out.nonnegative = tmin >= -opt.positivity_tol * scale0;
  out.band_positive = band_min > 0.0;
  return out;
}

/// Validate (A1)-(A3) for a single kernel.  The grid is endpoint
/// inclusive so that for monotone transforms the sampled band extrema
/// coincide with the closed-form values up to rounding.
inline RegularityReport check_regularity(const Kernel& k,
                                         const RegularityOptions& opt = {}) {
  if (opt.band_grid < 3 || opt.band_grid % 2 == 0)
    throw BadWindow("band grid must be odd and at least 3 points");
  if (opt.alias_terms < 3)
    throw BadWindow("alias summability needs at least three bands");
  RegularityReport rep;

  // --- A1: integrability + Fourier inversion at the origin.
  switch (k.family()) {
    case KernelFamily::gaussian:
      rep.phi_l1 = std::sqrt(M_PI / k.param());
      rep.phi_hat_l1 = 2.0 * M_PI;  // sqrt(pi/l) * sqrt(4 pi l)
      break;
    case KernelFamily::poisson:
      rep.phi_l1 = std::sqrt(2.0 / k.param()) * M_PI;
      rep.phi_hat_l1 = 2.0 * std::sqrt(2.0 / k.param()) * M_PI / k.param();
      break;
    case KernelFamily::imq: {
      rep.phi_l1 = 2.0 * semi_infinite([&](double x) { return k.phi(x); }, 1e-11);
      // phi_hat decays like exp(-c xi); the cutoff keeps the neglected
      // tail below 1e-7 relative while staying inside the range the
      // oscillatory quadrature can still resolve.
      const double cut = 17.0 / k.param();
      const double head = 2.0 * gl32_panels([&](double xi) { return k.phi_hat(xi); },
                                            0.0, cut, 0.5);
      rep.phi_hat_l1 = head;
      break;
    }
  }
  rep.inversion_gap =
      std::abs(rep.phi_hat_l1 - 2.0 * M_PI * k.phi(0.0)) / (2.0 * M_PI * k.phi(0.0));
  rep.a1 = std::isfinite(rep.phi_l1) && std::isfinite(rep.phi_hat_l1) &&
           rep.inversion_gap <= opt.inversion_tol;

  // --- A2: positivity of the transform.
  const int n = opt.band_grid;
  const auto scan = scan_transform_positivity([&](double xi) { return k.phi_hat(xi); }, opt);
  rep.transform_min = scan.transform_min;
  rep.band_min_grid = scan.band_min;
  rep.band_min_closed = k.band_min();
  rep.a2 = scan.nonnegative && scan.band_positive;

  // Band-edge agreement: grid extrema against closed forms, for the
  // central band minimum and each alias band supremum.
  double worst = std::abs(rep.band_min_grid - rep.band_min_closed) /
                 std::max(rep.band_min_closed, 1e-300);
  for (int j = 1; j <= std::min(opt.alias_terms, 3); ++j) {
    double sup = 0.0;
    for (int i = 0; i < n; ++i) {
      const double xi = 2.0 * M_PI * j +
                        (-M_PI + 2.0 * M_PI * static_cast<double>(i) / (n - 1));
      sup = std::max(sup, k.phi_hat(xi));
    }
    const double closed = k.alias_sup(j);
    if (closed > 0.0 && std::isfinite(closed) && closed >= 1e-290)
      worst = std::max(worst, std::abs(sup - closed) / closed);
  }
  rep.band_edge_gap = worst;

  // --- A3: summability of the alias sequence, in log space so that
  // deeply underflowing tails (gaussian at small width) stay exact.
  std::vector<double> logM(static_cast<std::size_t>(opt.alias_terms));
  for (int j = 1; j <= opt.alias_terms; ++j)
    logM[static_cast<std::size_t>(j - 1)] = k.log_alias_sup(j);
  rep.alias_sups.resize(logM.size());
  double sum = 0.0, ratio = 0.0;
  const double log_m = k.log_band_min();
  for (std::size_t i = 0; i < logM.size(); ++i) {
    rep.alias_sups[i] = std::exp(logM[i]);
    sum += rep.alias_sups[i];
    ratio += std::exp(logM[i] - log_m);
  }
  rep.alias_sum = 2.0 * sum;  // M_{-j} = M_j
  rep.alias_ratio = 2.0 * ratio;
  rep.alias_decay = std::exp(logM.back() - logM.front());
  const std::size_t J = logM.size();
  const double r1 = logM[J - 1] - logM[J - 2];
  const double r2 = logM[J - 2] - logM[J - 3];
  const double log_r = std::max(r1, r2);
  bool summable = log_r < 0.0;
  if (summable) {
    const double r = std::exp(log_r);
    // Geometric tail estimate relative to the partial sum, computed
    // from logs so an underflowed M_J contributes an exact zero.
    const double tail = std::exp(logM.back() + log_r) / (1.0 - r);
    rep.alias_tail_fraction = (sum > 0.0) ? tail / sum : 0.0;
  }
  rep.a3 = summable && rep.alias_decay < 1e-3;

  return rep;
}

/// Options for validating a one-parameter family sweep.
struct SweepOptions {
  RegularityOptions member;      ///< per-member validation options
  double r2_bound = 3.0;         ///< required bound on sum M_j / m
  double r2_monotone_slack = 1e-12;  ///< allowed increase between members
  double r3_slack = 1e-12;       ///< per-point non-increase slack
  int r3_grid = 257;             ///< endpoint-inclusive grid on [-pi, pi]
};

/// Result of validating a family sweep in its flattening direction:
/// (R1) every member passes (A1)-(A3); (R2) sum_{j!=0} M_j <= C m with
/// the ratio non-increasing along the sweep; (R3) m / phi_hat(xi) is
/// pointwise non-increasing along the sweep (its liminf tends to zero
/// in the interior of the band).
struct SweepReport {
  bool r1 = false;
  bool r2 = false;
  bool r3 = false;
  bool pass() const { return r1 && r2 && r3; }

  std::vector<double> params;
  std::vector<RegularityReport> members;
  std::vector<double> r2_ratio;       ///< (sum_{j!=0} M_j) / m per member
  double r2_worst = 0.0;              ///< max ratio over the sweep
  double r3_final_interior = 0.0;     ///< max interior ratio at the last member
  double band_edge_gap = 0.0;         ///< worst band-edge gap over members
};

/// Validate a family of kernels given in flattening order (gaussian:
/// lambda decreasing; poisson: alpha increasing).  Throws BadSweep for
/// fewer than two members or a non-monotone parameter list.
inline SweepReport check_family(KernelFamily family, const std::vector<double>& params,
                                const SweepOptions& opt = {}, double beta = -1.0) {
  if (params.size() < 2) throw BadSweep("family sweep needs at least two members");
  const bool decreasing = params[1] < params[0];
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (decreasing ? !(params[i] < params[i - 1]) : !(params[i] > params[i - 1]))
      throw BadSweep("family sweep parameters must be strictly monotone");
  }
  const bool flattening = (family == KernelFamily::gaussian) ? decreasing : !decreasing;
  if (!flattening)
    throw BadSweep("family sweep must be ordered in the flattening direction");

  SweepReport rep;
  rep.params = params;
  std::vector<Kernel> members;
  members.reserve(params.size());
  for (double p : params) members.emplace_back(family, p, beta);

  // R1: each member individually regular.
  rep.r1 = true;
  for (const Kernel& k : members) {
    rep.members.push_back(check_regularity(k, opt.member));
    rep.r1 = rep.r1 && rep.members.back().pass();
    rep.band_edge_gap = std::max(rep.band_edge_gap, rep.members.back().band_edge_gap);
  }

  // R2: alias-to-band-minimum ratio, bounded and non-increasing.
  // Computed through the closed-form band-edge path in log space:
  // ratio = 2 sum_{j>=1} exp(log M_j - log m).
  rep.r2 = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Kernel& k = members[i];
    const double log_m = k.log_band_min();
    double ratio = 0.0;
    for (int j = 1; j <= opt.member.alias_terms; ++j)
      ratio += std::exp(k.log_alias_sup(j) - log_m);
    ratio *= 2.0;
    rep.r2_ratio.push_back(ratio);
    rep.r2_worst = std::max(rep.r2_worst, ratio);
    if (ratio > opt.r2_bound) rep.r2 = false;
    if (i > 0 && ratio > rep.r2_ratio[i - 1] + opt.r2_monotone_slack) rep.r2 = false;
  }

  // R3: m / phi_hat(xi), pointwise non-increasing along the sweep on an
  // endpoint-inclusive band grid (equal to 1 at the band edges, decaying
  // to zero in the interior as the family flattens).
  rep.r3 = true;
  const int g = opt.r3_grid;
  std::vector<double> prev(static_cast<std::size_t>(g));
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Kernel& k = members[i];
    const double log_m = k.log_band_min();
    double interior_max = 0.0;
    for (int p = 0; p < g; ++p) {
      const double xi = -M_PI + 2.0 * M_PI * static_cast<double>(p) / (g - 1);
      const double ratio = std::exp(log_m - std::log(k.phi_hat(xi)));
      if (i > 0 && ratio > prev[static_cast<std::size_t>(p)] + opt.r3_slack) rep.r3 = false;
      prev[static_cast<std::size_t>(p)] = ratio;
      if (p > 0 && p + 1 < g) interior_max = std::max(interior_max, ratio);
    }
    if (i + 1 == members.size()) rep.r3_final_interior = interior_max;
  }

  return rep;
}

}  // namespace kerlab

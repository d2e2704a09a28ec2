#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kerlab/errors.hpp"
#include "kerlab/rng.hpp"

namespace kerlab {

/// Kadec stability limit: perturbed integer sites x_j = j + delta_j
/// with sup_j |delta_j| < 1/4 still generate a Riesz basis of
/// exponentials for L2[-pi, pi].  At or beyond 1/4 the guarantee is
/// lost, so site generation refuses such amplitudes.
inline constexpr double kadec_limit = 0.25;

/// How the perturbations delta_j are produced.
enum class SiteRule {
  zero,           ///< delta_j = 0 (integer lattice)
  sinusoidal,     ///< delta_j = amplitude * sin(j)
  seeded_uniform  ///< delta_j = amplitude * u_j, u_j ~ U[-1,1) keyed by (seed, j)
};

inline const char* to_string(SiteRule rule) {
  switch (rule) {
    case SiteRule::zero: return "zero";
    case SiteRule::sinusoidal: return "sinusoidal";
    case SiteRule::seeded_uniform: return "seeded-uniform";
  }
  return "?";
}

inline SiteRule site_rule_from_string(const std::string& s) {
  if (s == "zero") return SiteRule::zero;
  if (s == "sinusoidal") return SiteRule::sinusoidal;
  if (s == "seeded-uniform" || s == "seeded_uniform") return SiteRule::seeded_uniform;
  throw UnknownName("unknown site rule: " + s);
}

/// A finite family of perturbed integer sites, symmetric about zero.
/// For n sites the integer offsets are j = -floor(n/2) .. n-1-floor(n/2),
/// so odd n always contains j = 0.
struct SiteFamily {
  SiteRule rule = SiteRule::zero;
  int n = 0;
  double amplitude = 0.0;
  std::uint64_t seed = 0;
  std::vector<long> index;  ///< lattice offsets j
  std::vector<double> x;    ///< x_j = j + delta_j, strictly increasing

  /// Smallest gap between consecutive sites.
  double min_gap() const {
    double q = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < x.size(); ++i) q = std::min(q, x[i] - x[i - 1]);
    return q;
  }

  /// Largest gap between consecutive sites.
  double max_gap() const {
    double Q = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) Q = std::max(Q, x[i] - x[i - 1]);
    return Q;
  }

  /// sup_j |x_j - j|, the deviation entering the Kadec condition.
  double deviation() const {
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      d = std::max(d, std::abs(x[i] - static_cast<double>(index[i])));
    return d;
  }
};

/// A-priori lower bound on the minimal gap for a rule and amplitude:
/// |delta_{j+1} - delta_j| <= 2 a sin(1/2) for the sinusoidal rule and
/// <= 2a for the uniform rule, hence gaps >= 1 minus that.
inline double rule_min_gap(SiteRule rule, double amplitude) {
  switch (rule) {
    case SiteRule::zero: return 1.0;
    case SiteRule::sinusoidal: return 1.0 - 2.0 * amplitude * std::sin(0.5);
    case SiteRule::seeded_uniform: return 1.0 - 2.0 * amplitude;
  }
  return 1.0;
}

/// Generate a site family.  Throws KadecViolation when the requested
/// amplitude reaches the 1/4 stability limit (the zero rule ignores
/// amplitude), and BadParameter for nonsensical sizes or amplitudes.
/// Passing enforce_kadec = false disables the stability-limit check so
/// over-perturbed families can be built for experiments; the resulting
/// coordinates must still be strictly increasing (NotIncreasing
/// otherwise).
inline SiteFamily make_sites(SiteRule rule, int n, double amplitude = 0.0,
                             std::uint64_t seed = 0, bool enforce_kadec = true) {
  if (n < 1) throw BadParameter("make_sites: need at least one site");
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude))
    throw BadParameter("make_sites: amplitude must be finite and non-negative");
  if (enforce_kadec && rule != SiteRule::zero && amplitude >= kadec_limit)
    throw KadecViolation("site amplitude " + std::to_string(amplitude) +
                         " reaches the 1/4 stability limit");

  SiteFamily fam;
  fam.rule = rule;
  fam.n = n;
  fam.amplitude = (rule == SiteRule::zero) ? 0.0 : amplitude;
  fam.seed = seed;
  fam.index.resize(static_cast<std::size_t>(n));
  fam.x.resize(static_cast<std::size_t>(n));
  const long lo = -static_cast<long>(n / 2);
  for (int i = 0; i < n; ++i) {
    const long j = lo + i;
    double delta = 0.0;
    switch (rule) {
      case SiteRule::zero: break;
      case SiteRule::sinusoidal:
        delta = fam.amplitude * std::sin(static_cast<double>(j));
        break;
      case SiteRule::seeded_uniform:
        delta = fam.amplitude * uniform_sym(seed, j);
        break;
    }
    fam.index[static_cast<std::size_t>(i)] = j;
    fam.x[static_cast<std::size_t>(i)] = static_cast<double>(j) + delta;
  }
  for (std::size_t i = 1; i < fam.x.size(); ++i)
    if (!(fam.x[i] > fam.x[i - 1]))
      throw NotIncreasing("make_sites: perturbation makes the sites collide near index " +
                          std::to_string(fam.index[i]));
  return fam;
}

/// Lower / upper separation of an ordered coordinate list.
struct Separation {
  double q = 0.0;  ///< smallest consecutive gap
  double Q = 0.0;  ///< largest consecutive gap
};

/// Compute the separation bounds of a coordinate list.  At least two
/// points are required (WindowTooSmall); the points must be strictly
/// increasing (NotIncreasing).
inline Separation separation_bounds(const std::vector<double>& points) {
  if (points.size() < 2)
    throw WindowTooSmall("separation_bounds: need at least two points");
  Separation s;
  s.q = std::numeric_limits<double>::infinity();
  s.Q = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double gap = points[i] - points[i - 1];
    if (!(gap > 0.0)) throw NotIncreasing("separation_bounds: points are not strictly increasing");
    s.q = std::min(s.q, gap);
    s.Q = std::max(s.Q, gap);
  }
  return s;
}

/// Site family scaled to mesh width h: points h * x_j.
struct ScaledSites {
  double h = 1.0;
  std::vector<double> points;
  double fill_distance = 0.0;  ///< half the largest scaled gap
};

/// Scale a site family by h in (0, 1].  Throws BadH outside that range.
inline ScaledSites scale_sites(const SiteFamily& fam, double h) {
  if (!std::isfinite(h) || !(h > 0.0) || h > 1.0)
    throw BadH("scale_sites: h must lie in (0, 1]");
  ScaledSites s;
  s.h = h;
  s.points.resize(fam.x.size());
  for (std::size_t i = 0; i < fam.x.size(); ++i) s.points[i] = h * fam.x[i];
  s.fill_distance = 0.5 * h * fam.max_gap();
  return s;
}

/// Riesz-bound estimate for the exponential system {e^{i x_j xi}} in
/// L2[-pi, pi], from the extreme eigenvalues of its Gram matrix
/// G_jk = 2 sin(pi (x_j - x_k)) / (x_j - x_k), with diagonal 2 pi.
struct RieszEstimate {
  double gram_min = 0.0;    ///< smallest Gram eigenvalue
  double gram_max = 0.0;    ///< largest Gram eigenvalue
  double basis_bound = 0.0; ///< max(sqrt(gram_max/2pi), sqrt(2pi/gram_min))
};

inline RieszEstimate riesz_gram_bounds(const SiteFamily& fam) {
  const int n = fam.n;
  if (n < 2) throw WindowTooSmall("riesz_gram_bounds: need at least two sites");
  if (n > 2048) throw WindowTooLarge("riesz_gram_bounds: dense Gram limited to n <= 2048");
  const double two_pi = 2.0 * M_PI;
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i) {
    G(i, i) = two_pi;
    for (int k = i + 1; k < n; ++k) {
      const double d = fam.x[static_cast<std::size_t>(i)] - fam.x[static_cast<std::size_t>(k)];
      const double v = 2.0 * std::sin(M_PI * d) / d;
      G(i, k) = v;
      G(k, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
  RieszEstimate out;
  out.gram_min = es.eigenvalues().minCoeff();
  out.gram_max = es.eigenvalues().maxCoeff();
  if (out.gram_min <= 0.0) {
    out.basis_bound = std::numeric_limits<double>::infinity();
  } else {
    out.basis_bound =
        std::max(std::sqrt(out.gram_max / two_pi), std::sqrt(two_pi / out.gram_min));
  }
  return out;
}

}  // namespace kerlab

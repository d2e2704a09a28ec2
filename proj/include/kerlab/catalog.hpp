#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "kerlab/errors.hpp"

namespace kerlab {

/// Unnormalized sinc: sin(t)/t with the removable singularity filled.
inline double sinc_u(double t) {
  if (std::abs(t) < 1e-8) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

/// Tail decay classes of catalog members, used to certify truncated
/// quadrature of norms.
enum class DecayClass {
  compact,      ///< identically zero beyond the support radius
  gaussian,     ///< |g^{(j)}(x)| <= 2 (2x)^j exp(-x^2) for x >= j+1
  exponential,  ///< |g^{(j)}(x)| <= (2 + x) exp(-x)
  rational2     ///< |g^{(j)}(x)| <= (2 x^{-2} + K_j x^{-3}) / pi for x >= 1
};

/// Test functions with known smoothness, transforms, and norms.
///
/// Transform convention: fourier(xi) = Int g(x) e^{-i xi x} dx, matching
/// the kernel transforms, and the Sobolev seminorm carries the 1/sqrt(2 pi)
/// Plancherel factor.
class TestFunction {
 public:
  enum class Id { gauss, expabs, matern2, sinc_sq, bspline1, bspline2, bspline3 };

  explicit TestFunction(Id id) : id_(id) {}

  Id id() const { return id_; }

  const char* name() const {
    switch (id_) {
      case Id::gauss: return "gauss";
      case Id::expabs: return "expabs";
      case Id::matern2: return "matern2";
      case Id::sinc_sq: return "sinc_sq";
      case Id::bspline1: return "bspline1";
      case Id::bspline2: return "bspline2";
      case Id::bspline3: return "bspline3";
    }
    return "?";
  }

  /// Largest k with finite W_2^k seminorm (64 stands in for "all k
  /// reachable in practice" for the entire members).
  int k_max() const {
    switch (id_) {
      case Id::gauss: return 64;
      case Id::expabs: return 1;
      case Id::matern2: return 3;
      case Id::sinc_sq: return 64;
      case Id::bspline1: return 1;
      case Id::bspline2: return 2;
      case Id::bspline3: return 3;
    }
    return 0;
  }

  double value(double x) const { return derivative(0, x); }
  double operator()(double x) const { return derivative(0, x); }

  /// j-th derivative, available for j <= min(k_max, 4).  For members
  /// with kinks the value at a knot is the inner-piece one-sided limit
  /// (irrelevant under integrals, which split at the knots).
  double derivative(int j, double x) const {
    if (j < 0 || j > std::min(k_max(), 4))
      throw SmoothnessExceeded(std::string(name()) + ": derivative order " +
                               std::to_string(j) + " exceeds available smoothness");
    switch (id_) {
      case Id::gauss: return gauss_deriv(j, x);
      case Id::expabs: return expabs_deriv(j, x);
      case Id::matern2: return matern2_deriv(j, x);
      case Id::sinc_sq: return sincsq_deriv(j, x);
      case Id::bspline1: return b1_deriv(j, x);
      case Id::bspline2: return b2_deriv(j, x);
      case Id::bspline3: return b3_deriv(j, x);
    }
    return 0.0;
  }

  /// Fourier transform (closed form for every member).
  double fourier(double xi) const {
    const double a = std::abs(xi);
    switch (id_) {
      case Id::gauss: return std::sqrt(M_PI) * std::exp(-xi * xi / 4.0);
      case Id::expabs: return 2.0 / (1.0 + xi * xi);
      case Id::matern2: {
        const double d = 1.0 + xi * xi;
        return 4.0 / (d * d);
      }
      case Id::sinc_sq: return (a >= 1.0) ? 0.0 : 1.0 - a;
      case Id::bspline1: return std::pow(sinc_u(xi / 2.0), 2);
      case Id::bspline2: return std::pow(sinc_u(xi / 2.0), 3);
      case Id::bspline3: return std::pow(sinc_u(xi / 2.0), 4);
    }
    return 0.0;
  }

  /// Exact L2 norm.
  double l2_norm() const {
    switch (id_) {
      case Id::gauss: return std::pow(M_PI / 2.0, 0.25);
      case Id::expabs: return 1.0;
      case Id::matern2: return std::sqrt(2.5);
      case Id::sinc_sq: return 1.0 / std::sqrt(3.0 * M_PI);
      case Id::bspline1: return std::sqrt(2.0 / 3.0);
      case Id::bspline2: return std::sqrt(11.0 / 20.0);
      case Id::bspline3: return std::sqrt(151.0 / 315.0);
    }
    return 0.0;
  }

  DecayClass decay() const {
    switch (id_) {
      case Id::gauss: return DecayClass::gaussian;
      case Id::expabs:
      case Id::matern2: return DecayClass::exponential;
      case Id::sinc_sq: return DecayClass::rational2;
      default: return DecayClass::compact;
    }
  }

  /// Support radius for compact members, +inf otherwise.
  double support_radius() const {
    switch (id_) {
      case Id::bspline1: return 1.0;
      case Id::bspline2: return 1.5;
      case Id::bspline3: return 2.0;
      default: return std::numeric_limits<double>::infinity();
    }
  }

  /// Interior knots where some derivative jumps (integration panels
  /// must split here for exact piecewise quadrature).
  std::vector<double> breakpoints() const {
    switch (id_) {
      case Id::expabs:
      case Id::matern2: return {0.0};
      case Id::bspline1: return {-1.0, 0.0, 1.0};
      case Id::bspline2: return {-1.5, -0.5, 0.5, 1.5};
      case Id::bspline3: return {-2.0, -1.0, 0.0, 1.0, 2.0};
      default: return {};
    }
  }

  /// Positive roots where g^{(j)} changes sign: |g^{(j)}|^p has a kink
  /// there for odd p, so integration panels must split at them too.
  /// (sinc_sq has infinitely many; its norms go through fixed-panel
  /// rules instead of kink-sensitive adaptive quadrature.)
  std::vector<double> derivative_sign_roots(int j) const {
    switch (id_) {
      case Id::gauss:
        switch (j) {
          case 2: return {1.0 / std::sqrt(2.0)};
          case 3: return {std::sqrt(1.5)};
          case 4: return {std::sqrt((3.0 - std::sqrt(6.0)) / 2.0),
                          std::sqrt((3.0 + std::sqrt(6.0)) / 2.0)};
          default: return {};
        }
      case Id::matern2:
        // g^{(j)}(x) = +-(x - (j - 1)) e^{-x} for x > 0, j >= 1.
        return (j >= 2 && j <= 4) ? std::vector<double>{static_cast<double>(j - 1)}
                                  : std::vector<double>{};
      case Id::bspline3:
        // On [0, 1]: g'' = 3x - 2 crosses zero at 2/3.
        return (j == 2) ? std::vector<double>{2.0 / 3.0} : std::vector<double>{};
      default:
        return {};
    }
  }

  /// Certified envelope on |g^{(j)}(x)| for x >= envelope_valid_from(j).
  double envelope(int j, double x) const {
    switch (decay()) {
      case DecayClass::compact: return x >= support_radius() ? 0.0 : 1.0;
      case DecayClass::gaussian:
        return 2.0 * std::pow(2.0 * x, j) * std::exp(-x * x);
      case DecayClass::exponential: return (2.0 + x) * std::exp(-x);
      case DecayClass::rational2: {
        static const double K[5] = {0.0, 2.0, 10.0, 48.0, 260.0};
        return (2.0 / (x * x) + K[j] / (x * x * x)) / M_PI;
      }
    }
    return 0.0;
  }

  double envelope_valid_from(int j) const {
    switch (decay()) {
      case DecayClass::compact: return support_radius();
      case DecayClass::gaussian: return static_cast<double>(j) + 1.0;
      case DecayClass::exponential: return 0.0;
      case DecayClass::rational2: return 1.0;
    }
    return 0.0;
  }

  /// Certified upper bound on the L2 norm of g outside [-T, T].
  double tail_l2(double T) const {
    if (!(T > 0.0)) throw BadParameter("tail_l2: T must be positive");
    switch (id_) {
      case Id::gauss:
        return std::sqrt(std::exp(-2.0 * T * T) / (2.0 * T));
      case Id::expabs:
        return std::exp(-T);
      case Id::matern2: {
        const double u = 1.0 + T;
        return std::sqrt(2.0 * std::exp(-2.0 * T) * (u * u / 2.0 + u / 2.0 + 0.25));
      }
      case Id::sinc_sq:
        return std::sqrt(8.0 / (3.0 * M_PI * M_PI * T * T * T));
      default:
        return (T >= support_radius()) ? 0.0 : l2_norm();
    }
  }

 private:
  static double gauss_deriv(int j, double x) {
    const double e = std::exp(-x * x);
    switch (j) {
      case 0: return e;
      case 1: return -2.0 * x * e;
      case 2: return (4.0 * x * x - 2.0) * e;
      case 3: return -(8.0 * x * x * x - 12.0 * x) * e;
      default: return (16.0 * x * x * x * x - 48.0 * x * x + 12.0) * e;
    }
  }

  static double expabs_deriv(int j, double x) {
    const double a = std::abs(x);
    const double e = std::exp(-a);
    if (j == 0) return e;
    return (x > 0.0) ? -e : (x < 0.0 ? e : 0.0);
  }

  static double matern2_deriv(int j, double x) {
    const double a = std::abs(x);
    const double s = (x > 0.0) ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    const double e = std::exp(-a);
    switch (j) {
      case 0: return (1.0 + a) * e;
      case 1: return -x * e;
      case 2: return (a - 1.0) * e;
      default: return s * (2.0 - a) * e;
    }
  }

  // sinc_sq(x) = (1 - cos x) / (pi x^2): Leibniz on (1 - cos x) * x^{-2}
  // away from the origin, power series inside |x| < 1/2.
  static double sincsq_deriv(int j, double x) {
    if (std::abs(x) < 0.5) {
      // g^{(j)} = (1/pi) sum_m (-1)^m (2m)!/(2m-j)! x^{2m-j} / (2m+2)!
      double acc = 0.0;
      for (int m = (j + 1) / 2; m <= 12; ++m) {
        double c = 1.0;
        for (int t = 0; t < j; ++t) c *= static_cast<double>(2 * m - t);
        if (c == 0.0) continue;
        double fact = 1.0;  // (2m+2)!
        for (int t = 2; t <= 2 * m + 2; ++t) fact *= static_cast<double>(t);
        const double term = c * std::pow(x, 2 * m - j) / fact;
        acc += (m % 2 ? -term : term);
      }
      return acc / M_PI;
    }
    // u = 1 - cos x, u^{(i)} = -cos(x + i pi/2) for i >= 1;
    // v = x^{-2},    v^{(m)} = (-1)^m (m+1)! x^{-(m+2)}.
    double acc = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= j; ++i) {
      const double u =
          (i == 0) ? 1.0 - std::cos(x) : -std::cos(x + 0.5 * M_PI * static_cast<double>(i));
      const int m = j - i;
      double fact = 1.0;
      for (int t = 2; t <= m + 1; ++t) fact *= static_cast<double>(t);
      const double v = ((m % 2) ? -1.0 : 1.0) * fact * std::pow(x, -(m + 2));
      acc += binom * u * v;
      binom *= static_cast<double>(j - i) / static_cast<double>(i + 1);
    }
    return acc / M_PI;
  }

  static double b1_deriv(int j, double x) {
    const double a = std::abs(x);
    if (a >= 1.0) return 0.0;
    if (j == 0) return 1.0 - a;
    return (x > 0.0) ? -1.0 : (x < 0.0 ? 1.0 : 0.0);
  }

  static double b2_deriv(int j, double x) {
    const double a = std::abs(x);
    const double s = (x >= 0.0) ? 1.0 : -1.0;
    if (a >= 1.5) return 0.0;
    if (a <= 0.5) {
      switch (j) {
        case 0: return 0.75 - x * x;
        case 1: return -2.0 * x;
        default: return -2.0;
      }
    }
    const double t = 1.5 - a;
    switch (j) {
      case 0: return 0.5 * t * t;
      case 1: return -s * t;
      default: return 1.0;
    }
  }

  static double b3_deriv(int j, double x) {
    const double a = std::abs(x);
    const double s = (x >= 0.0) ? 1.0 : -1.0;
    if (a >= 2.0) return 0.0;
    if (a <= 1.0) {
      switch (j) {
        case 0: return 2.0 / 3.0 - x * x + a * a * a / 2.0;
        case 1: return -2.0 * x + 1.5 * x * a;
        case 2: return -2.0 + 3.0 * a;
        default: return 3.0 * s;
      }
    }
    const double t = 2.0 - a;
    switch (j) {
      case 0: return t * t * t / 6.0;
      case 1: return -s * t * t / 2.0;
      case 2: return t;
      default: return -s;
    }
  }

  Id id_;
};

inline const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {
      "gauss", "expabs", "matern2", "sinc_sq", "bspline1", "bspline2", "bspline3"};
  return ids;
}

inline TestFunction catalog(const std::string& id) {
  if (id == "gauss") return TestFunction(TestFunction::Id::gauss);
  if (id == "expabs") return TestFunction(TestFunction::Id::expabs);
  if (id == "matern2") return TestFunction(TestFunction::Id::matern2);
  if (id == "sinc_sq") return TestFunction(TestFunction::Id::sinc_sq);
  if (id == "bspline1") return TestFunction(TestFunction::Id::bspline1);
  if (id == "bspline2") return TestFunction(TestFunction::Id::bspline2);
  if (id == "bspline3") return TestFunction(TestFunction::Id::bspline3);
  throw UnknownName("unknown catalog function: " + id);
}

}  // namespace kerlab

#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "kerlab/catalog.hpp"
#include "kerlab/collocate.hpp"
#include "kerlab/sites.hpp"

using namespace kerlab;

TEST_CASE("three-site system matches the hand solve", "[collocate]") {
  // Sites (-1, 0, 1), unit gaussian: the matrix is the symmetric
  // Toeplitz [[1, a, b], [a, 1, a], [b, a, 1]] with a = e^{-1},
  // b = e^{-4}.  For data (0, 1, 0) symmetry gives coefficients
  // (t, s, t) with s = (1+b)/(1+b-2a^2) and t = -s a/(1+b).
  const SiteFamily fam = make_sites(SiteRule::zero, 3);
  const auto res = collocate_gaussian(fam, 1.0, {0.0, 1.0, 0.0});
  const double a = std::exp(-1.0), b = std::exp(-4.0);
  const double s = (1.0 + b) / (1.0 + b - 2.0 * a * a);
  const double t = -s * a / (1.0 + b);
  REQUIRE(res.coeffs.size() == 3);
  REQUIRE(res.coeffs[0] == Catch::Approx(t).epsilon(1e-12));
  REQUIRE(res.coeffs[1] == Catch::Approx(s).epsilon(1e-12));
  REQUIRE(res.coeffs[2] == Catch::Approx(t).epsilon(1e-12));
  REQUIRE(res.coeffs[1] > 1.0);
  REQUIRE(res.coeffs[0] < 0.0);
  REQUIRE(res.residual_inf <= 1e-14);
  REQUIRE(res.cond_est >= 1.0);
  REQUIRE_FALSE(res.ill_conditioned);

  // The interpolant reproduces the data: value 1 at the center site.
  const auto F = gaussian_interpolant(fam, 1.0, res);
  REQUIRE(F(0.0) == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(F(1.0) == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(F(-1.0) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("degenerate systems", "[collocate]") {
  // Single site: phi(0) = 1, so the coefficient equals the sample.
  const SiteFamily one = make_sites(SiteRule::zero, 1);
  const auto res1 = collocate_gaussian(one, 1.0, {1.0});
  REQUIRE(res1.coeffs.size() == 1);
  REQUIRE(res1.coeffs[0] == Catch::Approx(1.0).margin(1e-15));

  // All-zero data: zero coefficients and zero residual.
  const SiteFamily fam = make_sites(SiteRule::sinusoidal, 9, 0.2);
  const auto res0 = collocate_gaussian(fam, 0.5, std::vector<double>(9, 0.0));
  for (Eigen::Index i = 0; i < res0.coeffs.size(); ++i)
    REQUIRE(res0.coeffs[i] == 0.0);
  REQUIRE(res0.residual_inf == 0.0);
  const auto F0 = gaussian_interpolant(fam, 0.5, res0, 1.0);
  REQUIRE(F0(0.37) == 0.0);
}

TEST_CASE("even data on symmetric sites yields symmetric coefficients",
          "[collocate]") {
  // Sinusoidal perturbations are odd in the index, so the family is
  // symmetric about the origin; even samples must produce coefficients
  // invariant under the reflection j -> -j.
  const SiteFamily fam = make_sites(SiteRule::sinusoidal, 33, 0.2);
  const TestFunction g = catalog("gauss");
  std::vector<double> y(fam.x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = g.value(0.5 * fam.x[i]);
  const auto res = collocate_gaussian(fam, 0.5, y);
  const auto n = res.coeffs.size();
  for (Eigen::Index i = 0; i < n; ++i)
    REQUIRE(res.coeffs[i] == Catch::Approx(res.coeffs[n - 1 - i]).margin(1e-12));
}

TEST_CASE("direct and scaled constructions coincide", "[collocate]") {
  // Interpolating g at the scaled sites h x_j with a unit-width kernel
  // equals solving at the unscaled sites with kernel width h^2 and data
  // h g(h x_j), then dividing the coefficients by h: the two matrices
  // agree entrywise, e^{-h^2 (x_i - x_j)^2} = e^{-(h x_i - h x_j)^2}.
  const SiteFamily fam = make_sites(SiteRule::zero, 33);
  const TestFunction g = catalog("gauss");
  const double h = 0.5;
  std::vector<double> direct_y(fam.x.size()), scaled_y(fam.x.size());
  for (std::size_t i = 0; i < fam.x.size(); ++i) {
    direct_y[i] = g.value(h * fam.x[i]);
    scaled_y[i] = h * direct_y[i];
  }
  const auto direct = collocate_gaussian(fam, h, direct_y, 1.0);
  const auto scaled = collocate_gaussian(fam, 1.0, scaled_y, h * h);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < direct.coeffs.size(); ++i)
    worst = std::max(worst, std::abs(direct.coeffs[i] - scaled.coeffs[i] / h));
  REQUIRE(worst <= 1e-10);
}

TEST_CASE("solves are deterministic", "[collocate]") {
  const SiteFamily fam = make_sites(SiteRule::seeded_uniform, 21, 0.2, 11);
  std::vector<double> y(fam.x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::sin(fam.x[i]);
  const auto r1 = collocate_gaussian(fam, 0.5, y);
  const auto r2 = collocate_gaussian(fam, 0.5, y);
  for (Eigen::Index i = 0; i < r1.coeffs.size(); ++i)
    REQUIRE(r1.coeffs[i] == r2.coeffs[i]);
  REQUIRE(r1.cond_est == r2.cond_est);
}

TEST_CASE("interpolation condition at the sites", "[collocate]") {
  const SiteFamily fam = make_sites(SiteRule::sinusoidal, 33, 0.2);
  const TestFunction g = catalog("bspline3");
  const double h = 0.5;
  std::vector<double> y(fam.x.size());
  double ymax = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = g.value(h * fam.x[i]);
    ymax = std::max(ymax, std::abs(y[i]));
  }
  const auto res = collocate_gaussian(fam, h, y);
  REQUIRE(res.cond_est <= 1e12);
  const auto F = gaussian_interpolant(fam, h, res);
  double worst = 0.0;
  for (std::size_t i = 0; i < fam.x.size(); ++i)
    worst = std::max(worst, std::abs(F(h * fam.x[i]) - y[i]));
  REQUIRE(worst <= 1e-8 * (1.0 + ymax));
}

TEST_CASE("flat-limit systems are flagged, not hidden", "[collocate]") {
  // Crowding the scaled sites under a fixed-width kernel drives the
  // conditioning through the trust threshold; the solve still returns
  // and carries the flag.
  const SiteFamily fam = make_sites(SiteRule::zero, 17);
  std::vector<double> y(fam.x.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = std::exp(-0.25 * fam.x[i] * fam.x[i]);
  const auto res = collocate_gaussian(fam, 0.125, y);
  REQUIRE(res.ill_conditioned);
  REQUIRE(res.cond_est > 1e14);
  REQUIRE(res.coeffs.allFinite());
}

TEST_CASE("window cap and input validation", "[collocate]") {
  const SiteFamily fam = make_sites(SiteRule::zero, 11);
  std::vector<double> y(fam.x.size(), 1.0);
  SolveOptions small;
  small.dense_cap = 8;
  REQUIRE_THROWS_AS(collocate_gaussian(fam, 1.0, y, 1.0, small), WindowTooLarge);
  REQUIRE_THROWS_AS(collocate_gaussian(fam, 0.0, y), BadH);
  REQUIRE_THROWS_AS(collocate_gaussian(fam, -1.0, y), BadH);
  REQUIRE_THROWS_AS(collocate_gaussian(fam, 1.0, y, 0.0), BadParameter);
  REQUIRE_THROWS_AS(collocate_gaussian(fam, 1.0, std::vector<double>(4, 1.0)),
                    BadParameter);
}

TEST_CASE("closed-form transform of the interpolant", "[collocate]") {
  // A single unit coefficient at the origin is the kernel itself.
  const SiteFamily one = make_sites(SiteRule::zero, 1);
  const auto res = collocate_gaussian(one, 1.0, {1.0});
  const auto F = gaussian_interpolant(one, 1.0, res);
  for (double xi : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    const std::complex<double> v = F.fourier(xi);
    REQUIRE(v.real() ==
            Catch::Approx(std::sqrt(M_PI) * std::exp(-xi * xi / 4.0)).epsilon(1e-14));
    REQUIRE(v.imag() == Catch::Approx(0.0).margin(1e-16));
  }

  // Shifting the center multiplies the transform by a unimodular phase.
  GaussianInterpolant shifted = F;
  shifted.centers = {1.5};
  const double xi = 0.75;
  const std::complex<double> phase = std::exp(std::complex<double>(0.0, -1.5 * xi));
  const std::complex<double> expect = F.fourier(xi) * phase;
  REQUIRE(std::abs(shifted.fourier(xi) - expect) <= 1e-14);

  // Zero coefficients transform to zero.
  GaussianInterpolant zero = F;
  zero.coeffs.setZero();
  REQUIRE(std::abs(zero.fourier(1.0)) == 0.0);
}

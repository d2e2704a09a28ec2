#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "kerlab/bandlimited.hpp"
#include "kerlab/catalog.hpp"
#include "kerlab/harness.hpp"
#include "kerlab/norms.hpp"
#include "kerlab/sites.hpp"

using namespace kerlab;

namespace {

SiteFamily covering_family(double h, double reach, double amplitude = 0.2) {
  const int m = static_cast<int>(
      std::ceil(reach / (h * rule_min_gap(SiteRule::sinusoidal, amplitude))));
  return make_sites(SiteRule::sinusoidal, 2 * m + 1, amplitude);
}

}  // namespace

TEST_CASE("integer-lattice sinc system is the identity", "[bandlimited]") {
  const SiteFamily lat = make_sites(SiteRule::zero, 33);
  const TestFunction g = catalog("gauss");
  std::vector<double> y(lat.x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = g.value(lat.x[i]);
  const auto res = sinc_collocate(lat, y);
  // sincpi is exact at integers, so the matrix is exactly the identity
  // and the cardinal-series coefficients are exactly the samples.
  for (Eigen::Index i = 0; i < res.coeffs.size(); ++i)
    REQUIRE(res.coeffs[i] == y[static_cast<std::size_t>(i)]);
  REQUIRE(res.residual_inf == 0.0);
}

TEST_CASE("cardinal function of the lattice has unit norm", "[bandlimited]") {
  const SiteFamily lat = make_sites(SiteRule::zero, 65);
  std::vector<double> e0(lat.x.size(), 0.0);
  e0[lat.x.size() / 2] = 1.0;  // the center site is the origin
  const auto res = sinc_collocate(lat, e0);
  const auto F = sinc_interpolant(lat, 1.0, res);
  // F is sin(pi x)/(pi x): transform is the indicator of [-pi, pi], so
  // ||F|| = 1 and |F|_{W_2^1} = pi/sqrt(3).
  REQUIRE(pw_seminorm(F, 0) == Catch::Approx(1.0).epsilon(1e-12));
  REQUIRE(pw_seminorm(F, 1) == Catch::Approx(M_PI / std::sqrt(3.0)).epsilon(1e-12));
  REQUIRE(bernstein_quotient(F) == Catch::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  REQUIRE(F(0.0) == 1.0);
  REQUIRE(F(3.0) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("zero samples give the zero interpolant", "[bandlimited]") {
  const SiteFamily fam = make_sites(SiteRule::sinusoidal, 17, 0.2);
  const auto res = sinc_collocate(fam, std::vector<double>(17, 0.0));
  const auto F = sinc_interpolant(fam, 0.5, res);
  REQUIRE(F(0.3) == 0.0);
  REQUIRE(pw_seminorm(F, 0) == 0.0);
  REQUIRE(pw_seminorm(F, 2) == 0.0);
}

TEST_CASE("perturbed sinc systems stay well conditioned", "[bandlimited]") {
  const SiteFamily fam = make_sites(SiteRule::sinusoidal, 129, 0.2);
  const TestFunction g = catalog("gauss");
  const double h = 0.5;
  std::vector<double> y(fam.x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = g.value(h * fam.x[i]);
  const auto res = sinc_collocate(fam, y);
  REQUIRE(res.cond_est <= 1e6);
  REQUIRE(res.residual_inf <= 1e-8);
  REQUIRE_FALSE(res.ill_conditioned);
}

TEST_CASE("transform vanishes outside the band and Parseval holds inside",
          "[bandlimited]") {
  const SiteFamily fam = covering_family(0.5, 12.0);
  const TestFunction g = catalog("bspline3");
  std::vector<double> y(fam.x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = g.value(0.5 * fam.x[i]);
  const auto F = sinc_interpolant(fam, 0.5, sinc_collocate(fam, y));

  REQUIRE(F.bandwidth() == Catch::Approx(2.0 * M_PI));
  REQUIRE(std::abs(F.fourier(2.0 * M_PI + 0.1)) == 0.0);
  REQUIRE(std::abs(F.fourier(-7.0)) == 0.0);
  REQUIRE(std::abs(F.fourier(1.0)) > 0.0);

  // Parseval: the band-side L2 norm equals the spatial one.  The sinc
  // tails decay fast enough here that a +-50 window puts the remainder
  // well below the tolerance.
  auto f2 = [&](double x) {
    const double v = F(x);
    return v * v;
  };
  const double spatial = std::sqrt(simpson(f2, -50.0, 50.0, 6400));
  REQUIRE(pw_seminorm(F, 0) == Catch::Approx(spatial).epsilon(1e-6));
}

TEST_CASE("a bandlimited target is reproduced to the window floor",
          "[bandlimited]") {
  // sinc_sq has band [-1, 1], inside every interpolation band pi/h for
  // h <= 1, so the interpolant reproduces it up to window truncation.
  const SiteFamily fam = make_sites(SiteRule::sinusoidal, 257, 0.2);
  const TestFunction g = catalog("sinc_sq");
  std::vector<double> y(fam.x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = g.value(fam.x[i]);
  const auto F = sinc_interpolant(fam, 1.0, sinc_collocate(fam, y));
  REQUIRE(l2_error(F, g, 4.0) <= 1e-4);
}

TEST_CASE("Bernstein quotient never exceeds one", "[bandlimited]") {
  const TestFunction g = catalog("bspline3");
  for (double h : {1.0, 0.5, 0.25}) {
    const SiteFamily fam = covering_family(h, 12.0);
    std::vector<double> y(fam.x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = g.value(h * fam.x[i]);
    const auto F = sinc_interpolant(fam, h, sinc_collocate(fam, y));
    REQUIRE(bernstein_quotient(F) <= 1.0 + 1e-9);
  }
}

TEST_CASE("Jackson-normalized error stays in a bounded band", "[bandlimited]") {
  SweepConfig cfg;  // defaults: bspline3, k = 3, sinusoidal amplitude 0.2
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  double prev_err = 0.0;
  for (double h : {1.0, 0.5, 0.25, 0.125}) {
    const auto rep = bernstein_jackson_check(cfg, h);
    REQUIRE(rep.bernstein_lhs <= 1.0 + 1e-9);
    REQUIRE(rep.condition <= 1e6);
    REQUIRE(rep.seminorm_g == Catch::Approx(std::sqrt(20.0)).epsilon(1e-9));
    lo = std::min(lo, rep.ratio_jackson);
    hi = std::max(hi, rep.ratio_jackson);
    if (prev_err > 0.0) {
      // Order-3 target: halving cuts the error by roughly 8; the
      // factor-4 band on the normalized ratio brackets the drop.
      const double drop = prev_err / rep.jackson_lhs;
      REQUIRE(drop >= 4.0);
      REQUIRE(drop <= 32.0);
    }
    prev_err = rep.jackson_lhs;
  }
  REQUIRE(hi / lo <= 4.0);
}

TEST_CASE("normalization guards", "[bandlimited]") {
  REQUIRE_THROWS_AS(jackson_ratio(0.1, 0.0, 3, 1.0), BadParameter);
  REQUIRE_THROWS_AS(jackson_ratio(0.1, M_PI, 3, 0.0), BadParameter);
  const SiteFamily fam = make_sites(SiteRule::zero, 5);
  REQUIRE_THROWS_AS(sinc_collocate(fam, std::vector<double>(3, 1.0)), BadParameter);
  const auto res = sinc_collocate(fam, std::vector<double>(5, 1.0));
  REQUIRE_THROWS_AS(sinc_interpolant(fam, 0.0, res), BadH);
  SolveOptions small;
  small.dense_cap = 3;
  REQUIRE_THROWS_AS(sinc_collocate(fam, std::vector<double>(5, 1.0), small),
                    WindowTooLarge);
}

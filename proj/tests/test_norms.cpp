#include <catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "kerlab/norms.hpp"
#include "kerlab/sites.hpp"

using namespace kerlab;

namespace {

// Closed-form W_2^k seminorms, derived independently of the library's
// quadrature: for gauss, (pi/2)^{1/4} sqrt((2k-1)!!); for the splines
// and the squared cardinal kernel, elementary piecewise integrals.
struct SeminormOracle {
  const char* id;
  int k;
  double value;
};

const std::vector<SeminormOracle>& seminorm_oracles() {
  static const std::vector<SeminormOracle> table = {
      {"gauss", 0, std::pow(M_PI / 2.0, 0.25)},
      {"gauss", 1, std::pow(M_PI / 2.0, 0.25)},
      {"gauss", 2, std::pow(M_PI / 2.0, 0.25) * std::sqrt(3.0)},
      {"gauss", 3, std::pow(M_PI / 2.0, 0.25) * std::sqrt(15.0)},
      {"expabs", 1, 1.0},
      {"matern2", 1, std::sqrt(0.5)},
      {"matern2", 2, std::sqrt(0.5)},
      {"matern2", 3, std::sqrt(2.5)},
      {"sinc_sq", 1, std::sqrt(1.0 / (30.0 * M_PI))},
      {"sinc_sq", 2, std::sqrt(1.0 / (105.0 * M_PI))},
      {"sinc_sq", 3, std::sqrt(1.0 / (252.0 * M_PI))},
      {"bspline1", 1, std::sqrt(2.0)},
      {"bspline2", 1, 1.0},
      {"bspline2", 2, std::sqrt(6.0)},
      {"bspline3", 1, std::sqrt(2.0 / 3.0)},
      {"bspline3", 2, std::sqrt(8.0 / 3.0)},
      {"bspline3", 3, std::sqrt(20.0)},
  };
  return table;
}

}  // namespace

TEST_CASE("frequency-route seminorms hit the closed forms", "[norms]") {
  for (const auto& o : seminorm_oracles()) {
    INFO(o.id << " k=" << o.k);
    REQUIRE(sobolev_seminorm(catalog(o.id), o.k) ==
            Catch::Approx(o.value).epsilon(1e-9));
  }
}

TEST_CASE("spatial-route seminorms agree with the frequency route", "[norms]") {
  for (const auto& o : seminorm_oracles()) {
    if (o.k < 1) continue;  // the spatial route integrates a derivative
    INFO(o.id << " k=" << o.k);
    const double space = spatial_seminorm(catalog(o.id), o.k);
    REQUIRE(space == Catch::Approx(o.value).epsilon(1e-9));
    const double freq = sobolev_seminorm(catalog(o.id), o.k);
    REQUIRE(space == Catch::Approx(freq).epsilon(1e-6));
  }
}

TEST_CASE("seminorms reject orders beyond the smoothness class", "[norms]") {
  REQUIRE_THROWS_AS(sobolev_seminorm(catalog("expabs"), 2), SmoothnessExceeded);
  REQUIRE_THROWS_AS(spatial_seminorm(catalog("bspline1"), 2), SmoothnessExceeded);
  REQUIRE_THROWS_AS(sobolev_seminorm(catalog("bspline2"), 3), SmoothnessExceeded);
}

TEST_CASE("windowed L2 error", "[norms]") {
  const TestFunction g = catalog("gauss");
  REQUIRE(l2_error(g, g, 4.0) <= 1e-15);
  // Against zero the error is the norm itself once the window holds
  // essentially all the mass.
  const double nrm = l2_error([](double) { return 0.0; }, g, 8.0);
  REQUIRE(nrm == Catch::Approx(std::pow(M_PI / 2.0, 0.25)).margin(1e-10));

  // Independent trapezoid oracle on a dense grid.
  const TestFunction f = catalog("bspline3");
  const TestFunction t = catalog("bspline1");
  const double T = 4.0;
  const std::size_t n = 1u << 20;
  const double dx = 2.0 * T / static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = -T + dx * static_cast<double>(i);
    const double d = f.value(x) - t.value(x);
    acc += (i == 0 || i == n) ? 0.5 * d * d : d * d;
  }
  const double trap = std::sqrt(acc * dx);
  REQUIRE(l2_error(f, t, T) == Catch::Approx(trap).epsilon(1e-8));

  REQUIRE_THROWS_AS(l2_error(g, g, 0.0), BadParameter);
  REQUIRE_THROWS_AS(l2_error(g, g, 4.0, 2), BadParameter);
}

TEST_CASE("L2 error report carries the target's tail certificate", "[norms]") {
  const TestFunction g = catalog("expabs");
  const auto rep = l2_error_report([](double) { return 0.0; }, g, 4.0);
  REQUIRE(rep.value > 0.0);
  REQUIRE(rep.g_tail == g.tail_l2(4.0));
}

TEST_CASE("divided differences of polynomials", "[norms]") {
  const SiteFamily lat = make_sites(SiteRule::zero, 11);

  // Order 1 on a linear function: all ones.
  std::vector<double> lin(lat.x.size());
  for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = 3.0 * lat.x[i] - 2.0;
  for (double v : divided_differences(lat, 1.0, 1, lin))
    REQUIRE(v == Catch::Approx(3.0).margin(1e-13));

  // x^2 on the integer lattice: first differences 2j+1, second all 1.
  std::vector<double> sq(lat.x.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = lat.x[i] * lat.x[i];
  const auto d1 = divided_differences(lat, 1.0, 1, sq);
  for (std::size_t i = 0; i < d1.size(); ++i)
    REQUIRE(d1[i] == Catch::Approx(2.0 * static_cast<double>(lat.index[i]) + 1.0)
                         .margin(1e-12));
  for (double v : divided_differences(lat, 1.0, 2, sq))
    REQUIRE(v == Catch::Approx(1.0).margin(1e-13));

  // The k-th difference of x^k is identically 1 at any admissible
  // sites and h; one order below a cubic it annihilates quadratics.
  const SiteFamily per = make_sites(SiteRule::sinusoidal, 17, 0.2);
  const double h = 0.5;
  std::vector<double> cube(per.x.size());
  for (std::size_t i = 0; i < cube.size(); ++i) {
    const double x = h * per.x[i];
    cube[i] = x * x * x;
  }
  for (double v : divided_differences(per, h, 3, cube))
    REQUIRE(v == Catch::Approx(1.0).margin(1e-10));
  std::vector<double> quad(per.x.size());
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const double x = h * per.x[i];
    quad[i] = 7.0 * x * x - x + 4.0;
  }
  for (double v : divided_differences(per, h, 3, quad))
    REQUIRE(v == Catch::Approx(0.0).margin(1e-8));
}

TEST_CASE("divided difference input validation", "[norms]") {
  const SiteFamily lat = make_sites(SiteRule::zero, 5);
  const std::vector<double> y(5, 1.0);
  REQUIRE_THROWS_AS(divided_differences(lat, 1.0, 0, y), BadParameter);
  REQUIRE_THROWS_AS(divided_differences(lat, 1.0, 5, y), WindowTooSmall);
  REQUIRE_THROWS_AS(divided_differences(lat, 1.0, 7, y), WindowTooSmall);
  REQUIRE_THROWS_AS(divided_differences(lat, 0.0, 1, y), BadH);
  REQUIRE_THROWS_AS(divided_differences(lat, -0.5, 1, y), BadH);
  const std::vector<double> short_y(4, 1.0);
  REQUIRE_THROWS_AS(divided_differences(lat, 1.0, 1, short_y), BadParameter);
}

TEST_CASE("Lp norms of catalog members", "[norms]") {
  REQUIRE(lp_norm(catalog("expabs"), 0, 1.0) == Catch::Approx(2.0).epsilon(1e-9));
  REQUIRE(lp_norm(catalog("expabs"), 1, 1.0) == Catch::Approx(2.0).epsilon(1e-9));
  REQUIRE(lp_norm(catalog("gauss"), 0, 2.0) ==
          Catch::Approx(std::pow(M_PI / 2.0, 0.25)).epsilon(1e-9));
  REQUIRE(lp_norm(catalog("gauss"), 1, 1.0) == Catch::Approx(2.0).epsilon(1e-9));
  REQUIRE(lp_norm(catalog("bspline1"), 1, 2.0) ==
          Catch::Approx(std::sqrt(2.0)).epsilon(1e-9));
  REQUIRE(lp_norm(catalog("bspline1"), 1, 1.0) == Catch::Approx(2.0).epsilon(1e-9));
  // ||gauss||_{L4} = (Int e^{-4x^2})^{1/4} = (sqrt(pi)/2)^{1/4}.
  REQUIRE(lp_norm(catalog("gauss"), 0, 4.0) ==
          Catch::Approx(std::pow(std::sqrt(M_PI) / 2.0, 0.25)).epsilon(1e-9));
  REQUIRE_THROWS_AS(lp_norm(catalog("gauss"), 0, 0.5), BadParameter);
}

TEST_CASE("divided-difference bound holds with the explicit constant", "[norms]") {
  // Unit-lattice hat data makes the inequality sharp: both sides are 2.
  const SiteFamily lat = make_sites(SiteRule::zero, 17);
  const auto sharp = divided_bound_check(catalog("bspline1"), lat, 1.0, 1, 1.0);
  REQUIRE(sharp.lhs == Catch::Approx(2.0).margin(1e-12));
  REQUIRE(sharp.rhs == Catch::Approx(2.0).epsilon(1e-9));
  REQUIRE(sharp.ratio == Catch::Approx(1.0).epsilon(1e-9));

  const auto g1 = divided_bound_check(catalog("gauss"), make_sites(SiteRule::zero, 33),
                                      0.5, 1, 2.0);
  REQUIRE(g1.ratio > 0.0);
  REQUIRE(g1.lhs <= g1.rhs * (1.0 + 1e-9));

  const SiteFamily per = make_sites(SiteRule::sinusoidal, 65, 0.2);
  for (double h : {1.0, 0.5, 0.25}) {
    const auto chk = divided_bound_check(catalog("bspline3"), per, h, 3, 2.0);
    REQUIRE(chk.lhs <= chk.rhs * (1.0 + 1e-9));
    // The right side is exactly the advertised constant times the norm.
    const double expect = (1.0 / 2.0) * std::sqrt(1.0 / (h * per.min_gap())) *
                          lp_norm(catalog("bspline3"), 3, 2.0);
    REQUIRE(chk.rhs == Catch::Approx(expect).epsilon(1e-12));
  }
  REQUIRE_THROWS_AS(
      divided_bound_check(catalog("gauss"), lat, 1.0, 1, 0.9), BadParameter);
}

TEST_CASE("sampling bound holds with its two explicit coefficients", "[norms]") {
  // gauss on the integer lattice at p = 2: both sides have elementary
  // independent forms.
  const SiteFamily lat = make_sites(SiteRule::zero, 41);
  const auto chk = sample_bound_check(catalog("gauss"), lat, 1.0, 2.0);
  double lhs2 = 0.0;
  for (long j = -20; j <= 20; ++j)
    lhs2 += std::exp(-2.0 * static_cast<double>(j * j));
  REQUIRE(chk.lhs == Catch::Approx(std::sqrt(lhs2)).epsilon(1e-12));
  const double gnorm = std::pow(M_PI / 2.0, 0.25);  // ||g||_2 = ||g'||_2 here
  const double rhs = std::sqrt(2.0) * (std::sqrt(1.5) + std::sqrt(2.0 / 3.0)) * gnorm;
  REQUIRE(chk.rhs == Catch::Approx(rhs).epsilon(1e-9));
  REQUIRE(chk.lhs <= chk.rhs * (1.0 + 1e-9));

  // expabs at p = 1, q = 1: lattice sum is geometric, the bound is
  // (3/2) ||g||_1 + ||g'||_1 = 5.
  const auto e1 = sample_bound_check(catalog("expabs"), lat, 1.0, 1.0);
  const double geo = (1.0 + std::exp(-1.0)) / (1.0 - std::exp(-1.0));
  REQUIRE(e1.lhs == Catch::Approx(geo).epsilon(1e-8));
  REQUIRE(e1.rhs == Catch::Approx(5.0).epsilon(1e-9));
  REQUIRE(e1.lhs <= e1.rhs * (1.0 + 1e-9));

  REQUIRE_THROWS_AS(sample_bound_check(catalog("gauss"), lat, 1.0, 0.5), BadParameter);
  REQUIRE_THROWS_AS(sample_bound_check(catalog("gauss"), lat, 0.0, 2.0), BadH);
}

TEST_CASE("grid seminorm matches the closed form on decaying samples", "[norms]") {
  const double L = 16.0;
  const std::size_t n = 1u << 14;
  const TestFunction g = catalog("gauss");
  std::vector<double> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -L + 2.0 * L * static_cast<double>(i) / static_cast<double>(n);
    samples[i] = g.value(x);
  }
  const auto k0 = grid_seminorm(samples, L, 0);
  REQUIRE(k0.value == Catch::Approx(std::pow(M_PI / 2.0, 0.25)).epsilon(1e-6));
  const auto k1 = grid_seminorm(samples, L, 1);
  REQUIRE(k1.value == Catch::Approx(std::pow(M_PI / 2.0, 0.25)).epsilon(1e-6));
  REQUIRE(k1.leak <= 1e-10);

  const std::vector<double> zeros(1024, 0.0);
  const auto z = grid_seminorm(zeros, 4.0, 1);
  REQUIRE(z.value == 0.0);
  REQUIRE(z.leak == 0.0);
}

TEST_CASE("grid seminorm flags windows that truncate the function", "[norms]") {
  const std::vector<double> ones(1024, 1.0);
  REQUIRE_THROWS_AS(grid_seminorm(ones, 4.0, 1), BoundaryLeakage);
  const auto rec = grid_seminorm(ones, 4.0, 1, 1e-3, 1.0 / 16.0, false);
  REQUIRE(rec.leak == 1.0);

  const std::vector<double> ok(1024, 0.0);
  REQUIRE_THROWS_AS(grid_seminorm(std::vector<double>(1000, 0.0), 4.0, 1),
                    BadParameter);
  REQUIRE_THROWS_AS(grid_seminorm(std::vector<double>(8, 0.0), 4.0, 1), BadParameter);
  REQUIRE_THROWS_AS(grid_seminorm(ok, 0.0, 1), BadParameter);
  REQUIRE_THROWS_AS(grid_seminorm(ok, 4.0, -1), BadParameter);
}

TEST_CASE("divided differences satisfy the mean-value bracket", "[norms]") {
  const SiteFamily per = make_sites(SiteRule::sinusoidal, 33, 0.2);
  REQUIRE(mean_value_excess(catalog("gauss"), per, 0.5, 2) <= 1e-9);
  REQUIRE(mean_value_excess(catalog("gauss"), per, 0.25, 3) <= 1e-9);
  REQUIRE(mean_value_excess(catalog("matern2"), per, 0.5, 2) <= 1e-9);
  REQUIRE(mean_value_excess(catalog("bspline3"), per, 0.5, 3) <= 1e-9);
}

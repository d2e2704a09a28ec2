#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "kerlab/catalog.hpp"
#include "kerlab/quadrature.hpp"

using namespace kerlab;

TEST_CASE("catalog lookup and identifiers", "[catalog]") {
  REQUIRE(catalog_ids().size() == 7);
  for (const auto& id : catalog_ids()) {
    const TestFunction g = catalog(id);
    REQUIRE(g.name() == id);
  }
  REQUIRE_THROWS_AS(catalog("witch_hat"), UnknownName);
}

TEST_CASE("central values and smoothness classes", "[catalog]") {
  REQUIRE(catalog("gauss").value(0.0) == 1.0);
  REQUIRE(catalog("expabs").value(0.0) == 1.0);
  REQUIRE(catalog("matern2").value(0.0) == 1.0);
  REQUIRE(catalog("sinc_sq").value(0.0) ==
          Catch::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));
  REQUIRE(catalog("bspline1").value(0.0) == 1.0);
  REQUIRE(catalog("bspline2").value(0.0) == 0.75);
  REQUIRE(catalog("bspline3").value(0.0) == Catch::Approx(2.0 / 3.0).epsilon(1e-15));

  REQUIRE(catalog("expabs").k_max() == 1);
  REQUIRE(catalog("matern2").k_max() == 3);
  REQUIRE(catalog("bspline1").k_max() == 1);
  REQUIRE(catalog("bspline2").k_max() == 2);
  REQUIRE(catalog("bspline3").k_max() == 3);
  REQUIRE(catalog("gauss").k_max() >= 4);
  REQUIRE(catalog("sinc_sq").k_max() >= 4);
}

TEST_CASE("members are even functions", "[catalog]") {
  for (const auto& id : catalog_ids()) {
    const TestFunction g = catalog(id);
    for (double x : {0.25, 0.5, 0.75, 1.25, 1.9, 3.0})
      REQUIRE(g.value(x) == Catch::Approx(g.value(-x)).margin(1e-15));
  }
}

TEST_CASE("derivative evaluators exceed smoothness loudly", "[catalog]") {
  REQUIRE_THROWS_AS(catalog("expabs").derivative(2, 0.5), SmoothnessExceeded);
  REQUIRE_THROWS_AS(catalog("bspline1").derivative(2, 0.5), SmoothnessExceeded);
  REQUIRE_THROWS_AS(catalog("bspline2").derivative(3, 0.5), SmoothnessExceeded);
  REQUIRE_THROWS_AS(catalog("matern2").derivative(4, 0.5), SmoothnessExceeded);
  REQUIRE_THROWS_AS(catalog("gauss").derivative(5, 0.5), SmoothnessExceeded);
  REQUIRE_THROWS_AS(catalog("gauss").derivative(-1, 0.5), SmoothnessExceeded);
}

TEST_CASE("derivatives agree with finite differences of the level below",
          "[catalog]") {
  // Probe points chosen away from every knot and sign root.
  const std::vector<double> probes = {0.23, 0.81, 1.37, 1.83};
  const double step = 1e-5;
  for (const auto& id : catalog_ids()) {
    const TestFunction g = catalog(id);
    const int jtop = std::min(g.k_max(), 4);
    for (int j = 1; j <= jtop; ++j) {
      for (double x : probes) {
        // Keep the stencil inside one smooth piece.
        bool near_knot = false;
        for (double b : g.breakpoints()) near_knot |= std::abs(x - b) < 10.0 * step;
        if (near_knot) continue;
        const double fd =
            (g.derivative(j - 1, x + step) - g.derivative(j - 1, x - step)) /
            (2.0 * step);
        const double ex = g.derivative(j, x);
        REQUIRE(fd == Catch::Approx(ex).margin(1e-6 * std::max(1.0, std::abs(ex))));
      }
    }
  }
}

TEST_CASE("closed-form transforms match direct cosine quadrature", "[catalog]") {
  // g is even, so its transform is 2 Int_0^inf g(x) cos(xi x) dx; the
  // exponential-decay members are integrated over a window that buries
  // the tail below the comparison tolerance.
  for (const char* id : {"gauss", "expabs", "matern2"}) {
    const TestFunction g = catalog(id);
    for (double xi : {0.0, 0.5, 1.0, 2.0}) {
      const double quad = 2.0 * gl32_panels(
                                    [&](double x) { return g.value(x) * std::cos(xi * x); },
                                    0.0, 42.0, 0.25);
      REQUIRE(quad == Catch::Approx(g.fourier(xi)).epsilon(1e-8));
    }
  }
  // Compact members integrate exactly over their support.
  for (const char* id : {"bspline1", "bspline2", "bspline3"}) {
    const TestFunction g = catalog(id);
    for (double xi : {0.0, 0.5, 1.0, 3.0}) {
      const double quad = 2.0 * gl32_panels(
                                    [&](double x) { return g.value(x) * std::cos(xi * x); },
                                    0.0, 2.0, 0.25);
      REQUIRE(quad == Catch::Approx(g.fourier(xi)).margin(1e-12));
    }
  }
}

TEST_CASE("triangle transform of the squared cardinal kernel", "[catalog]") {
  const TestFunction g = catalog("sinc_sq");
  REQUIRE(g.fourier(0.0) == 1.0);
  REQUIRE(g.fourier(0.5) == 0.5);
  REQUIRE(g.fourier(0.999) == Catch::Approx(0.001).margin(1e-12));
  REQUIRE(g.fourier(1.0) == 0.0);
  REQUIRE(g.fourier(2.0) == 0.0);
  REQUIRE(g.fourier(-0.25) == g.fourier(0.25));
}

TEST_CASE("recorded L2 norms agree with transform-side integrals", "[catalog]") {
  // Parseval: ||g||^2 = (1/2pi) Int |ghat|^2.
  struct Window {
    const char* id;
    double cut;
  };
  for (const Window w : {Window{"gauss", 40.0}, Window{"matern2", 60.0},
                         Window{"sinc_sq", 1.0}, Window{"bspline3", 400.0}}) {
    const TestFunction g = catalog(w.id);
    auto f2 = [&](double xi) {
      const double t = g.fourier(xi);
      return t * t;
    };
    const double nrm = std::sqrt(2.0 * gl32_panels(f2, 0.0, w.cut, 0.5) / (2.0 * M_PI));
    REQUIRE(nrm == Catch::Approx(g.l2_norm()).epsilon(1e-6));
  }
}

TEST_CASE("breakpoints and support radii", "[catalog]") {
  REQUIRE(catalog("bspline1").breakpoints() == std::vector<double>{-1.0, 0.0, 1.0});
  REQUIRE(catalog("bspline3").breakpoints() ==
          std::vector<double>{-2.0, -1.0, 0.0, 1.0, 2.0});
  REQUIRE(catalog("gauss").breakpoints().empty());
  REQUIRE(catalog("bspline1").support_radius() == 1.0);
  REQUIRE(catalog("bspline2").support_radius() == 1.5);
  REQUIRE(catalog("bspline3").support_radius() == 2.0);
  // Outside the support everything vanishes identically.
  REQUIRE(catalog("bspline3").value(2.0) == 0.0);
  REQUIRE(catalog("bspline3").derivative(1, 2.5) == 0.0);
}

TEST_CASE("decay envelopes dominate the derivatives they certify", "[catalog]") {
  for (const auto& id : catalog_ids()) {
    const TestFunction g = catalog(id);
    const int jtop = std::min(g.k_max(), 4);
    for (int j = 0; j <= jtop; ++j) {
      const double from = g.envelope_valid_from(j);
      for (int i = 0; i <= 80; ++i) {
        const double x = from + 0.25 * static_cast<double>(i);
        REQUIRE(std::abs(g.derivative(j, x)) <= g.envelope(j, x) * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("tail certificates bound the true mass outside the window", "[catalog]") {
  struct Probe {
    const char* id;
    double reach;  ///< quadrature horizon beyond which the rest is negligible
  };
  for (const Probe p : {Probe{"gauss", 6.0}, Probe{"expabs", 40.0},
                        Probe{"matern2", 40.0}, Probe{"sinc_sq", 3000.0}}) {
    const TestFunction g = catalog(p.id);
    for (double T : {2.0, 4.0}) {
      auto f2 = [&](double x) {
        const double v = g.value(x);
        return v * v;
      };
      const double actual =
          std::sqrt(2.0 * gl32_panels(f2, T, T + p.reach, M_PI / 2.0));
      REQUIRE(g.tail_l2(T) >= actual * (1.0 - 1e-9));
    }
    REQUIRE(g.tail_l2(2.0) >= g.tail_l2(4.0));
  }
  // Compact members: zero beyond the support, conservative inside it.
  REQUIRE(catalog("bspline3").tail_l2(2.0) == 0.0);
  REQUIRE(catalog("bspline3").tail_l2(5.0) == 0.0);
  REQUIRE(catalog("bspline3").tail_l2(1.0) == catalog("bspline3").l2_norm());
  REQUIRE_THROWS_AS(catalog("gauss").tail_l2(0.0), BadParameter);
  REQUIRE_THROWS_AS(catalog("gauss").tail_l2(-1.0), BadParameter);
}

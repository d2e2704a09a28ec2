// Acceptance gate: each case runs one suite battery against the default
// configuration and requires it to pass, printing a single PASS/FAIL
// line per criterion.  Batteries sharing a convergence sweep reuse it
// through a process-wide cache, so filtered single-criterion runs and
// the full binary both stay fast.

#include <catch_amalgamated.hpp>

#include <cstdio>

#include "kerlab/suite.hpp"

using namespace kerlab;

namespace {

using BatteryFn = BatteryResult (*)(const SuiteConfig&, SweepCache&);

void check(const char* criterion, BatteryFn fn) {
  static const SuiteConfig cfg;
  static SweepCache cache;
  const BatteryResult r = fn(cfg, cache);
  std::printf("[%s] %s: %s\n", criterion, r.title.c_str(),
              r.pass ? "PASS" : "FAIL");
  if (!r.pass)
    for (const auto& line : r.lines) std::printf("      %s\n", line.c_str());
  std::fflush(stdout);
  REQUIRE(r.pass);
}

}  // namespace

TEST_CASE("interpolants reproduce their samples to rounding scale",
          "[acceptance][c01]") {
  check("c01", battery_residual);
}

TEST_CASE("bandlimited route hits the expected L2 convergence orders",
          "[acceptance][c02]") {
  check("c02", battery_sinc_rates);
}

TEST_CASE("gaussian route hits the expected L2 convergence orders",
          "[acceptance][c03]") {
  check("c03", battery_gaussian_rates);
}

TEST_CASE("derivative seminorm errors lose one order per derivative",
          "[acceptance][c04]") {
  check("c04", battery_derivative_rates);
}

TEST_CASE("error constants stay bounded along each sweep",
          "[acceptance][c05]") {
  check("c05", battery_stability);
}

TEST_CASE("divided-difference and sampling inequalities hold with explicit constants",
          "[acceptance][c06]") {
  check("c06", battery_constants);
}

TEST_CASE("kernel families flatten with controlled regularity ratios",
          "[acceptance][c07]") {
  check("c07", battery_kernel_families);
}

TEST_CASE("frequency-side and spatial-side norms agree",
          "[acceptance][c08]") {
  check("c08", battery_spectral_identity);
}

TEST_CASE("integer-lattice sampling is reproduced exactly",
          "[acceptance][c09]") {
  check("c09", battery_lattice);
}

TEST_CASE("independent seminorm routes agree on the catalog",
          "[acceptance][c10]") {
  check("c10", battery_seminorm_routes);
}

TEST_CASE("fill-distance error ratios stay within a fixed band",
          "[acceptance][c11]") {
  check("c11", battery_fill_distance);
}

TEST_CASE("interpolation error saturates at the conditioning floor",
          "[acceptance][c12]") {
  check("c12", battery_saturation);
}

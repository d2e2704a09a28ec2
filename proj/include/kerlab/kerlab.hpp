#pragma once

// Umbrella header: scattered-site interpolation laboratory.
//
// Modules:
//   sites.hpp       perturbed integer site families + Riesz bounds
//   kernels.hpp     kernel families, transforms, regularity checks
//   catalog.hpp     test functions with known smoothness and norms
//   norms.hpp       seminorms, sampling/divided-difference inequalities
//   collocate.hpp   gaussian kernel collocation at scaled sites
//   bandlimited.hpp sinc (Paley-Wiener) interpolation and seminorms
//   harness.hpp     convergence sweeps and rate fitting
//   suite.hpp       verification batteries
//   io.hpp          JSON/CSV serialization and config loading

#include "kerlab/bandlimited.hpp"
#include "kerlab/catalog.hpp"
#include "kerlab/collocate.hpp"
#include "kerlab/errors.hpp"
#include "kerlab/harness.hpp"
#include "kerlab/io.hpp"
#include "kerlab/kernels.hpp"
#include "kerlab/norms.hpp"
#include "kerlab/quadrature.hpp"
#include "kerlab/rng.hpp"
#include "kerlab/sites.hpp"
#include "kerlab/suite.hpp"
#include "kerlab/version.hpp"

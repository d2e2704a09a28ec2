#pragma once

#include <stdexcept>
#include <string>

namespace kerlab {

/// Base class for every error thrown by the library.  Catching
/// kerlab::Error is sufficient to intercept any library failure;
/// the concrete subclasses below exist so callers (and tests) can
/// distinguish failure modes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A perturbed site family exceeded the L2[-pi,pi] stability limit
/// (sup |x_j - j| >= 1/4), so no Riesz-basis guarantee remains.
class KadecViolation : public Error {
 public:
  using Error::Error;
};

/// Site coordinates were not strictly increasing.
class NotIncreasing : public Error {
 public:
  using Error::Error;
};

/// An operation needs more sites / samples / terms than it was given.
class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

/// A dense-solve or tabulation request exceeds the size this build is
/// willing to handle.
class WindowTooLarge : public Error {
 public:
  using Error::Error;
};

/// A mesh parameter h was non-positive, non-finite, or otherwise
/// outside the range an operation supports.
class BadH : public Error {
 public:
  using Error::Error;
};

/// Requested derivative / seminorm order exceeds the smoothness a
/// catalog entry guarantees (k > k_max).
class SmoothnessExceeded : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog id or kernel family name.
class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Kernel family instantiated with a parameter outside its domain.
class BadParameter : public Error {
 public:
  using Error::Error;
};

/// Spectral-window validation asked for a window on which the kernel
/// transform is not usable (empty, inverted, or non-finite bounds).
class BadWindow : public Error {
 public:
  using Error::Error;
};

/// A family sweep was empty or not ordered the way the regularity
/// checks require.
class BadSweep : public Error {
 public:
  using Error::Error;
};

/// Numerical quadrature failed to reach its target accuracy.
class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// A truncated integral's certified tail bound is too large relative
/// to the computed head, so the reported value cannot be trusted.
class TailNotConverged : public Error {
 public:
  using Error::Error;
};

/// Grid-based norm computation detected significant residual mass at
/// the edge of the truncation window.
class BoundaryLeakage : public Error {
 public:
  using Error::Error;
};

/// Collocation matrix factorization failed outright (distinct from an
/// ill-conditioned but solvable system, which is only flagged).
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// Site family does not cover the requested approximation window.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Rate fitting had fewer than the minimum number of usable rows.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Rate fitting encountered a zero or negative error value whose
/// logarithm is undefined.
class NonPositiveError : public Error {
 public:
  using Error::Error;
};

/// Configuration file / CLI argument validation failure.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace kerlab

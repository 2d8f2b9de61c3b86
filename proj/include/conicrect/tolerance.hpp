#pragma once

#include <limits>

namespace conicrect {

/// Stopping rule shared by the iterative kernels and the quadrature oracle.
/// For the AGM, `max_iter` bounds the number of mean steps; for quadrature it
/// bounds the number of integrand evaluations.
struct Tolerance {
  double abs_tol = 0.0;
  double rel_tol = 4.0 * std::numeric_limits<double>::epsilon();
  long max_iter = 64;

  /// Throws DomainError unless both tolerances are >= 0, at least one is > 0,
  /// and max_iter >= 1.
  void validate() const;

  /// max(abs_tol, rel_tol * |scale|)
  double target(double scale) const;

  static Tolerance agm() { return {}; }
  static Tolerance quadrature() { return {1e-13, 1e-12, 2'000'000}; }
  /// Tighter oracle setting for identity checks whose threshold is 1e-12.
  static Tolerance quadrature_tight() { return {1e-15, 2e-14, 2'000'000}; }
};

}  // namespace conicrect

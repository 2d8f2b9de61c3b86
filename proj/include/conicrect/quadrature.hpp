#pragma once

#include <concepts>
#include <functional>

#include "conicrect/tolerance.hpp"

namespace conicrect {

enum class Singular { none, lo, hi, both };

/// An abscissa together with its distances to the two ends of the
/// integration interval.  The distances are computed without cancellation,
/// so an integrand with a factor like 1/sqrt(hi - x) should use `to_hi`
/// rather than forming `hi - x` itself.
struct QuadPoint {
  double x;
  double from_lo;
  double to_hi;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

using Integrand = std::function<double(const QuadPoint&)>;

/// Adaptive quadrature.  Smooth panels use a Gauss-Kronrod 7/15 pair; panels
/// touching a declared singular endpoint use tanh-sinh.  Throws IntegrandError
/// if the integrand returns a non-finite value.  When the evaluation budget
/// (tol.max_iter) is exhausted the best estimate is returned with
/// converged = false.
QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           const Tolerance& tol = Tolerance::quadrature(),
                           Singular singular = Singular::none);

template <class F>
  requires std::invocable<F, double> && (!std::invocable<F, const QuadPoint&>)
QuadratureResult integrate(F&& f, double lo, double hi,
                           const Tolerance& tol = Tolerance::quadrature(),
                           Singular singular = Singular::none) {
  return integrate(Integrand([&f](const QuadPoint& q) { return f(q.x); }), lo, hi, tol,
                   singular);
}

/// Same as integrate() but throws ConvergenceError instead of returning an
/// unconverged estimate.
double integrate_value(const Integrand& f, double lo, double hi,
                       const Tolerance& tol = Tolerance::quadrature(),
                       Singular singular = Singular::none);

template <class F>
  requires std::invocable<F, double> && (!std::invocable<F, const QuadPoint&>)
double integrate_value(F&& f, double lo, double hi, const Tolerance& tol = Tolerance::quadrature(),
                       Singular singular = Singular::none) {
  return integrate_value(Integrand([&f](const QuadPoint& q) { return f(q.x); }), lo, hi, tol,
                         singular);
}

}  // namespace conicrect

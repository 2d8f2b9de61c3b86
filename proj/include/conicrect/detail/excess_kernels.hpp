#pragma once

#include <cmath>
#include <numbers>

#include "conicrect/detail/elliptic_kernels.hpp"

namespace conicrect::detail {

// Coefficients of (a/b)^(2j) in the small-a/b expansion of the excess,
// in units of pi a^2 / (2b).
inline constexpr double kExcessSeries[5] = {1.0 / 2, -3.0 / 16, 15.0 / 128, -175.0 / 2048,
                                            2205.0 / 32768};

/// Excess at infinity, written as (a^2/c) B(a/c) so small a loses nothing
/// to the E - k'^2 K cancellation.
template <class R>
R excess_closed(R a, R b) {
  const R c = std::hypot(a, b);
  return a * a / c * complete_B<R>(a / c, b / c);
}

template <class R>
R excess_series(R a, R b, int terms) {
  const R x = (a / b) * (a / b);
  R sum = 0, power = 1;
  for (int j = 0; j < terms; ++j) {
    sum += R(kExcessSeries[j]) * power;
    power *= x;
  }
  return std::numbers::pi_v<R> * a * a / (2 * b) * sum;
}

template <class R>
R excess_series_bound(R a, R b, int terms) {
  const R x = (a / b) * (a / b);
  return std::numbers::pi_v<R> * a * a / (2 * b) * std::fabs(R(kExcessSeries[terms])) *
         std::pow(x, R(terms));
}

}  // namespace conicrect::detail

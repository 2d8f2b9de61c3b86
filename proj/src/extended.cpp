#include "conicrect/conic.hpp"
#include "conicrect/detail/excess_kernels.hpp"
#include "conicrect/errors.hpp"

namespace conicrect::extended {

namespace {

void check(long double a, long double b, int terms) {
  detail::require(a > 0 && b > 0, "excess (extended)", "a > 0 and b > 0",
                  static_cast<double>(a > 0 ? b : a));
  detail::require(terms >= 1 && terms <= 3, "excess_infinity_series", "1 <= terms <= 3",
                  terms);
}

}  // namespace

long double excess_infinity_closed(long double a, long double b) {
  check(a, b, 1);
  return detail::excess_closed<long double>(a, b);
}

long double excess_infinity_series(long double a, long double b, int terms) {
  check(a, b, terms);
  return detail::excess_series<long double>(a, b, terms);
}

long double excess_series_bound(long double a, long double b, int terms) {
  check(a, b, terms);
  return detail::excess_series_bound<long double>(a, b, terms);
}

}  // namespace conicrect::extended

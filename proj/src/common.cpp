#include <cmath>
#include <sstream>

#include "conicrect/errors.hpp"
#include "conicrect/tolerance.hpp"

namespace conicrect {

namespace detail {

void throw_domain(const char* op, const std::string& condition, double value) {
  std::ostringstream os;
  os.precision(17);
  os << op << ": requires " << condition << " (got " << value << ")";
  throw DomainError(os.str());
}

}  // namespace detail

void Tolerance::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0))
    detail::throw_domain("tolerance", "abs_tol >= 0 and rel_tol >= 0",
                         abs_tol < 0.0 ? abs_tol : rel_tol);
  if (abs_tol == 0.0 && rel_tol == 0.0)
    detail::throw_domain("tolerance", "abs_tol > 0 or rel_tol > 0", 0.0);
  if (max_iter < 1)
    detail::throw_domain("tolerance", "max_iter >= 1", static_cast<double>(max_iter));
}

double Tolerance::target(double scale) const {
  return std::fmax(abs_tol, rel_tol * std::fabs(scale));
}

}  // namespace conicrect

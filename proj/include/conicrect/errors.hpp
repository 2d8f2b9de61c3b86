#pragma once

#include <stdexcept>
#include <string>

namespace conicrect {

/// A precondition on an argument was violated (k >= 1 for K, p outside (0, a], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative scheme did not reach its tolerance within the allowed budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The integrand produced a non-finite value strictly inside the interval.
class IntegrandError : public std::runtime_error {
 public:
  IntegrandError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

namespace detail {

[[noreturn]] void throw_domain(const char* op, const std::string& condition, double value);

inline void require(bool ok, const char* op, const char* condition, double value) {
  if (!ok) throw_domain(op, condition, value);
}

}  // namespace detail
}  // namespace conicrect

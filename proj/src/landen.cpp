#include "conicrect/landen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "conicrect/detail/elliptic_kernels.hpp"
#include "conicrect/errors.hpp"
#include "conicrect/quadrature.hpp"

namespace conicrect {

using detail::require;

Modulus modulus_ascend(Modulus k) {
  const double kk = k.k();
  return Modulus::with_complement(std::min(1.0, 2.0 * std::sqrt(kk) / (1.0 + kk)),
                                  (1.0 - kk) / (1.0 + kk));
}

Modulus modulus_descend(Modulus k_hat) {
  const double kc = k_hat.complement();
  const double r = k_hat.k() / (1.0 + kc);
  return Modulus::with_complement(r * r, std::min(1.0, 2.0 * std::sqrt(kc) / (1.0 + kc)));
}

double amplitude_map(Amplitude phi_hat, Modulus k) {
  require(k.k() < 1.0, "amplitude_map", "0 <= k < 1", k.k());
  const double two = 2.0 * phi_hat.phi();
  // sin(2 phi_hat) >= 0 on the domain, so atan2 stays on the branch through 0.
  return std::atan2(std::sin(two), k.k() + std::cos(two));
}

double amplitude_unmap(Amplitude phi, Modulus k) {
  require(k.k() < 1.0, "amplitude_unmap", "0 <= k < 1", k.k());
  const double f = phi.phi();
  const double target = k.k() * std::sin(f);
  double lo = 0.5 * f;
  double hi = 0.5 * f + std::numbers::pi / 4;
  if (target == 0.0) return lo;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (std::sin(2.0 * mid - f) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

LagrangeParams LagrangeParams::make(double p, double q) {
  require(q > 0.0 && std::isfinite(q), "lagrange params", "q > 0", q);
  require(p >= q && std::isfinite(p), "lagrange params", "p >= q", p);
  return {p, q, 0.5 * (p + q), std::sqrt(p * q)};
}

double lagrange_substitution(double y1, const LagrangeParams& params) {
  const double a = params.p1 * y1;
  const double b = params.q1 * y1;
  require(std::fabs(a) < 1.0, "lagrange_substitution", "|y1| < 1/p1", y1);
  return y1 * std::sqrt((1.0 - a) * (1.0 + a) / ((1.0 - b) * (1.0 + b)));
}

double upper_limit(double x, const LagrangeParams& params) {
  const double px = params.p * x;
  const double qx = params.q * x;
  require(x >= 0.0 && px <= 1.0, "upper_limit", "0 <= x <= 1/p", x);
  const double r = std::sqrt((1.0 - px) * (1.0 + px) * (1.0 - qx) * (1.0 + qx));
  return x * std::sqrt(2.0 / (1.0 + px * qx + r));
}

double lagrange_integral(double x, double p, double q) {
  require(x >= 0.0 && p * x <= 1.0, "lagrange_integral", "0 <= x <= 1/p", x);
  const double gap_p = std::max(0.0, std::fma(-p, x, 1.0));
  const double gap_q = std::max(0.0, std::fma(-q, x, 1.0));
  auto f = [=](const QuadPoint& y) {
    const double one_minus_py = gap_p + p * y.to_hi;
    const double one_minus_qy = gap_q + q * y.to_hi;
    return 1.0 / std::sqrt(one_minus_py * (1.0 + p * y.x) * one_minus_qy * (1.0 + q * y.x));
  };
  return integrate_value(f, 0.0, x, Tolerance::quadrature(), Singular::hi);
}

ResidualReport check_gleichung(Amplitude phi, Modulus k, int steps) {
  require(steps >= 1, "check_gleichung", "steps >= 1", steps);
  require(k.k() < 1.0, "check_gleichung", "0 <= k < 1", k.k());

  const double s = std::sin(phi.phi());
  const double gap = 1.0 - s;
  const double kk = k.k();
  auto f = [=](const QuadPoint& z) {
    const double kz = kk * z.x;
    return 1.0 / std::sqrt((gap + z.to_hi) * (1.0 + z.x) * (1.0 - kz) * (1.0 + kz));
  };
  const double lhs = integrate_value(f, 0.0, s, Tolerance::quadrature_tight(), Singular::hi);

  double amp = phi.phi();
  Modulus mod = k;
  double factor = 1.0;
  for (int i = 0; i < steps; ++i) {
    amp = amplitude_unmap(Amplitude(amp), mod);
    factor *= 2.0 / (1.0 + mod.k());
    mod = modulus_ascend(mod);
  }
  const double rhs = factor * detail::incomplete_F<double>(amp, mod.k(), mod.complement());
  return make_residual("gleichung", {{"phi", phi.phi()}, {"k", kk}, {"steps", steps}}, lhs,
                       rhs);
}

ResidualReport check_borwein(Modulus k) {
  require(k.k() < 1.0, "check_borwein", "0 <= k < 1", k.k());
  const double kk = k.k();
  auto f = [kk](double theta) {
    const double s = kk * std::sin(theta);
    return std::sqrt((1.0 - s) * (1.0 + s));
  };
  const double lhs =
      integrate_value(f, 0.0, std::numbers::pi / 2, Tolerance::quadrature_tight());
  const double kc = k.complement();
  const double rhs =
      0.5 * (1.0 + kk) * complete_E(modulus_ascend(k)) + 0.5 * kc * kc * complete_K(k);
  return make_residual("borwein", {{"k", kk}}, lhs, rhs);
}

ResidualReport check_agm_invariance(double x, double p, double q, int steps) {
  require(steps >= 1, "check_agm_invariance", "steps >= 1", steps);
  LagrangeParams params = LagrangeParams::make(p, q);
  require(x >= 0.0 && p * x <= 1.0, "check_agm_invariance", "0 <= x <= 1/p", x);
  const double lhs = lagrange_integral(x, p, q);
  double s = x;
  for (int i = 0; i < steps; ++i) {
    s = upper_limit(s, params);
    params = params.next();
  }
  const double rhs = lagrange_integral(s, params.p, params.q);
  return make_residual("agm-invariance", {{"x", x}, {"p", p}, {"q", q}, {"steps", steps}},
                       lhs, rhs);
}

}  // namespace conicrect

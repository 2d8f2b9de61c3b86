#pragma once

#include "conicrect/elliptic.hpp"
#include "conicrect/residual.hpp"

namespace conicrect {

/// k_hat = 2 sqrt(k) / (1 + k); the complement (1 - k)/(1 + k) is carried exactly.
Modulus modulus_ascend(Modulus k);

/// Inverse of modulus_ascend: k = (1 - k_hat') / (1 + k_hat').
Modulus modulus_descend(Modulus k_hat);

struct ModulusPair {
  Modulus k;
  Modulus k_hat;
  static ModulusPair from_lower(Modulus k) { return {k, modulus_ascend(k)}; }
};

/// phi from tan(phi) = sin(2 phi_hat) / (k + cos(2 phi_hat)), on the branch
/// continuous from phi(0) = 0.  The result lies in [0, pi]; it exceeds pi/2
/// once phi_hat > pi/4 + asin(k)/2.
double amplitude_map(Amplitude phi_hat, Modulus k);

/// phi_hat with sin(2 phi_hat - phi) = k sin(phi), found by bisection on
/// [phi/2, phi/2 + pi/4] where the left side is increasing.
double amplitude_unmap(Amplitude phi, Modulus k);

/// p > q > 0 (p == q allowed as the degenerate case) and one AGM step of them.
struct LagrangeParams {
  double p, q, p1, q1;
  static LagrangeParams make(double p, double q);
  LagrangeParams next() const { return make(p1, q1); }
};

/// y = y1 sqrt((1 - p1^2 y1^2) / (1 - q1^2 y1^2)) for |y1| < 1/p1.
double lagrange_substitution(double y1, const LagrangeParams& params);

/// s(x, p, q) = sqrt(2)/(p+q) * sqrt(1 + pq x^2 - sqrt((1 - p^2x^2)(1 - q^2x^2)))
/// for 0 <= x <= 1/p, evaluated in a cancellation-free rearrangement.
double upper_limit(double x, const LagrangeParams& params);

/// F(phi, k) against 2/(1+k) F(phi_hat, k_hat): the left side by quadrature of
/// the algebraic form on [0, sin phi], the right side by the Landen kernel.
/// `steps` = 2 chains the transformation twice.
ResidualReport check_gleichung(Amplitude phi, Modulus k, int steps = 1);

/// E(k) against (1+k)/2 E(k_hat) + (1-k^2)/2 K(k); left side by quadrature.
ResidualReport check_borwein(Modulus k);

/// The Lagrange integral over [0, x] with (p, q) against the integral over
/// [0, s(x,p,q)] with (p1, q1), both by quadrature.  `steps` = 2 compares
/// with the second AGM step (p2, q2) instead.
ResidualReport check_agm_invariance(double x, double p, double q, int steps = 1);

/// The integral of 1/sqrt((1 - p^2 y^2)(1 - q^2 y^2)) over [0, x] by quadrature.
double lagrange_integral(double x, double p, double q);

}  // namespace conicrect

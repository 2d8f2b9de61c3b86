#pragma once

// Elliptic kernels written once over the floating type.  The public API uses
// double; a long double instantiation backs checks whose margin is below
// double resolution.

#include <cmath>
#include <limits>
#include <numbers>

namespace conicrect::detail {

template <class R>
inline constexpr R half_pi = std::numbers::pi_v<R> / 2;

/// Common limit of the AGM for p, q > 0, run to a few ulps.
template <class R>
R agm_limit(R p, R q) {
  const R eps = 4 * std::numeric_limits<R>::epsilon();
  for (int i = 0; i < 64 && std::fabs(p - q) > eps * p; ++i) {
    const R next_q = std::sqrt(p * q);
    p = (p + q) / 2;
    q = next_q;
  }
  return (p + q) / 2;
}

template <class R>
R complete_K(R kc) {
  return half_pi<R> / agm_limit<R>(1, kc);
}

/// Sum of a(n)^2 k^(2n) * weight(n) for n < terms with a(n) = (2n)!/(2^2n n!^2).
template <class R, class W>
R hypergeometric_sum(R k, int terms, W weight) {
  const R k2 = k * k;
  R a2 = 1;  // a(n)^2
  R power = 1;
  R sum = 0;
  for (int n = 0; n < terms; ++n) {
    if (n > 0) {
      const R r = R(2 * n - 1) / R(2 * n);
      a2 *= r * r;
      power *= k2;
    }
    sum += a2 * power * weight(n);
  }
  return half_pi<R> * sum;
}

template <class R>
R series_K(R k, int terms) {
  return hypergeometric_sum<R>(k, terms, [](int) { return R(1); });
}

template <class R>
R series_E(R k, int terms) {
  return hypergeometric_sum<R>(k, terms, [](int n) { return R(1) / R(1 - 2 * n); });
}

/// Magnitude of term number `n` of the K (or E) series.
template <class R>
R series_term(R k, int n, bool second_kind) {
  R a2 = 1;
  for (int j = 1; j <= n; ++j) {
    const R r = R(2 * j - 1) / R(2 * j);
    a2 *= r * r;
  }
  R t = half_pi<R> * a2 * std::pow(k, R(2 * n));
  return second_kind ? t / R(2 * n - 1 > 0 ? 2 * n - 1 : 1) : t;
}

template <class R>
struct KEPair {
  R K;
  R E;
};

/// K and E together.  The modulus is descended with k -> k^2/(1+k')^2 until
/// it is below 1e-3, seeded by the series there, then climbed back with
/// K(k_prev) = (1+k) K(k) and E(k_prev) = 2E(k)/(1+k) - (1-k) K(k).
template <class R>
KEPair<R> complete_KE(R k, R kc) {
  if (kc == 0) return {std::numeric_limits<R>::infinity(), R(1)};
  R ks[64];
  int depth = 0;
  while (k >= R(1e-3) && depth < 64) {
    const R next = (k / (1 + kc)) * (k / (1 + kc));
    kc = 2 * std::sqrt(kc) / (1 + kc);
    k = next;
    ks[depth++] = k;
  }
  R K = series_K<R>(k, 8);
  R E = series_E<R>(k, 8);
  for (int j = depth - 1; j >= 0; --j) {
    const R kj = ks[j];
    const R K_prev = (1 + kj) * K;
    E = 2 * E / (1 + kj) - (1 - kj) * K;
    K = K_prev;
  }
  return {K, E};
}

/// B(k) = (E - k'^2 K) / k^2, which stays accurate as k -> 0.
template <class R>
R complete_B(R k, R kc) {
  if (k < R(0.5)) {
    const R k2 = k * k;
    const R eps = std::numeric_limits<R>::epsilon();
    R a2 = 1, power = 1, sum = R(0.5);
    for (int n = 1; n < 400; ++n) {
      const R r = R(2 * n - 1) / R(2 * n);
      a2 *= r * r;
      power *= k2;
      const R term = a2 * power / R(2 * n + 2);
      sum += term;
      if (term < eps * sum / 4) break;
    }
    return half_pi<R> * sum;
  }
  const KEPair<R> ke = complete_KE<R>(k, kc);
  return (ke.E - kc * kc * ke.K) / (k * k);
}

/// F(phi, k) for any phi >= 0 via descending Landen steps.  Each step maps
/// (phi, k) to (phi + atan(k' tan phi), k^2/(1+k')^2) with the angle kept on
/// the continuous branch, and multiplies by (1 + k_next)/2.
template <class R>
R incomplete_F(R phi, R k, R kc) {
  if (k == 0 || phi == 0) return phi;
  const R two_pi = 2 * std::numbers::pi_v<R>;
  R factor = 1;
  while (k >= R(1e-10)) {
    R delta = std::atan2(kc * std::sin(phi), std::cos(phi));
    delta += two_pi * std::round((phi - delta) / two_pi);
    const R next_k = (k / (1 + kc)) * (k / (1 + kc));
    kc = 2 * std::sqrt(kc) / (1 + kc);
    phi += delta;
    k = next_k;
    factor *= (1 + k) / 2;
  }
  const R closure = phi + k * k / 4 * (phi - std::sin(phi) * std::cos(phi));
  return factor * closure;
}

}  // namespace conicrect::detail

#include "conicrect/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "conicrect/detail/elliptic_kernels.hpp"
#include "conicrect/errors.hpp"
#include "conicrect/quadrature.hpp"

namespace conicrect {

using detail::require;

Modulus::Modulus(double k) : k_(k), kc_(0.0) {
  require(k >= 0.0 && k <= 1.0, "modulus", "0 <= k <= 1", k);
  kc_ = std::sqrt((1.0 - k) * (1.0 + k));
}

Modulus Modulus::from_complement(double kc) {
  require(kc >= 0.0 && kc <= 1.0, "modulus", "0 <= k' <= 1", kc);
  return Modulus(std::sqrt((1.0 - kc) * (1.0 + kc)), kc, 0);
}

Modulus Modulus::with_complement(double k, double kc) {
  require(k >= 0.0 && k <= 1.0, "modulus", "0 <= k <= 1", k);
  require(kc >= 0.0 && kc <= 1.0, "modulus", "0 <= k' <= 1", kc);
  require(std::fabs(k * k + kc * kc - 1.0) < 1e-12, "modulus", "k^2 + k'^2 = 1",
          k * k + kc * kc);
  return Modulus(k, kc, 0);
}

Amplitude::Amplitude(double phi) : phi_(phi) {
  require(phi >= 0.0 && phi <= std::numbers::pi / 2, "amplitude", "0 <= phi <= pi/2", phi);
}

AgmSequence agm(double p0, double q0, const Tolerance& tol) {
  tol.validate();
  require(p0 > 0.0 && std::isfinite(p0), "agm", "p0 > 0", p0);
  require(q0 > 0.0 && std::isfinite(q0), "agm", "q0 > 0", q0);

  AgmSequence s;
  s.p0 = p0;
  s.q0 = q0;
  double p = p0, q = q0;
  if (p < q) {
    std::swap(p, q);
    s.swapped = true;
  }
  s.iterates.emplace_back(p, q);
  while (std::fabs(p - q) > tol.target(p)) {
    if (static_cast<long>(s.iterates.size()) > tol.max_iter) {
      std::ostringstream os;
      os.precision(17);
      os << "agm: |p - q| = " << std::fabs(p - q) << " after " << tol.max_iter
         << " steps, tolerance not reached";
      throw ConvergenceError(os.str());
    }
    const double next_p = 0.5 * (p + q);
    // sqrt(pq) can round above (p+q)/2 once the two agree to an ulp.
    const double next_q = std::min(std::sqrt(p * q), next_p);
    if (next_p == p && next_q == q) {
      std::ostringstream os;
      os.precision(17);
      os << "agm: iteration stalled at |p - q| = " << std::fabs(p - q)
         << ", below double resolution of the requested tolerance";
      throw ConvergenceError(os.str());
    }
    p = next_p;
    q = next_q;
    s.iterates.emplace_back(p, q);
  }
  s.limit = 0.5 * (p + q);
  s.iterations = static_cast<int>(s.iterates.size()) - 1;
  return s;
}

double complete_K(Modulus k, const Tolerance& tol) {
  require(k.k() < 1.0, "complete_K", "0 <= k < 1", k.k());
  return std::numbers::pi / (2.0 * agm(1.0, k.complement(), tol).limit);
}

double complete_E(Modulus k, const Tolerance& tol) {
  tol.validate();
  if (k.complement() == 0.0) return 1.0;
  return detail::complete_KE<double>(k.k(), k.complement()).E;
}

double incomplete_F(Amplitude phi, Modulus k) {
  require(k.k() < 1.0, "incomplete_F", "0 <= k < 1", k.k());
  return detail::incomplete_F<double>(phi.phi(), k.k(), k.complement());
}

double incomplete_E(Amplitude phi, Modulus k, const Tolerance& tol) {
  const double kk = k.k();
  auto integrand = [kk](double theta) {
    const double s = kk * std::sin(theta);
    return std::sqrt((1.0 - s) * (1.0 + s));
  };
  return integrate_value(integrand, 0.0, phi.phi(), tol);
}

namespace {

int clamp_terms(const char* op, int terms) {
  require(terms >= 1, op, "terms >= 1", terms);
  return std::min(terms, kSeriesTermCap);
}

}  // namespace

double series_KE(SeriesKind kind, Modulus k, int terms) {
  require(k.k() < 1.0, "series_KE", "0 <= k < 1", k.k());
  terms = clamp_terms("series_KE", terms);
  return kind == SeriesKind::K ? detail::series_K<double>(k.k(), terms)
                               : detail::series_E<double>(k.k(), terms);
}

double series_KE_bound(SeriesKind kind, Modulus k, int terms) {
  require(k.k() < 1.0, "series_KE_bound", "0 <= k < 1", k.k());
  terms = clamp_terms("series_KE_bound", terms);
  const double kc = k.complement();
  return detail::series_term<double>(k.k(), terms, kind == SeriesKind::E) / (kc * kc);
}

Lemniscate lemniscate(double radius) {
  require(radius > 0.0 && std::isfinite(radius), "lemniscate", "radius > 0", radius);
  const double r = std::numbers::sqrt2 / 2.0;
  const double quarter = radius * r * complete_K(Modulus::with_complement(r, r));
  const double m = agm(1.0, std::numbers::sqrt2).limit;
  return {quarter, 4.0 * quarter, 1.0 / m};
}

}  // namespace conicrect

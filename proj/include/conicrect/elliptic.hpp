#pragma once

#include <utility>
#include <vector>

#include "conicrect/tolerance.hpp"

namespace conicrect {

/// Elliptic modulus k in [0, 1] with its complement k' = sqrt(1 - k^2).
/// When k' is known more accurately than k (moduli close to 1) build the
/// value with from_complement / with_complement so it is not recomputed.
class Modulus {
 public:
  explicit Modulus(double k);
  static Modulus from_complement(double kc);
  static Modulus with_complement(double k, double kc);

  double k() const { return k_; }
  double complement() const { return kc_; }

 private:
  Modulus(double k, double kc, int) : k_(k), kc_(kc) {}
  double k_;
  double kc_;
};

/// Amplitude phi in [0, pi/2].
class Amplitude {
 public:
  explicit Amplitude(double phi);
  double phi() const { return phi_; }

 private:
  double phi_;
};

struct AgmSequence {
  double p0 = 0.0;  // inputs as given
  double q0 = 0.0;
  bool swapped = false;  // true when p0 < q0 and the pair was reordered
  std::vector<std::pair<double, double>> iterates;  // (p_n, q_n), n = 0 first
  double limit = 0.0;
  int iterations = 0;
};

/// Arithmetic-geometric mean.  Stops once |p_n - q_n| <= max(abs_tol,
/// rel_tol * p_n); throws ConvergenceError past tol.max_iter steps.
AgmSequence agm(double p0, double q0, const Tolerance& tol = Tolerance::agm());

/// K(k) = pi / (2 M(1, k')).  k = 1 is a domain error.
double complete_K(Modulus k, const Tolerance& tol = Tolerance::agm());

/// E(k) by descending Landen steps to a small modulus, a short series there,
/// then the Borwein relation back up.
double complete_E(Modulus k, const Tolerance& tol = Tolerance::agm());

/// F(phi, k) by the descending amplitude recursion.
double incomplete_F(Amplitude phi, Modulus k);

/// E(phi, k) straight from its defining integral.
double incomplete_E(Amplitude phi, Modulus k, const Tolerance& tol = Tolerance::quadrature());

enum class SeriesKind { K, E };

/// Partial sum of the hypergeometric series for K or E, n = 0 .. terms-1.
/// More than kSeriesTermCap terms are clamped to the cap.
double series_KE(SeriesKind kind, Modulus k, int terms);

/// First omitted term of series_KE divided by (1 - k^2): an upper bound on
/// the truncation error.
double series_KE_bound(SeriesKind kind, Modulus k, int terms);

inline constexpr int kSeriesTermCap = 200;

struct Lemniscate {
  double quarter_arc;
  double full_arc;
  double gauss_constant;
};

Lemniscate lemniscate(double radius);

}  // namespace conicrect

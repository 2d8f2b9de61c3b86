#include <cmath>
#include <numbers>
#include <random>

#include "conicrect/elliptic.hpp"
#include "conicrect/errors.hpp"
#include "conicrect/quadrature.hpp"
#include "doctest.h"
#include "oracle_values.hpp"

using namespace conicrect;
using std::numbers::pi;

namespace {

double quad_K(double k) {
  return integrate_value(
      [k](double th) {
        const double s = k * std::sin(th);
        return 1.0 / std::sqrt((1.0 - s) * (1.0 + s));
      },
      0.0, pi / 2, Tolerance::quadrature_tight());
}

double quad_E(double k) {
  return integrate_value(
      [k](double th) {
        const double s = k * std::sin(th);
        return std::sqrt((1.0 - s) * (1.0 + s));
      },
      0.0, pi / 2, Tolerance::quadrature_tight());
}

}  // namespace

TEST_CASE("agm of equal inputs is a fixed point") {
  const AgmSequence s = agm(3.5, 3.5);
  CHECK(s.limit == 3.5);
  CHECK(s.iterations == 0);
}

TEST_CASE("agm(1, 0.8) agrees to the 12th digit after three steps") {
  const AgmSequence s = agm(1.0, 0.8);
  CHECK(s.iterates[1].first == doctest::Approx(0.9).epsilon(1e-16));
  CHECK(s.iterates[1].second == doctest::Approx(std::sqrt(0.8)).epsilon(1e-16));
  REQUIRE(s.iterates.size() > 3);
  CHECK(std::fabs(s.iterates[3].first - s.iterates[3].second) < 1e-11);
  CHECK(std::fabs(s.iterates[2].first - s.iterates[2].second) > 1e-11);
  CHECK(std::fabs(s.limit - oracle::agm_1_08) < 2e-16);
}

TEST_CASE("agm(1, sqrt 2) against Gauss's constant") {
  const AgmSequence s = agm(1.0, std::numbers::sqrt2);
  CHECK(s.swapped);
  CHECK(s.iterates[0].first == std::numbers::sqrt2);
  CHECK(std::fabs(s.limit - oracle::agm_1_sqrt2) < 4e-16);
}

TEST_CASE("agm iterate history: bracketing and quadratic convergence") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  for (int i = 0; i < 200; ++i) {
    const AgmSequence s = agm(u(rng), u(rng));
    const double q0 = s.iterates[0].second;
    const double C = 1.0 / (8.0 * q0);
    for (size_t n = 0; n + 1 < s.iterates.size(); ++n) {
      const auto [p, q] = s.iterates[n];
      const auto [p1, q1] = s.iterates[n + 1];
      CHECK(q <= q1);
      CHECK(q1 <= p1);
      CHECK(p1 <= p);
      const double d = p - q, d1 = p1 - q1;
      // a few ulps of slack for rounding in the last step
      CHECK(d1 <= C * d * d + 8 * std::numeric_limits<double>::epsilon() * p);
      CHECK(s.limit >= q);
      CHECK(s.limit <= p);
    }
  }
}

TEST_CASE("agm homogeneity") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.1, 10.0), c(1e-3, 1e3);
  for (int i = 0; i < 100; ++i) {
    const double p = u(rng), q = u(rng), k = c(rng);
    const double lhs = agm(k * p, k * q).limit;
    const double rhs = k * agm(p, q).limit;
    CHECK(std::fabs(lhs - rhs) <= 1e-14 * rhs);
  }
}

TEST_CASE("agm errors") {
  CHECK_THROWS_AS(agm(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(agm(1.0, -2.0), DomainError);
  CHECK_THROWS_AS(agm(1.0, 1e-300, Tolerance{0.0, 1e-15, 2}), ConvergenceError);
  CHECK_THROWS_AS(agm(1.0, 0.5, Tolerance{0.0, 0.0, 64}), DomainError);
}

TEST_CASE("complete K") {
  CHECK(complete_K(Modulus(0.0)) == doctest::Approx(pi / 2).epsilon(1e-16));
  CHECK(std::fabs(complete_K(Modulus(std::numbers::sqrt2 / 2)) - oracle::K_inv_sqrt2) < 1e-15);
  CHECK(std::fabs(complete_K(Modulus(0.5)) - oracle::K_half) < 1e-15);
  CHECK_THROWS_AS(complete_K(Modulus(1.0)), DomainError);
  CHECK_THROWS_AS(Modulus(1.5), DomainError);
  CHECK_THROWS_AS(Modulus(-0.1), DomainError);
}

TEST_CASE("complete E") {
  CHECK(complete_E(Modulus(0.0)) == doctest::Approx(pi / 2).epsilon(1e-16));
  CHECK(complete_E(Modulus(1.0)) == 1.0);
  CHECK(std::fabs(complete_E(Modulus(std::sqrt(3.0) / 2)) - oracle::E_sqrt3_2) < 4e-15);
  CHECK(std::fabs(complete_E(Modulus(1.0 / 3)) - oracle::E_third) < 4e-15);
}

TEST_CASE("K and E agree with quadrature across the modulus range") {
  for (double k = 0.0; k < 0.9999; k += 0.0333) {
    CHECK(std::fabs(complete_K(Modulus(k)) - quad_K(k)) < 1e-12);
    CHECK(std::fabs(complete_E(Modulus(k)) - quad_E(k)) < 1e-12);
  }
  CHECK(std::fabs(complete_K(Modulus(0.9999)) - quad_K(0.9999)) < 1e-12);
  CHECK(std::fabs(complete_E(Modulus(0.9999)) - quad_E(0.9999)) < 1e-12);
}

TEST_CASE("Legendre relation as an independent check of K and E") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 50; ++i) {
    const Modulus k(u(rng));
    const Modulus kc = Modulus::from_complement(k.k());
    const double lhs = complete_E(k) * complete_K(kc) + complete_E(kc) * complete_K(k) -
                       complete_K(k) * complete_K(kc);
    CHECK(std::fabs(lhs - pi / 2) < 1e-14);
  }
}

TEST_CASE("incomplete F") {
  CHECK(incomplete_F(Amplitude(0.0), Modulus(0.7)) == 0.0);
  CHECK(incomplete_F(Amplitude(1.1), Modulus(0.0)) == 1.1);
  CHECK(std::fabs(incomplete_F(Amplitude(pi / 4), Modulus(0.8)) - oracle::F_pi4_08) < 1e-15);
  for (double k : {0.1, 0.5, 0.9, 0.99, 0.999999}) {
    CHECK(std::fabs(incomplete_F(Amplitude(pi / 2), Modulus(k)) - complete_K(Modulus(k))) <
          1e-12 * complete_K(Modulus(k)));
  }
  CHECK_THROWS_AS(incomplete_F(Amplitude(0.5), Modulus(1.0)), DomainError);
  CHECK_THROWS_AS(Amplitude{pi}, DomainError);
  CHECK_THROWS_AS(Amplitude(-1e-3), DomainError);
}

TEST_CASE("incomplete F matches quadrature and is increasing in both arguments") {
  double prev_row = -1.0;
  for (double k = 0.0; k <= 0.95; k += 0.05) {
    double prev = -1.0;
    for (double phi = 0.0; phi <= pi / 2; phi += pi / 40) {
      const double f = incomplete_F(Amplitude(phi), Modulus(k));
      const double q = integrate_value(
          [k](double th) {
            const double s = k * std::sin(th);
            return 1.0 / std::sqrt((1.0 - s) * (1.0 + s));
          },
          0.0, phi, Tolerance::quadrature_tight());
      CHECK(std::fabs(f - q) < 1e-12);
      CHECK(f > prev);
      prev = f;
    }
    const double at_top = incomplete_F(Amplitude(1.3), Modulus(k));
    CHECK(at_top > prev_row);
    prev_row = at_top;
  }
}

TEST_CASE("incomplete E") {
  CHECK(incomplete_E(Amplitude(0.0), Modulus(0.3)) == 0.0);
  CHECK(incomplete_E(Amplitude(0.9), Modulus(0.0)) == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(std::fabs(incomplete_E(Amplitude(pi / 3), Modulus(0.5)) - oracle::Einc_pi3_05) < 1e-14);
  for (double k : {0.0, 0.3, std::sqrt(3.0) / 2, 0.99, 1.0}) {
    CHECK(std::fabs(incomplete_E(Amplitude(pi / 2), Modulus(k)) - complete_E(Modulus(k))) <
          1e-12);
  }
}

TEST_CASE("hypergeometric series") {
  CHECK(series_KE(SeriesKind::K, Modulus(0.0), 5) == doctest::Approx(pi / 2).epsilon(1e-16));
  CHECK(series_KE(SeriesKind::E, Modulus(0.0), 1) == doctest::Approx(pi / 2).epsilon(1e-16));
  CHECK(std::fabs(series_KE(SeriesKind::K, Modulus(0.5), 40) - complete_K(Modulus(0.5))) < 1e-12);
  CHECK_THROWS_AS(series_KE(SeriesKind::K, Modulus(0.5), 0), DomainError);
  CHECK_THROWS_AS(series_KE(SeriesKind::K, Modulus(1.0), 10), DomainError);
  // The cap: asking for more than 200 terms gives the 200-term sum.
  CHECK(series_KE(SeriesKind::K, Modulus(0.9), 10000) ==
        series_KE(SeriesKind::K, Modulus(0.9), kSeriesTermCap));
}

TEST_CASE("series truncation error stays inside its bound") {
  for (double k = 0.0; k < 0.96; k += 0.05) {
    for (int terms : {1, 2, 5, 10, 30, 60}) {
      const Modulus m(k);
      const double errK = std::fabs(series_KE(SeriesKind::K, m, terms) - complete_K(m));
      const double errE = std::fabs(series_KE(SeriesKind::E, m, terms) - complete_E(m));
      CHECK(errK <= series_KE_bound(SeriesKind::K, m, terms) + 4e-15);
      CHECK(errE <= series_KE_bound(SeriesKind::E, m, terms) + 4e-15);
    }
  }
}

TEST_CASE("lemniscate") {
  const Lemniscate l = lemniscate(1.0);
  CHECK(std::fabs(l.quarter_arc - oracle::lemniscate_quarter) < 1e-15);
  CHECK(std::fabs(l.full_arc - oracle::lemniscate_full) < 4e-15);
  CHECK(std::fabs(l.full_arc - 4 * l.quarter_arc) < 1e-12);
  CHECK(std::fabs(l.full_arc - 2 * pi / agm(1.0, std::numbers::sqrt2).limit) < 1e-12);
  CHECK(l.gauss_constant == doctest::Approx(1.0 / oracle::agm_1_sqrt2).epsilon(1e-15));
  CHECK(lemniscate(2.0).quarter_arc == doctest::Approx(2 * l.quarter_arc).epsilon(1e-16));
  CHECK_THROWS_AS(lemniscate(0.0), DomainError);
}

TEST_CASE("modulus complement identity") {
  for (double k = 0.0; k <= 1.0; k += 0.01) {
    const Modulus m(k);
    CHECK(std::fabs(m.k() * m.k() + m.complement() * m.complement() - 1.0) < 4e-16);
  }
}

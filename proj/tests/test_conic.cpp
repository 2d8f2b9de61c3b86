#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "conicrect/conic.hpp"
#include "conicrect/elliptic.hpp"
#include "conicrect/errors.hpp"
#include "conicrect/quadrature.hpp"
#include "doctest.h"
#include "oracle_values.hpp"

using namespace conicrect;
using std::numbers::pi;

namespace {
const double kSqrt8 = 2.0 * std::numbers::sqrt2;
}

TEST_CASE("hyperbola derived quantities") {
  const Hyperbola h(1.0, kSqrt8);
  CHECK(h.focal() == doctest::Approx(3.0).epsilon(1e-16));
  CHECK(h.eccentricity() > 1.0);
  CHECK(h.modulus() == doctest::Approx(1.0 / 3).epsilon(1e-16));
  CHECK(2 * h.a() * h.epsilon() == doctest::Approx(1.0 - 8.0).epsilon(1e-15));
  CHECK(h.epsilon() ==
        doctest::Approx(h.a() * (1 - h.eccentricity() * h.eccentricity() / 2)).epsilon(1e-15));
  CHECK_THROWS_AS(Hyperbola(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(Hyperbola(1.0, -1.0), DomainError);
  CHECK(Ellipse(2.0, 1.0).g() == doctest::Approx(0.75).epsilon(1e-16));
}

TEST_CASE("pedal radius") {
  CHECK(hyperbola_radius_from_pedal(Hyperbola(1, 1), 1.0) == 1.0);
  CHECK(hyperbola_radius_from_pedal(Hyperbola(1, kSqrt8), 1.0) == 1.0);
  CHECK(hyperbola_radius_from_pedal(Hyperbola(1, 1), 0.5) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(hyperbola_radius_from_pedal(Hyperbola(1, 1), 0.0), DomainError);
  CHECK_THROWS_AS(hyperbola_radius_from_pedal(Hyperbola(1, 1), 1.01), DomainError);
  // grows without bound as p -> 0
  CHECK(hyperbola_radius_from_pedal(Hyperbola(1, 1), 1e-6) > 1e5);
}

TEST_CASE("point from pedal distance") {
  const Point v = hyperbola_point_from_pedal(Hyperbola(2.0, 3.0), 2.0);
  CHECK(v.x == 2.0);
  CHECK(v.y == 0.0);
  const Point q = hyperbola_point_from_pedal(Hyperbola(1, 1), 0.5);
  CHECK(std::hypot(q.x, q.y) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("pedal identity t^2 + p^2 = r^2 on random points") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> frac(1e-3, 1.0);
  for (auto [a, b] : {std::pair{1.0, 1.0}, {1.0, kSqrt8}, {3.0, 1.0}, {0.5, 7.0}}) {
    const Hyperbola h(a, b);
    for (int i = 0; i < 100; ++i) {
      const double p = frac(rng) * a;
      const PedalPoint pp = hyperbola_pedal_point(h, p);
      CHECK(std::fabs(pp.t * pp.t + pp.p * pp.p - pp.r * pp.r) <= 1e-12 * pp.r * pp.r);
      const Point pt = hyperbola_point_from_pedal(h, p);
      CHECK(std::fabs(pt.x * pt.x / (a * a) - pt.y * pt.y / (b * b) - 1.0) < 1e-12 * pt.x * pt.x / (a * a));
      CHECK(std::fabs(hyperbola_pedal_from_point(h, pt) - p) < 1e-12 * a);
      CHECK(std::fabs(std::hypot(pt.x, pt.y) - pp.r) < 1e-12 * pp.r);
    }
  }
}

TEST_CASE("semiaxes and Landen pairs") {
  const LandenPair pair = semiaxes_to_pair(1.0, kSqrt8);
  CHECK(pair.m() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(pair.n() == doctest::Approx(1.0).epsilon(1e-15));
  const Semiaxes s = pair_to_semiaxes(LandenPair(2.0, 1.0));
  CHECK(s.a == 1.0);
  CHECK(s.b == doctest::Approx(kSqrt8).epsilon(1e-16));
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng), b = u(rng);
    const Semiaxes back = pair_to_semiaxes(semiaxes_to_pair(a, b));
    CHECK(std::fabs(back.a - a) <= 1e-14 * a);
    CHECK(std::fabs(back.b - b) <= 1e-14 * b);
  }
  CHECK_THROWS_AS(LandenPair(1.0, 2.0), DomainError);
  CHECK_THROWS_AS(LandenPair(1.0, 0.0), DomainError);
}

TEST_CASE("ellipse tangent length") {
  const Ellipse e(2.0, 1.0);
  CHECK(ellipse_tangent_length(e, 0.0) == 0.0);
  CHECK(ellipse_tangent_length(e, 2.0) == 0.0);
  CHECK(ellipse_tangent_length(e, std::sqrt(8.0 / 3)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ellipse_tangent_length(Ellipse(1.5, 1.5), 0.7) == 0.0);
  CHECK_THROWS_AS(ellipse_tangent_length(e, 2.1), DomainError);
  // direct evaluation from r^2 - p^2 on the ellipse
  for (double x = 0.0; x <= 2.0; x += 0.05) {
    const double g = 0.75;
    const double r2 = 1.0 + g * x * x;
    const double p2 = 4.0 / (4.0 - g * x * x);
    const double t = ellipse_tangent_length(e, x);
    CHECK(std::fabs(t * t - (r2 - p2)) < 1e-14);
    CHECK(t <= 1.0 + 1e-15);
  }
}

TEST_CASE("abscissae from tangent length") {
  const LandenPair pair(2.0, 1.0);
  const TangentAbscissae z = abscissae_from_tangent(pair, 0.0);
  CHECK(z.x_minus == 0.0);
  CHECK(z.x_plus == 2.0);
  const TangentAbscissae top = abscissae_from_tangent(pair, 1.0);
  CHECK(top.x_minus * top.x_minus == doctest::Approx(8.0 / 3).epsilon(1e-14));
  CHECK(top.x_plus * top.x_plus == doctest::Approx(8.0 / 3).epsilon(1e-14));
  CHECK_THROWS_AS(abscissae_from_tangent(pair, 1.0001), DomainError);
  for (auto [m, n] : {std::pair{2.0, 1.0}, {1.2, 1.0}, {10.0, 1.0}, {5.0, 0.3}}) {
    const LandenPair lp(m, n);
    for (double f = 0.05; f < 1.0; f += 0.05) {
      const double t = f * (m - n);
      const TangentAbscissae xs = abscissae_from_tangent(lp, t);
      CHECK(xs.x_minus <= xs.x_plus);
      CHECK(std::fabs(ellipse_tangent_length(lp.ellipse2(), xs.x_minus) - t) < 1e-12 * m);
      CHECK(std::fabs(ellipse_tangent_length(lp.ellipse2(), xs.x_plus) - t) < 1e-12 * m);
      // the quartic in x with radicand [(m-n)^2 - t^2][(m+n)^2 - t^2]
      const double g = lp.ellipse2().g();
      const double rad = (m * m - n * n) * (m * m - n * n) - 2 * t * t * (m * m + n * n) +
                         t * t * t * t;
      CHECK(std::fabs(2 * g * xs.x_plus * xs.x_plus - (t * t + g * m * m + std::sqrt(rad))) <
            1e-12 * m * m);
    }
  }
}

TEST_CASE("ellipse arc") {
  CHECK(std::fabs(ellipse_arc(Ellipse(1, 1), 0.0, 1.0) - pi / 2) < 1e-14);
  CHECK(std::fabs(ellipse_arc(Ellipse(2, 1), 0.0, 2.0) - oracle::ellipse_arc_2_1_quadrant) <
        1e-13);
  CHECK(ellipse_arc(Ellipse(2, 1), 0.7, 0.7) == 0.0);
  CHECK_THROWS_AS(ellipse_arc(Ellipse(2, 1), 0.5, 2.5), DomainError);
  CHECK_THROWS_AS(ellipse_arc(Ellipse(2, 1), 1.0, 0.5), DomainError);
  // closed form against quadrature of the arclength integrand, both orientations
  for (auto [a, b] : {std::pair{2.0, 1.0}, {1.0, 3.0}, {3.0, 2.9}}) {
    const double g = (a * a - b * b) / (a * a);
    for (double x0 : {0.0, 0.3 * a}) {
      for (double x1 : {0.5 * a, 0.9 * a, a}) {
        auto f = [=](const QuadPoint& q) {
          return std::sqrt((a * a - g * q.x * q.x) / ((a - x1 + q.to_hi) * (a + q.x)));
        };
        const double quad = integrate_value(f, x0, x1, Tolerance::quadrature(), Singular::hi);
        CHECK(std::fabs(ellipse_arc(Ellipse(a, b), x0, x1) - quad) < 1e-10);
      }
    }
  }
}

TEST_CASE("hyperbola arc in two parameterizations") {
  const Hyperbola h1(1.0, 1.0), h2(1.0, kSqrt8);
  CHECK(hyperbola_arc(h1, 1.0) == 0.0);
  CHECK(std::fabs(hyperbola_arc(h1, 0.5) - oracle::hyperbola_arc_1_1_half) < 1e-13);
  CHECK(std::fabs(hyperbola_arc(h2, 0.5) - oracle::hyperbola_arc_1_2sqrt2_half) < 1e-13);
  CHECK(std::fabs(hyperbola_arc_pedal(h1, 0.5) - oracle::hyperbola_arc_1_1_half) < 1e-12);
  CHECK(std::fabs(hyperbola_arc_pedal(h2, 0.5) - oracle::hyperbola_arc_1_2sqrt2_half) < 1e-12);
  for (auto h : {h1, h2, Hyperbola(3.0, 1.0)}) {
    double prev = -1.0;
    for (double f = 1.0; f > 0.01; f -= 0.07) {
      const double arc = hyperbola_arc(h, f * h.a());
      CHECK(arc >= 0.0);
      CHECK(arc > prev);
      prev = arc;
      CHECK(std::fabs(arc - hyperbola_arc_pedal(h, f * h.a())) < 1e-10);
    }
  }
  CHECK_THROWS_AS(hyperbola_arc(h1, 0.0), DomainError);
}

TEST_CASE("Simpson's reciprocal-abscissa arc") {
  const Hyperbola h(1, 1);
  CHECK(h.modulus() * h.modulus() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(simpson_arc(h, 0.4, 0.4) == 0.0);
  CHECK(std::fabs(simpson_arc(h, 0.5, 1.0) - oracle::simpson_1_1_half_1) < 1e-12);
  CHECK_THROWS_AS(simpson_arc(h, 0.0, 1.0), DomainError);
  for (auto hh : {h, Hyperbola(1.0, kSqrt8), Hyperbola(2.0, 0.5)}) {
    for (double u0 : {0.1, 0.3, 0.5, 0.9}) {
      const double p = pedal_from_reciprocal_abscissa(hh, u0);
      const double s = simpson_arc(hh, u0, 1.0);
      CHECK(std::fabs(s - hyperbola_arc(hh, p)) < 1e-9);
      CHECK(std::fabs(s - hyperbola_arc_pedal(hh, p)) < 1e-9);
      // sub-range: [u0, 0.95] equals the difference of two arcs from the vertex
      const double p95 = pedal_from_reciprocal_abscissa(hh, 0.95);
      if (u0 < 0.95)
        CHECK(std::fabs(simpson_arc(hh, u0, 0.95) -
                        (hyperbola_arc(hh, p) - hyperbola_arc(hh, p95))) < 1e-9);
    }
  }
}

TEST_CASE("excess at infinity: closed form") {
  CHECK(std::fabs(excess_infinity_closed(Hyperbola(1, 1)) - oracle::excess_1_1) < 1e-15);
  CHECK(std::fabs(excess_infinity_closed(Hyperbola(1, kSqrt8)) - oracle::excess_1_2sqrt2) < 1e-15);
  CHECK(std::fabs(excess_infinity_closed(Hyperbola(3, 1)) - oracle::excess_3_1) < 4e-15);
  // printed form c E(k) - (b^2/c) K(k)
  const Hyperbola h(1, 1);
  const Modulus k(h.modulus());
  CHECK(std::fabs(excess_infinity_closed(h) -
                  (h.focal() * complete_E(k) - h.b() * h.b() / h.focal() * complete_K(k))) <
        1e-14);
  CHECK(excess_infinity_closed(Hyperbola(1e-8, 1.0)) < 1e-15);
  CHECK(excess_infinity_closed(Hyperbola(1e-8, 1.0)) > 0.0);
}

TEST_CASE("excess at infinity matches quadrature of the p-integrand over (0, a)") {
  for (auto [a, b] : {std::pair{1.0, 1.0}, {1.0, kSqrt8}, {3.0, 1.0}, {0.2, 5.0}}) {
    const Hyperbola h(a, b);
    auto f = [=](const QuadPoint& q) {
      const double p = q.x;
      return p * p / std::sqrt(q.to_hi * (a + p) * (b * b + p * p));
    };
    const double quad = integrate_value(f, 0.0, a, Tolerance::quadrature_tight(), Singular::hi);
    CHECK(std::fabs(quad - excess_infinity_closed(h)) < 1e-10);
  }
}

TEST_CASE("Maclaurin series") {
  CHECK(excess_infinity_series(Hyperbola(1e-9, 1.0), 3) < 1e-17);
  const Hyperbola h(0.1, 1.0);
  const double s3 = excess_infinity_series(h, 3);
  CHECK(s3 == doctest::Approx(pi * 0.005 * (0.5 - 0.001875 + 15.0 / 128 * 1e-4)).epsilon(1e-15));
  CHECK(std::fabs(s3 - oracle::excess_01_1) <= excess_series_bound(h, 3));
  CHECK(std::fabs(excess_infinity_series(Hyperbola(0.5, 1.0), 3) -
                  excess_infinity_closed(Hyperbola(0.5, 1.0))) > 1e-4);
  CHECK_THROWS_AS(excess_infinity_series(h, 4), DomainError);
  CHECK_THROWS_AS(excess_infinity_series(h, 0), DomainError);
  // the 3-term error is within the first omitted term for small a/b
  for (double r = 0.02; r <= 0.1; r += 0.01) {
    const Hyperbola hh(r, 1.0);
    for (int terms = 1; terms <= 3; ++terms)
      CHECK(std::fabs(excess_infinity_series(hh, terms) - excess_infinity_closed(hh)) <=
            excess_series_bound(hh, terms));
  }
}

TEST_CASE("excess at infinity from the two quadrants") {
  CHECK(std::fabs(excess_infinity_landen(LandenPair(2, 1)) - oracle::excess_1_2sqrt2) < 1e-14);
  CHECK(std::fabs(excess_infinity_landen(LandenPair(1, 0.5)) - oracle::excess_half_sqrt2) < 1e-14);
  CHECK(excess_infinity_landen(LandenPair(1.5, 1.5)) == 0.0);
  // quadrants by quadrature
  const double s2 = integrate_value(
      [](const QuadPoint& q) {
        return std::sqrt((4.0 - 0.75 * q.x * q.x) / (q.to_hi * (2.0 + q.x)));
      },
      0.0, 2.0, Tolerance::quadrature(), Singular::hi);
  const double b1 = kSqrt8, a1 = 3.0, g1 = (a1 * a1 - b1 * b1) / (a1 * a1);
  const double s1 = integrate_value(
      [=](const QuadPoint& q) {
        return std::sqrt((a1 * a1 - g1 * q.x * q.x) / (q.to_hi * (a1 + q.x)));
      },
      0.0, a1, Tolerance::quadrature(), Singular::hi);
  CHECK(std::fabs(2 * s2 - s1 - excess_infinity_landen(LandenPair(2, 1))) < 1e-10);
}

TEST_CASE("finite excess") {
  const Hyperbola h1(1, 1), h2(1, kSqrt8), h3(3, 1);
  CHECK(excess_finite(h1, 1.0) == 0.0);
  CHECK(std::fabs(excess_finite(h1, 1e-4) - oracle::excess_finite_1_1) < 1e-10);
  CHECK(std::fabs(excess_finite(h2, 1e-4) - oracle::excess_finite_1_2sqrt2) < 1e-10);
  CHECK(std::fabs(excess_finite(h3, 3e-4) - oracle::excess_finite_3_1) < 1e-10);
  for (const auto& h : {h1, h2, h3}) {
    CHECK(std::fabs(excess_finite(h, 1e-4 * h.a()) - excess_infinity_closed(h)) < 1e-9);
    double prev = -1.0;
    for (double f = 1.0; f > 0.001; f *= 0.8) {
      const double e = excess_finite(h, f * h.a());
      if (f < 1.0) CHECK(e > prev);
      prev = e;
    }
  }
}

TEST_CASE("Maclaurin integrand is the p-derivative of the finite excess") {
  const Hyperbola h(1, 1);
  CHECK(maclaurin_excess_integrand(h, 0.5) ==
        doctest::Approx(-0.25 / std::sqrt(1 - 0.0625)).epsilon(1e-15));
  for (auto hh : {h, Hyperbola(1, kSqrt8), Hyperbola(3, 1)}) {
    for (double f : {0.2, 0.5, 0.8}) {
      const double p = f * hh.a(), step = 1e-6 * hh.a();
      const double fd = (excess_finite(hh, p + step) - excess_finite(hh, p - step)) / (2 * step);
      const double v = maclaurin_excess_integrand(hh, p);
      CHECK(std::fabs(fd - v) <= 1e-5 * std::fabs(v));
    }
  }
  // equilateral special case -p^2 / sqrt(a^4 - p^4)
  const Hyperbola eq(2.0, 2.0);
  for (double p : {0.3, 1.0, 1.9})
    CHECK(maclaurin_excess_integrand(eq, p) ==
          doctest::Approx(-p * p / std::sqrt(16.0 - p * p * p * p)).epsilon(1e-14));
  CHECK_THROWS_AS(maclaurin_excess_integrand(h, 1.0), DomainError);
}

TEST_CASE("Landen's theorem") {
  const LandenCheck c = landen_theorem_check(LandenPair(2, 1), 0.5);
  const ExcessBreakdown& b = c.breakdown;
  CHECK(std::fabs(b.hyp_arc - oracle::landen_2_1_half_hyp) < 1e-12);
  CHECK(std::fabs(b.eta1 - oracle::landen_2_1_half_eta1) < 1e-12);
  CHECK(std::fabs(b.eta2 - oracle::landen_2_1_half_eta2) < 1e-12);
  CHECK(c.report.residual < 1e-9);
  CHECK(b.flags.empty());
  CHECK(b.s1 <= 2 * b.s2 + b.limit_L + 1e-10);
  CHECK(std::fabs(b.limit_L - oracle::excess_1_2sqrt2) < 1e-14);

  const LandenCheck zero = landen_theorem_check(LandenPair(2, 1), 0.0);
  CHECK(zero.report.residual == 0.0);
  CHECK(zero.breakdown.hyp_arc == 0.0);

  const LandenCheck near = landen_theorem_check(LandenPair(2, 1), 0.999);
  CHECK(std::fabs(near.breakdown.hyp_arc - oracle::landen_2_1_0999_hyp) < 1e-10);
  CHECK(near.report.residual < 1e-8);
  // close to the maximum the hyperbola and tangent pieces approach the limit identity
  const ExcessBreakdown& nb = near.breakdown;
  CHECK(std::fabs((nb.t_hyp - nb.hyp_arc) - nb.limit_L) < 1e-2);

  CHECK_THROWS_AS(landen_theorem_check(LandenPair(2, 1), 1.0), DomainError);
  const LandenCheck guard = landen_theorem_check(LandenPair(2, 1), 1.0 - 1e-9);
  REQUIRE(guard.breakdown.flags.size() == 1);
  CHECK(guard.breakdown.flags[0].find("tangent") != std::string::npos);
}

TEST_CASE("Fagnano pairs") {
  CHECK(fagnano_check(LandenPair(2, 1), 0.5).residual < 1e-9);
  CHECK(fagnano_check(LandenPair(2, 1), 1.0).residual < 1e-9);
  CHECK(fagnano_check(LandenPair(2, 1), 0.0).residual < 1e-12);
  CHECK_THROWS_AS(fagnano_check(LandenPair(1, 1), 0.0), DomainError);
  CHECK_THROWS_AS(fagnano_check(LandenPair(2, 1), 1.1), DomainError);
  // Orientation: the arc near the minor vertex is the longer one.
  const ResidualReport r = fagnano_check(LandenPair(5, 1), 2.0);
  CHECK(r.lhs > 0.0);
}

TEST_CASE("Landen and Fagnano over the (m/n, t/(m-n)) grid") {
  for (double ratio : {1.2, 2.0, 5.0, 10.0}) {
    const LandenPair pair(ratio, 1.0);
    for (int j = 1; j <= 9; ++j) {
      const double t = j / 10.0 * (ratio - 1.0);
      CHECK(landen_theorem_check(pair, t).report.residual < 1e-9);
      CHECK(fagnano_check(pair, t).residual < 1e-9);
    }
  }
}

TEST_CASE("extended precision excess agrees with double") {
  for (double r : {0.01, 0.1, 1.0, 5.0}) {
    const double d = excess_infinity_closed(Hyperbola(r, 1.0));
    const long double e = extended::excess_infinity_closed(r, 1.0L);
    CHECK(std::fabs(static_cast<double>(e) - d) <= 1e-14 * d);
  }
}
